#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace cyclewalk {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(int n);
BigInt binomial(int n, int k);  // 0 when k < 0 or k > n

// mpq_class(num, den) does not reduce; this does.
BigRat make_rat(BigInt num, BigInt den);
BigRat make_rat(long long num, long long den);
BigRat rat_pow(const BigRat& q, long e);  // e >= 0, with q^0 = 1 for every q

double to_double(const BigRat& q);

// Compensated (Kahan) accumulator for float-mode sums.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace cyclewalk
