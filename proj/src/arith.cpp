#include "cyclewalk/arith.hpp"

#include <stdexcept>
#include <utility>

namespace cyclewalk {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

BigRat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

BigRat make_rat(long long num, long long den) {
  return make_rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigRat rat_pow(const BigRat& q, long e) {
  if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), static_cast<unsigned long>(e));
  return r;  // powers of a canonical form stay canonical
}

double to_double(const BigRat& q) { return q.get_d(); }

}  // namespace cyclewalk
