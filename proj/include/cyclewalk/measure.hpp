#pragma once

#include <vector>

#include "cyclewalk/partition.hpp"

namespace cyclewalk {

enum class Parity { Even, Odd, Mixed };

const char* parity_label(Parity p);  // "+1", "-1", "mixed"
Parity flip(Parity p);

// Conjugacy-class data for S_n, classes in partition-enumeration order.
struct ClassTable {
  int n = 0;
  std::vector<Partition> types;
  std::vector<BigInt> sizes;        // n! / prod(l^m_l m_l!)
  std::vector<int> signs;           // (-1)^(n - #parts)
  std::vector<int> fixed_points;    // number of parts equal to 1

  int index(const Partition& type) const;  // -1 when absent
  static const ClassTable& of(int n);      // cached
};

// Probability measure on the classes of S_n, probs aligned with
// ClassTable::of(n).types.  Scalar is BigRat (exact) or double.
template <class S>
struct ClassMeasure {
  int n = 0;
  Parity parity = Parity::Mixed;
  std::vector<S> probs;
};

using ExactMeasure = ClassMeasure<BigRat>;
using FloatMeasure = ClassMeasure<double>;

}  // namespace cyclewalk
