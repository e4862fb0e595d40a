#pragma once

#include <string>
#include <vector>

#include "cyclewalk/arith.hpp"

namespace cyclewalk {

// Integer partition, parts weakly decreasing.  Row indices in formulas are
// 1-based and part(i) reads 0 beyond the last row, so identities like
// sum lambda_i^2 - (2i-1) lambda_i transcribe directly in 1-based form.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition from_string(const std::string& s);  // "6,4,2,1,1"

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// A rim hook removal: what is left, how many rows the hook crossed, and the
// Murnaghan-Nakayama sign (-1)^(rows_spanned - 1).
struct RimHookRemoval {
  Partition residue;
  int rows_spanned = 0;
  int sign = 0;
};

// Reverse-lexicographic order starting at (n): (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& p);

enum class Dominance { Equal, Dominates, Dominated, Incomparable };
// Prefix-sum comparison; partitions of unequal size are rejected.
Dominance dominance(const Partition& a, const Partition& b);

std::vector<std::vector<int>> hook_lengths(const Partition& p);
BigInt dimension(const Partition& p);  // hook length formula, exact

// Exhaustive standard-Young-tableau count; independent of dimension().  Small
// shapes only (|p| <= 10).
long long syt_count_bruteforce(const Partition& p);

Partition strip_rows(const Partition& p, int r);  // drop the first r rows

// All removals of an m-rim hook, via the hook-length correspondence: each cell
// with hook length m yields exactly one removal.
std::vector<RimHookRemoval> rim_hook_removals(const Partition& p, int m);

// All partitions of |xi| + m whose m-rim-hook removal can leave xi, ordered by
// the row of the hook's lowest cell (index s = 1, 2, ... in that order).
std::vector<Partition> rim_hook_attachments(const Partition& xi, int m);

}  // namespace cyclewalk
