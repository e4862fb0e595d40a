#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cyclewalk/partition.hpp"

namespace cyclewalk {

// Symmetric-group characters by Murnaghan-Nakayama recursion, exact integers.
// Class parts are consumed largest first; a shared memo serves all queries
// (reads and writes are mutex-guarded, so one cache may be used concurrently).
class CharacterCache {
 public:
  // chi^lambda_mu for |lambda| = |mu|
  BigInt character(const Partition& lambda, const Partition& mu);

  // chi^lambda at the class (n-k, 1^k); equals the signed dimension of the
  // hook residue, and is reached without recursion.  When n-k > n/2 at most
  // one rim hook of that length exists.
  BigInt cycle_character(const Partition& lambda, int k);

  // Full table, rows and columns in partition-enumeration order.
  std::vector<std::vector<BigInt>> table(int n);

 private:
  BigInt rec(const Partition& lambda, const std::vector<int>& mu, std::size_t from);

  std::mutex mutex_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

CharacterCache& shared_character_cache();

// r(lambda) = chi^lambda(transposition) / dim lambda, two equivalent forms.
BigRat transposition_normalized(const Partition& lambda);           // row sums
BigRat transposition_normalized_binomial(const Partition& lambda);  // column form, self-check

// (lambda_2 - 3 + lambda_1 (lambda_1 - lambda_2 + 2)/n) / (n - 1), an upper
// bound for r(lambda) on every shape.
BigRat r_upper_bound(const Partition& lambda);

// Change in r when one box moves from row k to row l (k < l, new row allowed):
// 2 (lambda_k - lambda_l + (l - k) - 1) / (n (n-1)).  Verified internally
// against the direct difference of r values.
BigRat rim_move_delta(const Partition& lambda, int k, int l);

// Ceiling for table-wide requests, env WALK_MAX_N_TABLE (default 20).
int table_ceiling();

void write_character_table_csv(std::ostream& os, int n, CharacterCache& cache);

}  // namespace cyclewalk
