#include "cyclewalk/characters.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace cyclewalk {

BigInt CharacterCache::character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n())
    throw std::invalid_argument("character: |lambda| != |mu|");
  return rec(lambda, mu.parts(), 0);
}

BigInt CharacterCache::rec(const Partition& lambda, const std::vector<int>& mu, std::size_t from) {
  if (lambda.n() == 0) return 1;
  if (mu[from] == 1) return dimension(lambda);  // remaining class is all fixed points
  std::pair<std::vector<int>, std::vector<int>> key(
      lambda.parts(), std::vector<int>(mu.begin() + from, mu.end()));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  BigInt total = 0;
  for (const RimHookRemoval& rem : rim_hook_removals(lambda, mu[from]))
    total += rem.sign * rec(rem.residue, mu, from + 1);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::move(key), total);
  }
  return total;
}

BigInt CharacterCache::cycle_character(const Partition& lambda, int k) {
  int n = lambda.n();
  if (k < 0 || n - k < 2)
    throw std::invalid_argument("cycle_character: need 0 <= k <= n-2");
  auto removals = rim_hook_removals(lambda, n - k);
  if (2 * (n - k) > n && removals.size() > 1)
    throw std::logic_error("cycle_character: long hook removal not unique");
  BigInt total = 0;
  for (const RimHookRemoval& rem : removals) total += rem.sign * dimension(rem.residue);
  return total;
}

std::vector<std::vector<BigInt>> CharacterCache::table(int n) {
  if (n < 1) throw std::invalid_argument("table: n >= 1");
  if (n > table_ceiling())
    throw std::domain_error("table: n exceeds table ceiling " + std::to_string(table_ceiling()) +
                            " (WALK_MAX_N_TABLE)");
  auto shapes = enumerate_partitions(n);
  std::vector<std::vector<BigInt>> t(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    t[i].reserve(shapes.size());
    for (const Partition& cls : shapes) t[i].push_back(character(shapes[i], cls));
  }
  return t;
}

CharacterCache& shared_character_cache() {
  static CharacterCache cache;
  return cache;
}

BigRat transposition_normalized(const Partition& lambda) {
  int n = lambda.n();
  if (n < 2) throw std::invalid_argument("transposition_normalized: n >= 2");
  long long num = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    long long li = lambda.part(i);
    num += li * li - (2 * i - 1) * li;
  }
  return make_rat(num, static_cast<long long>(n) * (n - 1));
}

BigRat transposition_normalized_binomial(const Partition& lambda) {
  int n = lambda.n();
  if (n < 2) throw std::invalid_argument("transposition_normalized_binomial: n >= 2");
  Partition conj = conjugate(lambda);
  long long num = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    long long li = lambda.part(i);
    num += li * (li - 1) / 2;
  }
  for (int j = 1; j <= conj.rows(); ++j) {
    long long cj = conj.part(j);
    num -= cj * (cj - 1) / 2;
  }
  return make_rat(num, static_cast<long long>(n) * (n - 1) / 2);
}

BigRat r_upper_bound(const Partition& lambda) {
  long long n = lambda.n();
  if (n < 2) throw std::invalid_argument("r_upper_bound: n >= 2");
  long long l1 = lambda.part(1), l2 = lambda.part(2);
  return make_rat((l2 - 3) * n + l1 * (l1 - l2 + 2), n * (n - 1));
}

BigRat rim_move_delta(const Partition& lambda, int k, int l) {
  long long n = lambda.n();
  if (k < 1 || l <= k || l > lambda.rows() + 1)
    throw std::invalid_argument("rim_move_delta: need 1 <= k < l <= rows+1");
  if (lambda.part(l) >= lambda.part(k))
    throw std::invalid_argument("rim_move_delta: need lambda_l < lambda_k");
  std::vector<int> parts(std::max(lambda.rows(), l), 0);
  for (int i = 1; i <= lambda.rows(); ++i) parts[i - 1] = lambda.part(i);
  parts[k - 1] -= 1;
  parts[l - 1] += 1;
  Partition moved(std::move(parts));  // throws if the move breaks the shape
  BigRat delta =
      make_rat(2 * (lambda.part(k) - lambda.part(l) + (l - k) - 1), n * (n - 1));
  if (delta != transposition_normalized(lambda) - transposition_normalized(moved))
    throw std::logic_error("rim_move_delta: closed form disagrees with direct difference");
  return delta;
}

int table_ceiling() {
  if (const char* e = std::getenv("WALK_MAX_N_TABLE"); e && *e) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 20;
}

void write_character_table_csv(std::ostream& os, int n, CharacterCache& cache) {
  auto shapes = enumerate_partitions(n);
  auto t = cache.table(n);
  os << "lambda";
  for (const Partition& cls : shapes) os << ",\"" << cls.to_string() << "\"";
  os << "\n";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    os << "\"" << shapes[i].to_string() << "\"";
    for (const BigInt& v : t[i]) os << "," << v.get_str();
    os << "\n";
  }
}

}  // namespace cyclewalk
