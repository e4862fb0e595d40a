#include "cyclewalk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclewalk/rng.hpp"

namespace cyclewalk {

SimResult simulate(const WalkSpec& spec, bool collect_class_hist) {
  int n = spec.n;
  if (spec.k < 0 || n - spec.k < 2)
    throw std::invalid_argument("simulate: need k >= 0 and n-k >= 2");
  if (spec.t < 0 || spec.samples < 0 || spec.shards < 1)
    throw std::invalid_argument("simulate: bad t, samples or shards");

  SimResult res;
  res.samples = spec.samples;
  res.fp_hist.assign(n + 1, 0);
  std::map<std::vector<int>, long long> classes;

  int len = n - spec.k;
  std::vector<int> idx(n), sigma(n), lens;
  std::vector<long long> seen(n, -1);
  long long stamp = 0;
  std::iota(idx.begin(), idx.end(), 0);

  for (int shard = 0; shard < spec.shards; ++shard) {
    Xoshiro256ss rng(spec.seed, static_cast<std::uint64_t>(shard));
    long long count = spec.samples / spec.shards + (shard < spec.samples % spec.shards ? 1 : 0);
    for (long long s = 0; s < count; ++s) {
      // uniform (n-k)-cycle: random ordered support by partial Fisher-Yates
      for (int i = 0; i < len; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
      }
      std::iota(sigma.begin(), sigma.end(), 0);
      for (int i = 0; i < len; ++i) sigma[idx[i]] = idx[(i + 1) % len];
      for (long long step = 0; step < spec.t; ++step) {
        int a, b;
        do {
          a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
          b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        } while (a == b);
        std::swap(sigma[a], sigma[b]);  // right-multiply by the transposition (a b)
      }
      int fixed = 0;
      ++stamp;
      lens.clear();
      for (int i = 0; i < n; ++i) {
        if (seen[i] == stamp) continue;
        int l = 0, j = i;
        while (seen[j] != stamp) {
          seen[j] = stamp;
          j = sigma[j];
          ++l;
        }
        if (l == 1) ++fixed;
        if (collect_class_hist) lens.push_back(l);
      }
      ++res.fp_hist[fixed];
      if (collect_class_hist) {
        std::sort(lens.begin(), lens.end(), std::greater<int>());
        ++classes[lens];
      }
    }
  }

  if (collect_class_hist) {
    for (auto& [parts, count] : classes)
      res.class_hist.emplace_back(Partition(parts), count);
    std::sort(res.class_hist.begin(), res.class_hist.end(),
              [](const auto& a, const auto& b) { return a.first.parts() > b.first.parts(); });
  }
  return res;
}

double simulated_moment(const std::vector<long long>& fp_hist, int r) {
  double total = 0, weighted = 0;
  for (std::size_t j = 0; j < fp_hist.size(); ++j) {
    total += static_cast<double>(fp_hist[j]);
    weighted += static_cast<double>(fp_hist[j]) * std::pow(static_cast<double>(j), r);
  }
  if (total == 0) throw std::invalid_argument("simulated_moment: empty histogram");
  return weighted / total;
}

double simulated_moment_se(const std::vector<long long>& fp_hist, int r) {
  double m1 = simulated_moment(fp_hist, r);
  double m2 = simulated_moment(fp_hist, 2 * r);
  double total = 0;
  for (long long c : fp_hist) total += static_cast<double>(c);
  double var = std::max(0.0, m2 - m1 * m1);
  return std::sqrt(var / total);
}

}  // namespace cyclewalk
