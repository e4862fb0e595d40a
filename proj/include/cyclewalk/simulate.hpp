#pragma once

#include <utility>
#include <vector>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

struct SimResult {
  long long samples = 0;
  std::vector<long long> fp_hist;  // index j = number of fixed points, size n+1
  // class counts in partition-enumeration order; empty unless requested
  std::vector<std::pair<Partition, long long>> class_hist;
};

// Seeded Monte Carlo of the walk; only the cycle type of each sample is kept.
// Shard s draws from stream (seed, s); results merge by histogram addition and
// are bit-for-bit reproducible.
SimResult simulate(const WalkSpec& spec, bool collect_class_hist);

// Moments of the fixed-point count from a histogram, and the standard error
// of the corresponding sample mean.
double simulated_moment(const std::vector<long long>& fp_hist, int r);
double simulated_moment_se(const std::vector<long long>& fp_hist, int r);

}  // namespace cyclewalk
