#pragma once

#include <cstdint>
#include <map>

#include "cyclewalk/characters.hpp"
#include "cyclewalk/measure.hpp"

namespace cyclewalk {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// The walk: one uniform (n-k)-cycle, then t uniform transpositions.  Step
// counting in reports treats the cycle as step 1, so the measure after the
// cycle plus t transpositions is mu_{t+1}.
struct WalkSpec {
  int n = 0;
  int k = 1;
  long long t = 0;  // transpositions applied after the cycle
  std::uint64_t seed = kDefaultSeed;
  long long samples = 0;
  int shards = 1;
};

// Ceiling for exact class-space evolution, env WALK_MAX_N_EXACT (default 40).
int exact_ceiling();

// t = round(c n) for k = 1, t = round(c n + (n/2) ln k) for k >= 2.
long long steps_for(int n, int k, double c);
double c_for(int n, int k, long long t);  // inverse of the rounding-free map

template <class S>
ClassMeasure<S> initial_measure(int n, int k);  // point mass at (n-k, 1^k)

// One convolution with the uniform transposition measure, by split/merge
// counting: a length-l cycle splits to {d, l-d} via l internal pairs for
// d < l/2 and l/2 pairs at d = l/2; cycles of lengths a, b merge via a b pairs.
template <class S>
ClassMeasure<S> transposition_step(const ClassMeasure<S>& m);

template <class S>
ClassMeasure<S> evolve_direct(const WalkSpec& spec);

// Same measure through the dual route:
// mu(c) = (|c|/n!) sum_lambda d_lambda chi^lambda_c f_lambda with
// f_lambda = (chi^lambda_{(n-k,1^k)} / d_lambda) r(lambda)^t.
template <class S>
ClassMeasure<S> evolve_fourier(const WalkSpec& spec);

// Uniform on the coset the walk occupies after t total steps (cycle included):
// the even coset when t and n-k have equal parity, its complement otherwise.
template <class S>
ClassMeasure<S> stationary_measure(int n, long long t, int k);

template <class S>
S tv(const ClassMeasure<S>& a, const ClassMeasure<S>& b);

// Law of the fixed-point count; keys with zero mass are omitted.
template <class S>
std::map<int, S> fixed_point_pmf(const ClassMeasure<S>& m);

template <class S>
S fixed_point_moment(const ClassMeasure<S>& m, int r);

}  // namespace cyclewalk
