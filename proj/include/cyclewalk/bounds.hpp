#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

BigInt stirling2(int r, int i);  // set partitions of [r] into i blocks
BigInt bell(int r);

// Multiplicity of lambda in the r-th tensor power of the defining
// representation: d_{lambda-bar} sum_{i=|lambda-bar|}^r C(i,|lambda-bar|) S(r,i),
// valid for 1 <= r <= n - lambda_2 (refused outside that range).
BigInt tensor_coeff(const Partition& lambda, int r);

// Limiting fixed-point moments after round(c n) transpositions (k = 1):
// sum_{i=1}^r S(r,i) (1 + i eta) zeta^i, zeta = 1 - e^{-2c}, eta = e^{-2c}/zeta.
double moment_k1(int r, double c);

struct KMoments {
  double first = 0;
  double second = 0;
  std::optional<double> third;  // k = 2 only
};
KMoments moments_k(int k, double c);  // k >= 2, t = round(c n + (n/2) ln k) regime

// (1/2) deltaE^q / sum^{q-1} with q = p/(p-1); the displayed chains drop the
// 1/2, callers wanting that reading double the result.
double holder_lower_bound(double delta_e, double pth_moment_sum, double p);

struct Envelope {
  double lower = 0;
  double upper = 0;
};
// k = 1: ((1 - e^{e^{-2c}} + e^{e^{-2c}-2c})/e, e^{-4c}/(2 sqrt(1-e^{-4c})));
// k >= 2: ((1/12) e^{-4c}, sqrt((e-1)/2) e^{-2c}).
Envelope theorem_envelopes(int k, double c);

struct PmfValue {
  double value = 0;
  int terms = 0;        // number of series terms used
  double tail_bound = 0;
};
// Limiting P(fixed points = j) for k = 1, alternating series truncated when
// the next term drops below 1e-12 (cap 200 terms), or at `truncation` terms.
PmfValue asymptotic_pmf_k1(int j, double c, int truncation = 0);

// |P(fp = 0) - 1/e|; equals the k = 1 envelope lower bound.
double theorem1_lower_from_pmf(double c);

// Upper bound (1/2) sqrt((1/2) sum_{lambda != (n),(1^n)} chi^lambda_{(n-k,1^k)}^2
// r(lambda)^{2t}).  When n-k > n/2 the sum runs over rim-hook attachments to the
// partitions of k, so large n stays cheap; otherwise over all of |lambda| = n
// (subject to the exact ceiling).
double ds_upper_bound(int n, int k, long long t);

// (sum over lambda with first row lambda1 of d_lambda^2, C(n,lambda1)^2 (n-lambda1)!)
std::pair<BigInt, BigInt> dim_sum_bound(int n, int lambda1);

struct IdentityChecks {
  bool passed = true;
  int cases = 0;
  std::vector<std::string> failures;
};
// sum_k (-1)^(n-k) C(n,k) k^m = 0 for n > m (exact), and
// sum_k C(n,k) (-x)^(k+2)/(k+2) = ((1-x)^{n+2}-1)/(n+2) - ((1-x)^{n+1}-1)/(n+1).
IdentityChecks stirling_identity_checks(int max_n = 12);

struct BoundsReport {
  int n = 0, k = 0;
  long long t = 0;
  double c = 0;
  std::optional<double> exact_tv;  // present when the class space is small
  double finite_n_upper = 0;       // ds_upper_bound
  double moment_lower = 0;         // lemma reading (1/2 prefactor); pmf route for k = 1
  double moment_lower_nohalf = 0;  // displayed-chain reading
  double theorem_lower = 0;
  double theorem_upper = 0;
  int pmf_terms = 0;               // k = 1 only
  double pmf_tail_bound = 0;
};
BoundsReport make_bounds_report(int n, int k, double c);

}  // namespace cyclewalk
