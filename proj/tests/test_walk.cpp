#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclewalk/simulate.hpp"
#include "cyclewalk/walk.hpp"

using namespace cyclewalk;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  std::vector<int> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
  return out;
}

Partition cycle_type(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

// Distribution of the walk computed on the full group: uniform over the
// (n-k)-cycles, then t right-multiplications by a uniform transposition,
// collapsed to cycle types at the end.
ExactMeasure group_oracle(int n, int k, int t) {
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> at;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> cur = id;
  do {
    at[cur] = static_cast<int>(perms.size());
    perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));

  std::vector<int> target = {n - k};
  for (int i = 0; i < k; ++i) target.push_back(1);
  Partition cycle_class(target);

  std::vector<int> support;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (cycle_type(perms[i]) == cycle_class) support.push_back(static_cast<int>(i));
  std::vector<BigRat> dist(perms.size(), BigRat(0));
  BigRat w = make_rat(1, static_cast<long long>(support.size()));
  for (int i : support) dist[i] = w;

  std::vector<std::vector<int>> taus;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> tau = id;
      std::swap(tau[a], tau[b]);
      taus.push_back(tau);
    }
  BigRat tw = make_rat(1, static_cast<long long>(taus.size()));
  for (int s = 0; s < t; ++s) {
    std::vector<BigRat> next(perms.size(), BigRat(0));
    for (std::size_t g = 0; g < perms.size(); ++g) {
      if (dist[g] == 0) continue;
      BigRat add = dist[g] * tw;
      for (const auto& tau : taus) next[at[compose(perms[g], tau)]] += add;
    }
    dist.swap(next);
  }

  const ClassTable& ct = ClassTable::of(n);
  ExactMeasure out{n, Parity::Mixed, std::vector<BigRat>(ct.types.size(), BigRat(0))};
  for (std::size_t g = 0; g < perms.size(); ++g)
    if (dist[g] != 0) out.probs[static_cast<std::size_t>(ct.index(cycle_type(perms[g])))] += dist[g];
  return out;
}

}  // namespace

TEST_CASE("class-space evolution matches the full-group convolution") {
  for (int k : {1, 2, 3})
    for (int t = 0; t <= 4; ++t) {
      ExactMeasure want = group_oracle(5, k, t);
      ExactMeasure got = evolve_direct<BigRat>({5, k, t});
      REQUIRE(got.probs.size() == want.probs.size());
      for (std::size_t i = 0; i < got.probs.size(); ++i) CHECK(got.probs[i] == want.probs[i]);
    }
  ExactMeasure want6 = group_oracle(6, 2, 3);
  ExactMeasure got6 = evolve_direct<BigRat>({6, 2, 3});
  for (std::size_t i = 0; i < got6.probs.size(); ++i) CHECK(got6.probs[i] == want6.probs[i]);
}

TEST_CASE("direct and transform engines agree exactly") {
  for (int n : {4, 5, 6})
    for (int k = 1; k <= std::min(3, n - 2); ++k)
      for (int t = 0; t <= 6; ++t) {
        WalkSpec spec{n, k, t};
        ExactMeasure a = evolve_direct<BigRat>(spec);
        ExactMeasure b = evolve_fourier<BigRat>(spec);
        REQUIRE(a.probs.size() == b.probs.size());
        CHECK(a.parity == b.parity);
        for (std::size_t i = 0; i < a.probs.size(); ++i) CHECK(a.probs[i] == b.probs[i]);
      }
}

TEST_CASE("probabilities sum to one and respect the coset parity") {
  for (int n : {4, 6, 8})
    for (int k = 1; k <= 2; ++k)
      for (int t = 0; t <= 8; ++t) {
        ExactMeasure m = evolve_direct<BigRat>({n, k, t});
        BigRat sum(0);
        for (const BigRat& p : m.probs) sum += p;
        CHECK(sum == 1);
        REQUIRE(m.parity != Parity::Mixed);
        const ClassTable& ct = ClassTable::of(n);
        int live_sign = m.parity == Parity::Even ? 1 : -1;
        for (std::size_t i = 0; i < m.probs.size(); ++i)
          if (ct.signs[i] != live_sign) CHECK(m.probs[i] == 0);
      }
}

TEST_CASE("initial measure is a point mass on the cycle class") {
  ExactMeasure m = initial_measure<BigRat>(6, 2);
  const ClassTable& ct = ClassTable::of(6);
  int at = ct.index(P({4, 1, 1}));
  REQUIRE(at >= 0);
  for (std::size_t i = 0; i < m.probs.size(); ++i)
    CHECK(m.probs[i] == (static_cast<int>(i) == at ? 1 : 0));
  CHECK(m.parity == Parity::Odd);  // a 4-cycle is odd
}

TEST_CASE("uniform-coset measure for n = 4") {
  ExactMeasure s = stationary_measure<BigRat>(4, 3, 1);
  CHECK(s.parity == Parity::Even);
  REQUIRE(s.probs.size() == 5);
  CHECK(s.probs[0] == 0);                 // (4)
  CHECK(s.probs[1] == make_rat(8, 12));   // (3,1)
  CHECK(s.probs[2] == make_rat(3, 12));   // (2,2)
  CHECK(s.probs[3] == 0);                 // (2,1,1)
  CHECK(s.probs[4] == make_rat(1, 12));   // (1,1,1,1)
  CHECK_THROWS_AS(stationary_measure<BigRat>(4, 0, 1), std::invalid_argument);
}

TEST_CASE("distance to the coset uniform, frozen values") {
  ExactMeasure m1 = evolve_direct<BigRat>({4, 1, 0});
  CHECK(tv(m1, stationary_measure<BigRat>(4, 1, 1)) == make_rat(1, 3));
  ExactMeasure m2 = evolve_direct<BigRat>({4, 1, 1});
  CHECK(tv(m2, stationary_measure<BigRat>(4, 2, 1)) == 0);
  CHECK_THROWS_AS(tv(m1, stationary_measure<BigRat>(5, 1, 1)), std::invalid_argument);
}

TEST_CASE("distance to stationarity never increases with extra steps") {
  for (int k : {1, 2}) {
    BigRat last(2);
    for (int t = 0; t <= 12; ++t) {
      ExactMeasure m = evolve_direct<BigRat>({6, k, t});
      BigRat d = tv(m, stationary_measure<BigRat>(6, t + 1, k));
      CHECK(d <= last);
      last = d;
    }
  }
}

TEST_CASE("fixed point statistics of exact measures") {
  // uniform on all of S_4: moments of the fixed-point count are Bell numbers
  const ClassTable& ct = ClassTable::of(4);
  ExactMeasure uni{4, Parity::Mixed, {}};
  for (const BigInt& s : ct.sizes) uni.probs.push_back(make_rat(s, factorial(4)));
  CHECK(fixed_point_moment(uni, 0) == 1);
  CHECK(fixed_point_moment(uni, 1) == 1);
  CHECK(fixed_point_moment(uni, 2) == 2);
  CHECK(fixed_point_moment(uni, 3) == 5);

  ExactMeasure m2 = evolve_direct<BigRat>({4, 1, 1});
  auto pmf = fixed_point_pmf(m2);
  REQUIRE(pmf.size() == 2);  // zero-mass counts are omitted
  CHECK(pmf.at(0) == make_rat(1, 2));
  CHECK(pmf.at(2) == make_rat(1, 2));
  BigRat total(0);
  for (const auto& [j, p] : pmf) total += p;
  CHECK(total == 1);
  CHECK_THROWS_AS(fixed_point_moment(m2, -1), std::invalid_argument);
}

TEST_CASE("first two fixed-point moments have closed forms") {
  // k = 1: the mean is exactly 1 at every time; the second moment is
  // 2 - ((n-4)/n)^t
  for (int t = 0; t <= 8; ++t) {
    ExactMeasure m = evolve_direct<BigRat>({6, 1, t});
    CHECK(fixed_point_moment(m, 1) == 1);
    CHECK(fixed_point_moment(m, 2) == BigRat(2) - rat_pow(make_rat(2, 6), t));
  }
  // k = 2: the mean is 1 + ((n-3)/(n-1))^t
  for (int t = 0; t <= 8; ++t) {
    ExactMeasure m = evolve_direct<BigRat>({6, 2, t});
    CHECK(fixed_point_moment(m, 1) == BigRat(1) + rat_pow(make_rat(3, 5), t));
  }
}

TEST_CASE("step schedule and its inverse") {
  CHECK(steps_for(400, 1, 0.5) == 200);
  CHECK(steps_for(400, 2, 0.5) == 339);  // round(200 + 200 ln 2)
  CHECK(steps_for(100, 1, 1.0) == 100);
  CHECK(c_for(400, 1, 200) == doctest::Approx(0.5));
  CHECK(steps_for(400, 2, c_for(400, 2, 339)) == 339);
  CHECK_THROWS_AS(steps_for(10, 1, 0.0), std::invalid_argument);
}

TEST_CASE("size ceilings are enforced") {
  CHECK_THROWS_AS(evolve_direct<double>({100, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(evolve_fourier<double>({25, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(evolve_direct<BigRat>({4, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(evolve_direct<BigRat>({4, 3, 0}), std::invalid_argument);  // n-k < 2
}

TEST_CASE("float mode tracks the exact evolution") {
  for (int t : {0, 3, 9}) {
    ExactMeasure e = evolve_direct<BigRat>({8, 2, t});
    FloatMeasure f = evolve_direct<double>({8, 2, t});
    FloatMeasure g = evolve_fourier<double>({8, 2, t});
    for (std::size_t i = 0; i < e.probs.size(); ++i) {
      CHECK(f.probs[i] == doctest::Approx(to_double(e.probs[i])).epsilon(1e-12));
      CHECK(g.probs[i] == doctest::Approx(to_double(e.probs[i])).epsilon(1e-10));
    }
  }
}

TEST_CASE("sampling agrees with the exact law") {
  WalkSpec spec{6, 2, 3};
  spec.samples = 200000;
  spec.shards = 4;
  SimResult sim = simulate(spec, true);
  CHECK(sim.samples == spec.samples);
  long long total = 0;
  for (long long c : sim.fp_hist) total += c;
  CHECK(total == spec.samples);

  // observed classes carry counts; align by class lookup since classes that
  // were never drawn (in particular the whole opposite coset) are absent
  ExactMeasure exact = evolve_direct<BigRat>({6, 2, 3});
  const ClassTable& ct = ClassTable::of(6);
  std::vector<long long> count(ct.types.size(), 0);
  int last = -1;
  for (const auto& [type, c] : sim.class_hist) {
    int at = ct.index(type);
    REQUIRE(at >= 0);
    CHECK(at > last);  // reported in enumeration order
    last = at;
    count[static_cast<std::size_t>(at)] = c;
  }
  double N = static_cast<double>(spec.samples);
  for (std::size_t i = 0; i < ct.types.size(); ++i) {
    double p = to_double(exact.probs[i]);
    double freq = static_cast<double>(count[i]) / N;
    double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / N);
    CHECK(std::fabs(freq - p) <= 4 * sigma + 1e-9);
    if (exact.probs[i] == 0) CHECK(count[i] == 0);  // off-coset classes unreachable
  }
  // the fixed-point histogram is the class histogram pushed forward
  for (int j = 0; j <= 6; ++j) {
    long long want = 0;
    for (std::size_t i = 0; i < ct.types.size(); ++i)
      if (ct.fixed_points[i] == j) want += count[i];
    CHECK(sim.fp_hist[static_cast<std::size_t>(j)] == want);
  }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  WalkSpec spec{7, 1, 4};
  spec.samples = 50000;
  spec.shards = 3;
  spec.seed = 42;
  SimResult a = simulate(spec, true);
  SimResult b = simulate(spec, true);
  CHECK(a.fp_hist == b.fp_hist);
  REQUIRE(a.class_hist.size() == b.class_hist.size());
  for (std::size_t i = 0; i < a.class_hist.size(); ++i)
    CHECK(a.class_hist[i].second == b.class_hist[i].second);
  // and a different seed moves at least one bin
  spec.seed = 43;
  SimResult c = simulate(spec, false);
  CHECK(c.fp_hist != a.fp_hist);
}

TEST_CASE("histogram moments and their standard errors") {
  std::vector<long long> hist = {0, 2, 0, 2};  // values 1,1,3,3
  CHECK(simulated_moment(hist, 1) == doctest::Approx(2.0));
  CHECK(simulated_moment(hist, 2) == doctest::Approx(5.0));
  // se of the mean: population variance of {1,1,3,3} is 1, se = sqrt(1/4)
  CHECK(simulated_moment_se(hist, 1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(simulated_moment({0, 0}, 1), std::invalid_argument);
}
