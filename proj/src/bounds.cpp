#include "cyclewalk/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclewalk {

BigInt stirling2(int r, int i) {
  if (r < 0 || i < 0) throw std::invalid_argument("stirling2: negative argument");
  if (i > r) return 0;
  if (r == 0) return i == 0 ? 1 : 0;
  // S(r,i) = i S(r-1,i) + S(r-1,i-1)
  std::vector<BigInt> row(r + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= r; ++m) {
    for (int j = std::min(m, r); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;  // S(m,0) = 0 once m >= 1
  }
  return row[i];
}

BigInt bell(int r) {
  BigInt b = 0;
  for (int i = 0; i <= r; ++i) b += stirling2(r, i);
  return b;
}

BigInt tensor_coeff(const Partition& lambda, int r) {
  int n = lambda.n();
  if (n < 1) throw std::invalid_argument("tensor_coeff: empty shape");
  int valid_max = n - lambda.part(2);
  if (r < 1 || r > valid_max)
    throw std::domain_error("tensor_coeff: r outside validity range 1.." +
                            std::to_string(valid_max) + " for shape " + lambda.to_string());
  Partition bar = strip_rows(lambda, 1);
  int b = bar.n();
  BigInt sum = 0;
  for (int i = b; i <= r; ++i) sum += binomial(i, b) * stirling2(r, i);
  return dimension(bar) * sum;
}

double moment_k1(int r, double c) {
  if (r < 1) throw std::invalid_argument("moment_k1: r >= 1");
  if (c <= 0) throw std::invalid_argument("moment_k1: c > 0");
  double x = std::exp(-2 * c);
  double zeta = 1 - x, eta = x / zeta;
  double sum = 0, zp = 1;
  for (int i = 1; i <= r; ++i) {
    zp *= zeta;
    sum += stirling2(r, i).get_d() * (1 + i * eta) * zp;
  }
  return sum;
}

KMoments moments_k(int k, double c) {
  if (k < 2) throw std::invalid_argument("moments_k: k >= 2");
  if (c <= 0) throw std::invalid_argument("moments_k: c > 0");
  double e2 = std::exp(-2 * c), e4 = e2 * e2, e6 = e4 * e2;
  KMoments m;
  m.first = 1 + (k - 1.0) / k * e2;
  if (k == 2)
    m.second = 2 + 1.5 * e2 - 0.25 * e4;
  else if (k == 3)
    m.second = 2 + 2 * e2 + e4 / 9;
  else
    m.second = 2 + 3 * (k - 1.0) / k * e2 + (k * (k - 3.0) + 1) / (k * (double)k) * e4;
  if (k == 2) m.third = 5 + 5 * e2 - 1.5 * e4 - 0.125 * e6;
  return m;
}

double holder_lower_bound(double delta_e, double pth_moment_sum, double p) {
  if (p <= 1) throw std::invalid_argument("holder_lower_bound: p > 1");
  if (delta_e < 0 || pth_moment_sum <= 0)
    throw std::invalid_argument("holder_lower_bound: need delta_e >= 0 and a positive moment sum");
  double q = p / (p - 1);
  return 0.5 * std::pow(delta_e, q) / std::pow(pth_moment_sum, q - 1);
}

Envelope theorem_envelopes(int k, double c) {
  if (k < 1) throw std::invalid_argument("theorem_envelopes: k >= 1");
  if (c <= 0) throw std::invalid_argument("theorem_envelopes: c > 0");
  Envelope env;
  if (k == 1) {
    double e2 = std::exp(-2 * c), e4 = std::exp(-4 * c);
    env.lower = (1 - std::exp(e2) + std::exp(e2 - 2 * c)) / std::exp(1.0);
    env.upper = e4 / (2 * std::sqrt(1 - e4));
  } else {
    env.lower = std::exp(-4 * c) / 12;
    env.upper = std::sqrt((std::exp(1.0) - 1) / 2) * std::exp(-2 * c);
  }
  return env;
}

PmfValue asymptotic_pmf_k1(int j, double c, int truncation) {
  if (j < 0) throw std::invalid_argument("asymptotic_pmf_k1: j >= 0");
  if (c <= 0) throw std::invalid_argument("asymptotic_pmf_k1: c > 0");
  double x = std::exp(-2 * c);
  double zeta = 1 - x, eta = x / zeta;
  int cap = truncation > 0 ? truncation : 200;
  // term_i = (-1)^(i-j) C(i,j) (1 + i eta) zeta^i / i!
  double mag = std::pow(zeta, j);
  for (int f = 2; f <= j; ++f) mag /= f;  // now C(j,j) zeta^j / j!
  PmfValue out;
  int sign = 1;
  int i = j;
  while (true) {
    out.value += sign * (1 + i * eta) * mag;
    ++out.terms;
    double next_mag = mag * zeta / (i - j + 1);
    double next_term = (1 + (i + 1) * eta) * next_mag;
    if (out.terms >= cap || (truncation == 0 && next_term < 1e-12)) {
      out.tail_bound = next_term / (1 - zeta);
      break;
    }
    mag = next_mag;
    sign = -sign;
    ++i;
  }
  return out;
}

double theorem1_lower_from_pmf(double c) {
  return std::fabs(asymptotic_pmf_k1(0, c).value - std::exp(-1.0));
}

namespace {

// log |r| from the exact rational, stable near |r| = 1
double log_abs_r(const BigRat& r) {
  BigRat a = abs(r);
  return std::log1p(to_double(a - 1));
}

double r_power(const BigRat& r, long long e) {
  if (e == 0) return 1.0;
  if (r == 0) return 0.0;
  if (e > 2000) return std::exp(static_cast<double>(e) * log_abs_r(r));
  double x = std::fabs(to_double(r)), out = 1.0;
  long long m = e;
  while (m > 0) {
    if (m & 1) out *= x;
    x *= x;
    m >>= 1;
  }
  return out;
}

}  // namespace

double ds_upper_bound(int n, int k, long long t) {
  if (k < 0 || n - k < 2) throw std::invalid_argument("ds_upper_bound: need k >= 0, n-k >= 2");
  if (t < 0) throw std::invalid_argument("ds_upper_bound: t >= 0");
  Kahan sum;
  if (2 * (n - k) > n) {
    // every shape with nonzero cycle character is an (n-k)-hook attachment to
    // a unique xi of size k
    for (const Partition& xi : enumerate_partitions(k)) {
      double d2 = dimension(xi).get_d();
      d2 *= d2;
      for (const Partition& lam : rim_hook_attachments(xi, n - k)) {
        if (lam.rows() == 1 || lam.part(1) == 1) continue;  // trivial and sign shapes
        sum.add(d2 * r_power(transposition_normalized(lam), 2 * t));
      }
    }
  } else {
    if (n > exact_ceiling())
      throw std::domain_error("ds_upper_bound: full enumeration needs n <= " +
                              std::to_string(exact_ceiling()) + " (WALK_MAX_N_EXACT)");
    CharacterCache& cache = shared_character_cache();
    for (const Partition& lam : enumerate_partitions(n)) {
      if (lam.rows() == 1 || lam.part(1) == 1) continue;
      BigInt chi = cache.cycle_character(lam, k);
      if (chi == 0) continue;
      double c2 = chi.get_d();
      c2 *= c2;
      sum.add(c2 * r_power(transposition_normalized(lam), 2 * t));
    }
  }
  return 0.5 * std::sqrt(0.5 * sum.value());
}

std::pair<BigInt, BigInt> dim_sum_bound(int n, int lambda1) {
  if (lambda1 < 1 || lambda1 > n) throw std::invalid_argument("dim_sum_bound: 1 <= lambda1 <= n");
  BigInt lhs = 0;
  for (const Partition& lam : enumerate_partitions(n))
    if (lam.part(1) == lambda1) lhs += dimension(lam) * dimension(lam);
  BigInt b = binomial(n, lambda1);
  return {lhs, b * b * factorial(n - lambda1)};
}

IdentityChecks stirling_identity_checks(int max_n) {
  IdentityChecks rep;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m < n; ++m) {
      BigInt s = 0;
      for (int k = 0; k <= n; ++k) {
        BigInt km;
        mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(m));
        s += ((n - k) % 2 == 0 ? 1 : -1) * binomial(n, k) * km;
      }
      ++rep.cases;
      if (s != 0) {
        rep.passed = false;
        rep.failures.push_back("alternating-sum identity fails at n=" + std::to_string(n) +
                               ", m=" + std::to_string(m));
      }
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (double x : {-2.0, 0.3, 1.0, 1.7}) {
      double lhs = 0;
      for (int k = 0; k <= n; ++k)
        lhs += binomial(n, k).get_d() * std::pow(-x, k + 2) / (k + 2);
      double y = 1 - x;
      double rhs = (std::pow(y, n + 2) - 1) / (n + 2) - (std::pow(y, n + 1) - 1) / (n + 1);
      ++rep.cases;
      if (std::fabs(lhs - rhs) > 1e-10) {
        rep.passed = false;
        rep.failures.push_back("integrated-binomial identity fails at n=" + std::to_string(n) +
                               ", x=" + std::to_string(x));
      }
    }
  }
  return rep;
}

BoundsReport make_bounds_report(int n, int k, double c) {
  if (k < 1 || n - k < 2) throw std::invalid_argument("bounds report: need k >= 1 and n-k >= 2");
  if (c <= 0) throw std::invalid_argument("bounds report: c > 0");
  BoundsReport rep;
  rep.n = n;
  rep.k = k;
  rep.c = c;
  rep.t = steps_for(n, k, c);
  rep.finite_n_upper = ds_upper_bound(n, k, rep.t);
  Envelope env = theorem_envelopes(k, c);
  rep.theorem_lower = env.lower;
  rep.theorem_upper = env.upper;
  if (k == 1) {
    rep.moment_lower = theorem1_lower_from_pmf(c);
    rep.moment_lower_nohalf = rep.moment_lower;
    PmfValue p0 = asymptotic_pmf_k1(0, c);
    rep.pmf_terms = p0.terms;
    rep.pmf_tail_bound = p0.tail_bound;
  } else {
    KMoments m = moments_k(k, c);
    double delta = m.first - 1;
    if (k == 2) {
      double sum = *m.third + 5;  // E_U(chi^3) = B_3 in the limit
      rep.moment_lower = holder_lower_bound(delta, sum, 3);
    } else {
      double sum = m.second + 2;  // E_U(chi^2) = B_2 in the limit
      rep.moment_lower = holder_lower_bound(delta, sum, 2);
    }
    rep.moment_lower_nohalf = 2 * rep.moment_lower;
  }
  if (n <= 16) {
    WalkSpec spec;
    spec.n = n;
    spec.k = k;
    spec.t = rep.t;
    if (n <= 8 && rep.t <= 12) {
      auto mu = evolve_fourier<BigRat>(spec);
      auto u = stationary_measure<BigRat>(n, rep.t + 1, k);
      rep.exact_tv = to_double(tv(mu, u));
    } else {
      auto mu = evolve_fourier<double>(spec);
      auto u = stationary_measure<double>(n, rep.t + 1, k);
      rep.exact_tv = tv(mu, u);
    }
  }
  return rep;
}

}  // namespace cyclewalk
