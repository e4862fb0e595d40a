#include "cyclewalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace cyclewalk {

const char* parity_label(Parity p) {
  switch (p) {
    case Parity::Even: return "+1";
    case Parity::Odd: return "-1";
    default: return "mixed";
  }
}

Parity flip(Parity p) {
  if (p == Parity::Even) return Parity::Odd;
  if (p == Parity::Odd) return Parity::Even;
  return Parity::Mixed;
}

int ClassTable::index(const Partition& type) const {
  auto it = std::lower_bound(
      types.begin(), types.end(), type,
      [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
  if (it != types.end() && *it == type) return static_cast<int>(it - types.begin());
  return -1;
}

const ClassTable& ClassTable::of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ClassTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto ct = std::make_unique<ClassTable>();
    ct->n = n;
    ct->types = enumerate_partitions(n);
    BigInt nf = factorial(n);
    for (const Partition& type : ct->types) {
      std::map<int, int> mult;
      for (int part : type.parts()) ++mult[part];
      BigInt denom = 1;
      for (auto [len, m] : mult) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(len),
                      static_cast<unsigned long>(m));
        denom *= p * factorial(m);
      }
      ct->sizes.push_back(nf / denom);
      ct->signs.push_back((n - type.rows()) % 2 == 0 ? 1 : -1);
      ct->fixed_points.push_back(
          static_cast<int>(std::count(type.parts().begin(), type.parts().end(), 1)));
    }
    slot = std::move(ct);
  }
  return *slot;
}

namespace {

// Sparse one-step transition data: per source class, (target index, pair
// count); counts over a row sum to C(n,2).
struct TransitionTable {
  std::vector<std::vector<std::pair<int, long long>>> moves;
  static const TransitionTable& of(int n);
};

const TransitionTable& TransitionTable::of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TransitionTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const ClassTable& ct = ClassTable::of(n);
    auto tt = std::make_unique<TransitionTable>();
    tt->moves.resize(ct.types.size());
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    for (std::size_t i = 0; i < ct.types.size(); ++i) {
      const std::vector<int>& parts = ct.types[i].parts();
      std::map<int, int> mult;
      for (int part : parts) ++mult[part];
      std::map<int, long long> row;
      auto add = [&](std::vector<int> target, long long count) {
        std::sort(target.begin(), target.end(), std::greater<int>());
        int idx = ct.index(Partition(std::move(target)));
        if (idx < 0) throw std::logic_error("transition target not found");
        row[idx] += count;
      };
      auto without = [&](int a) {
        std::vector<int> v = parts;
        v.erase(std::find(v.begin(), v.end(), a));
        return v;
      };
      for (auto [len, m] : mult) {
        if (len < 2) continue;
        for (int d = 1; 2 * d <= len; ++d) {
          long long count =
              static_cast<long long>(m) * (2 * d < len ? len : len / 2);
          std::vector<int> target = without(len);
          target.push_back(d);
          target.push_back(len - d);
          add(std::move(target), count);
        }
      }
      for (auto ita = mult.begin(); ita != mult.end(); ++ita) {
        for (auto itb = ita; itb != mult.end(); ++itb) {
          int a = ita->first, b = itb->first;
          long long count;
          if (a == b) {
            if (ita->second < 2) continue;
            count = static_cast<long long>(ita->second) * (ita->second - 1) / 2 *
                    a * a;
          } else {
            count = static_cast<long long>(ita->second) * itb->second * a * b;
          }
          std::vector<int> target = without(a);
          target.erase(std::find(target.begin(), target.end(), b));
          target.push_back(a + b);
          add(std::move(target), count);
        }
      }
      long long total = 0;
      for (auto [idx, count] : row) {
        tt->moves[i].emplace_back(idx, count);
        total += count;
      }
      if (total != pairs) throw std::logic_error("transition counts do not sum to C(n,2)");
    }
    slot = std::move(tt);
  }
  return *slot;
}

template <class S>
S from_rat(const BigRat& q) {
  if constexpr (std::is_same_v<S, BigRat>)
    return q;
  else
    return q.get_d();
}

double powi(double x, long long e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

int exact_ceiling() {
  if (const char* e = std::getenv("WALK_MAX_N_EXACT"); e && *e) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 40;
}

long long steps_for(int n, int k, double c) {
  if (c <= 0) throw std::invalid_argument("steps_for: c > 0 required");
  double t = c * n + (k >= 2 ? 0.5 * n * std::log(static_cast<double>(k)) : 0.0);
  return std::llround(t);
}

double c_for(int n, int k, long long t) {
  double shift = k >= 2 ? 0.5 * n * std::log(static_cast<double>(k)) : 0.0;
  return (static_cast<double>(t) - shift) / n;
}

namespace {

void check_walk_shape(int n, int k) {
  if (k < 0 || n - k < 2)
    throw std::invalid_argument("walk: need k >= 0 and n-k >= 2");
}

Parity walk_parity(int n, int k, long long t) {
  // cycle sign (-1)^(n-k-1), times (-1)^t
  return ((n - k - 1) + t) % 2 == 0 ? Parity::Even : Parity::Odd;
}

}  // namespace

template <class S>
ClassMeasure<S> initial_measure(int n, int k) {
  check_walk_shape(n, k);
  const ClassTable& ct = ClassTable::of(n);
  std::vector<int> parts(1 + k, 1);
  parts[0] = n - k;
  int idx = ct.index(Partition(std::move(parts)));
  ClassMeasure<S> m{n, walk_parity(n, k, 0), std::vector<S>(ct.types.size(), S(0))};
  m.probs[idx] = S(1);
  return m;
}

template <class S>
ClassMeasure<S> transposition_step(const ClassMeasure<S>& m) {
  if (m.n < 2) throw std::invalid_argument("transposition_step: n >= 2");
  const ClassTable& ct = ClassTable::of(m.n);
  const TransitionTable& tt = TransitionTable::of(m.n);
  ClassMeasure<S> out{m.n, flip(m.parity), std::vector<S>(ct.types.size(), S(0))};
  S pairs(static_cast<long>(m.n) * (m.n - 1) / 2);
  for (std::size_t i = 0; i < m.probs.size(); ++i) {
    if (m.probs[i] == S(0)) continue;
    S base = m.probs[i] / pairs;
    for (auto [tgt, count] : tt.moves[i]) out.probs[tgt] += base * S(static_cast<long>(count));
  }
  return out;
}

template <class S>
ClassMeasure<S> evolve_direct(const WalkSpec& spec) {
  check_walk_shape(spec.n, spec.k);
  if (spec.t < 0) throw std::invalid_argument("evolve_direct: t >= 0");
  if (spec.n > exact_ceiling())
    throw std::domain_error("evolve_direct: n exceeds exact ceiling " +
                            std::to_string(exact_ceiling()) + " (WALK_MAX_N_EXACT)");
  ClassMeasure<S> m = initial_measure<S>(spec.n, spec.k);
  for (long long s = 0; s < spec.t; ++s) m = transposition_step(m);
  return m;
}

template <class S>
ClassMeasure<S> evolve_fourier(const WalkSpec& spec) {
  check_walk_shape(spec.n, spec.k);
  if (spec.t < 0) throw std::invalid_argument("evolve_fourier: t >= 0");
  if (spec.n > table_ceiling())
    throw std::domain_error("evolve_fourier: n exceeds table ceiling " +
                            std::to_string(table_ceiling()) + " (WALK_MAX_N_TABLE)");
  if constexpr (std::is_same_v<S, BigRat>) {
    if (spec.t > 1000000)
      throw std::domain_error("evolve_fourier: t too large for rational mode");
  }
  int n = spec.n;
  const ClassTable& ct = ClassTable::of(n);
  auto shapes = enumerate_partitions(n);
  CharacterCache& cache = shared_character_cache();
  auto table = cache.table(n);

  // f_lambda and d_lambda for shapes with nonzero transform
  std::vector<std::size_t> live;
  std::vector<S> weight;  // d_lambda * f_lambda
  for (std::size_t li = 0; li < shapes.size(); ++li) {
    BigInt chi_cycle = cache.cycle_character(shapes[li], spec.k);
    if (chi_cycle == 0) continue;
    BigRat r = transposition_normalized(shapes[li]);
    S w;
    if constexpr (std::is_same_v<S, BigRat>) {
      w = BigRat(chi_cycle) * rat_pow(r, static_cast<long>(spec.t));
    } else {
      w = chi_cycle.get_d() * powi(r.get_d(), spec.t);
    }
    if (w == S(0)) continue;
    live.push_back(li);
    weight.push_back(std::move(w));
  }

  BigInt nf = factorial(n);
  ClassMeasure<S> out{n, walk_parity(n, spec.k, spec.t),
                      std::vector<S>(ct.types.size(), S(0))};
  for (std::size_t ci = 0; ci < ct.types.size(); ++ci) {
    if constexpr (std::is_same_v<S, BigRat>) {
      BigRat sum(0);
      for (std::size_t j = 0; j < live.size(); ++j)
        sum += BigRat(table[live[j]][ci]) * weight[j];
      out.probs[ci] = make_rat(ct.sizes[ci], nf) * sum;
    } else {
      Kahan sum;
      for (std::size_t j = 0; j < live.size(); ++j)
        sum.add(table[live[j]][ci].get_d() * weight[j]);
      double v = to_double(make_rat(ct.sizes[ci], nf)) * sum.value();
      if (v < 0 && v > -1e-12) v = 0;  // round-off on a zero coordinate
      out.probs[ci] = v;
    }
  }
  return out;
}

template <class S>
ClassMeasure<S> stationary_measure(int n, long long t, int k) {
  check_walk_shape(n, k);
  if (t < 1) throw std::invalid_argument("stationary_measure: t >= 1 (the cycle is step 1)");
  const ClassTable& ct = ClassTable::of(n);
  bool even = ((t - (n - k)) % 2) == 0;
  BigInt nf = factorial(n);
  ClassMeasure<S> m{n, even ? Parity::Even : Parity::Odd,
                    std::vector<S>(ct.types.size(), S(0))};
  for (std::size_t i = 0; i < ct.types.size(); ++i)
    if (ct.signs[i] == (even ? 1 : -1))
      m.probs[i] = from_rat<S>(make_rat(2 * ct.sizes[i], nf));
  return m;
}

template <class S>
S tv(const ClassMeasure<S>& a, const ClassMeasure<S>& b) {
  if (a.n != b.n || a.probs.size() != b.probs.size())
    throw std::invalid_argument("tv: measures on different groups");
  if constexpr (std::is_same_v<S, BigRat>) {
    BigRat sum(0);
    for (std::size_t i = 0; i < a.probs.size(); ++i) sum += abs(a.probs[i] - b.probs[i]);
    return sum / 2;
  } else {
    Kahan sum;
    for (std::size_t i = 0; i < a.probs.size(); ++i) sum.add(std::fabs(a.probs[i] - b.probs[i]));
    return sum.value() / 2;
  }
}

template <class S>
std::map<int, S> fixed_point_pmf(const ClassMeasure<S>& m) {
  const ClassTable& ct = ClassTable::of(m.n);
  std::map<int, S> pmf;
  for (std::size_t i = 0; i < m.probs.size(); ++i) {
    if (m.probs[i] == S(0)) continue;
    auto [it, fresh] = pmf.try_emplace(ct.fixed_points[i], m.probs[i]);
    if (!fresh) it->second += m.probs[i];
  }
  return pmf;
}

template <class S>
S fixed_point_moment(const ClassMeasure<S>& m, int r) {
  if (r < 0) throw std::invalid_argument("fixed_point_moment: r >= 0");
  const ClassTable& ct = ClassTable::of(m.n);
  if constexpr (std::is_same_v<S, BigRat>) {
    BigRat sum(0);
    for (std::size_t i = 0; i < m.probs.size(); ++i) {
      if (m.probs[i] == 0) continue;
      BigInt jr;
      mpz_ui_pow_ui(jr.get_mpz_t(), static_cast<unsigned long>(ct.fixed_points[i]),
                    static_cast<unsigned long>(r));
      sum += BigRat(jr) * m.probs[i];
    }
    return sum;
  } else {
    Kahan sum;
    for (std::size_t i = 0; i < m.probs.size(); ++i)
      if (m.probs[i] != 0)
        sum.add(powi(static_cast<double>(ct.fixed_points[i]), r) * m.probs[i]);
    return sum.value();
  }
}

template ClassMeasure<BigRat> initial_measure<BigRat>(int, int);
template ClassMeasure<double> initial_measure<double>(int, int);
template ClassMeasure<BigRat> transposition_step<BigRat>(const ClassMeasure<BigRat>&);
template ClassMeasure<double> transposition_step<double>(const ClassMeasure<double>&);
template ClassMeasure<BigRat> evolve_direct<BigRat>(const WalkSpec&);
template ClassMeasure<double> evolve_direct<double>(const WalkSpec&);
template ClassMeasure<BigRat> evolve_fourier<BigRat>(const WalkSpec&);
template ClassMeasure<double> evolve_fourier<double>(const WalkSpec&);
template ClassMeasure<BigRat> stationary_measure<BigRat>(int, long long, int);
template ClassMeasure<double> stationary_measure<double>(int, long long, int);
template BigRat tv<BigRat>(const ClassMeasure<BigRat>&, const ClassMeasure<BigRat>&);
template double tv<double>(const ClassMeasure<double>&, const ClassMeasure<double>&);
template std::map<int, BigRat> fixed_point_pmf<BigRat>(const ClassMeasure<BigRat>&);
template std::map<int, double> fixed_point_pmf<double>(const ClassMeasure<double>&);
template BigRat fixed_point_moment<BigRat>(const ClassMeasure<BigRat>&, int);
template double fixed_point_moment<double>(const ClassMeasure<double>&, int);

}  // namespace cyclewalk
