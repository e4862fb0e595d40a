#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cyclewalk/serialize.hpp"
#include "cyclewalk/simulate.hpp"

using namespace cyclewalk;

namespace {

struct Options {
  int n = 0;
  int k = 1;
  std::optional<long long> t;
  std::optional<double> c;
  std::string engine;  // per-command default: exact -> fourier, curve -> direct
  std::string mode = "auto";
  long long samples = 100000;
  int shards = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format;
  std::string config;
  bool with_bounds = false;
};

struct Handles {
  CLI::Option* n = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* t = nullptr;
  CLI::Option* c = nullptr;
  CLI::Option* engine = nullptr;
  CLI::Option* mode = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* shards = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* with_bounds = nullptr;
};

// message printed with the subcommand's usage text, exit code 1
struct UsageError {
  std::string msg;
};

void apply_config(Options& o, const Handles& h) {
  if (o.config.empty()) return;
  std::ifstream f(o.config);
  if (!f) throw UsageError{"cannot open config file " + o.config};
  Json cfg;
  try {
    cfg = Json::parse(f);
  } catch (const std::exception& e) {
    throw UsageError{"config file " + o.config + ": " + e.what()};
  }
  auto unset = [](CLI::Option* opt) { return opt != nullptr && opt->count() == 0; };
  try {
    if (unset(h.n) && cfg.contains("n")) o.n = cfg.at("n").get<int>();
    if (unset(h.k) && cfg.contains("k")) o.k = cfg.at("k").get<int>();
    if (unset(h.t) && cfg.contains("t")) o.t = cfg.at("t").get<long long>();
    if (unset(h.c) && cfg.contains("c")) o.c = cfg.at("c").get<double>();
    if (unset(h.engine) && cfg.contains("engine")) o.engine = cfg.at("engine").get<std::string>();
    if (unset(h.mode) && cfg.contains("mode")) o.mode = cfg.at("mode").get<std::string>();
    if (unset(h.samples) && cfg.contains("samples"))
      o.samples = cfg.at("samples").get<long long>();
    if (unset(h.shards) && cfg.contains("shards")) o.shards = cfg.at("shards").get<int>();
    if (unset(h.seed) && cfg.contains("seed")) o.seed = cfg.at("seed").get<std::uint64_t>();
    if (unset(h.out) && cfg.contains("out")) o.out = cfg.at("out").get<std::string>();
    if (unset(h.format) && cfg.contains("format")) o.format = cfg.at("format").get<std::string>();
    if (unset(h.with_bounds) && cfg.contains("with_bounds"))
      o.with_bounds = cfg.at("with_bounds").get<bool>();
  } catch (const Json::exception& e) {
    throw UsageError{"config file " + o.config + ": " + e.what()};
  }
}

void check_member(const std::string& value, std::initializer_list<const char*> allowed,
                  const char* flag) {
  for (const char* a : allowed)
    if (value == a) return;
  std::string msg = std::string("--") + flag + " must be one of {";
  bool first = true;
  for (const char* a : allowed) {
    if (!first) msg += ", ";
    msg += a;
    first = false;
  }
  throw UsageError{msg + "}, got \"" + value + "\""};
}

void require_n_k(const Options& o) {
  if (o.n <= 0) throw UsageError{"--n is required"};
  if (o.k < 1) throw UsageError{"--k must be >= 1"};
  if (o.n - o.k < 2) throw UsageError{"need n - k >= 2 so an (n-k)-cycle exists"};
}

// exactly one of --t / --c; returns the transposition count
long long resolve_time(const Options& o) {
  if (o.t && o.c) throw UsageError{"give exactly one of --t and --c, not both"};
  if (!o.t && !o.c) throw UsageError{"give exactly one of --t and --c"};
  if (o.t) {
    if (*o.t < 0) throw UsageError{"--t must be >= 0"};
    return *o.t;
  }
  long long t = steps_for(o.n, o.k, *o.c);
  if (t < 0) throw UsageError{"--c too small: derived t is negative"};
  return t;
}

bool use_rational(const Options& o, long long t) {
  if (o.mode == "rational") return true;
  if (o.mode == "float") return false;
  return o.n <= 8 && t <= 12;
}

void emit(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out);
  f << payload;
}

std::string prob_text(const BigRat& p) { return rat_string(p); }
std::string prob_text(double p) { return double_string(p); }
double as_double(const BigRat& p) { return to_double(p); }
double as_double(double p) { return p; }

Json meta_json(const char* command, const Options& o, std::optional<long long> t,
               const char* mode) {
  Json m;
  m["version"] = kVersion;
  m["command"] = command;
  m["n"] = o.n;
  m["k"] = o.k;
  if (t)
    m["t"] = *t;
  else
    m["t"] = nullptr;
  if (o.c)
    m["c"] = *o.c;
  else
    m["c"] = nullptr;
  m["mode"] = mode;
  m["seed"] = o.seed;
  return m;
}

std::string meta_line(const char* command, const Options& o, std::optional<long long> t,
                      const char* mode, const std::string& extra = "") {
  std::ostringstream os;
  os << "# version=" << kVersion << " command=" << command << " n=" << o.n << " k=" << o.k;
  if (t) os << " t=" << *t;
  if (o.c) os << " c=" << double_string(*o.c);
  os << " mode=" << mode << " seed=" << o.seed;
  if (!extra.empty()) os << ' ' << extra;
  os << '\n';
  return os.str();
}

template <class S>
struct ExactRun {
  ClassMeasure<S> measure;
  S tv_value{};
  std::optional<S> discrepancy;
};

template <class S>
ExactRun<S> compute_exact(const WalkSpec& spec, const std::string& engine, double tol) {
  ExactRun<S> out;
  std::optional<ClassMeasure<S>> direct, fourier;
  if (engine == "direct" || engine == "both") direct = evolve_direct<S>(spec);
  if (engine == "fourier" || engine == "both") fourier = evolve_fourier<S>(spec);
  if (direct && fourier) {
    S worst{};
    for (std::size_t i = 0; i < direct->probs.size(); ++i) {
      S d = direct->probs[i] - fourier->probs[i];
      if (d < 0) d = -d;
      if (d > worst) worst = d;
    }
    out.discrepancy = worst;
    if (as_double(worst) > tol)
      throw std::logic_error("engines disagree: max per-class discrepancy " + prob_text(worst));
  }
  out.measure = fourier ? *fourier : *direct;
  auto u = stationary_measure<S>(spec.n, spec.t + 1, spec.k);
  out.tv_value = tv(out.measure, u);
  return out;
}

template <class S>
int emit_exact(const Options& o, const WalkSpec& spec, const char* mode, double tol) {
  ExactRun<S> run = compute_exact<S>(spec, o.engine, tol);
  if (o.format == "csv") {
    std::string payload =
        meta_line("exact", o, spec.t, mode, "engine=" + o.engine) +
        "# tv_to_stationary=" + prob_text(run.tv_value) + "\n";
    if (run.discrepancy)
      payload += "# engine_discrepancy=" + prob_text(*run.discrepancy) + "\n";
    payload += measure_csv(run.measure);
    emit(o.out, payload);
  } else {
    Json doc;
    Json meta = meta_json("exact", o, spec.t, mode);
    meta["engine"] = o.engine;
    doc["meta"] = std::move(meta);
    doc["measure"] = measure_json(run.measure);
    doc["tv_to_stationary"] = prob_text(run.tv_value);
    if (run.discrepancy)
      doc["engine_discrepancy"] = prob_text(*run.discrepancy);
    else
      doc["engine_discrepancy"] = nullptr;
    emit(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

int run_exact(Options& o) {
  require_n_k(o);
  if (o.engine.empty()) o.engine = "fourier";
  check_member(o.engine, {"direct", "fourier", "both"}, "engine");
  long long t = resolve_time(o);
  WalkSpec spec;
  spec.n = o.n;
  spec.k = o.k;
  spec.t = t;
  if (use_rational(o, t)) return emit_exact<BigRat>(o, spec, "rational", 0.0);
  return emit_exact<double>(o, spec, "float", 1e-10);
}

template <class S>
std::string curve_rows(const Options& o, long long t_max) {
  std::ostringstream os;
  ClassMeasure<S> m = initial_measure<S>(o.n, o.k);
  bool flagged = false;
  for (long long t = 0; t <= t_max; ++t) {
    if (o.engine == "fourier") {
      WalkSpec spec;
      spec.n = o.n;
      spec.k = o.k;
      spec.t = t;
      m = evolve_fourier<S>(spec);
    } else if (t > 0) {
      m = transposition_step(m);
    }
    auto u = stationary_measure<S>(o.n, t + 1, o.k);
    S d = tv(m, u);
    os << t << ',' << prob_text(d) << ',' << double_string(ds_upper_bound(o.n, o.k, t));
    double c = c_for(o.n, o.k, t);
    if (o.with_bounds && c > 0) {
      Envelope env = theorem_envelopes(o.k, c);
      os << ',' << double_string(env.lower) << ',' << double_string(env.upper);
    } else {
      os << ",,";
    }
    if (!flagged && as_double(d) < 0.01) {
      os << ",1";
      flagged = true;
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

int run_curve(Options& o) {
  require_n_k(o);
  if (o.engine.empty()) o.engine = "direct";
  check_member(o.engine, {"direct", "fourier"}, "engine");
  if (o.c) throw UsageError{"curve takes --t as the largest t, not --c"};
  if (!o.t) throw UsageError{"--t (largest t) is required"};
  long long t_max = *o.t;
  if (t_max < 0) throw UsageError{"--t must be >= 0"};
  if (o.format == "json") throw UsageError{"curve emits csv only"};
  bool rational = o.mode == "rational";
  const char* mode = rational ? "rational" : "float";
  std::string payload =
      meta_line("curve", o, t_max, mode,
                std::string("with_bounds=") + (o.with_bounds ? "1" : "0")) +
      "t,tv,ds_upper,theorem_lower,theorem_upper,first_below_0.01\n";
  payload += rational ? curve_rows<BigRat>(o, t_max) : curve_rows<double>(o, t_max);
  emit(o.out, payload);
  return 0;
}

int run_simulate(Options& o) {
  require_n_k(o);
  long long t = resolve_time(o);
  if (o.samples < 1) throw UsageError{"--samples must be >= 1"};
  if (o.shards < 1) throw UsageError{"--shards must be >= 1"};
  if (o.format == "csv") throw UsageError{"simulate emits json only"};
  WalkSpec spec;
  spec.n = o.n;
  spec.k = o.k;
  spec.t = t;
  spec.seed = o.seed;
  spec.samples = o.samples;
  spec.shards = o.shards;
  SimResult res = simulate(spec, o.n <= 12);

  double c = o.c ? *o.c : c_for(o.n, o.k, t);
  bool have_c = c > 0;
  if (have_c && !o.c) o.c = c;  // so the metadata records the derived scale

  Json doc;
  Json meta = meta_json("simulate", o, t, "float");
  meta["samples"] = o.samples;
  meta["shards"] = o.shards;
  doc["meta"] = std::move(meta);
  doc["fixed_point_histogram"] = res.fp_hist;
  Json classes = Json::array();
  for (const auto& [type, count] : res.class_hist) {
    Json row;
    row["type"] = type.to_string();
    row["count"] = count;
    classes.push_back(std::move(row));
  }
  doc["class_histogram"] = std::move(classes);

  KMoments km;
  if (o.k >= 2 && have_c) km = moments_k(o.k, c);
  Json moments = Json::array();
  for (int r = 1; r <= 3; ++r) {
    Json row;
    row["r"] = r;
    row["value"] = simulated_moment(res.fp_hist, r);
    row["se"] = simulated_moment_se(res.fp_hist, r);
    std::optional<double> ref;
    if (have_c) {
      if (o.k == 1)
        ref = moment_k1(r, c);
      else if (r == 1)
        ref = km.first;
      else if (r == 2)
        ref = km.second;
      else if (km.third)
        ref = *km.third;
    }
    if (ref)
      row["reference"] = *ref;
    else
      row["reference"] = nullptr;
    moments.push_back(std::move(row));
  }
  doc["moments"] = std::move(moments);

  double p0 = static_cast<double>(res.fp_hist.empty() ? 0 : res.fp_hist[0]) /
              static_cast<double>(res.samples);
  Json pj;
  pj["value"] = p0;
  pj["se"] = std::sqrt(p0 * (1 - p0) / static_cast<double>(res.samples));
  if (o.k == 1 && have_c)
    pj["reference"] = asymptotic_pmf_k1(0, c).value;
  else
    pj["reference"] = nullptr;
  doc["p_no_fixed_points"] = std::move(pj);

  emit(o.out, doc.dump(2) + "\n");
  return 0;
}

int run_bounds(Options& o) {
  require_n_k(o);
  if (o.t && o.c) throw UsageError{"give exactly one of --t and --c, not both"};
  if (!o.t && !o.c) throw UsageError{"give exactly one of --t and --c"};
  double c = o.c ? *o.c : c_for(o.n, o.k, *o.t);
  if (c <= 0)
    throw UsageError{o.c ? "--c must be > 0"
                         : "--t is below the k's time scale: derived c must be > 0"};
  if (!o.c) o.c = c;
  BoundsReport rep = make_bounds_report(o.n, o.k, c);
  if (o.format == "csv") {
    emit(o.out, meta_line("bounds", o, rep.t, "float") + bounds_csv(rep));
  } else {
    Json doc;
    doc["meta"] = meta_json("bounds", o, rep.t, "float");
    doc["report"] = bounds_json(rep);
    emit(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

int run_chartable(Options& o) {
  if (o.n <= 0) throw UsageError{"--n is required"};
  if (o.format == "json") throw UsageError{"chartable emits csv only"};
  std::ostringstream os;
  os << meta_line("chartable", o, std::nullopt, "exact");
  write_character_table_csv(os, o.n, shared_character_cache());
  emit(o.out, os.str());
  return 0;
}

Handles add_flags(CLI::App* sub, Options& o, bool time, bool engine, bool mode, bool sim,
                  bool with_bounds) {
  Handles h;
  h.n = sub->add_option("--n", o.n, "symmetric group degree");
  if (sub->get_name() != "chartable")
    h.k = sub->add_option("--k", o.k, "cycle deficiency; the first step is an (n-k)-cycle");
  if (time) {
    const char* tdesc = sub->get_name() == "curve"
                            ? "largest transposition count; one row per t = 0..t"
                            : "transpositions applied after the cycle";
    h.t = sub->add_option("--t", o.t, tdesc);
    if (sub->get_name() != "curve")
      h.c = sub->add_option("--c", o.c,
                            "time scale constant; t = round(cn) for k = 1, "
                            "round(cn + (n/2) ln k) for k >= 2");
  }
  if (engine)
    h.engine = sub->add_option("--engine", o.engine, "direct | fourier | both")
                   ->check(CLI::IsMember({"direct", "fourier", "both"}));
  if (mode)
    h.mode = sub->add_option("--mode", o.mode,
                             "auto | rational | float (auto: rational when n <= 8 and t <= 12)")
                ->check(CLI::IsMember({"auto", "rational", "float"}));
  if (sim) {
    h.samples = sub->add_option("--samples", o.samples, "number of sampled walks");
    h.shards = sub->add_option("--shards", o.shards, "independent RNG shards to merge");
    h.seed = sub->add_option("--seed", o.seed, "RNG seed (fixed default, never wall clock)");
  }
  if (with_bounds)
    h.with_bounds = sub->add_flag("--with-bounds", o.with_bounds,
                                  "fill the theorem envelope columns (needs derived c > 0)");
  h.out = sub->add_option("--out", o.out, "output path (default stdout)");
  h.format = sub->add_option("--format", o.format, "json | csv")
                 ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--config", o.config, "JSON file with the same keys as the flags; flags win");
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(n-k)-cycle followed by random transpositions on S_n: "
               "exact distributions, Monte Carlo, and mixing-time bounds"};
  app.require_subcommand(1);

  Options o;
  CLI::App* exact = app.add_subcommand(
      "exact", "class distribution after the cycle and t transpositions, with tv to stationary");
  CLI::App* curve =
      app.add_subcommand("curve", "CSV of tv against t, with bound envelopes");
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "seeded Monte Carlo; histograms and moment summaries");
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "lower/upper bound report at a given time scale");
  CLI::App* chartable = app.add_subcommand("chartable", "character table CSV");

  Handles h_exact = add_flags(exact, o, true, true, true, false, false);
  Handles h_curve = add_flags(curve, o, true, false, true, false, true);
  h_curve.engine = curve->add_option("--engine", o.engine, "direct | fourier")
                       ->check(CLI::IsMember({"direct", "fourier"}));
  Handles h_sim = add_flags(simulate_cmd, o, true, false, false, true, false);
  Handles h_bounds = add_flags(bounds_cmd, o, true, false, false, false, false);
  Handles h_table = add_flags(chartable, o, false, false, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const Handles& h = sub == exact        ? h_exact
                     : sub == curve      ? h_curve
                     : sub == simulate_cmd ? h_sim
                     : sub == bounds_cmd ? h_bounds
                                         : h_table;
  try {
    apply_config(o, h);
    check_member(o.mode, {"auto", "rational", "float"}, "mode");
    if (o.format.empty()) o.format = (sub == curve || sub == chartable) ? "csv" : "json";
    check_member(o.format, {"json", "csv"}, "format");

    if (sub == exact) return run_exact(o);
    if (sub == curve) return run_curve(o);
    if (sub == simulate_cmd) return run_simulate(o);
    if (sub == bounds_cmd) return run_bounds(o);
    return run_chartable(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.msg << "\n\n" << sub->help();
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
