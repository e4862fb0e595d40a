#include "cyclewalk/serialize.hpp"

#include <cstdio>
#include <type_traits>

namespace cyclewalk {

std::string rat_string(const BigRat& q) { return q.get_str(); }

std::string double_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

namespace {

template <class S>
std::string prob_string(const S& p) {
  if constexpr (std::is_same_v<S, BigRat>)
    return rat_string(p);
  else
    return double_string(p);
}

template <class S>
Json measure_json_impl(const ClassMeasure<S>& m, const char* mode) {
  Json doc;
  doc["n"] = m.n;
  doc["mode"] = mode;
  doc["parity"] = parity_label(m.parity);
  Json classes = Json::array();
  const ClassTable& ct = ClassTable::of(m.n);
  for (std::size_t i = 0; i < m.probs.size(); ++i) {
    Json row;
    row["type"] = ct.types[i].to_string();
    row["prob"] = prob_string(m.probs[i]);
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

template <class S>
std::string measure_csv_impl(const ClassMeasure<S>& m) {
  std::string out = "type,prob\n";
  const ClassTable& ct = ClassTable::of(m.n);
  for (std::size_t i = 0; i < m.probs.size(); ++i) {
    out += csv_field(ct.types[i].to_string());
    out += ',';
    out += prob_string(m.probs[i]);
    out += '\n';
  }
  return out;
}

}  // namespace

Json measure_json(const ExactMeasure& m) { return measure_json_impl(m, "rational"); }
Json measure_json(const FloatMeasure& m) { return measure_json_impl(m, "float"); }
std::string measure_csv(const ExactMeasure& m) { return measure_csv_impl(m); }
std::string measure_csv(const FloatMeasure& m) { return measure_csv_impl(m); }

Json bounds_json(const BoundsReport& rep) {
  Json doc;
  doc["n"] = rep.n;
  doc["k"] = rep.k;
  doc["t"] = rep.t;
  doc["c"] = rep.c;
  if (rep.exact_tv)
    doc["exact_tv"] = *rep.exact_tv;
  else
    doc["exact_tv"] = nullptr;
  doc["finite_n_upper"] = rep.finite_n_upper;
  doc["moment_lower_with_half"] = rep.moment_lower;
  doc["moment_lower_without_half"] = rep.moment_lower_nohalf;
  doc["theorem_lower"] = rep.theorem_lower;
  doc["theorem_upper"] = rep.theorem_upper;
  doc["pmf_terms"] = rep.pmf_terms;
  doc["pmf_tail_bound"] = rep.pmf_tail_bound;
  return doc;
}

std::string bounds_csv(const BoundsReport& rep) {
  std::string out = "n,k,t,c,exact_tv,finite_n_upper,moment_lower,theorem_lower,theorem_upper\n";
  out += std::to_string(rep.n) + ',' + std::to_string(rep.k) + ',' + std::to_string(rep.t) + ',';
  out += double_string(rep.c);
  out += ',';
  if (rep.exact_tv) out += double_string(*rep.exact_tv);
  out += ',';
  out += double_string(rep.finite_n_upper);
  out += ',';
  out += double_string(rep.moment_lower);
  out += ',';
  out += double_string(rep.theorem_lower);
  out += ',';
  out += double_string(rep.theorem_upper);
  out += '\n';
  return out;
}

}  // namespace cyclewalk
