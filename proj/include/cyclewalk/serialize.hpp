#pragma once

#include <string>

#include "json.hpp"

#include "cyclewalk/bounds.hpp"
#include "cyclewalk/measure.hpp"

namespace cyclewalk {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

std::string rat_string(const BigRat& q);      // "p/q", just "p" when integral
std::string double_string(double x);          // 17 significant digits
std::string csv_field(const std::string& s);  // quote when the field needs it

// {"n", "mode", "parity", "classes": [{"type", "prob"}, ...]}, every class
// listed, probabilities as strings in either mode.
Json measure_json(const ExactMeasure& m);
Json measure_json(const FloatMeasure& m);

std::string measure_csv(const ExactMeasure& m);  // header "type,prob"
std::string measure_csv(const FloatMeasure& m);

// Both lower-bound readings appear, labeled; exact_tv is null when the class
// space was too large to evolve.
Json bounds_json(const BoundsReport& rep);

// Single-row summary, header included; exact_tv blank when absent.
std::string bounds_csv(const BoundsReport& rep);

}  // namespace cyclewalk
