#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <string>

#include "cyclewalk/serialize.hpp"
#include "cyclewalk/walk.hpp"
#include "schema_check.hpp"

using namespace cyclewalk;

namespace {

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(WALK_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("rational rendering") {
  CHECK(rat_string(make_rat(1, 3)) == "1/3");
  CHECK(rat_string(make_rat(2, 1)) == "2");
  CHECK(rat_string(make_rat(-4, 6)) == "-2/3");
  CHECK(rat_string(BigRat(0)) == "0");
}

TEST_CASE("floating point rendering round trips") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -0.25, 0.0}) {
    std::string s = double_string(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(double_string(0.5) == "0.5");
  CHECK(double_string(2.0) == "2");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("4") == "4");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
  CHECK(csv_field("a\nb") == "\"a\nb\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("measure serialization") {
  ExactMeasure m = evolve_direct<BigRat>({4, 1, 0});
  Json doc = measure_json(m);
  CHECK(doc.at("n") == 4);
  CHECK(doc.at("mode") == "rational");
  CHECK(doc.at("parity") == "+1");
  REQUIRE(doc.at("classes").size() == 5);
  CHECK(doc.at("classes")[1].at("type") == "3,1");
  CHECK(doc.at("classes")[1].at("prob") == "1");
  CHECK(doc.at("classes")[0].at("prob") == "0");

  Json schema = load_schema("measure.schema.json");
  auto problems = schema_check::check(schema, doc);
  for (const std::string& p : problems) MESSAGE(p);
  CHECK(problems.empty());

  FloatMeasure f = evolve_direct<double>({4, 1, 2});
  Json fdoc = measure_json(f);
  CHECK(fdoc.at("mode") == "float");
  auto fproblems = schema_check::check(schema, fdoc);
  for (const std::string& p : fproblems) MESSAGE(p);
  CHECK(fproblems.empty());
  // probabilities stay strings in float mode and parse as doubles
  double total = 0;
  for (const Json& row : fdoc.at("classes")) {
    REQUIRE(row.at("prob").is_string());
    total += std::strtod(row.at("prob").get<std::string>().c_str(), nullptr);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(measure_csv(m) ==
        "type,prob\n"
        "4,0\n"
        "\"3,1\",1\n"
        "\"2,2\",0\n"
        "\"2,1,1\",0\n"
        "\"1,1,1,1\",0\n");
}

TEST_CASE("report serialization") {
  BoundsReport rep = make_bounds_report(8, 1, 0.5);
  Json doc = bounds_json(rep);
  CHECK(doc.at("n") == 8);
  CHECK(doc.at("exact_tv").is_number());
  CHECK(doc.at("moment_lower_with_half").is_number());
  CHECK(doc.at("moment_lower_without_half").is_number());
  Json schema = load_schema("bounds.schema.json");
  auto problems = schema_check::check(schema.at("properties").at("report"), doc);
  for (const std::string& p : problems) MESSAGE(p);
  CHECK(problems.empty());

  BoundsReport far = make_bounds_report(20, 2, 0.5);
  Json fdoc = bounds_json(far);
  CHECK(fdoc.at("exact_tv").is_null());
  auto fproblems = schema_check::check(schema.at("properties").at("report"), fdoc);
  CHECK(fproblems.empty());

  // single summary row; the exact column is left empty out of range
  std::string csv = bounds_csv(far);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "n,k,t,c,exact_tv,finite_n_upper,moment_lower,theorem_lower,theorem_upper");
  std::string row = csv.substr(csv.find('\n') + 1);
  CHECK(row.substr(0, 5) == "20,2,");
  CHECK(row.find(",,") != std::string::npos);
  std::string near = bounds_csv(rep);
  CHECK(near.find(",,") == std::string::npos);

  // text form survives a parse round trip
  Json reparsed = Json::parse(doc.dump(2));
  CHECK(reparsed == doc);
}
