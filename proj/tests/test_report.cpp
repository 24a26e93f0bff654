#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "dini/errors.hpp"
#include "dini/report.hpp"
#include "dini/suite.hpp"
#include "dini/zeros.hpp"

using namespace dini;

namespace {

Report sample() {
  Report r;
  r.profile = Profile::quick;
  r.environment = current_environment();
  CheckOutcome a;
  a.id = "T1A";
  a.pass = true;
  a.worst_margin = 0.1;
  a.witness = {-0.5, -0.0};
  a.points_tested = 12;
  a.strict = true;
  a.elapsed_seconds = 3.25;
  CheckOutcome b;
  b.id = "B3";
  b.pass = false;
  b.worst_margin = std::numeric_limits<double>::quiet_NaN();
  b.note = "a, \"quoted\" note";
  b.error = "boom";
  r.outcomes = {a, b};
  r.all_pass = false;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("json is canonical and round-trips") {
  const std::string j = report_to_json(sample());
  CHECK(canonicalize_json(j) == j);
  CHECK(j.find("elapsed") == std::string::npos);
  CHECK(j.find("\"worst_margin\":null") != std::string::npos);
  CHECK(j.find("\"x\":0") != std::string::npos);
  CHECK(j.find(":-0,") == std::string::npos);
  CHECK(j.find(":-0}") == std::string::npos);
  CHECK(j.find("\"worst_margin\":0.10000000000000001") != std::string::npos);
  CHECK(j.rfind("{\"all_pass\":false,", 0) == 0);
  CHECK(canonicalize_json("{ \"b\": 1, \"a\": [1.5, true] }") == "{\"a\":[1.5,true],\"b\":1}");
  CHECK_THROWS_AS(canonicalize_json("{"), DomainError);
}

TEST_CASE("csv") {
  const std::string c = report_to_csv(sample());
  CHECK(c.rfind("id,pass,worst_margin,witness_nu,witness_x,points_tested,strict,note,error\n", 0) == 0);
  CHECK(c.find("T1A,true,0.10000000000000001,-0.5,0,12,true,,\n") != std::string::npos);
  CHECK(c.find("\"a, \"\"quoted\"\" note\"") != std::string::npos);
  CHECK(c.find("elapsed") == std::string::npos);
}

TEST_CASE("text report mentions every id") {
  const std::string t = report_to_text(sample());
  CHECK(t.find("T1A") != std::string::npos);
  CHECK(t.find("B3") != std::string::npos);
}

TEST_CASE("zero table json") {
  const ZeroTable t = dini_zero_table(Order(0.5), 2);
  const std::string j = zero_table_to_json(t);
  CHECK(canonicalize_json(j) == j);
  const GoldenZeros g = golden_from_json(j);
  CHECK(g.count == 2);
  CHECK(g.nu == 0.5);
  CHECK(golden_mismatch(t, g) == 0.0);
  const ZeroTable b = bessel_zero_table(Order(0.5), 2);
  CHECK(zero_table_to_json(b).find("\"rayleigh_residual\":null") != std::string::npos);
  GoldenZeros other = g;
  other.nu = 1.0;
  CHECK(std::isinf(golden_mismatch(t, other)));
}

TEST_CASE("golden zero tables") {
  for (const char* name : {"dini_num0.5_n20.json", "dini_nu0.0_n20.json", "dini_nu2.5_n10.json"}) {
    const GoldenZeros g = golden_from_json(slurp(std::string(DINI_GOLDEN_DIR) + "/" + name));
    const ZeroTable t = dini_zero_table(Order(g.nu), g.count);
    CHECK_MESSAGE(golden_mismatch(t, g) < 1e-13, name);
    CHECK(std::fabs(t.rayleigh_residual - g.rayleigh_residual) < 1e-14);
  }
}
