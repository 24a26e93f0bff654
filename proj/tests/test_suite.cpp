#include <doctest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "dini/errors.hpp"
#include "dini/report.hpp"
#include "dini/suite.hpp"
#include "dini/zeros.hpp"

using namespace dini;

namespace {

const std::vector<std::string> kIds = {
    "T1A",  "T1B1", "T1B2", "T1C1", "T1C2", "T1D1", "T1D2", "T1D3", "T1D4", "T1E",
    "T1F1", "T1F2", "T1G",  "T2A",  "T2B",  "T2C",  "T2D",  "T2E",  "T2F",  "T3A",
    "T3B",  "T3C",  "T3D",  "T3E",  "T4A",  "T4B",  "T5",   "T9",   "T10A", "T10B",
    "T10C", "B3",   "B4",   "B5",   "B7",   "B8",   "TUR45", "INTERLACE"};

}  // namespace

TEST_CASE("registry") {
  const auto specs = list_checks();
  REQUIRE(specs.size() == kIds.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(specs[i].id == kIds[i]);
    CHECK_FALSE(specs[i].anchor.empty());
    CHECK_FALSE(specs[i].description.empty());
    CHECK_FALSE(specs[i].nu_values.empty());
    CHECK_NOTHROW(specs[i].x_grid.validate());
    seen.insert(specs[i].id);
  }
  CHECK(seen.size() == specs.size());
}

TEST_CASE("complete monotonicity claims are labelled as surrogates") {
  for (const auto& s : list_checks()) {
    if (s.id == "T1F1" || s.id == "T5") {
      CHECK(s.note.find("surrogate") != std::string::npos);
    }
  }
}

TEST_CASE("T9 at nu = -1/2") {
  CheckOverrides o;
  o.nu_values = std::vector<double>{-0.5};
  const CheckOutcome r = run_check("T9", o);
  CHECK(r.pass);
  CHECK(r.error.empty());
  const double a = dini_zero_table(Order(-0.5), 1).zeros[0];
  const double b = 3.0 * a * a / (8.0 * 0.5);
  CHECK(std::fabs(b - 0.5551304132) < 1e-9);
}

TEST_CASE("single checks pass with defaults") {
  for (const char* id : {"T1A", "T3A", "INTERLACE"}) {
    const CheckOutcome r = run_check(id);
    CHECK_MESSAGE(r.pass, id);
    CHECK(r.points_tested > 0);
  }
}

TEST_CASE("negated checks fail with a finite witness") {
  for (const char* id : {"T1D2", "T9"}) {
    CheckOverrides o;
    o.negate = true;
    const CheckOutcome r = run_check(id, o);
    CHECK_FALSE(r.pass);
    CHECK(std::isfinite(r.worst_margin));
    CHECK(r.worst_margin < 0.0);
    CHECK(std::isfinite(r.witness.nu));
    CHECK(std::isfinite(r.witness.x));
  }
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(run_check("NOPE"), DomainError);
  CHECK_THROWS_AS(run_all(Profile::quick, Execution::serial, {"NOPE"}), DomainError);
  CheckOverrides o;
  o.nu_values = std::vector<double>{-0.5};
  // T3D is restricted to positive orders.
  CHECK_THROWS_AS(run_check("T3D", o), DomainError);
  CHECK_THROWS_AS(profile_from_string("medium"), DomainError);
}

TEST_CASE("quick profile passes and is reproducible") {
  const Report serial = run_all(Profile::quick, Execution::serial);
  CHECK(serial.outcomes.size() == kIds.size());
  CHECK(serial.all_pass);
  for (const auto& o : serial.outcomes) CHECK_MESSAGE(o.pass, o.id);
  const Report again = run_all(Profile::quick, Execution::serial);
  const Report parallel = run_all(Profile::quick, Execution::parallel);
  CHECK(report_to_json(serial) == report_to_json(again));
  CHECK(report_to_json(serial) == report_to_json(parallel));
  CHECK(report_to_csv(serial) == report_to_csv(parallel));
}

TEST_CASE("subset run keeps the requested order") {
  const Report r = run_all(Profile::quick, Execution::serial, {"T9", "T1A"});
  REQUIRE(r.outcomes.size() == 2);
  CHECK(r.outcomes[0].id == "T9");
  CHECK(r.outcomes[1].id == "T1A");
}
