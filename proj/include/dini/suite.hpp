#pragma once

// Registry of named inequality checks over (nu, x) grids, and the runner that
// turns them into a Report.

#include <optional>
#include <string>
#include <vector>

#include "dini/grid_eval.hpp"
#include "dini/probes.hpp"

namespace dini {

/// How a check's x grid is interpreted: absolute x values, or fractions of
/// alpha_{nu,1} (for claims restricted to (-alpha_{nu,1}, alpha_{nu,1})).
enum class XScale { absolute, alpha1_fraction };

enum class Profile { quick, full };

struct CheckSpec {
  std::string id;
  std::string description;
  /// The claim being checked, quoted.
  std::string anchor;
  std::vector<double> nu_values;
  GridSpec x_grid;
  XScale x_scale = XScale::absolute;
  double slack = kDefaultSlack;
  /// Caveat printed with every outcome (surrogates, non-strict points, ...).
  std::string note;
};

struct Witness {
  double nu = 0.0;
  double x = 0.0;
};

struct CheckOutcome {
  std::string id;
  bool pass = false;
  double worst_margin = 0.0;
  Witness witness;
  int points_tested = 0;
  double elapsed_seconds = 0.0;
  /// worst margin over the points where the claim is strict exceeds 10 * slack
  bool strict = false;
  std::string note;
  /// Non-empty when evaluation threw; pass is then false and worst_margin NaN.
  std::string error;
};

struct Environment {
  std::string version;
  double slack = kDefaultSlack;
  double x_max = 50.0;
  double epsilon_rel = 1e-15;
  double zero_rel_tol = 1e-13;
  int cm_max_order = kMaxCmOrder;
  double cm_step = kDefaultCmStep;
  std::vector<double> nu_grid;
};

struct Report {
  Profile profile = Profile::full;
  Environment environment;
  std::vector<CheckOutcome> outcomes;
  bool all_pass = false;
};

struct CheckOverrides {
  std::optional<std::vector<double>> nu_values;
  std::optional<int> points;
  std::optional<double> slack;
  Profile profile = Profile::full;
  /// Test hook: flips every recorded margin, so a passing check must fail.
  bool negate = false;
};

/// Default nu grid shared by the registry.
const std::vector<double>& default_nu_grid();

/// Every registered check with its default grids, in report order.
std::vector<CheckSpec> list_checks();

/// Throws DomainError for an unknown id or an override that leaves no
/// admissible nu; evaluation errors propagate.
CheckOutcome run_check(const std::string& id, const CheckOverrides& overrides = {});

/// Runs the selected checks (all when `ids` is empty). Evaluation errors are
/// recorded in the outcome instead of propagating; unknown ids throw.
Report run_all(Profile profile = Profile::full, Execution execution = Execution::parallel,
               const std::vector<std::string>& ids = {});

Environment current_environment();

const char* to_string(Profile p);
Profile profile_from_string(const std::string& s);

}  // namespace dini
