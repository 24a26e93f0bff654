#include "dini/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "checks.hpp"
#include "dini/errors.hpp"
#include "dini/order.hpp"
#include "dini/zeros.hpp"
#include "parallel.hpp"

#ifndef DINI_KIT_VERSION
#define DINI_KIT_VERSION "0.0.0"
#endif

namespace dini {

namespace detail {

void Recorder::record(double m, double nu, double x, bool strict, int count) {
  if (negate_) m = -m;
  // a NaN margin means the comparison could not be made: worst possible
  if (std::isnan(m)) m = -std::numeric_limits<double>::infinity();
  points_ += count;
  if (m < worst_) {
    worst_ = m;
    witness_ = {nu, x};
  }
  if (strict) {
    have_strict_ = true;
    strict_worst_ = std::min(strict_worst_, m);
  }
}

void Recorder::margin(double m, double nu, double x, bool strict) { record(m, nu, x, strict, 1); }

void Recorder::le(double lhs, double rhs, double nu, double x, bool strict) {
  margin(relative_margin(lhs, rhs), nu, x, strict);
}

void Recorder::log_le(double lhs_log, double rhs_log, double nu, double x, bool strict) {
  const double d = rhs_log - lhs_log;
  margin(d >= 0.0 ? -std::expm1(-d) : std::expm1(d), nu, x, strict);
}

void Recorder::probe(const ProbeResult& r, double nu, bool strict) {
  record(r.worst_margin, nu, r.witness, strict, r.points_tested);
}

GridSpec CheckContext::grid_for(double nu) const {
  if (scale == XScale::absolute) return grid;
  return scaled(alpha(nu, 1));
}

GridSpec CheckContext::scaled(double factor) const {
  GridSpec g = grid;
  g.lo *= factor;
  g.hi *= factor;
  return g;
}

}  // namespace detail

namespace {

const std::vector<detail::CheckDef>& registry() {
  static const std::vector<detail::CheckDef> defs = [] {
    std::vector<detail::CheckDef> out;
    detail::register_lambda_checks(out);
    detail::register_dini_checks(out);
    detail::register_quotient_checks(out);
    detail::register_bound_checks(out);
    detail::register_zero_checks(out);
    return out;
  }();
  return defs;
}

const detail::CheckDef& find_check(const std::string& id) {
  for (const auto& d : registry()) {
    if (d.spec.id == id) return d;
  }
  throw DomainError("unknown check id '" + id + "'");
}

int quick_points(int points) { return std::max(16, points / 4); }

}  // namespace

const std::vector<double>& default_nu_grid() {
  static const std::vector<double> grid{-0.9, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0};
  return grid;
}

std::vector<CheckSpec> list_checks() {
  std::vector<CheckSpec> out;
  out.reserve(registry().size());
  for (const auto& d : registry()) out.push_back(d.spec);
  return out;
}

CheckOutcome run_check(const std::string& id, const CheckOverrides& overrides) {
  const detail::CheckDef& def = find_check(id);
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> nus;
  for (double nu : overrides.nu_values.value_or(def.spec.nu_values)) {
    Order checked(nu);  // validates
    if (nu > def.nu_exclusive_min) nus.push_back(nu);
  }
  std::sort(nus.begin(), nus.end());
  nus.erase(std::unique(nus.begin(), nus.end()), nus.end());
  if (static_cast<int>(nus.size()) < def.min_nus) {
    throw DomainError("check " + id + " needs at least " + std::to_string(def.min_nus) +
                      " admissible orders above " + format_double(def.nu_exclusive_min));
  }

  GridSpec grid = def.spec.x_grid;
  if (overrides.points) {
    grid.points = *overrides.points;
  } else if (overrides.profile == Profile::quick) {
    grid.points = quick_points(grid.points);
  }
  grid.validate();

  const double slack = overrides.slack.value_or(def.spec.slack);
  if (!(slack >= 0.0)) throw DomainError("slack must be non-negative");

  detail::Recorder rec(slack, overrides.negate);
  detail::CheckContext ctx{nus, grid, def.spec.x_scale, rec};
  def.run(ctx);

  CheckOutcome out;
  out.id = id;
  out.worst_margin = rec.worst();
  out.witness = rec.witness();
  out.points_tested = rec.points();
  out.pass = out.points_tested > 0 && out.worst_margin >= -slack;
  out.strict = rec.strict();
  out.note = def.spec.note;
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Report run_all(Profile profile, Execution execution, const std::vector<std::string>& ids) {
  std::vector<std::string> selected = ids;
  if (selected.empty()) {
    for (const auto& d : registry()) selected.push_back(d.spec.id);
  }
  for (const auto& id : selected) find_check(id);

  Report report;
  report.profile = profile;
  report.environment = current_environment();
  report.outcomes.resize(selected.size());

  CheckOverrides ov;
  ov.profile = profile;
  auto one = [&](std::size_t i) {
    try {
      report.outcomes[i] = run_check(selected[i], ov);
    } catch (const std::exception& e) {
      CheckOutcome& o = report.outcomes[i];
      o.id = selected[i];
      o.pass = false;
      o.worst_margin = std::numeric_limits<double>::quiet_NaN();
      o.error = e.what();
      o.note = find_check(selected[i]).spec.note;
    }
  };
  detail::for_each_index(selected.size(), execution, one);

  report.all_pass = !report.outcomes.empty();
  for (const auto& o : report.outcomes) report.all_pass = report.all_pass && o.pass;
  return report;
}

Environment current_environment() {
  Environment env;
  env.version = DINI_KIT_VERSION;
  const EvalDomain dom{};
  env.x_max = dom.x_max;
  env.epsilon_rel = dom.epsilon_rel;
  env.zero_rel_tol = kZeroRelTol;
  env.nu_grid = default_nu_grid();
  return env;
}

const char* to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

Profile profile_from_string(const std::string& s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  throw DomainError("profile must be quick or full, got '" + s + "'");
}

}  // namespace dini
