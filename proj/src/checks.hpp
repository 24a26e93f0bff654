#pragma once

// Plumbing shared by the check implementations: margin recording, per-order
// grids and short evaluators.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dini/probes.hpp"
#include "dini/series.hpp"
#include "dini/suite.hpp"
#include "dini/zeros.hpp"

namespace dini::detail {

class Recorder {
 public:
  Recorder(double slack, bool negate) : slack_(slack), negate_(negate) {}

  /// Records one margin; `strict` marks points where the claim is a strict
  /// inequality (strictness is judged on those only).
  void margin(double m, double nu, double x, bool strict = true);
  /// lhs <= rhs, relative margin.
  void le(double lhs, double rhs, double nu, double x, bool strict = true);
  /// exp(lhs_log) <= exp(rhs_log) for positive quantities known through logs;
  /// same margin as le() on the exponentials, without overflow.
  void log_le(double lhs_log, double rhs_log, double nu, double x, bool strict = true);
  void probe(const ProbeResult& r, double nu, bool strict = true);

  double slack() const { return slack_; }
  double worst() const { return worst_; }
  Witness witness() const { return witness_; }
  int points() const { return points_; }
  bool strict() const { return have_strict_ && strict_worst_ > 10.0 * slack_; }

 private:
  void record(double m, double nu, double x, bool strict, int count);

  double slack_;
  bool negate_;
  double worst_ = std::numeric_limits<double>::infinity();
  Witness witness_;
  int points_ = 0;
  bool have_strict_ = false;
  double strict_worst_ = std::numeric_limits<double>::infinity();
};

struct CheckContext {
  std::vector<double> nus;
  GridSpec grid;
  XScale scale = XScale::absolute;
  Recorder& rec;

  /// Grid for order nu: the x grid itself, or scaled by alpha_{nu,1}.
  GridSpec grid_for(double nu) const;
  std::vector<double> xs_for(double nu) const { return grid_for(nu).nodes(); }
  /// The raw grid scaled by `factor`.
  GridSpec scaled(double factor) const;
};

using CheckFn = void (*)(CheckContext&);

struct CheckDef {
  CheckSpec spec;
  CheckFn run = nullptr;
  /// Orders at or below this bound are dropped from the nu list.
  double nu_exclusive_min = -1.0;
  /// Checks comparing neighbouring orders need at least two.
  int min_nus = 1;
};

inline CheckDef define(std::string id, std::string description, std::string anchor,
                       GridSpec grid, XScale scale, CheckFn run, std::string note = {},
                       double nu_exclusive_min = -1.0, int min_nus = 1) {
  CheckDef d;
  d.spec.id = std::move(id);
  d.spec.description = std::move(description);
  d.spec.anchor = std::move(anchor);
  d.spec.nu_values = default_nu_grid();
  d.spec.x_grid = grid;
  d.spec.x_scale = scale;
  d.spec.note = std::move(note);
  d.run = run;
  d.nu_exclusive_min = nu_exclusive_min;
  d.min_nus = min_nus;
  std::erase_if(d.spec.nu_values, [&](double nu) { return nu <= nu_exclusive_min; });
  return d;
}

inline constexpr char kCmNote[] =
    "CM up to order 6: finite-difference surrogate for the all-orders claim";

void register_lambda_checks(std::vector<CheckDef>& out);
void register_quotient_checks(std::vector<CheckDef>& out);
void register_dini_checks(std::vector<CheckDef>& out);
void register_bound_checks(std::vector<CheckDef>& out);
void register_zero_checks(std::vector<CheckDef>& out);

// short evaluators on plain doubles
inline double lam(double nu, double x) { return lambda(Order(nu), x).value; }
inline double lam_d(double nu, double x, int k) { return lambda_deriv(Order(nu), x, k).value; }
inline double dD(double nu, double x) { return dini_D(Order(nu), x).value; }
inline double nI(double nu, double x) { return norm_bessel_I(Order(nu), x).value; }
inline double nJ(double nu, double x) { return norm_bessel_J(Order(nu), x).value; }
inline double alpha(double nu, int n) { return dini_zero_table(Order(nu), n).zeros[n - 1]; }
inline double jzero(double nu, int n) { return bessel_zero_table(Order(nu), n).zeros[n - 1]; }

}  // namespace dini::detail
