#include "dini/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dini/errors.hpp"
#include "dini/series.hpp"
#include "dini/zeros.hpp"
#include "double_double.hpp"

namespace dini {

namespace {

constexpr int kFirstN = 16;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNearZero = 1e-8;
// relative error of a tabulated zero squared
constexpr double kZeroSqErr = 2.0 * kZeroRelTol;

void check_args(double x, double tol) {
  EvalDomain{}.require_x(x);
  if (!(tol >= kMinExpansionTol) || !std::isfinite(tol)) {
    throw DomainError("tol " + format_double(tol) + " below the minimum 1e-12");
  }
}

// Partial result for one truncation level: value, certified half-width of the
// tail estimate, and everything else that goes into the error bound.
struct Partial {
  double value = 0.0;
  double tail_half = 0.0;
  double other_err = 0.0;
  // tail_half must not exceed tol/2 times this
  double scale = 1.0;
  bool near_zero = false;
  bool tail_valid = true;
};

template <class Eval>
TruncatedExpansion refine(const Order& nu, double tol, const char* what, Eval&& eval) {
  int n = kFirstN;
  for (;;) {
    const ZeroTable table = dini_zero_table(nu, n);
    const Partial p = eval(table);
    if (p.tail_valid && p.tail_half <= 0.5 * tol * p.scale) {
      return {p.value, n, p.tail_half + p.other_err, p.near_zero};
    }
    if (n >= kMaxZeroCount) {
      throw ToleranceError(std::string(what) + ": tol " + format_double(tol) + " at nu = " +
                           format_double(nu.value()) + " needs more than " +
                           std::to_string(kMaxZeroCount) + " zeros");
    }
    n = std::min(2 * n, kMaxZeroCount);
  }
}

// E = sum_n x^2 / (alpha_n^2 (alpha_n^2 + x^2)), so that
// sum 1/(alpha_n^2 + x^2) = 3/(4(nu+1)) - E. Writing the zero sums this way
// keeps full relative accuracy for small x, where the terms of the plain sum
// nearly reproduce the Rayleigh identity.
struct ESum {
  double value = 0.0;
  double tail_half = 0.0;
  double err = 0.0;
};

ESum e_sum(const ZeroTable& t, double x) {
  const double x2 = x * x;
  detail::DD sum;
  double abs_terms = 0.0;
  for (auto it = t.zeros.rbegin(); it != t.zeros.rend(); ++it) {
    const double a2 = *it * *it;
    const double term = (x2 / a2) / (a2 + x2);
    sum += detail::DD(term);
    abs_terms += term;
  }
  // tail lies in [0, x^2 r / alpha_N^2]
  const double aN = t.zeros.back();
  const double half = 0.5 * x2 * std::max(t.rayleigh_residual, 0.0) / (aN * aN);
  ESum e;
  e.value = sum.to_double() + half;
  e.tail_half = half;
  // each term carries ~4 ulps of rounding and twice the zero error (alpha^4)
  e.err = (4.0 * kEps + 2.0 * kZeroSqErr) * abs_terms + kEps * std::fabs(e.value);
  return e;
}

}  // namespace

TruncatedExpansion lambda_via_product(const Order& nu, double x, double tol) {
  check_args(x, tol);
  if (x == 0.0) return {1.0, 0, 0.0, false};
  const double x2 = x * x;
  return refine(nu, tol, "lambda_via_product", [&](const ZeroTable& t) {
    detail::DD log_sum;
    double abs_log = 0.0;
    double sens = 0.0;
    for (auto it = t.zeros.rbegin(); it != t.zeros.rend(); ++it) {
      const double u = x2 / (*it * *it);
      const double l = std::log1p(u);
      log_sum += detail::DD(l);
      abs_log += l;
      sens += u / (1.0 + u);
    }
    // sum_{n>N} log1p(u_n) lies in [x^2 r - x^4 r/(2 alpha_N^2), x^2 r]
    const double r = std::max(t.rayleigh_residual, 0.0);
    const double aN = t.zeros.back();
    const double half = 0.25 * x2 * x2 * r / (aN * aN);
    const double log_val = log_sum.to_double() + x2 * r - half;
    const double log_err = half + 2.0 * kEps * (abs_log + sens) + kZeroSqErr * sens +
                           kEps * x2 * r;
    Partial p;
    p.value = std::exp(log_val);
    p.scale = p.value;
    p.tail_half = p.value * std::expm1(half);
    p.other_err = p.value * (std::expm1(log_err) - std::expm1(half)) + kEps * p.value;
    return p;
  });
}

TruncatedExpansion dini_via_product(const Order& nu, double x, double tol) {
  check_args(x, tol);
  if (x == 0.0) return {1.0, 0, 0.0, false};
  const double ax = std::fabs(x);
  const double x2 = x * x;
  return refine(nu, tol, "dini_via_product", [&](const ZeroTable& t) {
    Partial p;
    detail::DD log_sum;
    double abs_log = 0.0;
    double sens = 0.0;
    int negatives = 0;
    bool exact_zero = false;
    for (auto it = t.zeros.rbegin(); it != t.zeros.rend(); ++it) {
      if (std::fabs(ax - *it) <= kNearZero) p.near_zero = true;
      const double u = x2 / (*it * *it);
      const double f = 1.0 - u;
      if (f == 0.0) {
        exact_zero = true;
        continue;
      }
      if (f < 0.0) ++negatives;
      const double l = (u < 0.5) ? std::log1p(-u) : std::log(std::fabs(f));
      log_sum += detail::DD(l);
      abs_log += std::fabs(l);
      sens += u / std::fabs(f);
    }
    const double r = std::max(t.rayleigh_residual, 0.0);
    const double aN = t.zeros.back();
    // -log(1-u) in [u, u + u^2] for u <= 1/2, hence the validity condition
    p.tail_valid = aN * aN >= 2.0 * x2;
    const double half = 0.5 * x2 * x2 * r / (aN * aN);
    const double log_val = log_sum.to_double() - x2 * r - half;
    const double log_err = half + 2.0 * kEps * (abs_log + sens) + kZeroSqErr * sens +
                           kEps * x2 * r;
    const double mag = exact_zero ? 0.0 : std::exp(log_val);
    p.value = (negatives % 2 == 0) ? mag : -mag;
    p.scale = exact_zero ? 1.0 : mag;
    p.tail_half = mag * std::expm1(half);
    p.other_err = mag * (std::expm1(log_err) - std::expm1(half)) + kEps * mag;
    return p;
  });
}

TruncatedExpansion log_deriv_lambda_sum(const Order& nu, double x, double tol) {
  check_args(x, tol);
  if (x == 0.0) return {0.0, 0, 0.0, false};
  const double c = 0.75 / (nu.value() + 1.0);
  const double ax = std::fabs(x);
  return refine(nu, tol, "log_deriv_lambda_sum", [&](const ZeroTable& t) {
    const ESum e = e_sum(t, x);
    Partial p;
    p.value = 2.0 * x * (c - e.value);
    p.scale = std::max(1.0, std::fabs(p.value));
    p.tail_half = 2.0 * ax * e.tail_half;
    p.other_err = 2.0 * ax * (e.err + kEps * c) + kEps * std::fabs(p.value);
    return p;
  });
}

TruncatedExpansion mittag_leffler_ratio(const Order& nu, double x, double tol) {
  check_args(x, tol);
  const double v = nu.value();
  const double x2 = x * x;
  const double den = x2 - 1.0 + 2.0 * v;
  if (std::fabs(den) < kSingularRing) {
    throw SingularityError("x^2 = " + format_double(x2) + " within 1e-3 of 1 - 2 nu = " +
                           format_double(1.0 - 2.0 * v));
  }
  // Substituting sum 1/(alpha^2+x^2) = 3/(4(nu+1)) - E gives
  //   1 + 2x^2/den - 4(nu+1)(x^2+1+2nu) E / den.
  const double k = 4.0 * (v + 1.0) * (x2 + 1.0 + 2.0 * v) / den;
  const double lead = 1.0 + 2.0 * x2 / den;
  if (x == 0.0) return {1.0, 0, 0.0, false};
  return refine(nu, tol, "mittag_leffler_ratio", [&](const ZeroTable& t) {
    const ESum e = e_sum(t, x);
    Partial p;
    p.value = lead - k * e.value;
    p.scale = std::max(1.0, std::fabs(p.value));
    p.tail_half = std::fabs(k) * e.tail_half;
    p.other_err = std::fabs(k) * e.err + 4.0 * kEps * (std::fabs(lead) + std::fabs(k * e.value));
    return p;
  });
}

double ratio_direct(const Order& nu, double x) {
  return lambda(nu.shifted(1.0), x).value / lambda(nu, x).value;
}

}  // namespace dini
