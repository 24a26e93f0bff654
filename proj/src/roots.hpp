#pragma once

// Newton iteration safeguarded by a sign-change bracket: a Newton step that
// leaves the current bracket, or fails to halve it quickly enough, is
// replaced by bisection.

#include <cmath>
#include <string>

#include "dini/errors.hpp"

namespace dini::detail {

struct ValueAndSlope {
  double f = 0.0;
  double df = 0.0;
};

template <class Fdf>
double polish_root(Fdf&& fdf, double lo, double hi, int sign_lo, double guess, double rel_tol,
                   int index, int max_iter = 200) {
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  double step_old = hi - lo;
  double step = step_old;
  for (int it = 0; it < max_iter; ++it) {
    const ValueAndSlope v = fdf(x);
    if (v.f == 0.0) return x;
    if ((v.f > 0.0) == (sign_lo > 0)) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - v.f / v.df;
    const bool newton_ok = std::isfinite(next) && next > lo && next < hi &&
                           std::fabs(2.0 * v.f) <= std::fabs(step_old * v.df);
    step_old = step;
    if (!newton_ok) next = 0.5 * (lo + hi);
    step = next - x;
    x = next;
    if (std::fabs(step) <= 0.05 * rel_tol * std::fabs(x) || (hi - lo) <= 0.01 * rel_tol * std::fabs(x)) {
      // one more Newton step costs one evaluation and removes the last few ulps
      const ValueAndSlope w = fdf(x);
      const double last = x - w.f / w.df;
      return (std::isfinite(last) && last >= lo && last <= hi) ? last : x;
    }
  }
  throw ConvergenceError("root polish did not converge for zero index " + std::to_string(index),
                         index);
}

}  // namespace dini::detail
