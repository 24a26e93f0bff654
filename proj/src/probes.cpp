#include "dini/probes.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dini/errors.hpp"
#include "dini/order.hpp"

namespace dini {

namespace {

double checked(const RealFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw ProbeError("non-finite function value at x = " + format_double(x), x);
  }
  return v;
}

double checked_positive(const RealFn& f, double x) {
  const double v = checked(f, x);
  if (!(v > 0.0)) {
    throw ProbeError("non-positive function value " + format_double(v) + " at x = " +
                     format_double(x), x);
  }
  return v;
}

struct Tracker {
  ProbeResult r;
  bool first = true;

  void add(double margin, double at) {
    ++r.points_tested;
    if (first || margin < r.worst_margin) {
      r.worst_margin = margin;
      r.witness = at;
      first = false;
    }
  }

  ProbeResult finish(double slack) {
    r.holds = r.worst_margin >= -slack;
    return r;
  }
};

}  // namespace

void GridSpec::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("grid needs finite lo < hi, got [" + format_double(lo) + ", " +
                      format_double(hi) + "]");
  }
  if (points < kMinGridPoints) {
    throw DomainError("grid needs at least 8 points, got " + std::to_string(points));
  }
}

std::vector<double> GridSpec::nodes() const {
  validate();
  std::vector<double> out(points);
  const int m = points - 1;
  for (int i = 0; i <= m; ++i) {
    double t;
    if (spacing == Spacing::uniform) {
      t = static_cast<double>(i) / m;
    } else {
      t = 0.5 * (1.0 - std::cos(std::numbers::pi * i / m));
    }
    out[i] = lo + (hi - lo) * t;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

double relative_margin(double lhs, double rhs) {
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  if (scale == 0.0) return 0.0;
  return (rhs - lhs) / scale;
}

ProbeResult monotone_on_grid(const RealFn& f, const GridSpec& grid, Direction direction,
                             double slack) {
  const auto xs = grid.nodes();
  Tracker t;
  double prev = checked(f, xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = checked(f, xs[i]);
    const double m = (direction == Direction::increasing) ? relative_margin(prev, cur)
                                                          : relative_margin(cur, prev);
    t.add(m, xs[i]);
    prev = cur;
  }
  return t.finish(slack);
}

ProbeResult midpoint_logconvex_on_grid(const RealFn& f, const GridSpec& grid, Sense sense,
                                       double slack, int random_pairs, std::uint64_t seed) {
  const auto xs = grid.nodes();
  std::vector<double> logs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) logs[i] = std::log(checked_positive(f, xs[i]));

  Tracker t;
  auto test = [&](std::size_t a, std::size_t b) {
    const double mid = 0.5 * (xs[a] + xs[b]);
    const double lm = std::log(checked_positive(f, mid));
    // convex: f(m)^2 <= f(a) f(b), margin 1 - f(m)^2/(f(a) f(b))
    const double gap = 2.0 * lm - logs[a] - logs[b];
    t.add(-std::expm1(sense == Sense::convex ? gap : -gap), mid);
  };
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) test(i, i + 2);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  for (int k = 0; k < random_pairs; ++k) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    test(a, b);
  }
  return t.finish(slack);
}

ProbeResult geometric_convexity_probe(const RealFn& f, const RealFn& fprime, const GridSpec& grid,
                                      double slack) {
  if (!(grid.lo > 0.0)) {
    throw DomainError("geometric convexity probe needs a grid inside (0, inf)");
  }
  const RealFn g = [&](double x) { return x * checked(fprime, x) / checked_positive(f, x); };
  return monotone_on_grid(g, grid, Direction::increasing, slack);
}

ProbeResult complete_monotonicity_probe(const RealFn& f, const GridSpec& grid, int max_order,
                                        double h, double slack) {
  if (max_order < 0 || max_order > kMaxCmOrder) {
    throw DomainError("max_order must lie in [0, 6], got " + std::to_string(max_order));
  }
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("difference step h must be positive");
  if (grid.lo < 0.0) throw DomainError("complete monotonicity probe needs grid.lo >= 0");

  const auto xs = grid.nodes();
  Tracker t;
  std::vector<double> fv(max_order + 1);
  for (double x : xs) {
    for (int j = 0; j <= max_order; ++j) fv[j] = checked(f, x + j * h);
    for (int k = 0; k <= max_order; ++k) {
      double diff = 0.0;
      double scale = 0.0;
      double binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        const double term = binom * fv[j];
        diff += ((k - j) % 2 == 0) ? term : -term;
        scale += std::fabs(term);
        binom = binom * (k - j) / (j + 1);
      }
      const double signed_diff = (k % 2 == 0) ? diff : -diff;
      t.add(scale == 0.0 ? 0.0 : signed_diff / scale, x);
    }
  }
  return t.finish(slack);
}

}  // namespace dini
