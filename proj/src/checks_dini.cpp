// Checks on D_nu, d_nu and the zeros alpha_{nu,n}.

#include <algorithm>
#include <cmath>

#include "checks.hpp"

namespace dini::detail {

namespace {

constexpr int kSignIntervals = 8;
constexpr int kInterlaceCount = 20;

// Sign of D_nu between consecutive zeros: positive on (alpha_{2n}, alpha_{2n+1})
// and (-alpha_1, alpha_1), negative on (alpha_{2n-1}, alpha_{2n}); mirrored for x < 0.
void t3a(CheckContext& c) {
  const auto fracs = c.grid.nodes();
  for (double nu : c.nus) {
    const ZeroTable t = dini_zero_table(Order(nu), kSignIntervals);
    double lo = 0.0;
    for (int k = 0; k < kSignIntervals; ++k) {
      const double hi = t.zeros[k];
      const double expected = (k % 2 == 0) ? 1.0 : -1.0;
      for (double f : fracs) {
        const double x = lo + f * (hi - lo);
        for (double sx : {x, -x}) {
          const double v = dD(nu, sx);
          c.rec.margin(expected * v / std::max(std::fabs(v), 1e-300), nu, sx);
        }
      }
      lo = hi;
    }
  }
}

void t3b(CheckContext& c) {
  for (double nu : c.nus) {
    const double a = alpha(nu, 1);
    const RealFn f = [nu](double x) { return dD(nu, x); };
    GridSpec left = c.grid;
    left.lo = -c.grid.hi * a;
    left.hi = 0.0;
    GridSpec right = c.grid;
    right.lo = 0.0;
    right.hi = c.grid.hi * a;
    c.rec.probe(monotone_on_grid(f, left, Direction::increasing, c.rec.slack()), nu);
    c.rec.probe(monotone_on_grid(f, right, Direction::decreasing, c.rec.slack()), nu);
  }
}

// (-alpha_1, alpha_1) and (alpha_{2n}, alpha_{2n+1}) for n <= 3, each shrunk
// by the grid's margin fraction at both ends.
void t3c(CheckContext& c) {
  const double keep = c.grid.hi;
  for (double nu : c.nus) {
    const ZeroTable t = dini_zero_table(Order(nu), 7);
    const RealFn f = [nu](double x) { return dD(nu, x); };
    GridSpec g = c.grid;
    g.lo = -keep * t.zeros[0];
    g.hi = keep * t.zeros[0];
    c.rec.probe(midpoint_logconvex_on_grid(f, g, Sense::concave, c.rec.slack()), nu);
    for (int n = 1; n <= 3; ++n) {
      const double lo = t.zeros[2 * n - 1];
      const double hi = t.zeros[2 * n];
      const double mid = 0.5 * (lo + hi);
      const double half = 0.5 * (hi - lo) * keep;
      g.lo = mid - half;
      g.hi = mid + half;
      c.rec.probe(midpoint_logconvex_on_grid(f, g, Sense::concave, c.rec.slack()), nu);
    }
  }
}

void t3d(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return d_lower(Order(nu), x); };
    c.rec.probe(midpoint_logconvex_on_grid(f, c.grid_for(nu), Sense::concave, c.rec.slack()),
                nu);
  }
}

// x-range common to every order: alpha_{nu,1} increases with nu, so the
// smallest order bounds the intersection.
template <class G>
void increasing_in_nu(CheckContext& c, G&& g) {
  const double a = alpha(c.nus.front(), 1);
  for (double x : c.scaled(a).nodes()) {
    for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
      const double lo = c.nus[i];
      const double hi = c.nus[i + 1];
      c.rec.le(g(lo, x), g(hi, x), hi, x, x != 0.0);
    }
  }
}

void t3e(CheckContext& c) {
  increasing_in_nu(c, [](double nu, double x) { return dD(nu, x); });
}

void interlace(CheckContext& c) {
  for (double nu : c.nus) {
    const ZeroTable a = dini_zero_table(Order(nu), kInterlaceCount);
    const ZeroTable a1 = dini_zero_table(Order(nu + 1.0), kInterlaceCount);
    const ZeroTable j = bessel_zero_table(Order(nu), kInterlaceCount);
    const ZeroTable j1 = bessel_zero_table(Order(nu + 1.0), kInterlaceCount);
    for (int n = 0; n < kInterlaceCount; ++n) {
      const double x = a.zeros[n];
      c.rec.le(a.zeros[n], a1.zeros[n], nu, x);
      c.rec.le(a1.zeros[n], j1.zeros[n], nu, x);
      c.rec.le(a.zeros[n], j.zeros[n], nu, x);
      c.rec.le(n == 0 ? 0.0 : j.zeros[n - 1], a.zeros[n], nu, x);
    }
  }
  for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
    const ZeroTable lo = dini_zero_table(Order(c.nus[i]), kInterlaceCount);
    const ZeroTable hi = dini_zero_table(Order(c.nus[i + 1]), kInterlaceCount);
    for (int n = 0; n < kInterlaceCount; ++n) {
      c.rec.le(lo.zeros[n], hi.zeros[n], c.nus[i + 1], hi.zeros[n]);
    }
  }
}

}  // namespace

void register_dini_checks(std::vector<CheckDef>& out) {
  out.push_back(define("T3A", "sign pattern of D_nu between its zeros",
                       "negative on triangle and strictly positive",
                       GridSpec{0.02, 0.98, 16, Spacing::uniform}, XScale::absolute, t3a,
                       "grid values are positions inside each zero interval, first 8 intervals, "
                       "both signs of x"));
  out.push_back(define("T3B", "D_nu increasing on (-alpha_1, 0], decreasing on [0, alpha_1)",
                       "increasing on (-alpha_{nu,1},0] and decreasing on [0,alpha_{nu,1})",
                       GridSpec{0.0, 0.95, 128, Spacing::uniform}, XScale::alpha1_fraction, t3b));
  out.push_back(define("T3C", "D_nu midpoint log-concave on its positive segments",
                       "strictly log-concave on R minus triangle",
                       GridSpec{-0.95, 0.95, 128, Spacing::uniform}, XScale::alpha1_fraction, t3c,
                       "segments (-alpha_1, alpha_1) and (alpha_2n, alpha_2n+1), n <= 3, "
                       "central 95% of each"));
  out.push_back(define("T3D", "d_nu midpoint log-concave on (0, alpha_1) for nu > 0",
                       "strictly log-concave on (0,inf) minus triangle_2, provided nu>0",
                       GridSpec{0.02, 0.95, 128, Spacing::uniform}, XScale::alpha1_fraction, t3d,
                       "", 0.0));
  out.push_back(define("T3E", "nu -> D_nu(x) increasing on (-alpha_1, alpha_1)",
                       "nu -> D_nu(x) is increasing on (-1,inf)",
                       GridSpec{-0.95, 0.95, 128, Spacing::uniform}, XScale::alpha1_fraction, t3e,
                       "x range is the intersection over the nu grid (smallest alpha_1); "
                       "equality at x = 0",
                       -1.0, 2));
}

void register_zero_checks(std::vector<CheckDef>& out) {
  out.push_back(define("INTERLACE",
                       "alpha_{nu,n} < alpha_{nu+1,n} < j_{nu+1,n}, j_{nu,n-1} < alpha_{nu,n} < j_{nu,n}",
                       "alpha_{nu,n}<alpha_{nu+1,n}<j_{nu+1,n}",
                       GridSpec{0.0, 1.0, 8, Spacing::uniform}, XScale::absolute, interlace,
                       "zeros n <= 20; grid unused; also alpha_{nu,n} increasing in nu"));
}

}  // namespace dini::detail
