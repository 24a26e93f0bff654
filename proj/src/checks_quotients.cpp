// Checks mixing lambda_nu and D_nu: quotients, products and the Redheffer bound.

#include <cmath>

#include "checks.hpp"

namespace dini::detail {

namespace {

const GridSpec kInsideAlpha{-0.95, 0.95, 128, Spacing::uniform};

void t4a(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x) / dD(nu, x); };
    c.rec.probe(midpoint_logconvex_on_grid(f, c.grid_for(nu), Sense::convex, c.rec.slack()), nu);
  }
}

double cosh_form(double x) { return std::cosh(x) + x * std::sinh(x); }
double cos_form(double x) { return std::cos(x) - x * std::sin(x); }

// Closed forms at nu = -1/2; the order list is not used.
void t4b(CheckContext& c) {
  const double a = alpha(-0.5, 1);
  const auto xs = c.scaled(a).nodes();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double x = xs[i];
      const double y = xs[j];
      const double m = 0.5 * (x + y);
      const double lhs_log =
          2.0 * std::log(cosh_form(m)) - std::log(cosh_form(x)) - std::log(cosh_form(y));
      const double rhs_log =
          2.0 * std::log(cos_form(m)) - std::log(cos_form(x)) - std::log(cos_form(y));
      c.rec.log_le(lhs_log, rhs_log, -0.5, m);
    }
  }
}

void t5(CheckContext& c) {
  for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
    const double nu = c.nus[i];
    const double mu = c.nus[i + 1];
    const RealFn f = [nu, mu](double x) {
      const double s = std::sqrt(x);
      return lam(mu, s) / lam(nu, s);
    };
    c.rec.probe(complete_monotonicity_probe(f, c.grid, kMaxCmOrder, kDefaultCmStep, c.rec.slack()),
                nu);
  }
}

constexpr double kSharpNear0 = 1e-3;
constexpr double kSharpNear0Tol = 1e-5;
constexpr double kSharpNearAlpha = 1e-10;
constexpr double kSharpNearAlphaFactor = 0.1;

// Redheffer: 1 <= lambda_nu <= R^b, R = (a^2 + x^2)/(a^2 - x^2), b = 3a^2/(8(nu+1)),
// a = alpha_{nu,1}. g = log lambda / log R tends to b at 0 and to 0 at a.
void t9(CheckContext& c) {
  for (double nu : c.nus) {
    const double a = alpha(nu, 1);
    const double a2 = a * a;
    const double b = 3.0 * a2 / (8.0 * (nu + 1.0));
    auto log_r = [a2](double x) { return std::log((a2 + x * x) / (a2 - x * x)); };
    auto g = [&](double x) { return std::log(lam(nu, x)) / log_r(x); };
    for (double x : c.grid_for(nu).nodes()) {
      const double l = lam(nu, x);
      c.rec.le(1.0, l, nu, x, x != 0.0);
      c.rec.log_le(std::log(l), b * log_r(x), nu, x, x != 0.0);
      if (nu == -0.5) c.rec.log_le(std::log(cosh_form(x)), b * log_r(x), nu, x, x != 0.0);
    }
    const double x0 = kSharpNear0 * a;
    c.rec.margin(1.0 - std::fabs(g(x0) - b) / (kSharpNear0Tol * b), nu, x0, false);
    const double x1 = a * (1.0 - kSharpNearAlpha);
    c.rec.margin(1.0 - g(x1) / (kSharpNearAlphaFactor * b), nu, x1, false);
    GridSpec near{kSharpNear0 * a, c.grid.hi * a, c.grid.points, Spacing::uniform};
    c.rec.probe(monotone_on_grid(g, near, Direction::decreasing, c.rec.slack()), nu);
  }
}

double dl(double nu, double x) { return dD(nu, x) * lam(nu, x); }

void t10a(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return dl(nu, x); };
    GridSpec g = c.grid_for(nu);
    GridSpec left = g;
    left.lo = -g.hi;
    left.hi = 0.0;
    GridSpec right = g;
    right.lo = 0.0;
    c.rec.probe(monotone_on_grid(f, left, Direction::increasing, c.rec.slack()), nu);
    c.rec.probe(monotone_on_grid(f, right, Direction::decreasing, c.rec.slack()), nu);
  }
}

void t10b(CheckContext& c) {
  const double a = alpha(c.nus.front(), 1);
  for (double x : c.scaled(a).nodes()) {
    for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
      const double lo = c.nus[i];
      const double hi = c.nus[i + 1];
      c.rec.le(dl(lo, x), dl(hi, x), hi, x, x != 0.0);
    }
  }
}

void t10c(CheckContext& c) {
  for (double nu : c.nus) {
    for (double x : c.grid_for(nu).nodes()) {
      const double p0 = dl(nu, x);
      const double p1 = dl(nu + 1.0, x);
      const bool strict = x != 0.0;
      c.rec.le(0.0, p0, nu, x, strict);
      c.rec.le(p0, p1, nu, x, strict);
      c.rec.le(p1, 1.0, nu, x, strict);
    }
  }
}

}  // namespace

void register_quotient_checks(std::vector<CheckDef>& out) {
  out.push_back(define("T4A", "lambda_nu/D_nu midpoint log-convex on (-alpha_1, alpha_1)",
                       "is strictly log-convex on (-alpha_{nu,1},alpha_{nu,1})", kInsideAlpha,
                       XScale::alpha1_fraction, t4a));
  out.push_back(define("T4B", "two-point cosh/cos inequality for nu = -1/2",
                       "in particular, for all x,y in (-alpha_{-1/2,1},alpha_{1/2,1})",
                       GridSpec{-0.95, 0.95, 48, Spacing::uniform}, XScale::absolute, t4b,
                       "closed forms at nu = -1/2 on pairs from (-alpha_{-1/2,1}, alpha_{-1/2,1}); "
                       "the stated upper end alpha_{1/2,1} is read as alpha_{-1/2,1}"));
  out.push_back(define("T5", "x -> lambda_mu(sqrt x)/lambda_nu(sqrt x) completely monotonic",
                       "of an infinitely divisible distribution",
                       GridSpec{0.1, 20.0, 64, Spacing::uniform}, XScale::absolute, t5,
                       std::string(kCmNote) + "; neighbouring grid orders nu < mu", -1.0, 2));
  out.push_back(define("T9", "Redheffer bounds with a = 0, b = 3 alpha_1^2/(8(nu+1)), sharpness",
                       "sharp exponential Redheffer-type inequality", kInsideAlpha,
                       XScale::alpha1_fraction, t9,
                       "sharpness: g(1e-3 alpha_1) within 1e-5 b of b, g(alpha_1(1 - 1e-10)) <= "
                       "0.1 b, g decreasing; equality at x = 0"));
  out.push_back(define("T10A", "D_nu lambda_nu increasing on (-alpha_1, 0], decreasing after",
                       "is increasing on (-alpha_{nu,1},0] and decreasing on [0,alpha_{nu,1})",
                       GridSpec{0.0, 0.95, 128, Spacing::uniform}, XScale::alpha1_fraction,
                       t10a));
  out.push_back(define("T10B", "nu -> D_nu(x) lambda_nu(x) increasing",
                       "nu -> D_nu(x) lambda_nu(x) is increasing on (-1,inf)", kInsideAlpha,
                       XScale::alpha1_fraction, t10b,
                       "x range is the intersection over the nu grid; equality at x = 0", -1.0,
                       2));
  out.push_back(define("T10C", "0 < D_nu lambda_nu < D_{nu+1} lambda_{nu+1} < 1",
                       "0< D_nu(x)lambda_nu(x)< D_{nu+1}(x)lambda_{nu+1}(x) < 1", kInsideAlpha,
                       XScale::alpha1_fraction, t10c, "equality at x = 0"));
}

}  // namespace dini::detail
