// Checks on lambda_nu as a function of x and of nu.

#include <cmath>

#include "checks.hpp"

namespace dini::detail {

namespace {

const GridSpec kHalfLine{0.0, 20.0, 128, Spacing::uniform};
const GridSpec kInsideAlpha{-0.95, 0.95, 128, Spacing::uniform};

// Monotone in the direction fixed by nu against a threshold order; at the
// threshold itself the quotient is constant, so both directions must hold.
void monotone_by_threshold(CheckContext& c, double nu, double threshold, const GridSpec& g,
                           const RealFn& f) {
  const double slack = c.rec.slack();
  if (nu < threshold) {
    c.rec.probe(monotone_on_grid(f, g, Direction::increasing, slack), nu);
  } else if (nu > threshold) {
    c.rec.probe(monotone_on_grid(f, g, Direction::decreasing, slack), nu);
  } else {
    c.rec.probe(monotone_on_grid(f, g, Direction::increasing, slack), nu, false);
    c.rec.probe(monotone_on_grid(f, g, Direction::decreasing, slack), nu, false);
  }
}

void t1a(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x); };
    c.rec.probe(monotone_on_grid(f, c.grid_for(nu), Direction::increasing, c.rec.slack()), nu);
  }
}

void t1b1(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x); };
    c.rec.probe(midpoint_logconvex_on_grid(f, c.grid_for(nu), Sense::convex, c.rec.slack()), nu);
  }
}

void t1b2(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x); };
    const RealFn df = [nu](double x) { return lam_d(nu, x, 1); };
    c.rec.probe(geometric_convexity_probe(f, df, c.grid_for(nu), c.rec.slack()), nu);
  }
}

// nu -> g(nu, x) decreasing, compared on neighbouring orders; x = 0 is a
// point of equality.
template <class G>
void decreasing_in_nu(CheckContext& c, G&& g) {
  for (double x : c.grid.nodes()) {
    for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
      const double a = c.nus[i];
      const double b = c.nus[i + 1];
      c.rec.le(g(b, x), g(a, x), b, x, x != 0.0);
    }
  }
}

void t1c1(CheckContext& c) {
  decreasing_in_nu(c, [](double nu, double x) { return lam(nu, x); });
}

void t1c2(CheckContext& c) {
  decreasing_in_nu(c, [](double nu, double x) { return x * lam_d(nu, x, 1) / lam(nu, x); });
}

void t1d1(CheckContext& c) {
  for (double x : c.grid.nodes()) {
    for (std::size_t i = 0; i < c.nus.size(); ++i) {
      for (std::size_t j = i + 1; j < c.nus.size(); ++j) {
        const double a = c.nus[i];
        const double b = c.nus[j];
        const double m = 0.5 * (a + b);
        const double gap = 2.0 * std::log(lam(m, x)) - std::log(lam(a, x)) - std::log(lam(b, x));
        c.rec.margin(-std::expm1(gap), m, x, x != 0.0);
      }
    }
  }
}

struct Turan {
  double sq;        // lambda_nu^2
  double turanian;  // lambda_nu^2 - lambda_{nu-1} lambda_{nu+1}
  double cross;     // lambda_{nu-1} lambda_{nu+1}
};

Turan turan(double nu, double x) {
  const double l = lam(nu, x);
  const double cross = lam(nu - 1.0, x) * lam(nu + 1.0, x);
  return {l * l, l * l - cross, cross};
}

void t1d2(CheckContext& c) {
  for (double nu : c.nus) {
    for (double x : c.grid.nodes()) {
      const Turan t = turan(nu, x);
      c.rec.le(t.sq, t.cross, nu, x, x != 0.0);
    }
  }
}

void t1d3(CheckContext& c) {
  for (double nu : c.nus) {
    for (double x : c.grid.nodes()) {
      const Turan t = turan(nu, x);
      c.rec.le(-t.sq / nu, t.turanian, nu, x);
    }
  }
}

void t1d4(CheckContext& c) {
  for (double nu : c.nus) {
    for (double x : c.grid.nodes()) {
      const Turan t = turan(nu, x);
      c.rec.le((1.0 - t.sq) / nu, t.turanian, nu, x, x != 0.0);
    }
  }
}

void t1e(CheckContext& c) {
  for (double x : c.grid.nodes()) {
    for (std::size_t i = 0; i + 1 < c.nus.size(); ++i) {
      const double a = c.nus[i];
      const double b = c.nus[i + 1];
      c.rec.le(lam(a + 1.0, x) / lam(a, x), lam(b + 1.0, x) / lam(b, x), b, x, x != 0.0);
    }
  }
}

void t1f1(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return 1.0 / lam(nu, std::sqrt(x)); };
    c.rec.probe(complete_monotonicity_probe(f, c.grid_for(nu), kMaxCmOrder, kDefaultCmStep,
                                            c.rec.slack()),
                nu);
  }
}

void t1f2(CheckContext& c) {
  const auto xs = c.grid.nodes();
  for (double nu : c.nus) {
    std::vector<double> single(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) single[i] = lam(nu, std::sqrt(xs[i]));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i; j < xs.size(); ++j) {
        const double joint = lam(nu, std::sqrt(xs[i] + xs[j]));
        c.rec.le(joint, single[i] * single[j], nu, xs[i], xs[i] > 0.0);
      }
    }
  }
}

void t1g(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, std::sqrt(x)); };
    c.rec.probe(midpoint_logconvex_on_grid(f, c.grid_for(nu), Sense::concave, c.rec.slack()),
                nu);
  }
}

void t2a(CheckContext& c) {
  for (std::size_t i = 0; i < c.nus.size(); ++i) {
    for (std::size_t j = i + 1; j < c.nus.size(); ++j) {
      const double nu = c.nus[i];
      const double mu = c.nus[j];
      const RealFn f = [nu, mu](double x) { return lam(nu, x) / lam(mu, x); };
      c.rec.probe(monotone_on_grid(f, c.grid, Direction::increasing, c.rec.slack()), nu);
    }
  }
}

void t2b(CheckContext& c) {
  for (double nu : c.nus) {
    for (int k = 0; k <= 2; ++k) {
      const RealFn f = [nu, k](double x) { return lam_d(nu, x, 2 * k) / std::cosh(x); };
      monotone_by_threshold(c, nu, 0.5, c.grid, f);
    }
  }
}

void t2c(CheckContext& c) {
  for (double nu : c.nus) {
    for (int k = 0; k <= 1; ++k) {
      const RealFn f = [nu, k](double x) { return lam_d(nu, x, 2 * k + 1) / std::sinh(x); };
      monotone_by_threshold(c, nu, 0.5, c.grid, f);
    }
  }
}

void t2d(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x) / std::cosh(x); };
    monotone_by_threshold(c, nu, 0.5, c.grid, f);
  }
}

void t2e(CheckContext& c) {
  for (double nu : c.nus) {
    const RealFn f = [nu](double x) { return lam(nu, x) / (std::cosh(x) + x * std::sinh(x)); };
    monotone_by_threshold(c, nu, -0.5, c.grid, f);
  }
}

constexpr double kSharpX = 1e-4;
constexpr double kSharpTol = 1e-7;

void t2f(CheckContext& c) {
  for (double nu : c.nus) {
    for (double x : c.grid.nodes()) {
      const double l = lam(nu, x);
      const double ch = std::cosh(x);
      const double chs = ch + x * std::sinh(x);
      if (nu < 0.5) c.rec.le(ch, l, nu, x);
      if (nu > 0.5) c.rec.le(l, ch, nu, x);
      if (nu < -0.5) c.rec.le(chs, l, nu, x);
      if (nu > -0.5) c.rec.le(l, chs, nu, x);
      // the cosh + x sinh comparator is the sharper one below -1/2, cosh above 1/2
      if (nu < -0.5 || nu > 0.5) c.rec.le(ch, chs, nu, x);
    }
    // equality in the limit x -> 0
    const double l = lam(nu, kSharpX);
    const double ch = std::cosh(kSharpX);
    const double chs = ch + kSharpX * std::sinh(kSharpX);
    if (nu != 0.5) c.rec.margin(1.0 - std::fabs(l - ch) / kSharpTol, nu, kSharpX, false);
    if (nu != -0.5) c.rec.margin(1.0 - std::fabs(l - chs) / kSharpTol, nu, kSharpX, false);
  }
}

}  // namespace

void register_lambda_checks(std::vector<CheckDef>& out) {
  const GridSpec positive{0.01, 20.0, 128, Spacing::uniform};
  out.push_back(define("T1A", "lambda_nu increasing on (0, inf)",
                       "is increasing on (0,inf) for all nu>-1", kHalfLine, XScale::absolute, t1a));
  out.push_back(define("T1B1", "log lambda_nu midpoint convex on (-alpha_1, alpha_1)",
                       "strictly log-convex on (-alpha_{nu,1},alpha_{nu,1})", kInsideAlpha,
                       XScale::alpha1_fraction, t1b1));
  out.push_back(define("T1B2", "x lambda_nu'/lambda_nu increasing on (0, inf)",
                       "strictly geometrically convex on (0,inf)",
                       GridSpec{0.05, 20.0, 128, Spacing::uniform}, XScale::absolute, t1b2));
  out.push_back(define("T1C1", "nu -> lambda_nu(x) decreasing",
                       "are decreasing on (-1,inf) for all x in R", kHalfLine, XScale::absolute,
                       t1c1, "non-strict at x = 0, where lambda_nu(0) = 1 for every nu", -1.0, 2));
  out.push_back(define("T1C2", "nu -> x lambda_nu'(x)/lambda_nu(x) decreasing",
                       "are decreasing on (-1,inf) for all x in R", kHalfLine, XScale::absolute,
                       t1c2, "non-strict at x = 0, where the quotient vanishes for every nu", -1.0,
                       2));
  out.push_back(define("T1D1", "nu -> lambda_nu(x) midpoint log-convex",
                       "is log-convex on (-1,inf) for all x in R", kHalfLine, XScale::absolute,
                       t1d1, "equality at x = 0", -1.0, 2));
  out.push_back(define("T1D2", "lambda_nu^2 - lambda_{nu-1} lambda_{nu+1} <= 0 for nu > 0",
                       "reversed Turan type inequality holds", kHalfLine, XScale::absolute, t1d2,
                       "equality at x = 0", 0.0));
  out.push_back(define("T1D3", "-lambda_nu^2/nu <= lambda_nu^2 - lambda_{nu-1} lambda_{nu+1}",
                       "the following Turan type inequality holds", positive, XScale::absolute,
                       t1d3, "tested for nu > 0 only: -1/nu changes sign on (-1, 0)", 0.0));
  out.push_back(define("T1D4", "1/nu - lambda_nu^2/nu <= lambda_nu^2 - lambda_{nu-1} lambda_{nu+1}",
                       "the following bounds for the Turanian", kHalfLine, XScale::absolute, t1d4,
                       "equality at x = 0", 0.0));
  out.push_back(define("T1E", "nu -> lambda_{nu+1}/lambda_nu increasing",
                       "is increasing on (-1,inf) for all x in R", kHalfLine, XScale::absolute,
                       t1e, "equality at x = 0", -1.0, 2));
  out.push_back(define("T1F1", "x -> 1/lambda_nu(sqrt x) completely monotonic",
                       "completely monotonic on (0,inf) for all nu>-1",
                       GridSpec{0.1, 20.0, 64, Spacing::uniform}, XScale::absolute, t1f1, kCmNote));
  out.push_back(define("T1F2", "lambda_nu(sqrt(x + y)) <= lambda_nu(sqrt x) lambda_nu(sqrt y)",
                       "the following inequality is valid",
                       GridSpec{0.0, 100.0, 40, Spacing::uniform}, XScale::absolute, t1f2,
                       "2-D grid x <= y; equality when x = 0 or y = 0. Read as sqrt(x + y), the form "
                       "Kimberling's f(x+y) >= f(x)f(y) gives for f = 1/lambda_nu(sqrt x); with "
                       "sqrt x + sqrt y it fails (nu = 1/2: cosh 2 > cosh(1)^2)"));
  out.push_back(define("T1G", "x -> lambda_nu(sqrt x) midpoint log-concave",
                       "log-concave on (0,inf) for all nu>-1",
                       GridSpec{0.1, 400.0, 128, Spacing::uniform}, XScale::absolute, t1g));
  out.push_back(define("T2A", "lambda_nu/lambda_mu increasing for mu > nu",
                       "strictly increasing (decreasing) on (0,inf)", kHalfLine, XScale::absolute,
                       t2a, "every ordered pair of grid orders", -1.0, 2));
  out.push_back(define("T2B", "lambda_nu^(2k)/cosh monotone by nu vs 1/2, k = 0, 1, 2",
                       "lambda_nu^(2k)(x)/cosh x is strictly increasing (decreasing) on (0,inf)",
                       kHalfLine, XScale::absolute, t2b,
                       "derivative orders k <= 2 only; constant at nu = 1/2"));
  out.push_back(define("T2C", "lambda_nu^(2k+1)/sinh monotone by nu vs 1/2, k = 0, 1",
                       "lambda_nu^(2k+1)(x)/sinh x is strictly increasing (decreasing) on (0,inf)",
                       GridSpec{0.05, 20.0, 128, Spacing::uniform}, XScale::absolute, t2c,
                       "derivative orders k <= 1 only; constant at nu = 1/2"));
  out.push_back(define("T2D", "lambda_nu/cosh monotone by nu vs 1/2",
                       "lambda_nu(x)/cosh x is strictly increasing (decreasing) on (0,inf)",
                       kHalfLine, XScale::absolute, t2d, "constant at nu = 1/2"));
  out.push_back(define("T2E", "lambda_nu/(cosh + x sinh) monotone by nu vs -1/2",
                       "lambda_nu(x)/(cosh x + x sinh x) is strictly increasing (decreasing)",
                       kHalfLine, XScale::absolute, t2e, "constant at nu = -1/2"));
  out.push_back(define("T2F", "lambda_nu against cosh and cosh + x sinh, with sharpness at 0",
                       "Moreover all the above inequalities are sharp when x=0", positive,
                       XScale::absolute, t2f,
                       "sharpness: |lambda_nu - comparator| <= 1e-7 at x = 1e-4"));
}

}  // namespace dini::detail
