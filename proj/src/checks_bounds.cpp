// Bounds on Bessel quotients and normalized Bessel functions in terms of
// alpha_{nu,1} and j_{nu,1}, and the modified Bessel Turan inequalities.

#include <cmath>

#include "checks.hpp"

namespace dini::detail {

namespace {

struct Zeros {
  double a2;  // alpha_{nu,1}^2
  double j2;  // j_{nu,1}^2
  double c;   // (j^2 - alpha^2) / (2 alpha^2)
};

Zeros first_zeros(double nu) {
  const double a = alpha(nu, 1);
  const double j = jzero(nu, 1);
  return {a * a, j * j, (j * j - a * a) / (2.0 * a * a)};
}

// I'_nu/I_nu for the normalized function, t/(2(nu+1)) I_{nu+1}/I_nu
double i_log_deriv(double nu, double t) {
  return t / (2.0 * (nu + 1.0)) * nI(nu + 1.0, t) / nI(nu, t);
}

// J_{nu+1}/J_nu = -J'_nu/J_nu for the normalized function
double j_ratio(double nu, double x) { return x / (2.0 * (nu + 1.0)) * nJ(nu + 1.0, x) / nJ(nu, x); }

void b3(CheckContext& c) {
  for (double nu : c.nus) {
    const Zeros z = first_zeros(nu);
    for (double t : c.grid_for(nu).nodes()) {
      const double lower = t / z.a2 * (z.j2 - z.a2) / (z.j2 + t * t);
      const double mid = i_log_deriv(nu, t);
      c.rec.le(0.0, lower, nu, t);
      c.rec.le(lower, mid, nu, t);
      c.rec.le(mid, t / z.a2, nu, t);
    }
  }
}

void b4(CheckContext& c) {
  for (double nu : c.nus) {
    const Zeros z = first_zeros(nu);
    for (double x : c.grid_for(nu).nodes()) {
      const double log_i = std::log(nI(nu, x));
      c.rec.log_le(z.c * std::log1p(x * x / z.j2), log_i, nu, x);
      c.rec.log_le(log_i, x * x / (2.0 * z.a2), nu, x);
    }
  }
}

// Both sides divided by (x/y)^nu; the I-normalized quotient remains.
void b5(CheckContext& c) {
  for (double nu : c.nus) {
    const Zeros z = first_zeros(nu);
    const auto xs = c.grid_for(nu).nodes();
    std::vector<double> log_i(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) log_i[i] = std::log(nI(nu, xs[i]));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t k = i + 1; k < xs.size(); ++k) {
        const double x = xs[i];
        const double y = xs[k];
        const double diff = x * x - y * y;
        const double lower = diff / (2.0 * z.a2);
        const double mid = log_i[i] - log_i[k];
        const double upper = z.c * std::log((z.j2 + x * x) / (z.j2 + y * y));
        c.rec.log_le(lower, mid, nu, x);
        c.rec.log_le(mid, upper, nu, x);
        // alpha_1^2 < 2(nu+1) makes this lower bound the weaker of the two
        c.rec.log_le(lower, diff / (4.0 * (nu + 1.0)), nu, x);
      }
    }
  }
}

void b7(CheckContext& c) {
  for (double nu : c.nus) {
    const Zeros z = first_zeros(nu);
    for (double x : c.grid_for(nu).nodes()) {
      const double lower = x / z.a2 * (z.j2 - z.a2) / (z.j2 - x * x);
      const double mid = j_ratio(nu, x);
      c.rec.le(0.0, lower, nu, x);
      c.rec.le(lower, mid, nu, x);
      c.rec.le(mid, x / z.a2, nu, x);
    }
  }
}

void b8(CheckContext& c) {
  for (double nu : c.nus) {
    const Zeros z = first_zeros(nu);
    const auto xs = c.grid_for(nu).nodes();
    std::vector<double> log_j(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      const double mid = j_ratio(nu, x);
      c.rec.le(x / z.a2 * (z.j2 - z.a2) / (z.j2 - x * x), mid, nu, x);
      c.rec.le(mid, x / z.a2, nu, x);
      log_j[i] = std::log(nJ(nu, x));
      c.rec.log_le(-x * x / (2.0 * z.a2), log_j[i], nu, x);
      c.rec.log_le(log_j[i], z.c * std::log1p(-x * x / z.j2), nu, x);
    }
    // J_nu(x)/J_nu(y) for 0 < x < y < alpha_1, divided by (x/y)^nu
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t k = i + 1; k < xs.size(); ++k) {
        const double x = xs[i];
        const double y = xs[k];
        const double mid = log_j[i] - log_j[k];
        c.rec.log_le(z.c * std::log((z.j2 - x * x) / (z.j2 - y * y)), mid, nu, x);
        c.rec.log_le(mid, (y * y - x * x) / (2.0 * z.a2), nu, x);
      }
    }
  }
}

// Products of I's from their own power series, scaled by (x/2)^(-2nu) Gamma(nu+1)^2.
// I_{nu-1} enters through I_{nu-1} = I_{nu+1} + (2 nu / x) I_nu, so every order
// stays above -1.
void tur45(CheckContext& c) {
  for (double nu : c.nus) {
    const Order o0(nu);
    const Order o1 = o0.shifted(1.0);
    const Order o2 = o0.shifted(2.0);
    for (double x : c.grid_for(nu).nodes()) {
      const double r = 0.5 * x / (nu + 1.0);
      const double s = r * 0.5 * x / (nu + 2.0);
      const double k = 2.0 * nu / x;
      const double i00 = product_series_II(o0, o0, x).value;
      const double i01 = r * product_series_II(o0, o1, x).value;
      const double i11 = r * r * product_series_II(o1, o1, x).value;
      const double i02 = s * product_series_II(o0, o2, x).value;
      const double i12 = r * s * product_series_II(o1, o2, x).value;
      // I_nu^2 >= I_{nu-1} I_{nu+1}
      c.rec.le(i11 + k * i01, i00, nu, x);
      // I_nu I_{nu+1} >= I_{nu-1} I_{nu+2}
      c.rec.le(i12 + k * i02, i01, nu, x);
    }
  }
}

const GridSpec kPositive{0.05, 20.0, 128, Spacing::uniform};
const GridSpec kInsideAlpha{0.02, 0.95, 128, Spacing::uniform};

}  // namespace

void register_bound_checks(std::vector<CheckDef>& out) {
  out.push_back(define("B3", "bounds on I_nu'/I_nu (normalized) via alpha_1, j_1",
                       "Integrating (the I_nu'/I_nu bounds) we obtain", kPositive,
                       XScale::absolute, b3));
  out.push_back(define("B4", "(1 + x^2/j^2)^c < I_nu(x) (normalized) < exp(x^2/(2 alpha^2))",
                       "inequality is sharp", kPositive, XScale::absolute, b4,
                       "compared in log space"));
  out.push_back(define("B5", "bounds on I_nu(x)/I_nu(y), 0 < x < y",
                       "improves the following inequality given by Joshi",
                       GridSpec{0.05, 20.0, 48, Spacing::uniform}, XScale::absolute, b5,
                       "the lower bound is checked to be weaker than exp((x^2-y^2)/(4(nu+1))), "
                       "which is what alpha_1^2 < 2(nu+1) implies for x < y"));
  out.push_back(define("B7", "bounds on J_{nu+1}/J_nu on (0, alpha_1)",
                       "gives the following inequality for all", kInsideAlpha,
                       XScale::alpha1_fraction, b7));
  out.push_back(define("B8", "bounds on -J_nu'/J_nu (normalized), J_nu(normalized), J_nu(x)/J_nu(y)",
                       "closing bounds on the normalized J_nu", kInsideAlpha,
                       XScale::alpha1_fraction, b8, "pairs 0 < x < y < alpha_1 on the grid"));
  out.push_back(define("TUR45", "Turan inequalities for I_nu products",
                       "Using the Turan inequality for modified Bessel function", kPositive,
                       XScale::absolute, tur45,
                       "products from the I_nu I_mu power series; I_{nu-1} by recurrence"));
}

}  // namespace dini::detail
