#pragma once

// Power-series evaluation of the normalized Bessel, modified Dini and Dini
// functions:
//
//   I(nu, x)      = 2^nu Gamma(nu+1) x^-nu I_nu(x)   = sum (x^2/4)^n / (n! (nu+1)_n)
//   J(nu, x)      = 2^nu Gamma(nu+1) x^-nu J_nu(x)   = sum (-x^2/4)^n / (n! (nu+1)_n)
//   lambda(nu, x) = 2^nu Gamma(nu+1) x^-nu xi_nu(x)  = sum (2n+1) (x^2/4)^n / (n! (nu+1)_n)
//   D(nu, x)      = 2^nu Gamma(nu+1) x^-nu d_nu(x)   = sum (2n+1) (-x^2/4)^n / (n! (nu+1)_n)
//
// with xi_nu = I_nu + x I_{nu+1} and d_nu = J_nu - x J_{nu+1}. Terms are
// generated and accumulated in double-double arithmetic so the alternating
// series keep their digits until the final rounding.

#include "dini/order.hpp"

namespace dini {

struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  /// Absolute bound: geometric tail bound of the last term plus the
  /// accumulated double-double rounding and the final rounding to double.
  double error_estimate = 0.0;
  /// Sum of |terms|; the scale against which cancellation is measured.
  double abs_sum = 0.0;
  /// Largest term exceeds 1e8 * |value| (more than 8 digits cancelled).
  bool cancellation_warning = false;
};

/// Rising factorial (nu+1)_n = (nu+1)(nu+2)...(nu+n); 1 when n == 0.
double pochhammer(double nu, int n);

SeriesValue norm_bessel_I(const Order& nu, double x, const EvalDomain& dom = {});
SeriesValue norm_bessel_J(const Order& nu, double x, const EvalDomain& dom = {});
SeriesValue lambda(const Order& nu, double x, const EvalDomain& dom = {});
SeriesValue dini_D(const Order& nu, double x, const EvalDomain& dom = {});

/// k-th derivative of lambda by term-wise differentiation, 0 <= k <= 8.
SeriesValue lambda_deriv(const Order& nu, double x, int k, const EvalDomain& dom = {});
/// k-th derivative of D, 0 <= k <= 8.
SeriesValue dini_D_deriv(const Order& nu, double x, int k, const EvalDomain& dom = {});

/// lambda'(x) = x/(2(nu+1)) lambda_{nu+1}(x) + x/(nu+1) I_{nu+1}(x).
SeriesValue lambda_prime_decomposed(const Order& nu, double x, const EvalDomain& dom = {});
/// D'(x) = -x/(2(nu+1)) D_{nu+1}(x) - x/(nu+1) J_{nu+1}(x).
SeriesValue dini_prime_decomposed(const Order& nu, double x, const EvalDomain& dom = {});

/// Unnormalized modified Dini function xi_nu(x) = I_nu(x) + x I_{nu+1}(x).
double xi(const Order& nu, double x, const EvalDomain& dom = {});
/// Unnormalized Dini function d_nu(x) = J_nu(x) - x J_{nu+1}(x).
double d_lower(const Order& nu, double x, const EvalDomain& dom = {});
/// Unnormalized I_nu(x) and J_nu(x), x >= 0 (or integer nu).
double bessel_I(const Order& nu, double x, const EvalDomain& dom = {});
double bessel_J(const Order& nu, double x, const EvalDomain& dom = {});

/// Normalized product I(nu, x) * I(mu, x) from its own power series
/// sum_k (nu+mu+k+1)_k (x^2/4)^k / (k! (nu+1)_k (mu+1)_k).
SeriesValue product_series_II(const Order& nu, const Order& mu, double x,
                              const EvalDomain& dom = {});

/// x^nu / (2^nu Gamma(nu+1)), evaluated in log space.
double normalization_factor(double nu, double x);

}  // namespace dini
