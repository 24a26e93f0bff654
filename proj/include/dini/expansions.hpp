#pragma once

// Zero-based representations of lambda_nu and D_nu:
//
//   lambda_nu(x) = prod (1 + x^2/alpha_n^2)      D_nu(x) = prod (1 - x^2/alpha_n^2)
//   lambda_nu'/lambda_nu = sum 2x/(alpha_n^2 + x^2)
//
// and the Mittag-Leffler form of lambda_{nu+1}/lambda_nu. Truncation at N
// zeros is certified with the Rayleigh residual r_N = 3/(4(nu+1)) - sum 1/alpha_n^2.
// N starts at 16 and doubles until the certified error meets tol.

#include "dini/order.hpp"

namespace dini {

struct TruncatedExpansion {
  double value = 0.0;
  int zeros_used = 0;
  /// Absolute bound on |value - exact|: truncation tail, rounding and the
  /// 1e-13 relative accuracy of the tabulated zeros.
  double tail_bound = 0.0;
  /// |x| lies within 1e-8 of a tabulated zero (D_nu product only).
  bool near_zero_warning = false;
};

inline constexpr double kDefaultExpansionTol = 1e-8;
inline constexpr double kMinExpansionTol = 1e-12;
/// Half-width of the excluded ring |x^2 - (1 - 2 nu)| < kSingularRing.
inline constexpr double kSingularRing = 1e-3;

TruncatedExpansion lambda_via_product(const Order& nu, double x, double tol = kDefaultExpansionTol);

/// Signed product; factors with alpha_n < |x| are negative.
TruncatedExpansion dini_via_product(const Order& nu, double x, double tol = kDefaultExpansionTol);

TruncatedExpansion log_deriv_lambda_sum(const Order& nu, double x,
                                        double tol = kDefaultExpansionTol);

/// lambda_{nu+1}(x)/lambda_nu(x) as
///   4(nu+1)/(x^2-1+2nu) * [-1 + (x^2+1+2nu) sum 1/(alpha_n^2 + x^2)].
/// Throws SingularityError within kSingularRing of x^2 = 1 - 2nu.
TruncatedExpansion mittag_leffler_ratio(const Order& nu, double x,
                                        double tol = kDefaultExpansionTol);

/// lambda(nu+1, x) / lambda(nu, x) from the power series.
double ratio_direct(const Order& nu, double x);

}  // namespace dini
