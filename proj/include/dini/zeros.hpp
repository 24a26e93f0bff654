#pragma once

// Positive zeros j_{nu,n} of J_nu and alpha_{nu,n} of the Dini function
// d_nu = J_nu - x J_{nu+1}. Dini zeros are bracketed by the Bessel zeros of
// the same order:
//
//   0 < alpha_{nu,1} < j_{nu,1},   j_{nu,n-1} < alpha_{nu,n} < j_{nu,n}  (n >= 2)
//
// and the table is checked against sum_n 1/alpha_{nu,n}^2 = 3 / (4 (nu+1)).
//
// Tables are cached per order (keyed on the bit pattern of nu) and extended
// on demand; the cache allows concurrent readers and serializes extension.

#include <vector>

#include "dini/order.hpp"

namespace dini {

enum class ZeroKind { dini, bessel };

struct BracketingInterval {
  double lo = 0.0;
  double hi = 0.0;
  int f_lo_sign = 0;
  int f_hi_sign = 0;
};

struct ZeroTable {
  Order nu{0.0};
  ZeroKind kind = ZeroKind::bessel;
  std::vector<double> zeros;
  std::vector<BracketingInterval> bracket_log;
  /// 3/(4(nu+1)) - sum 1/zeros^2 for dini tables; NaN for bessel tables.
  double rayleigh_residual = 0.0;

  int count() const noexcept { return static_cast<int>(zeros.size()); }
};

inline constexpr double kZeroRelTol = 1e-13;
inline constexpr int kMaxZeroCount = 100000;

/// First `count` positive zeros of J_nu.
ZeroTable bessel_zero_table(const Order& nu, int count);

/// First `count` positive zeros of d_nu, with the Rayleigh residual.
ZeroTable dini_zero_table(const Order& nu, int count);

/// 3/(4(nu+1)) - sum_{n<=N} 1/alpha_{nu,n}^2 for a dini table.
double rayleigh_residual(const ZeroTable& table);

/// Upper bound for sum_{n>N} 1/(alpha_{nu,n}^2 + x^2); each term is at most
/// 1/alpha^2, so the Rayleigh residual itself is the bound.
double tail_inverse_square_sum(const Order& nu, const ZeroTable& table, double x);

/// Drops every cached table (tests and benchmarks use this to time cold runs).
void clear_zero_cache();

}  // namespace dini
