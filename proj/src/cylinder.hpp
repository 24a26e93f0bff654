#pragma once

// Unnormalized J_nu(x), J_{nu+1}(x) for x beyond the series domain, used to
// extend zero tables past x_max. Hankel's asymptotic expansion where it
// reaches double precision, libstdc++'s cyl_bessel_j otherwise.

namespace dini::detail {

struct BesselPair {
  double j_nu = 0.0;
  double j_nu1 = 0.0;
};

/// Hankel expansion; returns false if the expansion's smallest term does not
/// reach relative accuracy 1e-16 at this (nu, x).
bool hankel_pair(double nu, double x, BesselPair& out);

/// J_nu(x), J_{nu+1}(x) for x > 0 and nu > -1.
BesselPair bessel_pair_large(double nu, double x);

}  // namespace dini::detail
