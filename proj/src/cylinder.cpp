#include "cylinder.hpp"

#include <cmath>
#include <numbers>

#include "dini/errors.hpp"

namespace dini::detail {

namespace {

struct PQ {
  double p = 0.0;
  double q = 0.0;
  bool converged = false;
};

// P ~ sum (-1)^k a_{2k} / x^{2k}, Q ~ sum (-1)^k a_{2k+1} / x^{2k+1},
// a_k / a_{k-1} = (4 nu^2 - (2k-1)^2) / (8k).
PQ hankel_pq(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  PQ out;
  double u = 1.0;  // a_k / x^k
  double last = 1.0;
  out.p = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = u * (mu - odd * odd) / (8.0 * k * x);
    if (std::fabs(next) > std::fabs(last) && k > 2) break;  // asymptotic divergence
    u = next;
    last = std::fabs(u);
    // k odd -> Q, k even -> P; signs alternate within each of P and Q
    const int half = k / 2;
    const double s = (half % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 1) {
      out.q += s * u;
    } else {
      out.p += s * u;
    }
    if (last < 1e-17 * (std::fabs(out.p) + std::fabs(out.q))) {
      out.converged = true;
      break;
    }
    if (u == 0.0) {
      out.converged = true;
      break;
    }
  }
  return out;
}

double hankel_value(const PQ& pq, double nu, double x) {
  // chi = x - (nu/2 + 1/4) pi, expanded so x enters the trig functions exactly
  const double phi = (0.5 * nu + 0.25) * std::numbers::pi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double cos_chi = cx * cp + sx * sp;
  const double sin_chi = sx * cp - cx * sp;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (pq.p * cos_chi - pq.q * sin_chi);
}

}  // namespace

bool hankel_pair(double nu, double x, BesselPair& out) {
  const PQ a = hankel_pq(nu, x);
  const PQ b = hankel_pq(nu + 1.0, x);
  if (!a.converged || !b.converged) return false;
  out.j_nu = hankel_value(a, nu, x);
  out.j_nu1 = hankel_value(b, nu + 1.0, x);
  return true;
}

BesselPair bessel_pair_large(double nu, double x) {
  BesselPair out;
  if (hankel_pair(nu, x, out)) return out;
  if (nu >= 0.0) {
    out.j_nu = std::cyl_bessel_j(nu, x);
    out.j_nu1 = std::cyl_bessel_j(nu + 1.0, x);
    return out;
  }
  // -1 < nu < 0: step down from orders nu+1, nu+2 (stable direction for J).
  const double j1 = std::cyl_bessel_j(nu + 1.0, x);
  const double j2 = std::cyl_bessel_j(nu + 2.0, x);
  out.j_nu1 = j1;
  out.j_nu = 2.0 * (nu + 1.0) / x * j1 - j2;
  return out;
}

}  // namespace dini::detail
