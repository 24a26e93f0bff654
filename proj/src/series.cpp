#include "dini/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "dini/errors.hpp"
#include "double_double.hpp"

namespace dini {

using detail::DD;

Order::Order(double nu, double nu_max) : nu_(nu), nu_max_(nu_max) {
  if (!std::isfinite(nu) || !(nu > -1.0 + kOrderGuard)) {
    throw DomainError("order nu = " + format_double(nu) + " must exceed -1 + 1e-6");
  }
  if (nu > nu_max) {
    throw DomainError("order nu = " + format_double(nu) + " exceeds nu_max = " +
                      format_double(nu_max));
  }
}

Order Order::shifted(double shift) const { return Order(nu_ + shift, nu_max_ + std::max(shift, 0.0)); }

void EvalDomain::validate() const {
  if (!(x_max > 0.0)) throw DomainError("x_max must be positive");
  if (!(epsilon_rel > 0.0 && epsilon_rel < 1e-8)) {
    throw DomainError("epsilon_rel must lie in (0, 1e-8)");
  }
  if (max_terms < 1) throw DomainError("max_terms must be positive");
}

void EvalDomain::require_x(double x) const {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  if (std::fabs(x) > x_max) {
    throw DomainError("|x| = " + format_double(std::fabs(x)) + " exceeds x_max = " +
                      format_double(x_max));
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sums t_0 + t_1 + ... where ratio(m) = t_{m+1} / t_m. Stops once the last
// included term is below epsilon_rel * |sum| and the ratio has dropped under
// 1/2; the ratios of every series here decrease monotonically from that
// point on, so the tail is bounded by the geometric series of the last ratio.
template <class Ratio>
SeriesValue sum_series(DD first, Ratio&& ratio, const EvalDomain& dom, const char* name) {
  DD sum;
  DD term = first;
  int terms = 0;
  double abs_sum = 0.0;
  double max_abs = 0.0;
  double tail = 0.0;
  for (int m = 0;; ++m) {
    sum += term;
    ++terms;
    const double at = detail::abs_hi(term);
    abs_sum += at;
    max_abs = std::max(max_abs, at);
    if (at == 0.0) break;
    const DD rho = ratio(m);
    const double arho = detail::abs_hi(rho);
    if (arho == 0.0) break;
    if (at <= dom.epsilon_rel * detail::abs_hi(sum) && arho < 0.5) {
      tail = at * arho / (1.0 - arho);
      break;
    }
    if (terms >= dom.max_terms) {
      throw ConvergenceError(std::string(name) + ": series did not converge within " +
                             std::to_string(dom.max_terms) + " terms");
    }
    term = term * rho;
  }
  SeriesValue out;
  out.value = sum.to_double();
  out.terms_used = terms;
  const double final_rounding = std::fabs((sum - DD(out.value)).to_double());
  out.error_estimate = tail + 16.0 * terms * detail::kDDUnit * abs_sum + final_rounding;
  out.abs_sum = abs_sum;
  out.cancellation_warning = max_abs > 1e8 * std::fabs(out.value);
  if (!std::isfinite(out.value)) {
    throw RangeError(std::string(name) + ": value overflows double precision");
  }
  return out;
}

// nu + m without rounding.
DD nu_plus(double nu, double m) { return detail::two_sum(nu, m); }

DD quarter_square(double x) { return detail::two_prod(x, x) * 0.25; }

// I / J: t_{n+1}/t_n = (+-x^2/4) / ((n+1)(nu+n+1))
SeriesValue bessel_like(const Order& nu, double x, const EvalDomain& dom, double sign,
                        const char* name) {
  dom.validate();
  dom.require_x(x);
  const DD y = quarter_square(x) * sign;
  const double v = nu.value();
  auto ratio = [&](int n) { return y / (nu_plus(v, n + 1.0) * static_cast<double>(n + 1)); };
  return sum_series(DD(1.0), ratio, dom, name);
}

// lambda / D: t_{n+1}/t_n = (+-x^2/4) (2n+3) / ((2n+1)(n+1)(nu+n+1))
SeriesValue dini_like(const Order& nu, double x, const EvalDomain& dom, double sign,
                      const char* name) {
  dom.validate();
  dom.require_x(x);
  const DD y = quarter_square(x) * sign;
  const double v = nu.value();
  auto ratio = [&](int n) {
    const double num = 2.0 * n + 3.0;
    const double den = (2.0 * n + 1.0) * (n + 1.0);
    return y * num / (nu_plus(v, n + 1.0) * den);
  };
  return sum_series(DD(1.0), ratio, dom, name);
}

// k-th derivative of sum_m s^m a_m x^{2m}, a_m = (2m+1) / (4^m m! (nu+1)_m),
// s = +1 (lambda) or -1 (D). Terms start at m0 = ceil(k/2).
SeriesValue dini_like_deriv(const Order& nu, double x, int k, const EvalDomain& dom,
                            double sign, const char* name) {
  dom.validate();
  dom.require_x(x);
  if (k < 0 || k > 8) {
    throw DomainError(std::string(name) + ": derivative order k = " + std::to_string(k) +
                      " outside [0, 8]");
  }
  const double v = nu.value();
  const double ax = std::fabs(x);
  const int m0 = (k + 1) / 2;

  DD first(1.0);
  for (int i = 1; i <= m0; ++i) {
    first = first * (sign * (2.0 * i + 1.0)) /
            (nu_plus(v, i) * ((2.0 * i - 1.0) * 4.0 * i));
  }
  double falling = 1.0;  // (2 m0)! / (2 m0 - k)!
  for (int i = 0; i < k; ++i) falling *= (2.0 * m0 - i);
  first = first * falling;
  if (2 * m0 - k == 1) first = first * ax;

  const DD x2 = detail::two_prod(ax, ax) * sign;
  auto ratio = [&](int j) {
    const double m = m0 + j;
    const double num = 2.0 * m + 3.0;
    const double den = 2.0 * (2.0 * m + 2.0 - k) * (2.0 * m + 1.0 - k);
    return x2 * num / (nu_plus(v, m + 1.0) * den);
  };
  SeriesValue out = sum_series(first, ratio, dom, name);
  if (x < 0.0 && (k % 2 == 1)) out.value = -out.value;
  return out;
}

}  // namespace

double pochhammer(double nu, int n) {
  if (!(nu > -1.0)) throw DomainError("pochhammer: nu must exceed -1");
  if (n < 0) throw DomainError("pochhammer: n must be non-negative");
  double p = 1.0;
  for (int i = 1; i <= n; ++i) {
    p *= nu + i;
    if (!std::isfinite(p)) {
      throw RangeError("pochhammer: (nu+1)_n overflows at n = " + std::to_string(i));
    }
  }
  return p;
}

SeriesValue norm_bessel_I(const Order& nu, double x, const EvalDomain& dom) {
  return bessel_like(nu, x, dom, 1.0, "norm_bessel_I");
}

SeriesValue norm_bessel_J(const Order& nu, double x, const EvalDomain& dom) {
  return bessel_like(nu, x, dom, -1.0, "norm_bessel_J");
}

SeriesValue lambda(const Order& nu, double x, const EvalDomain& dom) {
  return dini_like(nu, x, dom, 1.0, "lambda");
}

SeriesValue dini_D(const Order& nu, double x, const EvalDomain& dom) {
  return dini_like(nu, x, dom, -1.0, "dini_D");
}

SeriesValue lambda_deriv(const Order& nu, double x, int k, const EvalDomain& dom) {
  return dini_like_deriv(nu, x, k, dom, 1.0, "lambda_deriv");
}

SeriesValue dini_D_deriv(const Order& nu, double x, int k, const EvalDomain& dom) {
  return dini_like_deriv(nu, x, k, dom, -1.0, "dini_D_deriv");
}

SeriesValue lambda_prime_decomposed(const Order& nu, double x, const EvalDomain& dom) {
  const Order up = nu.shifted(1.0);
  const double v1 = nu.value() + 1.0;
  const SeriesValue lam = lambda(up, x, dom);
  const SeriesValue bes = norm_bessel_I(up, x, dom);
  const double c1 = x / (2.0 * v1);
  const double c2 = x / v1;
  SeriesValue out;
  out.value = c1 * lam.value + c2 * bes.value;
  out.terms_used = lam.terms_used + bes.terms_used;
  out.abs_sum = std::fabs(c1) * lam.abs_sum + std::fabs(c2) * bes.abs_sum;
  out.error_estimate = std::fabs(c1) * lam.error_estimate + std::fabs(c2) * bes.error_estimate +
                       4.0 * kEps * (std::fabs(c1 * lam.value) + std::fabs(c2 * bes.value));
  return out;
}

SeriesValue dini_prime_decomposed(const Order& nu, double x, const EvalDomain& dom) {
  const Order up = nu.shifted(1.0);
  const double v1 = nu.value() + 1.0;
  const SeriesValue dd = dini_D(up, x, dom);
  const SeriesValue bes = norm_bessel_J(up, x, dom);
  const double c1 = -x / (2.0 * v1);
  const double c2 = -x / v1;
  SeriesValue out;
  out.value = c1 * dd.value + c2 * bes.value;
  out.terms_used = dd.terms_used + bes.terms_used;
  out.abs_sum = std::fabs(c1) * dd.abs_sum + std::fabs(c2) * bes.abs_sum;
  out.error_estimate = std::fabs(c1) * dd.error_estimate + std::fabs(c2) * bes.error_estimate +
                       4.0 * kEps * (std::fabs(c1 * dd.value) + std::fabs(c2 * bes.value));
  out.cancellation_warning = dd.cancellation_warning || bes.cancellation_warning ||
                             std::fabs(c1 * dd.value) + std::fabs(c2 * bes.value) >
                                 1e8 * std::fabs(out.value);
  return out;
}

double normalization_factor(double nu, double x) {
  if (nu == 0.0) return 1.0;
  if (x == 0.0) {
    if (nu > 0.0) return 0.0;
    throw DomainError("x^nu is unbounded at x = 0 for nu = " + format_double(nu) + " < 0");
  }
  const double f = std::exp(nu * std::log(x / 2.0) - std::lgamma(nu + 1.0));
  if (!std::isfinite(f)) throw RangeError("x^nu / (2^nu Gamma(nu+1)) overflows");
  return f;
}

namespace {

// Sign-aware normalization for x < 0, allowed only for integer nu.
double signed_normalization(double nu, double x, const char* name) {
  if (x >= 0.0) return normalization_factor(nu, x);
  if (nu != std::floor(nu)) {
    throw DomainError(std::string(name) + ": x = " + format_double(x) +
                      " < 0 requires an integer order (nu = " + format_double(nu) + ")");
  }
  const double f = normalization_factor(nu, -x);
  return (static_cast<long long>(nu) % 2 == 0) ? f : -f;
}

}  // namespace

double xi(const Order& nu, double x, const EvalDomain& dom) {
  const double f = signed_normalization(nu.value(), x, "xi");
  return f * lambda(nu, x, dom).value;
}

double d_lower(const Order& nu, double x, const EvalDomain& dom) {
  const double f = signed_normalization(nu.value(), x, "d_lower");
  return f * dini_D(nu, x, dom).value;
}

double bessel_I(const Order& nu, double x, const EvalDomain& dom) {
  const double f = signed_normalization(nu.value(), x, "bessel_I");
  return f * norm_bessel_I(nu, x, dom).value;
}

double bessel_J(const Order& nu, double x, const EvalDomain& dom) {
  const double f = signed_normalization(nu.value(), x, "bessel_J");
  return f * norm_bessel_J(nu, x, dom).value;
}

SeriesValue product_series_II(const Order& nu, const Order& mu, double x,
                              const EvalDomain& dom) {
  dom.validate();
  dom.require_x(x);
  const DD y = quarter_square(x);
  const double a = nu.value();
  const double b = mu.value();
  const DD s = detail::two_sum(a, b);
  // c_{k+1}/c_k = (s+2k+1)(s+2k+2) / ((s+k+1)(k+1)(nu+k+1)(mu+k+1)); at k = 0
  // the factor (s+1) cancels exactly, which matters when nu + mu = -1.
  auto ratio = [&](int k) {
    DD num = s + DD(2.0 * k + 2.0);
    if (k > 0) num = num * (s + DD(2.0 * k + 1.0)) / (s + DD(k + 1.0));
    const DD den = nu_plus(a, k + 1.0) * nu_plus(b, k + 1.0) * static_cast<double>(k + 1);
    return y * num / den;
  };
  return sum_series(DD(1.0), ratio, dom, "product_series_II");
}

}  // namespace dini
