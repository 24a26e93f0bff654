#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "dini/errors.hpp"
#include "dini/series.hpp"

using namespace dini;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// 2^nu Gamma(nu+1) x^-nu, the factor that turns I_nu, J_nu into the normalized forms.
double norm_factor(double nu, double x) {
  return std::exp(nu * std::log(2.0) + boost::math::lgamma(nu + 1.0) - nu * std::log(x));
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(0.0, 3) == 6.0);
  CHECK(pochhammer(0.7, 0) == 1.0);
  CHECK(pochhammer(0.5, 2) == doctest::Approx(3.75).epsilon(1e-15));
  CHECK_THROWS_AS(pochhammer(10.0, 400), RangeError);
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS(Order(-1.0), DomainError);
  CHECK_THROWS_AS(Order(-1.0 + 1e-7), DomainError);
  CHECK_THROWS_AS(Order(std::nan("")), DomainError);
  CHECK_THROWS_AS(Order(101.0), DomainError);
  CHECK_NOTHROW(Order(-0.999));
}

TEST_CASE("domain of x") {
  CHECK_THROWS_AS(lambda(Order(0.0), 50.5), DomainError);
  CHECK_THROWS_AS(lambda(Order(0.0), std::nan("")), DomainError);
  CHECK_NOTHROW(lambda(Order(0.0), -50.0));
}

TEST_CASE("values at the origin") {
  for (double nu : {-0.9, -0.5, 0.0, 1.0, 7.5}) {
    const Order o(nu);
    CHECK(norm_bessel_I(o, 0.0).value == 1.0);
    CHECK(norm_bessel_J(o, 0.0).value == 1.0);
    CHECK(lambda(o, 0.0).value == 1.0);
    CHECK(dini_D(o, 0.0).value == 1.0);
    CHECK(lambda_deriv(o, 0.0, 1).value == 0.0);
    CHECK(lambda_prime_decomposed(o, 0.0).value == 0.0);
    CHECK(dini_prime_decomposed(o, 0.0).value == 0.0);
  }
}

TEST_CASE("elementary closed forms") {
  const Order mh(-0.5), ph(0.5);
  CHECK(rel(norm_bessel_I(mh, 1.0).value, std::cosh(1.0)) < 1e-15);
  CHECK(rel(norm_bessel_I(ph, 1.0).value, std::sinh(1.0)) < 1e-15);
  CHECK(norm_bessel_I(mh, 1.0).value == doctest::Approx(1.5430806348).epsilon(1e-10));
  CHECK(norm_bessel_I(ph, 1.0).value == doctest::Approx(1.1752011936).epsilon(1e-10));
  CHECK(std::fabs(norm_bessel_J(mh, std::numbers::pi).value + 1.0) < 1e-14);
  CHECK(std::fabs(norm_bessel_J(ph, std::numbers::pi).value) < 1e-14);
  CHECK(rel(lambda(ph, 1.0).value, 1.5430806348) < 1e-10);
  CHECK(std::fabs(dini_D(mh, std::numbers::pi / 2).value + std::numbers::pi / 2) < 1e-14);
  CHECK(std::fabs(dini_D(mh, 0.8603335890).value) < 1e-9);
  CHECK(lambda_deriv(ph, 0.0, 2).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(lambda_prime_decomposed(ph, 1.0).value, std::sinh(1.0)) < 1e-14);
  CHECK(std::fabs(dini_prime_decomposed(mh, std::numbers::pi / 2).value + 2.0) < 1e-14);

  for (int i = 0; i <= 200; ++i) {
    const double x = -10.0 + 0.1 * i;
    CHECK(rel(lambda(ph, x).value, std::cosh(x)) < 1e-13);
    CHECK(rel(lambda(mh, x).value, std::cosh(x) + x * std::sinh(x)) < 1e-13);
    const double c = std::cos(x) - x * std::sin(x);
    CHECK(std::fabs(dini_D(mh, x).value - c) < 1e-13 * std::max(1.0, std::fabs(x)));
    CHECK(std::fabs(dini_D(ph, x).value - std::cos(x)) < 1e-14);
  }
}

TEST_CASE("normalized functions against Boost.Math") {
  for (double nu : {-0.75, -0.5, 0.0, 0.3, 1.0, 2.5, 6.0}) {
    const Order o(nu);
    for (double x : {0.1, 0.5, 1.0, 3.0, 7.5, 12.0, 25.0}) {
      const double f = norm_factor(nu, x);
      const double i0 = boost::math::cyl_bessel_i(nu, x);
      const double i1 = boost::math::cyl_bessel_i(nu + 1.0, x);
      CHECK(rel(norm_bessel_I(o, x).value, f * i0) < 1e-13);
      CHECK(rel(lambda(o, x).value, f * (i0 + x * i1)) < 1e-13);
      CHECK(rel(xi(o, x), i0 + x * i1) < 1e-13);
      CHECK(rel(bessel_I(o, x), i0) < 1e-13);

      const double j0 = boost::math::cyl_bessel_j(nu, x);
      const double j1 = boost::math::cyl_bessel_j(nu + 1.0, x);
      // Absolute comparison for the oscillating family, scaled by the local magnitude.
      const double scale = f * (std::fabs(j0) + x * std::fabs(j1)) + 1e-300;
      CHECK(std::fabs(norm_bessel_J(o, x).value - f * j0) < 1e-12 * scale);
      CHECK(std::fabs(dini_D(o, x).value - f * (j0 - x * j1)) < 1e-12 * scale);
      CHECK(std::fabs(d_lower(o, x) - (j0 - x * j1)) < 1e-12 * (std::fabs(j0) + x * std::fabs(j1)));
    }
  }
  CHECK(rel(lambda(Order(0.0), 1.0).value, 1.8312249817) < 1e-10);
  CHECK(rel(xi(Order(0.0), 1.0), 1.8312249817) < 1e-10);
  CHECK(xi(Order(0.5), 0.0) == 0.0);
  CHECK(std::fabs(d_lower(Order(-0.5), 1.0) * std::sqrt(std::numbers::pi / 2) - (std::cos(1.0) - std::sin(1.0))) < 1e-14);
}

TEST_CASE("derivatives") {
  const Order o(0.0);
  CHECK(rel(lambda_deriv(o, 1.0, 0).value, lambda(o, 1.0).value) < 1e-15);
  CHECK(rel(lambda_prime_decomposed(o, 1.0).value, lambda_deriv(o, 1.0, 1).value) < 1e-12);
  CHECK(rel(dini_prime_decomposed(o, 1.0).value, dini_D_deriv(o, 1.0, 1).value) < 1e-12);
  // lambda_{1/2} = cosh: derivatives alternate between cosh and sinh.
  const Order ph(0.5);
  for (int k = 0; k <= 8; ++k) {
    const double expect = (k % 2 == 0) ? std::cosh(2.0) : std::sinh(2.0);
    CHECK(rel(lambda_deriv(ph, 2.0, k).value, expect) < 1e-13);
  }
  CHECK_THROWS_AS(lambda_deriv(ph, 1.0, 9), DomainError);
  CHECK_THROWS_AS(lambda_deriv(ph, 1.0, -1), DomainError);
}

TEST_CASE("error estimate covers the true error") {
  for (double nu : {-0.5, 0.5}) {
    const Order o(nu);
    for (double x : {0.5, 5.0, 20.0, 40.0}) {
      const SeriesValue l = lambda(o, x);
      const double exact = nu > 0 ? std::cosh(x) : std::cosh(x) + x * std::sinh(x);
      CHECK(std::fabs(l.value - exact) <= l.error_estimate + 4e-16 * exact);
      CHECK(l.error_estimate > 0.0);
    }
  }
  const SeriesValue d = dini_D(Order(0.5), 40.0);
  CHECK(std::fabs(d.value - std::cos(40.0)) <= d.error_estimate + 1e-16);
  CHECK(d.cancellation_warning);
  CHECK_FALSE(lambda(Order(0.5), 40.0).cancellation_warning);
}

TEST_CASE("product series") {
  CHECK(product_series_II(Order(0.3), Order(1.7), 0.0).value == 1.0);
  const double x = 1.0;
  CHECK(rel(product_series_II(Order(-0.5), Order(0.5), x).value, std::cosh(x) * std::sinh(x)) < 1e-14);
  CHECK(rel(product_series_II(Order(-0.5), Order(0.5), x).value, 1.8134302039) < 1e-10);
  const double i02 = norm_bessel_I(Order(0.0), 2.0).value;
  CHECK(rel(product_series_II(Order(0.0), Order(0.0), 2.0).value, i02 * i02) < 1e-12);
  for (double x2 : {0.5, 4.0, 15.0}) {
    const double p = norm_bessel_I(Order(1.0), x2).value * norm_bessel_I(Order(2.5), x2).value;
    CHECK(rel(product_series_II(Order(1.0), Order(2.5), x2).value, p) < 1e-13);
  }
}

TEST_CASE("normalization factor") {
  CHECK(normalization_factor(0.0, 3.0) == 1.0);
  CHECK(rel(normalization_factor(0.5, 2.0), std::sqrt(2.0) / (std::sqrt(2.0) * std::tgamma(1.5))) < 1e-15);
}
