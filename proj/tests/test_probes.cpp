#include <doctest.h>

#include <cmath>
#include <limits>

#include "dini/errors.hpp"
#include "dini/probes.hpp"
#include "dini/series.hpp"

using namespace dini;

TEST_CASE("relative margin") {
  CHECK(relative_margin(1.0, 2.0) == 0.5);
  CHECK(relative_margin(2.0, 1.0) == -0.5);
  CHECK(relative_margin(0.0, 0.0) == 0.0);
  CHECK(relative_margin(-1.0, 1.0) == 2.0);
}

TEST_CASE("grid spec") {
  GridSpec g{0.0, 1.0, 8, Spacing::uniform};
  const auto u = g.nodes();
  REQUIRE(u.size() == 8);
  CHECK(u.front() == 0.0);
  CHECK(u.back() == 1.0);
  g.spacing = Spacing::chebyshev;
  const auto c = g.nodes();
  CHECK(c.front() == 0.0);
  CHECK(c.back() == 1.0);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] > c[i - 1]);
  CHECK_THROWS_AS((GridSpec{1.0, 0.0, 8}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 7}.validate()), DomainError);
}

TEST_CASE("monotone probe") {
  const GridSpec g{0.0, 1.0, 32};
  const ProbeResult up = monotone_on_grid([](double x) { return std::exp(x); }, g, Direction::increasing);
  CHECK(up.holds);
  CHECK(up.worst_margin > 0.0);
  CHECK(up.points_tested == 31);
  const ProbeResult down =
      monotone_on_grid([](double x) { return std::exp(-x); }, g, Direction::increasing);
  CHECK_FALSE(down.holds);
  CHECK(down.worst_margin < 0.0);
  CHECK(down.witness > 0.0);
  CHECK(down.witness <= 1.0);
  const ProbeResult lam = monotone_on_grid([](double x) { return lambda(Order(0.0), x).value; },
                                           GridSpec{0.0, 5.0, 64}, Direction::increasing);
  CHECK(lam.holds);
  CHECK_THROWS_AS(monotone_on_grid([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                                   g, Direction::increasing),
                  ProbeError);
}

TEST_CASE("log-convexity probe") {
  const GridSpec g{0.0, 1.0, 32};
  CHECK(midpoint_logconvex_on_grid([](double x) { return std::exp(x * x); }, g, Sense::convex).holds);
  CHECK_FALSE(
      midpoint_logconvex_on_grid([](double x) { return std::exp(-x * x); }, g, Sense::convex).holds);
  const ProbeResult lam = midpoint_logconvex_on_grid(
      [](double x) { return lambda(Order(0.0), std::sqrt(x)).value; }, GridSpec{0.1, 20.0, 64},
      Sense::concave);
  CHECK(lam.holds);
  CHECK_THROWS_AS(midpoint_logconvex_on_grid([](double x) { return x - 0.5; }, g, Sense::convex),
                  ProbeError);
}

TEST_CASE("probes are deterministic") {
  auto f = [](double x) { return lambda(Order(0.3), std::sqrt(x)).value; };
  const GridSpec g{0.1, 20.0, 40, Spacing::chebyshev};
  const ProbeResult a = midpoint_logconvex_on_grid(f, g, Sense::concave, kDefaultSlack, 128, 7);
  const ProbeResult b = midpoint_logconvex_on_grid(f, g, Sense::concave, kDefaultSlack, 128, 7);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.witness == b.witness);
  CHECK(a.points_tested == b.points_tested);
}

TEST_CASE("geometric convexity probe") {
  const GridSpec g{0.1, 5.0, 32};
  CHECK(geometric_convexity_probe([](double x) { return std::exp(x); },
                                  [](double x) { return std::exp(x); }, g)
            .holds);
  const ProbeResult flat = geometric_convexity_probe([](double x) { return 1.0 / x; },
                                                     [](double x) { return -1.0 / (x * x); }, g);
  CHECK(flat.holds);
  CHECK(std::fabs(flat.worst_margin) < 1e-15);
  const Order o(0.0);
  CHECK(geometric_convexity_probe([&](double x) { return lambda(o, x).value; },
                                  [&](double x) { return lambda_deriv(o, x, 1).value; }, g)
            .holds);
}

TEST_CASE("complete monotonicity probe") {
  CHECK(complete_monotonicity_probe([](double x) { return std::exp(-x); }, GridSpec{0.0, 3.0, 16})
            .holds);
  CHECK_FALSE(
      complete_monotonicity_probe([](double x) { return x * x; }, GridSpec{0.0, 1.0, 16}, 2).holds);
  const ProbeResult lam = complete_monotonicity_probe(
      [](double x) { return 1.0 / lambda(Order(0.0), std::sqrt(x)).value; },
      GridSpec{0.1, 20.0, 64}, 6, 0.05);
  CHECK(lam.holds);
  // Order 1 reduces to a monotone decrease test.
  auto dec = [](double x) { return 1.0 / (1.0 + x); };
  CHECK(complete_monotonicity_probe(dec, GridSpec{0.0, 2.0, 16}, 1).holds);
  auto inc = [](double x) { return 1.0 + x; };
  CHECK_FALSE(complete_monotonicity_probe(inc, GridSpec{0.0, 2.0, 16}, 1).holds);
  CHECK_THROWS_AS(complete_monotonicity_probe(dec, GridSpec{-1.0, 2.0, 16}), DomainError);
}
