#include <doctest.h>

#include <cmath>
#include <vector>

#include "dini/errors.hpp"
#include "dini/grid_eval.hpp"

using namespace dini;

TEST_CASE("function names") {
  for (const char* n : {"lambda", "dini_D", "norm_I", "norm_J", "xi", "d", "lambda_deriv", "logderiv"}) {
    CHECK(std::string(to_string(function_from_string(n))) == n);
  }
  CHECK_THROWS_AS(function_from_string("gamma"), DomainError);
}

TEST_CASE("parallel grid matches serial bit for bit") {
  std::vector<double> xs;
  for (int i = 0; i < 2001; ++i) xs.push_back(-50.0 + 0.05 * i);
  for (auto fn : {Function::lambda, Function::dini_D, Function::norm_J, Function::lambda_deriv,
                  Function::logderiv}) {
    const auto s = evaluate_grid(fn, Order(0.75), xs, Execution::serial, 3);
    const auto p = evaluate_grid(fn, Order(0.75), xs, Execution::parallel, 3);
    REQUIRE(s.size() == xs.size());
    REQUIRE(p.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(s[i].value == p[i].value);
      CHECK(s[i].error_estimate == p[i].error_estimate);
    }
  }
}

TEST_CASE("first failing point is reported") {
  const std::vector<double> xs = {1.0, 60.0, 2.0, 70.0};
  CHECK_THROWS_WITH_AS(evaluate_grid(Function::lambda, Order(0.0), xs, Execution::parallel),
                       doctest::Contains("60"), DomainError);
}

TEST_CASE("unnormalized values") {
  CHECK(std::fabs(evaluate(Function::xi, Order(0.0), 1.0).value - 1.8312249817) < 1e-10);
  CHECK(std::fabs(evaluate(Function::logderiv, Order(0.5), 1.0).value - std::tanh(1.0)) < 1e-15);
  CHECK(thread_count() >= 1);
}
