#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>

#include "dini/errors.hpp"
#include "dini/grid_eval.hpp"
#include "parallel.hpp"

namespace dini {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

SeriesValue scaled(SeriesValue v, double factor) {
  v.value *= factor;
  v.abs_sum *= std::fabs(factor);
  v.error_estimate = v.error_estimate * std::fabs(factor) + 2.0 * kEps * std::fabs(v.value);
  return v;
}

}  // namespace

Function function_from_string(const std::string& name) {
  if (name == "lambda") return Function::lambda;
  if (name == "dini_D") return Function::dini_D;
  if (name == "norm_I") return Function::norm_I;
  if (name == "norm_J") return Function::norm_J;
  if (name == "xi") return Function::xi;
  if (name == "d") return Function::d;
  if (name == "lambda_deriv") return Function::lambda_deriv;
  if (name == "logderiv") return Function::logderiv;
  throw DomainError("unknown function '" + name + "'");
}

const char* to_string(Function fn) {
  switch (fn) {
    case Function::lambda: return "lambda";
    case Function::dini_D: return "dini_D";
    case Function::norm_I: return "norm_I";
    case Function::norm_J: return "norm_J";
    case Function::xi: return "xi";
    case Function::d: return "d";
    case Function::lambda_deriv: return "lambda_deriv";
    case Function::logderiv: return "logderiv";
  }
  return "?";
}

SeriesValue evaluate(Function fn, const Order& nu, double x, int k) {
  switch (fn) {
    case Function::lambda: return lambda(nu, x);
    case Function::dini_D: return dini_D(nu, x);
    case Function::norm_I: return norm_bessel_I(nu, x);
    case Function::norm_J: return norm_bessel_J(nu, x);
    case Function::xi: {
      const SeriesValue l = lambda(nu, x);
      return scaled(l, xi(nu, x) / l.value);
    }
    case Function::d: {
      // xi / lambda is the normalization x^nu / (2^nu Gamma(nu+1)), signs included
      const double factor = xi(nu, x) / lambda(nu, x).value;
      return scaled(dini_D(nu, x), factor);
    }
    case Function::lambda_deriv: return lambda_deriv(nu, x, k);
    case Function::logderiv: {
      const SeriesValue l = lambda(nu, x);
      const SeriesValue dl = lambda_deriv(nu, x, 1);
      SeriesValue out = dl;
      out.value = dl.value / l.value;
      out.terms_used = l.terms_used + dl.terms_used;
      out.abs_sum = dl.abs_sum / l.value;
      out.error_estimate = dl.error_estimate / l.value +
                           std::fabs(out.value) * l.error_estimate / l.value +
                           kEps * std::fabs(out.value);
      return out;
    }
  }
  throw DomainError("unknown function");
}

std::vector<SeriesValue> evaluate_grid(Function fn, const Order& nu, const std::vector<double>& xs,
                                       Execution execution, int k) {
  std::vector<SeriesValue> out(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  detail::for_each_index(xs.size(), execution, [&](std::size_t i) {
    try {
      out[i] = evaluate(fn, nu, xs[i], k);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

int thread_count() {
  if (const char* env = std::getenv("DINI_KIT_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 4096) return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

}  // namespace dini
