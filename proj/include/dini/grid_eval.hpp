#pragma once

// Batch evaluation of the series functions over many x values. The parallel
// path splits the points across OpenMP threads (capped by DINI_KIT_THREADS);
// the serial path is the reference it must match bit for bit.

#include <string>
#include <vector>

#include "dini/order.hpp"
#include "dini/series.hpp"

namespace dini {

enum class Execution { serial, parallel };

enum class Function { lambda, dini_D, norm_I, norm_J, xi, d, lambda_deriv, logderiv };

/// Accepts lambda, dini_D, norm_I, norm_J, xi, d, lambda_deriv, logderiv.
Function function_from_string(const std::string& name);
const char* to_string(Function fn);

/// One function value; `k` is the derivative order for lambda_deriv.
SeriesValue evaluate(Function fn, const Order& nu, double x, int k = 1);

/// evaluate() at every x, in order. On failure the error of the first failing
/// point (by index) is rethrown after all points finish.
std::vector<SeriesValue> evaluate_grid(Function fn, const Order& nu, const std::vector<double>& xs,
                                       Execution execution = Execution::parallel, int k = 1);

/// Threads used by parallel execution: DINI_KIT_THREADS if it is a positive
/// integer, else the OpenMP default.
int thread_count();

}  // namespace dini
