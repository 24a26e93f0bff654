#pragma once

// Report and zero-table serialization. JSON output is canonical: keys sorted,
// floats as %.17g, non-finite numbers as null, no whitespace. Parsing a
// document and writing it again reproduces the same bytes.

#include <string>
#include <vector>

#include "dini/suite.hpp"
#include "dini/zeros.hpp"

namespace dini {

std::string report_to_json(const Report& report);
/// Header plus one row per outcome.
std::string report_to_csv(const Report& report);
/// Human-oriented; not byte-stable (includes timings).
std::string report_to_text(const Report& report);

/// Re-serializes any JSON text canonically; throws DomainError on malformed input.
std::string canonicalize_json(const std::string& text);

/// {"count", "nu", "rayleigh_residual", "zeros"}; rayleigh_residual is null for bessel tables.
std::string zero_table_to_json(const ZeroTable& table);

struct GoldenZeros {
  double nu = 0.0;
  int count = 0;
  std::vector<double> zeros;
  double rayleigh_residual = 0.0;
};

GoldenZeros golden_from_json(const std::string& text);

/// Largest relative difference between a table and a golden file; infinity
/// when order or count differ.
double golden_mismatch(const ZeroTable& table, const GoldenZeros& golden);

}  // namespace dini
