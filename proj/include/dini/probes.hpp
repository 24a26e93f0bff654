#pragma once

// Discrete probes for shape properties of real functions on a grid. Every
// probe reports the smallest relative margin found (negative = violation)
// and the grid point where it occurred; `holds` is worst_margin >= -slack.

#include <cstdint>
#include <functional>
#include <vector>

namespace dini {

enum class Spacing { uniform, chebyshev };
enum class Direction { increasing, decreasing };
enum class Sense { convex, concave };

inline constexpr double kDefaultSlack = 1e-10;
inline constexpr int kMinGridPoints = 8;
inline constexpr int kMaxCmOrder = 6;
inline constexpr double kDefaultCmStep = 0.05;

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int points = 64;
  Spacing spacing = Spacing::uniform;

  /// Throws DomainError unless lo < hi, both finite, points >= 8.
  void validate() const;
  /// Ascending nodes including both endpoints; chebyshev uses the
  /// Chebyshev-Lobatto points mapped to [lo, hi].
  std::vector<double> nodes() const;
};

struct ProbeResult {
  bool holds = true;
  double worst_margin = 0.0;
  double witness = 0.0;
  int points_tested = 0;
};

using RealFn = std::function<double(double)>;

/// (rhs - lhs) / max(|lhs|, |rhs|), 0 when both vanish: the relative margin of lhs <= rhs.
double relative_margin(double lhs, double rhs);

/// Successive differences on the grid; witness is the right point of the worst pair.
ProbeResult monotone_on_grid(const RealFn& f, const GridSpec& grid, Direction direction,
                             double slack = kDefaultSlack);

/// log f((a+b)/2) against (log f(a) + log f(b))/2 for every pair of nodes two
/// apart and for `random_pairs` pairs drawn with a fixed seed. Witness is the midpoint.
ProbeResult midpoint_logconvex_on_grid(const RealFn& f, const GridSpec& grid, Sense sense,
                                       double slack = kDefaultSlack, int random_pairs = 64,
                                       std::uint64_t seed = 0x5eed);

/// Monotone increase of x f'(x) / f(x) on a grid inside (0, inf).
ProbeResult geometric_convexity_probe(const RealFn& f, const RealFn& fprime, const GridSpec& grid,
                                      double slack = kDefaultSlack);

/// (-1)^k Delta_h^k f(x) >= 0 for k = 0..max_order at every node, each
/// difference scaled by sum_j C(k,j) |f(x + j h)|. A discrete surrogate for
/// complete monotonicity, reported as "CM up to order max_order".
ProbeResult complete_monotonicity_probe(const RealFn& f, const GridSpec& grid,
                                        int max_order = kMaxCmOrder, double h = kDefaultCmStep,
                                        double slack = kDefaultSlack);

}  // namespace dini
