#pragma once

#include <string>

namespace dini {

inline constexpr double kOrderGuard = 1e-6;
inline constexpr double kDefaultNuMax = 100.0;

/// Validated order nu of every function family: -1 + 1e-6 < nu <= nu_max.
class Order {
 public:
  explicit Order(double nu, double nu_max = kDefaultNuMax);

  double value() const noexcept { return nu_; }
  double cap() const noexcept { return nu_max_; }

  /// Order nu + shift with the cap raised by the same amount; used for the
  /// neighbouring orders that appear in derivative and decomposition formulas.
  Order shifted(double shift) const;

  friend bool operator==(const Order& a, const Order& b) noexcept { return a.nu_ == b.nu_; }

 private:
  double nu_;
  double nu_max_;
};

/// Numerical evaluation limits shared by the series routines.
struct EvalDomain {
  double x_max = 50.0;
  double nu_max = kDefaultNuMax;
  double epsilon_rel = 1e-15;
  int max_terms = 300;

  /// Throws DomainError if the limits themselves are invalid.
  void validate() const;
  /// Throws DomainError naming the violated bound.
  void require_x(double x) const;
};

std::string format_double(double v);

}  // namespace dini
