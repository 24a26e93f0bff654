#pragma once

#include <stdexcept>
#include <string>

namespace dini {

/// Argument outside the evaluation domain (|x| > x_max, nu out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// An iteration (series, root polish) did not converge within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what, int index = -1)
      : std::runtime_error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// A guaranteed mathematical property (e.g. a sign change inside an
/// interlacing bracket) was not observed numerically.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested tolerance needs more zeros than the table extension cap.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation too close to the removable singularity x^2 = 1 - 2 nu of the
/// Mittag-Leffler form.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-finite or non-positive probe function value.
class ProbeError : public std::domain_error {
 public:
  ProbeError(const std::string& what, double point)
      : std::domain_error(what), point_(point) {}
  double point() const noexcept { return point_; }

 private:
  double point_;
};

}  // namespace dini
