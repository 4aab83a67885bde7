#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace framescope {

// Dimension or shape mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Input violates a mathematical precondition (non-Hermitian where Hermitian is
// required, non-positive pivot, rank deficiency, value outside a stated set).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative method hit its cap before reaching the target accuracy.
// Carries the best estimate available at the point of failure; eigenvalue
// routines also attach whatever part of the spectrum had already settled.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  ConvergenceError(const std::string& what, double best_estimate,
                   std::vector<std::complex<double>> partial)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        partial_(std::move(partial)) {}

  double best_estimate() const { return best_estimate_; }
  const std::vector<std::complex<double>>& partial_eigenvalues() const {
    return partial_;
  }

private:
  double best_estimate_ = 0.0;
  std::vector<std::complex<double>> partial_;
};

// A requested quantity left the representable double range.
class ScaleError : public std::runtime_error {
public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Messages name the offending field or array index.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}
