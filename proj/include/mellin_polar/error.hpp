#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mellin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sample point lies outside the domain of a function, or too close to
/// one of its singularities for the requested stencil.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments that violate its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is valid but degenerate, e.g. a norm ratio with a zero denominator.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its refinement budget. Carries the best
/// estimate obtained and the gap between the last two refinements.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, std::complex<double> best, double gap)
      : Error(what), best_(best), gap_(gap) {}

  std::complex<double> best_estimate() const noexcept { return best_; }
  double gap() const noexcept { return gap_; }

 private:
  std::complex<double> best_;
  double gap_;
};

}  // namespace mellin
