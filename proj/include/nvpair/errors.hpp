#pragma once

#include <stdexcept>
#include <string>

namespace nvpair {

// Invalid physical or configuration parameter (non-positive width, negative count, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a formula (r <= 0 in 1/r^3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Analysis could not produce a result from the given data.
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitError : public AnalysisError {
 public:
  FitError(const std::string& what, int iterations, double residual_norm)
      : AnalysisError(what + " (iterations=" + std::to_string(iterations) +
                      ", residual_norm=" + std::to_string(residual_norm) + ")"),
        iterations_(iterations),
        residual_norm_(residual_norm) {}

  int iterations() const { return iterations_; }
  double residual_norm() const { return residual_norm_; }

 private:
  int iterations_;
  double residual_norm_;
};

// Sequence/register mismatch, malformed file, bad CSV.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nvpair
