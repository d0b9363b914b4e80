#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ovaloid {

/// Argument outside the region where a formula is defined (annulus, pole
/// proximity, b = 0 in the residue kernel, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Root bracketing for the residue constraint failed. Carries the sampled
/// (a, F(a, b)) pairs so the caller can dump them.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<std::pair<double, double>> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::vector<std::pair<double, double>>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::pair<double, double>> trace_;
};

/// f_1(b) was not a positive real number, so C cannot place the foci.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ovaloid
