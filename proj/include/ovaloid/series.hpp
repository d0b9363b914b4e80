#pragma once

#include <complex>
#include <vector>

namespace ovaloid {

using Complex = std::complex<double>;

/// Truncated Taylor expansion of the conformal map about 0.
struct TaylorSeries {
  std::vector<double> coefficients;  // c_0 .. c_M
  double truncation_error = 0.0;     // bound on the discarded tail on |zeta| = 1
  bool within_tolerance = true;      // truncation_error met the requested tolerance

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z, int order = 1) const;
};

}  // namespace ovaloid
