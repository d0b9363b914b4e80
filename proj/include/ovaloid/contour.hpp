#pragma once

// Equispaced circular contours and the periodic trapezoid rule.
//
// Nodes are w_k = radius * exp(2 pi i k / N). For integrands analytic in an
// annulus around the circle the rule converges geometrically in N, which is
// what every contour integral in this library relies on.

#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <sstream>
#include <vector>

#include "ovaloid/errors.hpp"

namespace ovaloid {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultNodeCount = 512;

struct ContourSpec {
  double radius = 1.0;
  std::size_t node_count = kDefaultNodeCount;

  /// Throws DomainError unless radius > 0 and node_count is a power of two >= 8.
  void validate() const;

  Complex node(std::size_t k) const;
};

struct ContourSamples {
  ContourSpec spec;
  std::vector<Complex> values;
};

/// Evaluates fn at every node. A throwing or non-finite evaluation is
/// reported as a DomainError naming the node index and w.
template <class Fn>
ContourSamples sample_contour(const ContourSpec& spec, Fn&& fn) {
  spec.validate();
  ContourSamples out{spec, {}};
  out.values.resize(spec.node_count);
  for (std::size_t k = 0; k < spec.node_count; ++k) {
    const Complex w = spec.node(k);
    Complex v;
    try {
      v = fn(w);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "contour evaluation failed at node " << k << " (w = " << w << "): " << e.what();
      throw DomainError(msg.str());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "non-finite value at node " << k << " (w = " << w << ")";
      throw DomainError(msg.str());
    }
    out.values[k] = v;
  }
  return out;
}

/// (1/(2 pi i)) times the contour integral of the sampled function,
/// trapezoid rule in the angle: (1/N) sum_k v_k w_k. Summation is in node order.
Complex contour_integral(const ContourSamples& samples);

/// Laurent coefficients c_n, n in [n_min, n_max], of the sampled function
/// about the origin, via one FFT and radius scaling. Requires
/// n_max - n_min < node_count. Aliased coefficients are returned as they are.
std::vector<Complex> laurent_coefficients(const ContourSamples& samples, int n_min, int n_max);

}  // namespace ovaloid
