#include "ovaloid/series.hpp"

#include <stdexcept>

namespace ovaloid {

Complex TaylorSeries::operator()(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex TaylorSeries::derivative(Complex z, int order) const {
  if (order < 0) throw std::invalid_argument("TaylorSeries::derivative: negative order");
  if (order == 0) return (*this)(z);
  const auto m = static_cast<long>(coefficients.size());
  Complex acc{0.0, 0.0};
  for (long n = m - 1; n >= order; --n) {
    double falling = 1.0;  // n (n-1) ... (n-order+1)
    for (int j = 0; j < order; ++j) falling *= static_cast<double>(n - j);
    acc = acc * z + falling * coefficients[static_cast<std::size_t>(n)];
  }
  return acc;
}

}  // namespace ovaloid
