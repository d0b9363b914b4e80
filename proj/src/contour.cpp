#include "ovaloid/contour.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <numbers>

namespace ovaloid {

namespace {

// FFTW planning is not thread-safe; execution with fresh arrays is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer fftw_buffer(std::size_t n) {
  return FftwBuffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

std::vector<Complex> forward_dft(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  auto in = fftw_buffer(n);
  auto out = fftw_buffer(n);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (std::size_t k = 0; k < n; ++k) {
    in[k][0] = x[k].real();
    in[k][1] = x[k].imag();
  }
  fftw_execute(plan);
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = {out[k][0], out[k][1]};
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return y;
}

}  // namespace

void ContourSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("contour radius must be positive and finite");
  }
  if (node_count < 8 || (node_count & (node_count - 1)) != 0) {
    throw DomainError("contour node_count must be a power of two and at least 8");
  }
}

Complex ContourSpec::node(std::size_t k) const {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(node_count);
  return std::polar(radius, theta);
}

Complex contour_integral(const ContourSamples& samples) {
  const auto n = samples.values.size();
  if (n == 0) throw DomainError("contour_integral: no samples");
  if (n != samples.spec.node_count) throw DomainError("contour_integral: sample count does not match spec");
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) sum += samples.values[k] * samples.spec.node(k);
  return sum / static_cast<double>(n);
}

std::vector<Complex> laurent_coefficients(const ContourSamples& samples, int n_min, int n_max) {
  const auto n = static_cast<long>(samples.values.size());
  if (n == 0 || n != static_cast<long>(samples.spec.node_count)) {
    throw DomainError("laurent_coefficients: sample count does not match spec");
  }
  if (n_max < n_min || static_cast<long>(n_max) - n_min >= n) {
    throw DomainError("laurent_coefficients: requested range must be nonempty and shorter than node_count");
  }
  const auto spectrum = forward_dft(samples.values);
  const double r = samples.spec.radius;
  std::vector<Complex> c;
  c.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int m = n_min; m <= n_max; ++m) {
    const long idx = ((m % n) + n) % n;
    c.push_back(spectrum[static_cast<std::size_t>(idx)] / static_cast<double>(n) * std::pow(r, -m));
  }
  return c;
}

}  // namespace ovaloid
