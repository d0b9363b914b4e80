#include "ovaloid/map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ovaloid {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

Complex vertex(const ProfileCurve& c, std::size_t k) {
  const auto& p = c.points[k % c.points.size()];
  return {p.X, p.Y};
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

bool polygons_cross(const ProfileCurve& a, const ProfileCurve& b) {
  const auto na = a.points.size(), nb = b.points.size();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      if (segments_intersect(vertex(a, i), vertex(a, i + 1), vertex(b, j), vertex(b, j + 1))) return true;
    }
  }
  return false;
}

}  // namespace

CauchyEvaluator::CauchyEvaluator(const OvaloidParams& p, const ContourSpec& spec) {
  p.validate();
  require_admissible(p, spec);
  samples_ = sample_contour(spec, [&p](Complex w) { return sqrt_g(p, w); });
}

void CauchyEvaluator::check_zeta(Complex zeta) const {
  const double r = samples_.spec.radius;
  if (std::abs(zeta) > r - 1e-6) {
    std::ostringstream msg;
    msg << "zeta = " << zeta << " is within 1e-6 of (or outside) the contour |w| = " << r
        << "; increase the contour radius";
    throw DomainError(msg.str());
  }
}

Complex CauchyEvaluator::value(Complex zeta) const { return derivative(zeta, 0); }

Complex CauchyEvaluator::derivative(Complex zeta, int order) const {
  if (order < 0) throw DomainError("derivative order must be non-negative");
  check_zeta(zeta);
  const auto& spec = samples_.spec;
  const std::size_t n = spec.node_count;
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex w = spec.node(k);
    const Complex inv = 1.0 / (w - zeta);
    Complex kernel = inv;
    for (int j = 0; j < order; ++j) kernel *= inv;
    sum += samples_.values[k] * w * kernel;
  }
  double factorial = 1.0;
  for (int j = 2; j <= order; ++j) factorial *= j;
  return factorial * sum / static_cast<double>(n);
}

Complex cauchy_transform(const OvaloidParams& p, const ContourSpec& spec, Complex zeta) {
  return CauchyEvaluator(p, spec).value(zeta);
}

Complex f_derivative(const OvaloidParams& p, const ContourSpec& spec, Complex zeta, int order) {
  if (order != 1 && order != 2) throw DomainError("f_derivative: order must be 1 or 2");
  return CauchyEvaluator(p, spec).derivative(zeta, order);
}

TaylorSeries taylor_series(const OvaloidParams& p, const ContourSpec& spec, std::size_t order,
                           double tolerance) {
  const std::size_t n = spec.node_count;
  if (order == 0 || order >= n / 2) throw DomainError("taylor_series: order must satisfy 0 < M < node_count/2");
  const CauchyEvaluator eval(p, spec);
  const int top = static_cast<int>(n / 2) - 1;
  const auto c = laurent_coefficients(eval.samples(), 0, top);

  double scale = 0.0;
  for (const auto& cn : c) scale = std::max(scale, std::abs(cn));
  for (int k = 0; k <= top; ++k) {
    if (std::abs(c[static_cast<std::size_t>(k)].imag()) > 1e-12 * std::max(1.0, scale)) {
      std::ostringstream msg;
      msg << "Taylor coefficient " << k << " has imaginary part " << c[static_cast<std::size_t>(k)].imag()
          << "; the map is not real (branch or parameter error)";
      throw DomainError(msg.str());
    }
  }

  auto tail = [&](std::size_t m) {
    double t = 0.0;
    for (std::size_t k = m + 1; k <= static_cast<std::size_t>(top); ++k) t += std::abs(c[k]);
    return t;
  };
  const std::size_t cap = std::max(order, n / 4);
  std::size_t m = order;
  while (tail(m) > tolerance && m < cap) m = std::min(2 * m, cap);

  TaylorSeries s;
  s.coefficients.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) s.coefficients.push_back(c[k].real());
  s.truncation_error = tail(m);
  s.within_tolerance = s.truncation_error <= tolerance;
  return s;
}

ProfileCurve profile_curve(const OvaloidParams& p, const ContourSpec& spec, std::size_t n_points) {
  if (n_points < 16) throw DomainError("profile_curve: n_points must be at least 16");
  const CauchyEvaluator eval(p, spec);
  ProfileCurve curve;
  curve.params = p;
  curve.points.reserve(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_points);
    const Complex z = eval.value(std::polar(1.0, theta));
    curve.points.push_back({theta, z.real(), z.imag()});
  }
  return curve;
}

double x_extent(const ProfileCurve& curve) {
  double m = 0.0;
  for (const auto& q : curve.points) m = std::max(m, std::abs(q.X));
  return m;
}

int winding_number(const ProfileCurve& curve, Complex point) {
  double total = 0.0;
  const auto n = curve.points.size();
  for (std::size_t k = 0; k < n; ++k) {
    total += std::arg((vertex(curve, k + 1) - point) / (vertex(curve, k) - point));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

bool is_simple(const ProfileCurve& curve) {
  const auto n = curve.points.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (segments_intersect(vertex(curve, i), vertex(curve, i + 1), vertex(curve, j), vertex(curve, j + 1))) {
        return false;
      }
    }
  }
  return true;
}

bool is_univalent_profile(const ProfileCurve& curve) {
  return winding_number(curve, {0.0, 0.0}) == 1 && is_simple(curve);
}

bool encloses(const ProfileCurve& outer, const ProfileCurve& inner) {
  for (std::size_t k = 0; k < inner.points.size(); ++k) {
    if (winding_number(outer, vertex(inner, k)) != 1) return false;
  }
  return !polygons_cross(outer, inner);
}

}  // namespace ovaloid
