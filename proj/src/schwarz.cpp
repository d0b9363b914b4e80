#include "ovaloid/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ovaloid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_poles(const OvaloidParams& p, Complex w) {
  const double b = p.b;
  bool near = std::abs(w - b) < kPoleProximity || std::abs(w + b) < kPoleProximity;
  if (b > 0.0) {
    near = near || std::abs(w - 1.0 / b) < kPoleProximity || std::abs(w + 1.0 / b) < kPoleProximity;
  }
  if (near) {
    std::ostringstream msg;
    msg << "w = " << w << " is within " << kPoleProximity << " of a pole of g (b = " << b << ")";
    throw DomainError(msg.str());
  }
}

// Numerator of dH/dzeta(b,a,b); the denominator is 4b^11 + 8b^9 - 8b^5 - 4b^3.
double kernel_derivative_numerator(double a, double b) {
  const double a2 = a * a, a4 = a2 * a2;
  const double b2 = b * b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4;
  return a2 + b2 * (-a4 + 4.0 * a2 - 1.0) + 4.0 * b4 * (a4 - a2 + 1.0) + b6 * (a4 + 4.0 * a2 + 1.0) +
         3.0 * b8 * a2;
}

// Numerator of H(b,a,b) = (b^2+a^2)(1+a^2 b^2); the denominator is 4b^2 (1+b^2)^2.
double kernel_value_numerator(double a, double b) {
  const double a2 = a * a, b2 = b * b;
  return a2 + b2 * (a2 * a2 + 1.0) + b2 * b2 * a2;
}

}  // namespace

void OvaloidParams::validate() const {
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("parameter a must satisfy 0 <= a < 1");
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("parameter b must satisfy 0 <= b < 1");
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("scale C must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("focus epsilon must be positive");
}

Complex g_eval(const OvaloidParams& p, Complex w) {
  check_poles(p, w);
  const Complex w2 = w * w;
  const double a2 = p.a * p.a, b2 = p.b * p.b;
  const Complex u = w2 - 1.0;
  const Complex d = (w2 - b2) * (1.0 - b2 * w2);
  return p.C * p.C * u * u * (w2 + a2) * (1.0 + a2 * w2) / (d * d);
}

Complex sqrt_g(const OvaloidParams& p, Complex w) {
  const double m = std::abs(w);
  if (!(m > p.a) || !(m * p.a < 1.0)) {
    std::ostringstream msg;
    msg << "sqrt_g: |w| = " << m << " outside the annulus (" << p.a << ", "
        << (p.a > 0.0 ? 1.0 / p.a : kInf) << ")";
    throw DomainError(msg.str());
  }
  check_poles(p, w);
  const Complex w2 = w * w;
  const double a2 = p.a * p.a, b2 = p.b * p.b;
  const Complex root = std::sqrt(1.0 + a2 / w2) * std::sqrt(1.0 + a2 * w2);
  return p.C * w * (w2 - 1.0) * root / ((w2 - b2) * (1.0 - b2 * w2));
}

ResidueKernelData residue_kernel(const OvaloidParams& p) {
  const double a = p.a, b = p.b;
  if (!(b > 0.0 && b < 1.0)) throw DomainError("residue_kernel requires 0 < b < 1");
  const double b2 = b * b, b3 = b2 * b, b5 = b3 * b2, b9 = b5 * b2 * b2, b11 = b9 * b2;
  ResidueKernelData k;
  k.h_value = kernel_value_numerator(a, b) / (4.0 * b2 * b2 * b2 + 8.0 * b2 * b2 + 4.0 * b2);
  k.h_zeta_derivative = kernel_derivative_numerator(a, b) / (4.0 * b11 + 8.0 * b9 - 8.0 * b5 - 4.0 * b3);
  return k;
}

ResidueKernelData scaled_residue_kernel(double a, double b) {
  const double b2 = b * b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4;
  ResidueKernelData k;
  k.h_value = b * kernel_value_numerator(a, b) / (4.0 * b4 + 8.0 * b2 + 4.0);
  k.h_zeta_derivative = kernel_derivative_numerator(a, b) / (4.0 * b8 + 8.0 * b6 - 8.0 * b2 - 4.0);
  return k;
}

double inner_singular_radius(double a, double b) { return std::max(a, b); }

double outer_singular_radius(double a, double b) {
  const double m = std::max(a, b);
  return m > 0.0 ? 1.0 / m : kInf;
}

double auto_radius(double a, double b) {
  return std::min(std::sqrt(outer_singular_radius(a, b)), 1.5);
}

void require_admissible(const OvaloidParams& p, const ContourSpec& spec) {
  spec.validate();
  const double r = spec.radius;
  const double inner = std::max(1.0, inner_singular_radius(p.a, p.b));
  const double outer = outer_singular_radius(p.a, p.b);
  if (!(r > inner * (1.0 + 1e-9)) || !(r < outer * (1.0 - 1e-9))) {
    std::ostringstream msg;
    msg << "contour radius " << r << " is not admissible: it must lie strictly between " << inner
        << " and " << outer << " for a = " << p.a << ", b = " << p.b;
    throw DomainError(msg.str());
  }
}

ContourSpec ContourPolicy::resolve(double a, double b) const {
  ContourSpec spec{radius.value_or(auto_radius(a, b)), node_count};
  spec.validate();
  return spec;
}

Complex schwarz_on_circle(const TaylorSeries& f, Complex w) { return f(std::conj(w)); }

Complex schwarz_remainder(const OvaloidParams& p, const TaylorSeries& f, double A, Complex w) {
  const Complex z = f(w);
  const Complex e = f(Complex{p.b, 0.0});
  const Complex zm = z - e, zp = z + e;
  return 0.5 * g_eval(p, w) - A / (zm * zm) - A / (zp * zp);
}

}  // namespace ovaloid
