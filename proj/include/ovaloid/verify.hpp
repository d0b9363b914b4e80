#pragma once

// Checks the four-dimensional quadrature identity
//   integral over Omega of u dV = pi^2 A (u(-e,0,0,0) + u(e,0,0,0))
// for harmonic test functions u. Omega is the body of revolution about the
// x1-axis generated by D_p, so with Y = sqrt(x2^2 + x3^2 + x4^2)
//   integral of u dV = 2 pi * integral over D_p of phi(X, Y) Y^2 dX dY,
// phi being the average of u over the 2-sphere of radius Y. The area integral
// is pulled back to the unit disk through f.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ovaloid/schwarz.hpp"
#include "ovaloid/series.hpp"
#include "ovaloid/solver.hpp"

namespace ovaloid {

enum class HarmonicKind { constant, linear_x1, quadratic, cubic, newton_kernel };

struct HarmonicTestFunction {
  HarmonicKind kind = HarmonicKind::constant;
  double p1 = 3.0;  // pole on the x1-axis, newton_kernel only

  static HarmonicTestFunction constant() { return {HarmonicKind::constant}; }
  static HarmonicTestFunction linear_x1() { return {HarmonicKind::linear_x1}; }
  static HarmonicTestFunction quadratic() { return {HarmonicKind::quadratic}; }
  static HarmonicTestFunction cubic() { return {HarmonicKind::cubic}; }
  static HarmonicTestFunction newton_kernel(double p1 = 3.0) { return {HarmonicKind::newton_kernel, p1}; }

  std::string name() const;

  /// u(x) in R^4.
  double value(const std::array<double, 4>& x) const;
};

using ReducedIntegrand = std::function<double(double X, double Y)>;

/// phi(X, Y): 1, X, X^2 - Y^2/3, X^3 - X Y^2, 1/((X - p1)^2 + Y^2).
ReducedIntegrand reduce_harmonic(const HarmonicTestFunction& t);

struct QuadratureGrid {
  std::size_t n_radial = 96;
  std::size_t n_angular = 256;

  QuadratureGrid doubled() const { return {2 * n_radial, 2 * n_angular}; }
};

/// Pullback of the area measure 2 pi Y^2 dX dY to the unit disk, tabulated
/// once per (f, grid): nodes (X_k, Y_k) and weights so that
/// integrate(phi) = sum_k phi(X_k, Y_k) w_k in fixed order.
class PullbackQuadrature {
 public:
  PullbackQuadrature(const TaylorSeries& f, QuadratureGrid grid);

  double integrate(const ReducedIntegrand& phi) const;
  std::size_t size() const { return x_.size(); }
  QuadratureGrid grid() const { return grid_; }

 private:
  QuadratureGrid grid_;
  std::vector<double> x_, y_, weight_;
};

/// max |Re f| over the boundary, sampled at `samples` points.
double boundary_x_extent(const TaylorSeries& f, std::size_t samples = 4096);

/// 2 pi * int_0^1 int_0^{2 pi} phi(f) (Im f)^2 |f'|^2 rho d theta d rho:
/// Gauss-Legendre in rho, trapezoid in theta. Rejects a newton_kernel whose
/// pole lies on the body's axis segment.
double volume_integral(const OvaloidParams& p, const TaylorSeries& f, const HarmonicTestFunction& t,
                       QuadratureGrid grid = {});

/// Same quadrature applied to |phi|; the natural magnitude of the test integral.
double absolute_volume_integral(const TaylorSeries& f, const HarmonicTestFunction& t, QuadratureGrid grid = {});

/// Acceptance threshold on the relative residual for each kind.
double identity_tolerance(HarmonicKind kind);

struct IdentityResult {
  HarmonicTestFunction test;
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;  // integral of |u| over Omega
  double rel_error = 0.0;
  double lhs_refined = 0.0;
  double rel_error_refined = 0.0;
  double tolerance = 0.0;
  std::string rejected;  // nonempty when u is not harmonic on Omega

  bool passed() const { return rejected.empty() && rel_error <= tolerance; }
};

struct VerificationReport {
  QuadratureGrid grid;
  QuadratureGrid refined_grid;
  double x_extent = 0.0;
  std::vector<IdentityResult> results;

  bool all_passed() const;
};

/// lhs by volume_integral on `grid` and on grid.doubled(); rhs from the
/// point evaluations at (+-epsilon, 0, 0, 0);
/// rel_error = |lhs - rhs| / max(|rhs|, scale).
VerificationReport quadrature_identity_check(const SolveReport& report, const TaylorSeries& f,
                                             std::span<const HarmonicTestFunction> tests,
                                             QuadratureGrid grid = {});

std::vector<HarmonicTestFunction> standard_test_functions(double p1 = 3.0);

}  // namespace ovaloid
