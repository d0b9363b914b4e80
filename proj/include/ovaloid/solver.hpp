#pragma once

// The residue constraint F(a, b) = Res(g f' : b) = 0, its rescaling
// G(delta, b) = b^3 F(sqrt(delta), b) that stays continuous at b = 0, and the
// steps that turn a prevertex b into a calibrated ovaloid: solve for a, scale
// C so that f(b) = epsilon, and evaluate the point-mass weight A.

#include <string>
#include <vector>

#include "ovaloid/schwarz.hpp"

namespace ovaloid {

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kDefaultBMax = 0.6;
inline constexpr double kHardBMax = 0.9;

struct SolveReport {
  OvaloidParams params;     // solved a, calibrated C
  double A = 0.0;           // weight of each focus in the quadrature identity
  double residual_F = 0.0;  // |F(a, b)| with C = 1
  double residual_fb = 0.0; // |f(b) - epsilon|
  int iterations = 0;
  bool ball_limit = false;  // b = 0: the map is C * identity
};

/// F(a, b) for scale C (F is linear in C). Evaluated as one contour integral
/// of [H_zeta/(w-b)^2 + 2H/(w-b)^3] sqrt_g(w); the imaginary part must vanish
/// to 1e-11 and is then dropped.
double residue_functional_F(double a, double b, const ContourPolicy& contour = {}, double C = 1.0);

/// G(delta, b) = b^3 F(sqrt(delta), b), with the b^3 folded into the kernel
/// so that b = 0 is an ordinary evaluation.
double rescaled_G(double delta, double b, const ContourPolicy& contour = {});

struct RootResult {
  double a = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Root a of F(., b) in (0, 1). Brackets around a = b (half-width 2 K b^3,
/// K = 10), widens until F changes sign, then refines with TOMS 748.
/// Throws SolverError with the F-trace if no sign change is found.
RootResult solve_a_for_b(double b, const ContourPolicy& contour = {}, double tol = kDefaultRootTolerance,
                         double C = 1.0);

/// C = epsilon / f_1(b), where f_1 is the map with C = 1. At a = b = 0 the
/// map is the identity and C = epsilon by convention (ball of radius epsilon).
double calibrate_C(double a, double b, double epsilon, const ContourPolicy& contour = {});

/// A = (1/2) C^2 H(b,a,b) f'(b)^2, with f' taken from the scaled map. A
/// scales as C^4. At b = 0 returns the ball value C^4 / 4.
double weight_A(const OvaloidParams& p, const ContourPolicy& contour = {});

/// Solve, calibrate and weigh one member of the confocal family.
/// b = 0 produces the ball limit.
SolveReport solve_ovaloid(double b, double epsilon = 1.0, const ContourPolicy& contour = {},
                          double tol = kDefaultRootTolerance);

struct DerivativeEstimate {
  std::string name;
  double estimate = 0.0;
  double target = 0.0;
  double tolerance = 0.0;

  double error() const;
  bool within_tolerance() const { return error() <= tolerance; }
};

/// Finite-difference estimates of G and its first and second partials at
/// the origin, Richardson-extrapolated from delta-steps 1e-3/1e-4 and
/// b-steps 1e-2/5e-3 (one-sided, since G is only defined for delta, b >= 0).
std::vector<DerivativeEstimate> origin_derivative_suite(const ContourPolicy& contour = {});

struct PlaneFit {
  double alpha = 0.0;  // coefficient of delta
  double beta = 0.0;   // coefficient of b^2
  double max_residual = 0.0;
};

/// Least-squares fit G(delta, b) ~ alpha delta + beta b^2 on a 5x5 grid
/// delta in [0, 1e-2], b in [0, 5e-2].
PlaneFit fit_G_plane(const ContourPolicy& contour = {});

}  // namespace ovaloid
