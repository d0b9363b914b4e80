#pragma once

// The degree-8 rational function g(w) = (f(w) - f(1/w))^2, its square root
// on the working annulus, and the residue kernel H(zeta) = (zeta - b)^2 g(zeta)
// that turns "no simple pole of (S(z) - z)^2 at the foci" into a contour
// integral.

#include <cstddef>
#include <optional>

#include "ovaloid/contour.hpp"
#include "ovaloid/series.hpp"

namespace ovaloid {

/// One ovaloid candidate. a: zeros of g at +-ia, +-i/a. b: prevertices of the
/// foci (double poles of g at +-b, +-1/b). C: overall scale (g carries C^2).
/// epsilon: focus location in the z-plane.
struct OvaloidParams {
  double a = 0.0;
  double b = 0.0;
  double C = 1.0;
  double epsilon = 1.0;

  /// 0 <= a < 1, 0 <= b < 1, C > 0, epsilon > 0.
  void validate() const;
};

struct ResidueKernelData {
  double h_value = 0.0;            // H(b, a, b)
  double h_zeta_derivative = 0.0;  // dH/dzeta at zeta = b
};

inline constexpr double kPoleProximity = 1e-13;

/// C^2 (w^2-1)^2 (w^2+a^2)(1+a^2 w^2) / ((w^2-b^2)^2 (1-b^2 w^2)^2)
Complex g_eval(const OvaloidParams& p, Complex w);

/// Single-valued square root of g on a < |w| < 1/a:
///   C w (w^2-1) sqrt(1+a^2/w^2) sqrt(1+a^2 w^2) / ((w^2-b^2)(1-b^2 w^2)).
/// Both radicands stay in the disk |x - 1| < 1, so principal roots never
/// cross their cut there.
Complex sqrt_g(const OvaloidParams& p, Complex w);

/// H(b,a,b) and dH/dzeta(b,a,b) with C = 1. Requires 0 < b < 1.
ResidueKernelData residue_kernel(const OvaloidParams& p);

/// b^3 times residue_kernel, written so that it stays finite at b = 0.
ResidueKernelData scaled_residue_kernel(double a, double b);

/// Inner/outer radii of the annulus where sqrt_g is analytic.
double inner_singular_radius(double a, double b);
double outer_singular_radius(double a, double b);

/// Integration radius used when none is requested: the geometric mean of 1
/// and the outer singular radius, capped at 1.5. Balances the decay from
/// boundary points zeta on |zeta| = 1 against the outer singularities.
double auto_radius(double a, double b);

/// Throws DomainError unless the contour lies strictly inside the annulus
/// of analyticity of sqrt_g and outside the unit circle.
void require_admissible(const OvaloidParams& p, const ContourSpec& spec);

/// Node count plus an optional fixed radius; resolves to a concrete contour
/// for given (a, b).
struct ContourPolicy {
  std::size_t node_count = kDefaultNodeCount;
  std::optional<double> radius;

  ContourSpec resolve(double a, double b) const;
  ContourSpec resolve(const OvaloidParams& p) const { return resolve(p.a, p.b); }
};

/// S(f(w)) = f(1/w) = f(conj w) for |w| = 1: the Schwarz function at the
/// boundary point f(w).
Complex schwarz_on_circle(const TaylorSeries& f, Complex w);

/// (1/2) (S(z) - z)^2 - A/(z - e)^2 - A/(z + e)^2 at z = f(w), using
/// (S(z) - z)^2 = g(w) and e = f(b). Bounded near w = b exactly when the
/// foci carry point masses of weight A and no simple-pole part.
Complex schwarz_remainder(const OvaloidParams& p, const TaylorSeries& f, double A, Complex w);

}  // namespace ovaloid
