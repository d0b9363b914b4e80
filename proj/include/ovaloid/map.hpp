#pragma once

// The normalized conformal map f : D -> D_p (f(0) = 0, f'(0) > 0), obtained
// as the Cauchy transform of sqrt(g) over a circle slightly outside |w| = 1.

#include <cstddef>
#include <vector>

#include "ovaloid/contour.hpp"
#include "ovaloid/schwarz.hpp"
#include "ovaloid/series.hpp"

namespace ovaloid {

/// Samples sqrt_g once on the contour and answers Cauchy-transform queries
/// against those samples.
class CauchyEvaluator {
 public:
  CauchyEvaluator(const OvaloidParams& p, const ContourSpec& spec);

  /// f(zeta) for |zeta| < radius.
  Complex value(Complex zeta) const;
  /// order! / (2 pi i) * contour integral of sqrt_g(w) / (w - zeta)^(order+1).
  Complex derivative(Complex zeta, int order) const;

  const ContourSamples& samples() const { return samples_; }

 private:
  void check_zeta(Complex zeta) const;

  ContourSamples samples_;
};

Complex cauchy_transform(const OvaloidParams& p, const ContourSpec& spec, Complex zeta);

/// First or second derivative of f at zeta.
Complex f_derivative(const OvaloidParams& p, const ContourSpec& spec, Complex zeta, int order);

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr double kSeriesTolerance = 1e-12;

/// Taylor coefficients of f from the FFT of sqrt_g on the contour. The order
/// starts at `order` and doubles until the tail bound is below `tolerance`
/// or reaches node_count/4.
TaylorSeries taylor_series(const OvaloidParams& p, const ContourSpec& spec,
                           std::size_t order = kDefaultSeriesOrder, double tolerance = kSeriesTolerance);

struct ProfilePoint {
  double theta = 0.0;
  double X = 0.0;
  double Y = 0.0;
};

/// Boundary of D_p: points f(exp(i theta_k)), theta_k = 2 pi k / n.
struct ProfileCurve {
  std::vector<ProfilePoint> points;
  OvaloidParams params;
};

ProfileCurve profile_curve(const OvaloidParams& p, const ContourSpec& spec, std::size_t n_points);

/// max |X| over the sampled boundary.
double x_extent(const ProfileCurve& curve);

/// Winding number of the closed polygon about `point`.
int winding_number(const ProfileCurve& curve, Complex point);

/// True when no two non-adjacent polygon edges intersect.
bool is_simple(const ProfileCurve& curve);

/// Simple polygon winding once around the origin.
bool is_univalent_profile(const ProfileCurve& curve);

/// Every vertex of `inner` lies inside `outer` and the two polygons do not cross.
bool encloses(const ProfileCurve& outer, const ProfileCurve& inner);

}  // namespace ovaloid
