#include "ovaloid/solver.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ovaloid/map.hpp"

namespace ovaloid {

namespace {

// (1/(2 pi i)) contour integral of [kz/(w-b)^2 + 2 kh/(w-b)^3] sqrt_g(w).
double kernel_integral(const OvaloidParams& p, const ResidueKernelData& k, const ContourSpec& spec,
                       const char* what) {
  require_admissible(p, spec);
  const auto samples = sample_contour(spec, [&](Complex w) {
    const Complex inv = 1.0 / (w - p.b);
    return (k.h_zeta_derivative * inv * inv + 2.0 * k.h_value * inv * inv * inv) * sqrt_g(p, w);
  });
  const Complex value = contour_integral(samples);
  if (std::abs(value.imag()) > 1e-11 * std::max(1.0, p.C)) {
    std::ostringstream msg;
    msg << what << "(a = " << p.a << ", b = " << p.b << ") has imaginary part " << value.imag()
        << "; expected a real value";
    throw DomainError(msg.str());
  }
  return value.real();
}

}  // namespace

double residue_functional_F(double a, double b, const ContourPolicy& contour, double C) {
  if (!(a > 0.0 && a < 1.0) || !(b > 0.0 && b < 1.0)) {
    throw DomainError("residue_functional_F requires 0 < a < 1 and 0 < b < 1");
  }
  const OvaloidParams p{a, b, C, 1.0};
  p.validate();
  return kernel_integral(p, residue_kernel(p), contour.resolve(a, b), "F");
}

double rescaled_G(double delta, double b, const ContourPolicy& contour) {
  if (!(delta >= 0.0) || !(b >= 0.0)) throw DomainError("rescaled_G requires delta >= 0 and b >= 0");
  const double a = std::sqrt(delta);
  const OvaloidParams p{a, b, 1.0, 1.0};
  p.validate();
  return kernel_integral(p, scaled_residue_kernel(a, b), contour.resolve(a, b), "G");
}

RootResult solve_a_for_b(double b, const ContourPolicy& contour, double tol, double C) {
  if (!(b > 0.0 && b <= kHardBMax)) {
    std::ostringstream msg;
    msg << "solve_a_for_b requires 0 < b <= " << kHardBMax << " (got " << b << ")";
    throw DomainError(msg.str());
  }
  if (!(tol > 0.0)) throw DomainError("solve_a_for_b requires tol > 0");

  constexpr double kBracketK = 10.0;
  constexpr double kLowest = 1e-6;
  // A fixed contour radius r must stay inside |w| < 1/a.
  const double highest = contour.radius ? std::min(0.999, (1.0 - 1e-6) / *contour.radius) : 0.999;
  constexpr int kMaxExpansions = 60;

  std::vector<std::pair<double, double>> trace;
  auto F = [&](double a) {
    const double v = residue_functional_F(a, b, contour, C);
    trace.emplace_back(a, v);
    return v;
  };

  double half = 2.0 * b * b * b * kBracketK;
  double lo = std::max(kLowest, b - half);
  double hi = std::min(highest, b + half);
  double flo = F(lo);
  double fhi = F(hi);
  int expansions = 0;
  while ((flo > 0.0) == (fhi > 0.0) && flo != 0.0 && fhi != 0.0) {
    if (++expansions > kMaxExpansions || (lo == kLowest && hi == highest)) {
      std::ostringstream msg;
      msg << "no sign change of F(a, " << b << ") on [" << lo << ", " << hi << "] after " << expansions - 1
          << " bracket expansions";
      throw SolverError(msg.str(), trace);
    }
    half *= 2.0;
    const double new_lo = std::max(kLowest, b - half);
    const double new_hi = std::min(highest, b + half);
    if (new_lo != lo) flo = F(lo = new_lo);
    if (new_hi != hi) fhi = F(hi = new_hi);
  }

  RootResult result;
  if (flo == 0.0 || fhi == 0.0) {
    result.a = flo == 0.0 ? lo : hi;
    result.residual = 0.0;
    result.iterations = static_cast<int>(trace.size());
    return result;
  }

  std::uintmax_t max_iter = 200;
  const auto [left, right] = boost::math::tools::toms748_solve(
      F, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  const double f_left = std::abs(residue_functional_F(left, b, contour, C));
  const double f_right = std::abs(residue_functional_F(right, b, contour, C));
  result.a = f_left <= f_right ? left : right;
  result.residual = std::min(f_left, f_right);
  result.iterations = static_cast<int>(trace.size());
  if (result.residual > tol) {
    std::ostringstream msg;
    msg << "root refinement for b = " << b << " stalled at |F| = " << result.residual << " > " << tol;
    throw SolverError(msg.str(), trace);
  }
  return result;
}

double calibrate_C(double a, double b, double epsilon, const ContourPolicy& contour) {
  if (!(epsilon > 0.0)) throw DomainError("calibrate_C requires epsilon > 0");
  if (b == 0.0) {
    if (a != 0.0) throw CalibrationError("calibrate_C: b = 0 requires a = 0 (ball limit)");
    return epsilon;
  }
  const OvaloidParams unit{a, b, 1.0, epsilon};
  const Complex fb = CauchyEvaluator(unit, contour.resolve(unit)).value(Complex{b, 0.0});
  if (std::abs(fb.imag()) > 1e-10 || !(fb.real() > 0.0)) {
    std::ostringstream msg;
    msg << "calibrate_C: f_1(b) = " << fb << " is not a positive real number";
    throw CalibrationError(msg.str());
  }
  return epsilon / fb.real();
}

double weight_A(const OvaloidParams& p, const ContourPolicy& contour) {
  p.validate();
  if (p.b == 0.0) {
    if (p.a != 0.0) throw DomainError("weight_A: b = 0 requires a = 0 (ball limit)");
    return std::pow(p.C, 4) / 4.0;
  }
  const auto k = residue_kernel(p);
  const Complex fp = CauchyEvaluator(p, contour.resolve(p)).derivative(Complex{p.b, 0.0}, 1);
  if (std::abs(fp.imag()) > 1e-10 * std::max(1.0, std::abs(fp))) {
    throw DomainError("weight_A: f'(b) is not real");
  }
  return 0.5 * p.C * p.C * k.h_value * fp.real() * fp.real();
}

SolveReport solve_ovaloid(double b, double epsilon, const ContourPolicy& contour, double tol) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  SolveReport report;
  if (b == 0.0) {
    report.params = {0.0, 0.0, calibrate_C(0.0, 0.0, epsilon, contour), epsilon};
    report.A = weight_A(report.params, contour);
    report.ball_limit = true;
    return report;
  }
  const auto root = solve_a_for_b(b, contour, tol);
  report.params = {root.a, b, calibrate_C(root.a, b, epsilon, contour), epsilon};
  report.A = weight_A(report.params, contour);
  report.residual_F = root.residual;
  report.iterations = root.iterations;
  const Complex fb = cauchy_transform(report.params, contour.resolve(report.params), Complex{b, 0.0});
  report.residual_fb = std::abs(fb - epsilon);
  return report;
}

double DerivativeEstimate::error() const { return std::abs(estimate - target); }

std::vector<DerivativeEstimate> origin_derivative_suite(const ContourPolicy& contour) {
  constexpr double h1 = 1e-3, h2 = 1e-4;  // delta steps
  constexpr double k1 = 1e-2, k2 = 5e-3;  // b steps
  auto G = [&](double d, double b) { return rescaled_G(d, b, contour); };
  const double g00 = G(0.0, 0.0);

  // Forward differences have O(step) error; one Richardson step removes it.
  auto richardson = [](double coarse, double fine, double ratio) { return (ratio * fine - coarse) / (ratio - 1.0); };

  auto d_delta = [&](double h) { return (G(h, 0.0) - g00) / h; };
  auto d_b = [&](double k) { return (G(0.0, k) - g00) / k; };
  auto d_bb = [&](double k) { return (G(0.0, 2.0 * k) - 2.0 * G(0.0, k) + g00) / (k * k); };
  auto d_dd = [&](double h) { return (G(2.0 * h, 0.0) - 2.0 * G(h, 0.0) + g00) / (h * h); };
  auto d_bd = [&](double h, double k) { return (G(h, k) - G(h, 0.0) - G(0.0, k) + g00) / (h * k); };

  // The mixed difference carries independent O(h) and O(k) errors.
  const double m11 = d_bd(h1, k1), m21 = d_bd(h2, k1), m22 = d_bd(h2, k2);
  const double slope_h = (m11 - m21) / (h1 - h2);
  const double slope_k = (m21 - m22) / (k1 - k2);
  const double mixed = m22 - slope_h * h2 - slope_k * k2;

  return {
      {"G(0,0)", g00, 0.0, 1e-12},
      {"dG/ddelta(0,0)", richardson(d_delta(h1), d_delta(h2), h1 / h2), -0.25, 1e-4},
      {"dG/db(0,0)", richardson(d_b(k1), d_b(k2), k1 / k2), 0.0, 1e-3},
      {"d2G/db2(0,0)", richardson(d_bb(k1), d_bb(k2), k1 / k2), 0.5, 1e-2},
      {"d2G/dbddelta(0,0)", mixed, 0.0, 1e-2},
      {"d2G/ddelta2(0,0)", richardson(d_dd(h1), d_dd(h2), h1 / h2), 0.0, 1e-2},
  };
}

PlaneFit fit_G_plane(const ContourPolicy& contour) {
  // Normal equations for G ~ alpha x + beta y with x = delta, y = b^2.
  double sxx = 0, sxy = 0, syy = 0, sxg = 0, syg = 0;
  std::vector<std::array<double, 3>> rows;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double delta = 2.5e-3 * i;
      const double b = 1.25e-2 * j;
      const double g = rescaled_G(delta, b, contour);
      const double x = delta, y = b * b;
      sxx += x * x;
      sxy += x * y;
      syy += y * y;
      sxg += x * g;
      syg += y * g;
      rows.push_back({x, y, g});
    }
  }
  const double det = sxx * syy - sxy * sxy;
  PlaneFit fit;
  fit.alpha = (sxg * syy - syg * sxy) / det;
  fit.beta = (syg * sxx - sxg * sxy) / det;
  for (const auto& [x, y, g] : rows) {
    fit.max_residual = std::max(fit.max_residual, std::abs(g - fit.alpha * x - fit.beta * y));
  }
  return fit;
}

}  // namespace ovaloid
