#include "ovaloid/verify.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ovaloid {

namespace {

struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [0, 1]; w = 2 / ((1 - x^2) P_n'(x)^2) on [-1, 1], halved.
RadialRule gauss_legendre_unit(std::size_t n) {
  const int order = static_cast<int>(n);
  RadialRule rule;
  for (const double x : boost::math::legendre_p_zeros<double>(order)) {
    const double dp = boost::math::legendre_p_prime(order, x);
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes.push_back(0.5 * (1.0 + x));
    rule.weights.push_back(w);
    if (x != 0.0) {
      rule.nodes.push_back(0.5 * (1.0 - x));
      rule.weights.push_back(w);
    }
  }
  return rule;
}

// f and f' in one Horner pass.
void eval_with_derivative(const TaylorSeries& f, Complex z, Complex& value, Complex& deriv) {
  value = 0.0;
  deriv = 0.0;
  const auto& c = f.coefficients;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

}  // namespace

PullbackQuadrature::PullbackQuadrature(const TaylorSeries& f, QuadratureGrid grid) : grid_(grid) {
  if (grid.n_radial == 0 || grid.n_angular < 4) throw DomainError("quadrature grid too small");
  const auto rule = gauss_legendre_unit(grid.n_radial);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(grid.n_angular);
  std::vector<Complex> ring(grid.n_angular);
  for (std::size_t j = 0; j < grid.n_angular; ++j) ring[j] = std::polar(1.0, dtheta * static_cast<double>(j));

  const std::size_t total = rule.nodes.size() * grid.n_angular;
  x_.reserve(total);
  y_.reserve(total);
  weight_.reserve(total);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    const double w_rho = 2.0 * std::numbers::pi * rule.weights[i] * rho * dtheta;
    for (std::size_t j = 0; j < grid.n_angular; ++j) {
      Complex z, dz;
      eval_with_derivative(f, rho * ring[j], z, dz);
      x_.push_back(z.real());
      y_.push_back(z.imag());
      weight_.push_back(w_rho * z.imag() * z.imag() * std::norm(dz));
    }
  }
}

double PullbackQuadrature::integrate(const ReducedIntegrand& phi) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < x_.size(); ++k) sum += phi(x_[k], y_[k]) * weight_[k];
  return sum;
}

namespace {

// Empty when u is harmonic on the body; otherwise the reason it is not.
std::string non_harmonic_reason(const HarmonicTestFunction& t, double extent) {
  if (t.kind != HarmonicKind::newton_kernel || std::abs(t.p1) > extent) return {};
  std::ostringstream msg;
  msg << "newton_kernel pole p1 = " << t.p1 << " lies inside the body (axis extent " << extent
      << "); u is not harmonic on Omega";
  return msg.str();
}

}  // namespace

std::string HarmonicTestFunction::name() const {
  switch (kind) {
    case HarmonicKind::constant: return "constant";
    case HarmonicKind::linear_x1: return "linear_x1";
    case HarmonicKind::quadratic: return "quadratic";
    case HarmonicKind::cubic: return "cubic";
    case HarmonicKind::newton_kernel: {
      std::ostringstream s;
      s << "newton_kernel(p1=" << p1 << ")";
      return s.str();
    }
  }
  return "unknown";
}

double HarmonicTestFunction::value(const std::array<double, 4>& x) const {
  const double r2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  switch (kind) {
    case HarmonicKind::constant: return 1.0;
    case HarmonicKind::linear_x1: return x[0];
    case HarmonicKind::quadratic: return x[0] * x[0] - r2 / 3.0;
    case HarmonicKind::cubic: return x[0] * x[0] * x[0] - x[0] * r2;
    case HarmonicKind::newton_kernel: {
      const double d = x[0] - p1;
      return 1.0 / (d * d + r2);
    }
  }
  return 0.0;
}

ReducedIntegrand reduce_harmonic(const HarmonicTestFunction& t) {
  switch (t.kind) {
    case HarmonicKind::constant: return [](double, double) { return 1.0; };
    case HarmonicKind::linear_x1: return [](double X, double) { return X; };
    case HarmonicKind::quadratic: return [](double X, double Y) { return X * X - Y * Y / 3.0; };
    case HarmonicKind::cubic: return [](double X, double Y) { return X * X * X - X * Y * Y; };
    case HarmonicKind::newton_kernel: {
      const double p1 = t.p1;
      return [p1](double X, double Y) { return 1.0 / ((X - p1) * (X - p1) + Y * Y); };
    }
  }
  return [](double, double) { return 0.0; };
}

double boundary_x_extent(const TaylorSeries& f, std::size_t samples) {
  double m = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    m = std::max(m, std::abs(f(std::polar(1.0, theta)).real()));
  }
  return m;
}

double volume_integral(const OvaloidParams& p, const TaylorSeries& f, const HarmonicTestFunction& t,
                       QuadratureGrid grid) {
  p.validate();
  if (auto reason = non_harmonic_reason(t, boundary_x_extent(f)); !reason.empty()) throw DomainError(reason);
  return PullbackQuadrature(f, grid).integrate(reduce_harmonic(t));
}

double absolute_volume_integral(const TaylorSeries& f, const HarmonicTestFunction& t, QuadratureGrid grid) {
  const auto phi = reduce_harmonic(t);
  return PullbackQuadrature(f, grid).integrate([&phi](double X, double Y) { return std::abs(phi(X, Y)); });
}

double identity_tolerance(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::constant:
    case HarmonicKind::quadratic: return 1e-6;
    case HarmonicKind::newton_kernel: return 1e-5;
    case HarmonicKind::linear_x1:
    case HarmonicKind::cubic: return 1e-8;
  }
  return 0.0;
}

bool VerificationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
}

VerificationReport quadrature_identity_check(const SolveReport& report, const TaylorSeries& f,
                                             std::span<const HarmonicTestFunction> tests, QuadratureGrid grid) {
  const auto& p = report.params;
  VerificationReport out;
  out.grid = grid;
  out.refined_grid = grid.doubled();
  out.x_extent = boundary_x_extent(f);

  const PullbackQuadrature base(f, grid);
  const PullbackQuadrature refined(f, out.refined_grid);
  for (const auto& t : tests) {
    IdentityResult r;
    r.test = t;
    r.tolerance = identity_tolerance(t.kind);
    r.rhs = std::numbers::pi * std::numbers::pi * report.A *
            (t.value({-p.epsilon, 0.0, 0.0, 0.0}) + t.value({p.epsilon, 0.0, 0.0, 0.0}));
    r.rejected = non_harmonic_reason(t, out.x_extent);
    if (!r.rejected.empty()) {
      out.results.push_back(r);
      continue;
    }
    const auto phi = reduce_harmonic(t);
    r.lhs = base.integrate(phi);
    r.lhs_refined = refined.integrate(phi);
    r.scale = base.integrate([&phi](double X, double Y) { return std::abs(phi(X, Y)); });
    const double denom = std::max(std::abs(r.rhs), r.scale);
    r.rel_error = std::abs(r.lhs - r.rhs) / denom;
    r.rel_error_refined = std::abs(r.lhs_refined - r.rhs) / denom;
    out.results.push_back(r);
  }
  return out;
}

std::vector<HarmonicTestFunction> standard_test_functions(double p1) {
  return {HarmonicTestFunction::constant(), HarmonicTestFunction::linear_x1(), HarmonicTestFunction::quadratic(),
          HarmonicTestFunction::cubic(), HarmonicTestFunction::newton_kernel(p1)};
}

}  // namespace ovaloid
