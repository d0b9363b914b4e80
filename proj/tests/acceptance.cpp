// Acceptance criteria 1-9. One PASS/FAIL line per criterion; the exit status
// is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <ovaloid/map.hpp>
#include <ovaloid/solver.hpp>
#include <ovaloid/verify.hpp>

using namespace ovaloid;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> details;
  bool ok = true;

  void check(bool pass, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    details.push_back(std::string(pass ? "  ok   " : "  FAIL ") + buf);
    ok = ok && pass;
  }
};

ContourSpec contour_for(const OvaloidParams& p) { return ContourPolicy{}.resolve(p); }

template <class Fn>
Complex small_circle(Complex center, double rho, Fn&& h, std::size_t n = 256) {
  Complex sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex d = std::polar(rho, 2.0 * kPi * double(k) / double(n));
    sum += h(center + d) * d;
  }
  return sum / double(n);
}

Criterion identity_limit() {
  Criterion c{1, "identity limit: a = b = 0, C = 1 maps the circle to itself"};
  const OvaloidParams p{0, 0, 1, 1};
  const CauchyEvaluator f(p, contour_for(p));
  double worst = 0.0;
  for (int k = 0; k < 256; ++k) {
    const Complex w = std::polar(1.0, 2 * kPi * k / 256.0);
    worst = std::max(worst, std::abs(f.value(w) - w));
  }
  c.check(worst <= 1e-10, "max |f(e^it) - e^it| = %.3e (tol 1e-10)", worst);
  return c;
}

Criterion derivative_suite() {
  Criterion c{2, "derivatives of G at the origin"};
  for (const auto& d : origin_derivative_suite()) {
    c.check(d.within_tolerance(), "%-18s estimate % .10f target % .4f tol %.0e", d.name.c_str(), d.estimate, d.target,
            d.tolerance);
  }
  return c;
}

Criterion asymptotic_law() {
  Criterion c{3, "a^2 = b^2 + O(b^3)"};
  std::vector<double> ratios;
  for (double b : {0.1, 0.05, 0.025}) {
    const double a = solve_a_for_b(b).a;
    const double ratio = std::abs(a * a - b * b) / (b * b * b);
    ratios.push_back(ratio);
    c.check(ratio <= 10.0, "b = %.3f  a = %.15f  |a^2-b^2|/b^3 = %.6f (<= 10)", b, a, ratio);
  }
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    c.check(ratios[i] <= 1.2 * ratios[i - 1], "ratio %.6f after %.6f does not grow by more than 20%%", ratios[i],
            ratios[i - 1]);
  }
  return c;
}

Criterion weight_consistency() {
  Criterion c{4, "weight A: closed form vs focal contour residue"};
  for (double b : {0.1, 0.3, 0.5}) {
    const auto r = solve_ovaloid(b);
    const auto f = taylor_series(r.params, contour_for(r.params));
    const double rho = 0.5 * std::min(b, 1.0 - b);
    const Complex fb = f(b);
    const double oracle =
        0.5 * small_circle(b, rho, [&](Complex w) { return g_eval(r.params, w) * (f(w) - fb) * f.derivative(w); })
                  .real();
    const double rel = std::abs(r.A - oracle) / oracle;
    c.check(rel <= 1e-9, "b = %.1f  A = %.15g  residue = %.15g  rel %.2e (tol 1e-9)", b, r.A, oracle, rel);
  }
  return c;
}

Criterion ball_limit() {
  Criterion c{5, "ball limit with C = 1"};
  {
    const double b = 1e-2;
    const double A = weight_A({solve_a_for_b(b).a, b, 1.0, 1.0});
    c.check(std::abs(A - 0.25) <= 1e-3, "A(b = 1e-2) = %.10f (0.25 +- 1e-3)", A);
  }
  {
    const double b = 1e-3;
    const OvaloidParams p{solve_a_for_b(b).a, b, 1.0, 1.0};
    const double v = volume_integral(p, taylor_series(p, contour_for(p)), HarmonicTestFunction::constant());
    const double rel = std::abs(v - kPi * kPi / 2) / (kPi * kPi / 2);
    c.check(rel <= 1e-3, "volume(b = 1e-3) = %.12f vs pi^2/2, rel %.2e (tol 1e-3)", v, rel);
  }
  return c;
}

Criterion quadrature_identity() {
  Criterion c{6, "quadrature identity for b in {0.2, 0.4}, eps = 1, p1 = 3"};
  const auto tests = standard_test_functions(3.0);
  for (double b : {0.2, 0.4}) {
    const auto r = solve_ovaloid(b);
    const auto f = taylor_series(r.params, contour_for(r.params));
    const auto report = quadrature_identity_check(r, f, tests, {192, 2048});
    for (const auto& t : report.results) {
      const std::string name = t.test.name();
      if (!t.rejected.empty()) {
        c.check(false, "b = %.1f  %-20s %s", b, name.c_str(), t.rejected.c_str());
        continue;
      }
      c.check(t.passed(), "b = %.1f  %-20s lhs % .12e rhs % .12e rel %.2e (tol %.0e)", b, name.c_str(), t.lhs, t.rhs,
              t.rel_error, t.tolerance);
    }
  }
  return c;
}

Criterion residue_vanishing() {
  Criterion c{7, "Res(g f' : +-b) vanishes at the solved parameters"};
  for (double b : {0.2, 0.3, 0.5}) {
    const auto r = solve_ovaloid(b);
    for (const double C : {1.0, r.params.C}) {
      OvaloidParams p = r.params;
      p.C = C;
      const auto f = taylor_series(p, contour_for(p));
      const double rho = 0.5 * std::min(b, 1.0 - b);
      for (double center : {b, -b}) {
        const double res = std::abs(small_circle(center, rho, [&](Complex w) { return g_eval(p, w) * f.derivative(w); }));
        c.check(res <= 1e-10, "b = %.1f  C = %-10.6g at %+.1f: |Res| = %.2e (tol 1e-10)", b, C, center, res);
      }
    }
  }
  return c;
}

Criterion symmetry_convergence() {
  Criterion c{8, "symmetry, node doubling and radius invariance (b = 0.3)"};
  const auto r = solve_ovaloid(0.3);
  const auto& p = r.params;
  const CauchyEvaluator f(p, contour_for(p));
  const CauchyEvaluator f256(p, {contour_for(p).radius, 256});
  const CauchyEvaluator near(p, {1.2, 512});
  const CauchyEvaluator far(p, {1.6, 512});
  double conj_err = 0, odd_err = 0, node_err = 0, radius_err = 0;
  for (int k = 0; k < 256; ++k) {
    const Complex w = std::polar(1.0, 2 * kPi * (k + 0.37) / 256.0);
    const Complex fw = f.value(w);
    conj_err = std::max(conj_err, std::abs(f.value(std::conj(w)) - std::conj(fw)));
    odd_err = std::max(odd_err, std::abs(f.value(-w) + fw));
    node_err = std::max(node_err, std::abs(f256.value(w) - fw));
    radius_err = std::max(radius_err, std::abs(near.value(w) - far.value(w)));
  }
  c.check(conj_err <= 1e-11, "max |f(conj w) - conj f(w)| = %.2e (tol 1e-11)", conj_err);
  c.check(odd_err <= 1e-11, "max |f(-w) + f(w)| = %.2e (tol 1e-11)", odd_err);
  c.check(node_err <= 1e-10, "256 vs 512 nodes: max change %.2e (tol 1e-10)", node_err);
  c.check(radius_err <= 1e-10, "radius 1.2 vs 1.6: max change %.2e (tol 1e-10)", radius_err);
  return c;
}

Criterion confocal_family() {
  Criterion c{9, "confocal family b = 0.1 .. 0.6 sharing foci +-1"};
  std::vector<ProfileCurve> curves;
  for (int i = 1; i <= 6; ++i) {
    const double b = 0.1 * i;
    const auto r = solve_ovaloid(b);
    const auto spec = contour_for(r.params);
    const auto curve = profile_curve(r.params, spec, 512);
    const double focus = std::abs(cauchy_transform(r.params, spec, b) - 1.0);
    c.check(is_simple(curve) && winding_number(curve, 0.0) == 1 && x_extent(curve) > 1.0 && focus <= 1e-10,
            "b = %.1f  simple %d  winding %d  x-extent %.6f  |f(b) - 1| = %.1e", b, is_simple(curve),
            winding_number(curve, 0.0), x_extent(curve), focus);
    if (!curves.empty()) {
      c.check(encloses(curves.back(), curve), "b = %.1f curve lies inside b = %.1f curve", b, b - 0.1);
    }
    curves.push_back(curve);
  }
  return c;
}

}  // namespace

int main() {
  using Runner = Criterion (*)();
  const Runner runners[] = {identity_limit,      derivative_suite, asymptotic_law,
                            weight_consistency,  ball_limit,       quadrature_identity,
                            residue_vanishing,   symmetry_convergence, confocal_family};
  int failed = 0;
  for (const auto run : runners) {
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.details.push_back(std::string("  FAIL exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str());
    for (const auto& d : c.details) std::printf("%s\n", d.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
