#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <ovaloid/errors.hpp>
#include <ovaloid/map.hpp>
#include <ovaloid/solver.hpp>
#include <ovaloid/verify.hpp>

using namespace ovaloid;

namespace {

constexpr double kPi = std::numbers::pi;

TaylorSeries series_for(const OvaloidParams& p) { return taylor_series(p, ContourPolicy{}.resolve(p)); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("test functions are harmonic in R^4") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const double h = 1e-3;
  for (const auto& t : standard_test_functions(3.0)) {
    for (int trial = 0; trial < 20; ++trial) {
      std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
      double lap = 0.0;
      for (int i = 0; i < 4; ++i) {
        auto xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        lap += (t.value(xp) - 2 * t.value(x) + t.value(xm)) / (h * h);
      }
      CHECK_MESSAGE(std::abs(lap) < 1e-4, t.name() << " at trial " << trial);
    }
  }
  CHECK(HarmonicTestFunction::newton_kernel(3).value({1, 0, 0, 0}) == doctest::Approx(0.25));
}

TEST_CASE("reduced integrands match Monte Carlo sphere averages") {
  // phi(X, Y) is the mean of u over the 2-sphere of radius Y in (x2, x3, x4).
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> n(0.0, 1.0);
  const double X = 0.7, Y = 1.3;
  const std::size_t samples = 1'000'000;
  const auto tests = standard_test_functions(3.0);
  std::vector<double> sums(tests.size(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    double v[3] = {n(rng), n(rng), n(rng)};
    const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const std::array<double, 4> x{X, Y * v[0] / r, Y * v[1] / r, Y * v[2] / r};
    for (std::size_t i = 0; i < tests.size(); ++i) sums[i] += tests[i].value(x);
  }
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const double mc = sums[i] / double(samples);
    const double closed = reduce_harmonic(tests[i])(X, Y);
    CHECK_MESSAGE(std::abs(mc - closed) < 1e-3 * std::max(1.0, std::abs(closed)), tests[i].name());
  }
  CHECK(reduce_harmonic(HarmonicTestFunction::quadratic())(X, Y) == doctest::Approx(X * X - Y * Y / 3));
  CHECK(reduce_harmonic(HarmonicTestFunction::newton_kernel(3))(X, Y) ==
        doctest::Approx(1.0 / ((X - 3) * (X - 3) + Y * Y)));
}

TEST_CASE("unit ball volume") {
  const TaylorSeries identity{{0.0, 1.0}};
  const OvaloidParams p{0, 0, 1, 1};
  CHECK(volume_integral(p, identity, HarmonicTestFunction::constant()) ==
        doctest::Approx(kPi * kPi / 2).epsilon(1e-10));
  CHECK(std::abs(volume_integral(p, identity, HarmonicTestFunction::linear_x1())) < 1e-10);
}

TEST_CASE("volume equals 2 pi^2 A") {
  for (double b : {0.1, 0.3, 0.5, 0.6}) {
    const auto r = solve_ovaloid(b);
    const auto f = series_for(r.params);
    const double v = volume_integral(r.params, f, HarmonicTestFunction::constant(), {192, 1024});
    CHECK_MESSAGE(std::abs(v - 2 * kPi * kPi * r.A) <= 1e-6 * v, "b = " << b);
    const double lin = volume_integral(r.params, f, HarmonicTestFunction::linear_x1());
    CHECK(std::abs(lin) <= 1e-10 * v);
  }
}

TEST_CASE("volume tends to the unit ball with C = 1") {
  const double b = 1e-3;
  const OvaloidParams p{solve_a_for_b(b).a, b, 1.0, 1.0};
  const double v = volume_integral(p, series_for(p), HarmonicTestFunction::constant());
  CHECK(std::abs(v - kPi * kPi / 2) <= 1e-3 * kPi * kPi / 2);
}

TEST_CASE("quadrature identity at b = 0.3") {
  const auto r = solve_ovaloid(0.3);
  const auto f = series_for(r.params);
  // the b = 0.3 body reaches past x1 = 3, so the pole moves outward
  const double p1 = 1.5 * boundary_x_extent(f);
  const auto tests = standard_test_functions(p1);
  const auto report = quadrature_identity_check(r, f, tests, {192, 2048});
  REQUIRE(report.results.size() == tests.size());
  for (const auto& res : report.results) {
    CHECK_MESSAGE(res.passed(), res.test.name() << " rel_error " << res.rel_error);
    CHECK(res.rel_error_refined <= std::max(res.rel_error, 1e-8));
  }
  const auto& newton = report.results.back();
  CHECK(newton.rhs == doctest::Approx(kPi * kPi * r.A * (1 / ((p1 - 1) * (p1 - 1)) + 1 / ((p1 + 1) * (p1 + 1)))).epsilon(1e-14));
  CHECK(report.results[0].rhs == doctest::Approx(2 * kPi * kPi * r.A).epsilon(1e-14));
}

TEST_CASE("newton kernel with the pole inside the body is rejected") {
  const auto r = solve_ovaloid(0.2);
  const auto f = series_for(r.params);
  CHECK(boundary_x_extent(f) > 3.0);
  CHECK_THROWS_AS(volume_integral(r.params, f, HarmonicTestFunction::newton_kernel(3.0)), DomainError);
  const std::vector<HarmonicTestFunction> tests{HarmonicTestFunction::newton_kernel(3.0)};
  const auto report = quadrature_identity_check(r, f, tests);
  CHECK_FALSE(report.results[0].rejected.empty());
  CHECK_FALSE(report.all_passed());
}

TEST_CASE("residuals shrink under grid doubling") {
  const auto r = solve_ovaloid(0.4);
  const auto f = series_for(r.params);
  const std::vector<HarmonicTestFunction> tests{HarmonicTestFunction::newton_kernel(3.0)};
  const auto report = quadrature_identity_check(r, f, tests, {96, 256});
  CHECK(report.results[0].rel_error_refined < report.results[0].rel_error);
  CHECK(report.refined_grid.n_angular == 512);
  CHECK(report.results[0].rhs == doctest::Approx(kPi * kPi * r.A * (0.25 + 1.0 / 16)).epsilon(1e-14));
}

}
