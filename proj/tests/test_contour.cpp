#include <doctest.h>

#include <cmath>
#include <numbers>

#include <ovaloid/contour.hpp>
#include <ovaloid/errors.hpp>
#include <ovaloid/schwarz.hpp>

using namespace ovaloid;

TEST_SUITE("contour") {

TEST_CASE("identity samples are roots of unity") {
  const auto s = sample_contour({1.0, 8}, [](Complex w) { return w; });
  REQUIRE(s.values.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const Complex expected = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / 8.0);
    CHECK(std::abs(s.values[k] - expected) < 1e-15);
    CHECK(std::abs(std::pow(s.values[k], 8) - 1.0) < 1e-13);
  }
}

TEST_CASE("w^2 on radius 2 with four nodes") {
  const auto s = sample_contour({2.0, 8}, [](Complex w) { return w * w; });
  // every other node of N = 8 reproduces the N = 4 pattern
  const double expected[] = {4, -4, 4, -4};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(s.values[2 * k] - expected[k]) < 1e-14);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(ContourSpec({1.0, 12}).validate(), DomainError);
  CHECK_THROWS_AS(ContourSpec({1.0, 4}).validate(), DomainError);
  CHECK_THROWS_AS(ContourSpec({0.0, 16}).validate(), DomainError);
  CHECK_NOTHROW(ContourSpec({0.5, 16}).validate());
}

TEST_CASE("failing evaluation names node and w") {
  try {
    sample_contour({1.0, 8}, [](Complex w) {
      if (w.imag() > 0.9) throw std::runtime_error("boom");
      return w;
    });
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find("node 2") != std::string::npos);
    CHECK(what.find("boom") != std::string::npos);
  }
  CHECK_THROWS_AS(sample_contour({1.0, 8}, [](Complex) { return Complex(NAN, 0); }), DomainError);
}

TEST_CASE("contour integral residues") {
  CHECK(std::abs(contour_integral(sample_contour({1.0, 64}, [](Complex w) { return 1.0 / w; })) - 1.0) < 1e-14);
  CHECK(std::abs(contour_integral(sample_contour({3.0, 64}, [](Complex) { return Complex(1.0); }))) < 1e-14);
  const auto s = sample_contour({1.0, 64}, [](Complex w) { return (w * w - 1.0) * w / std::pow(w, 4); });
  CHECK(std::abs(contour_integral(s) - 1.0) < 1e-12);
}

TEST_CASE("analytic integrands integrate to zero") {
  for (std::size_t n : {64u, 128u, 512u}) {
    const auto s = sample_contour({1.2, n}, [](Complex w) { return std::exp(w) / (w - 3.0) + w * w * w; });
    CHECK(std::abs(contour_integral(s)) < 1e-12);
  }
}

TEST_CASE("node doubling converges for the map integrand") {
  const OvaloidParams p{0.3, 0.3, 1.0, 1.0};
  const double r = auto_radius(p.a, p.b);
  const Complex zeta(0.4, 0.3);
  auto integral = [&](std::size_t n) {
    return contour_integral(sample_contour({r, n}, [&](Complex w) { return sqrt_g(p, w) / (w - zeta); }));
  };
  CHECK(std::abs(integral(512) - integral(256)) < 1e-10);
}

TEST_CASE("laurent coefficients of simple functions") {
  const auto mono = laurent_coefficients(sample_contour({1.0, 64}, [](Complex w) { return w * w; }), -8, 8);
  for (int n = -8; n <= 8; ++n) {
    const double expected = n == 2 ? 1.0 : 0.0;
    CHECK(std::abs(mono[n + 8] - expected) < 1e-14);
  }
  const auto two = laurent_coefficients(sample_contour({1.3, 64}, [](Complex w) { return 1.0 / w + 3.0 * w; }), -2, 2);
  CHECK(std::abs(two[1] - 1.0) < 1e-13);
  CHECK(std::abs(two[3] - 3.0) < 1e-13);
  CHECK(std::abs(two[0]) < 1e-13);
  CHECK(std::abs(two[2]) < 1e-13);
  CHECK(std::abs(two[4]) < 1e-13);
}

TEST_CASE("sqrt g at the identity parameters") {
  const OvaloidParams p{0.0, 0.0, 2.5, 1.0};
  const auto c = laurent_coefficients(sample_contour({1.05, 256}, [&](Complex w) { return sqrt_g(p, w); }), -1, 1);
  CHECK(std::abs(c[0] + 2.5) < 1e-13);
  CHECK(std::abs(c[1]) < 1e-13);
  CHECK(std::abs(c[2] - 2.5) < 1e-13);
}

TEST_CASE("sqrt g samples are finite on a radius-1.05 contour") {
  const OvaloidParams p{0.3, 0.3, 1.0, 1.0};
  const auto s = sample_contour({1.05, 256}, [&](Complex w) { return sqrt_g(p, w); });
  // independent dense check: squares match g and no sample is enormous
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    const Complex w = s.spec.node(k);
    const Complex g = g_eval(p, w);
    CHECK(std::abs(s.values[k] * s.values[k] - g) <= 1e-12 * std::max(1.0, std::abs(g)));
  }
}

TEST_CASE("series round trip reproduces samples") {
  auto fn = [](Complex w) { return std::exp(w) + 0.5 / (w - 0.2); };
  const ContourSpec spec{1.0, 128};
  const auto s = sample_contour(spec, fn);
  const auto c = laurent_coefficients(s, -63, 64);
  for (std::size_t k = 0; k < spec.node_count; k += 7) {
    const Complex w = spec.node(k);
    Complex sum = 0.0;
    for (int n = -63; n <= 64; ++n) sum += c[n + 63] * std::pow(w, n);
    CHECK(std::abs(sum - fn(w)) < 1e-10);
  }
}

}
