#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "bineq/circle_norms.hpp"
#include "bineq/errors.hpp"
#include "test_util.hpp"

using namespace bineq;
using testutil::close;

namespace {
constexpr double kPi = std::numbers::pi;
Polynomial P(std::vector<Complex> c) { return Polynomial(std::move(c)); }

void check_genuine(const Polynomial& p, const CircleProbe& pr) {
  CHECK(pr.witness_angle >= 0.0);
  CHECK(pr.witness_angle < 2.0 * kPi);
  CHECK(std::abs(std::abs(pr.witness()) - pr.radius) <= 1e-12 * pr.radius);
  CHECK(close(std::abs(eval(p, pr.witness())), pr.value, 1e-12));
  CHECK(pr.certified_error >= 0.0);
  CHECK(pr.value >= 0.0);
}
}  // namespace

TEST_CASE("max_modulus examples") {
  const Polynomial z3 = Polynomial::monomial(3);
  const auto a = max_modulus(z3, 2.0);
  CHECK(close(a.value, 8.0, 1e-14));
  check_genuine(z3, a);
  // constant modulus: the first grid sample wins the tie
  CHECK(a.witness_angle == 0.0);

  const Polynomial z1 = P({1.0, 1.0});
  const auto b = max_modulus(z1, 1.0);
  CHECK(close(b.value, 2.0, 1e-14));
  CHECK(std::abs(b.witness_angle) <= 1e-6);
  check_genuine(z1, b);

  const Polynomial z4 = P({1.0, 0.0, 0.0, 0.0, 1.0});
  const auto c = max_modulus(z4, 1.0);
  CHECK(close(c.value, 2.0, 1e-14));
  CHECK(c.witness_angle == 0.0);  // smallest of {0, pi/2, pi, 3pi/2}
  check_genuine(z4, c);
  CHECK(c.samples_used >= 4096);  // grid plus refinement evaluations
}

TEST_CASE("min_modulus examples") {
  for (int n = 1; n <= 8; ++n) {
    const Polynomial p = axpy(1.0, Polynomial::monomial(n), 2.0, P({1.0}));
    const auto m = min_modulus(p, 1.0);
    CHECK(close(m.value, 1.0, 1e-12));
    CHECK(close(std::pow(std::polar(1.0, m.witness_angle), n), -1.0, 1e-6));
    check_genuine(p, m);
  }
  CHECK(close(min_modulus(P({0.0, 1.0}), 1.0).value, 1.0, 1e-14));
  const auto z = min_modulus(P({-1.0, 1.0}), 1.0);
  CHECK(z.value <= 1e-12);
  CHECK(z.witness_angle == 0.0);
}

TEST_CASE("ratio_max examples and unbounded denominator") {
  testutil::Rand rng(31);
  const Polynomial p = axpy(1.0, rng.poly(4), 3.0, P({1.0}));  // keep it away from zero
  REQUIRE(min_modulus(p, 1.0).value > 0.1);
  CHECK(close(ratio_max(p, p, 1.0).value, 1.0, 1e-14));
  CHECK(close(ratio_max(axpy(2.0, p, 0.0, p), p, 1.0).value, 2.0, 1e-14));
  CHECK(close(ratio_max(Polynomial::monomial(5), P({1.0}), 1.0).value, 1.0, 1e-14));
  CHECK_THROWS_AS(ratio_max(P({1.0}), P({-1.0, 1.0}), 1.0), UnboundedRatioError);
  CHECK_THROWS_AS(ratio_max(P({1.0}), P({0.0}), 1.0), UnboundedRatioError);
}

TEST_CASE("errors") {
  const Polynomial p = P({1.0, 1.0});
  CHECK_THROWS_AS(max_modulus(p, 0.0), DomainError);
  CHECK_THROWS_AS(max_modulus(p, -1.0), DomainError);
  CHECK_THROWS_AS(min_modulus(p, 0.0), DomainError);
  ProbeConfig bad;
  bad.samples = 100;
  CHECK_THROWS_AS(max_modulus(p, 1.0, bad), DomainError);
  bad.samples = 4;
  CHECK_THROWS_AS(max_modulus(p, 1.0, bad), DomainError);
  ProbeConfig ok;
  ok.samples = 8;
  CHECK(close(max_modulus(p, 1.0, ok).value, 2.0, 1e-12));
}

TEST_CASE("property: refinement is monotone in the sample count") {
  testutil::Rand rng(32);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.poly(rng.i(1, 16));
    ProbeConfig coarse;
    coarse.samples = 64;
    ProbeConfig fine = coarse;
    fine.samples = 256;
    const auto a = max_modulus(p, 1.0, coarse), b = max_modulus(p, 1.0, fine);
    const auto c = min_modulus(p, 1.0, coarse), d = min_modulus(p, 1.0, fine);
    // both refine onto the same extremum; they may differ only inside the certified bands
    CHECK(b.value + b.certified_error >= a.value);
    CHECK(d.value - d.certified_error <= c.value);
    CHECK(std::abs(b.value - a.value) <= 1e-15 * (1.0 + a.value) * 8);
  }
}

TEST_CASE("property: growth bound on larger circles") {
  testutil::Rand rng(33);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.i(0, 16);
    const Polynomial p = rng.poly(n);
    const double R = rng.u(1.0, 3.0);
    CHECK(max_modulus(p, R).value <= std::pow(R, n) * max_modulus(p, 1.0).value * (1.0 + 1e-9));
  }
}

TEST_CASE("property: rotation invariance") {
  testutil::Rand rng(34);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.poly(rng.i(1, 16));
    const Complex w = rng.on_circle();
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::pow(w, static_cast<int>(k));
    const Polynomial rotated(c);
    CHECK(close(max_modulus(rotated, 1.0).value, max_modulus(p, 1.0).value, 1e-9));
    CHECK(close(min_modulus(rotated, 1.3).value, min_modulus(p, 1.3).value, 1e-9));
  }
}

TEST_CASE("property: brute force stays inside the certified band") {
  testutil::Rand rng(35);
  for (int t = 0; t < 20; ++t) {
    const Polynomial p = rng.poly(rng.i(1, 16));
    const double r = rng.u(1.0, 2.0);
    const auto pr = max_modulus(p, r);
    const double brute = testutil::brute_max(p, r, 1 << 14);
    CHECK(brute <= pr.value + pr.certified_error + 1e-15 * (1.0 + pr.value));  // evaluation rounding
    // the reported value is attained, so it cannot exceed the sup
    const double h = 2.0 * kPi / (1 << 14);
    CHECK(pr.value <= brute * (1.0 + p.degree() * h / 2.0));
  }
}

TEST_CASE("maximize_angle tie-break and refinement") {
  ProbeConfig cfg;
  cfg.samples = 16;
  // a peak between grid points
  const double peak = 0.3;
  const auto m = maximize_angle([&](double t) { return std::cos(t - peak); }, cfg);
  CHECK(std::abs(m.angle - peak) <= 1e-6);
  CHECK(close(m.value, 1.0, 1e-14));
  // four equal peaks on the grid: smallest angle reported
  const auto e = maximize_angle([](double t) { return std::cos(4.0 * t); }, cfg);
  CHECK(e.angle == 0.0);
}
