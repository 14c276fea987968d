#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "bineq/errors.hpp"
#include "bineq/polynomial.hpp"
#include "test_util.hpp"

using namespace bineq;
using testutil::close;
using testutil::coeffs_close;

namespace {
const Complex I{0.0, 1.0};
Polynomial P(std::vector<Complex> c) { return Polynomial(std::move(c)); }
}  // namespace

TEST_CASE("construction and invariants") {
  Polynomial z;
  CHECK(z.degree() == 0);
  CHECK(z[0] == Complex{});
  CHECK(Polynomial::zero(3).degree() == 3);
  CHECK(Polynomial::monomial(3, 2.0)[3] == Complex{2.0});
  CHECK(Polynomial::monomial(3).coeffs().size() == 4);
  CHECK_THROWS_AS(Polynomial(std::vector<Complex>{}), DomainError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(P({1.0, Complex(nan, 0.0)}), DomainError);
  CHECK_THROWS_AS(P({Complex(0.0, std::numeric_limits<double>::infinity())}), DomainError);
}

TEST_CASE("eval examples") {
  CHECK(std::abs(eval(P({1.0, 0.0, 1.0}), I)) == 0.0);
  CHECK(eval(Polynomial::monomial(3), 2.0) == Complex{8.0});
  CHECK(eval(P({2.0, 1.0 + I}), 1.0) == Complex(3.0, 1.0));
  CHECK_THROWS_AS(eval(P({1.0}), Complex(std::numeric_limits<double>::infinity(), 0.0)),
                  DomainError);
  CHECK_THROWS_AS(eval(P({1.0}), Complex(0.0, std::numeric_limits<double>::quiet_NaN())),
                  DomainError);
}

TEST_CASE("derivative examples") {
  CHECK(derivative(P({1.0, 3.0, 1.0})) == P({3.0, 2.0}));
  const Polynomial d0 = derivative(P({5.0}));
  CHECK(d0.degree() == 0);
  CHECK(d0[0] == Complex{});
  CHECK(derivative(Polynomial::monomial(4)) == P({0.0, 0.0, 0.0, 4.0}));
}

TEST_CASE("dilate examples and errors") {
  CHECK(dilate(P({1.0, 0.0, 1.0}), 2.0) == P({1.0, 0.0, 4.0}));
  const Polynomial q = P({1.0 + I, -2.0, 0.5 * I});
  CHECK(dilate(q, 1.0) == q);
  CHECK(dilate(P({1.0, 1.0}), 3.0) == P({1.0, 3.0}));
  CHECK(dilate(q, 0.5).degree() == 2);
  CHECK_THROWS_AS(dilate(q, 0.0), DomainError);
  CHECK_THROWS_AS(dilate(q, -1.0), DomainError);
}

TEST_CASE("from_roots examples") {
  const std::vector<Complex> r1{1.0, -1.0};
  CHECK(coeffs_close(from_roots(r1, 1.0), P({-1.0, 0.0, 1.0}), 1e-15));
  const Polynomial c = from_roots(std::vector<Complex>{}, 7.0);
  CHECK(c.degree() == 0);
  CHECK(c[0] == Complex{7.0});
  const std::vector<Complex> r2{I, -I};
  CHECK(coeffs_close(from_roots(r2, 2.0), P({2.0, 0.0, 2.0}), 1e-15));
  CHECK_THROWS_AS(from_roots(r2, 0.0), DomainError);
}

TEST_CASE("reciprocal examples") {
  for (int n = 1; n <= 6; ++n) {
    Polynomial p = Polynomial::monomial(n);
    p = axpy(1.0, p, 1.0, P({1.0}));
    CHECK(reciprocal(p) == p);
  }
  CHECK(reciprocal(P({I, 2.0})) == P({2.0, -I}));
  const Polynomial q = reciprocal(Polynomial::monomial(3));
  CHECK(q.degree() == 3);
  CHECK(q == P({1.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("axpy examples") {
  const Polynomial z2 = Polynomial::monomial(2);
  CHECK(axpy(1.0, z2, -1.0, z2) == Polynomial::zero(2));
  CHECK(axpy(2.0, P({1.0, 1.0}), 0.0, P({3.0, 4.0, 5.0 * I})) == P({2.0, 2.0, 0.0}));
  CHECK(axpy(1.0, z2, 1.0, P({1.0})) == P({1.0, 0.0, 1.0}));
}

TEST_CASE("mul_z_power and with_degree") {
  CHECK(mul_z_power(P({1.0, 2.0}), 2) == P({0.0, 0.0, 1.0, 2.0}));
  CHECK(with_degree(P({1.0, 2.0}), 3) == P({1.0, 2.0, 0.0, 0.0}));
  CHECK(with_degree(P({1.0, 2.0, 0.0}), 1) == P({1.0, 2.0}));
  CHECK_THROWS(with_degree(P({1.0, 2.0, 3.0}), 1));
}

TEST_CASE("property: evaluation linearity") {
  testutil::Rand rng(11);
  for (int t = 0; t < 200; ++t) {
    const Polynomial p = rng.poly(rng.i(0, 16));
    const Polynomial s = rng.poly(rng.i(0, 16));
    const Complex a = rng.c(2.0), b = rng.c(2.0), z = rng.c(1.5);
    const Complex lhs = eval(axpy(a, p, b, s), z);
    const Complex rhs = a * eval(p, z) + b * eval(s, z);
    CHECK(close(lhs, rhs, 1e-12));
    CHECK(axpy(a, p, b, s).degree() == std::max(p.degree(), s.degree()));
  }
}

TEST_CASE("property: Horner agrees with term-wise sum") {
  testutil::Rand rng(12);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.poly(rng.i(0, 16));
    const Complex z = rng.c(1.2);
    CHECK(close(eval(p, z), testutil::naive_eval(p, z), 1e-12));
    CHECK(p(z) == eval(p, z));
  }
}

TEST_CASE("property: reciprocal involution and unit-circle modulus") {
  testutil::Rand rng(13);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.poly(rng.i(0, 16));
    CHECK(reciprocal(reciprocal(p)) == p);
    const Polynomial q = reciprocal(p);
    for (int j = 0; j < 64; ++j) {
      const Complex z = rng.on_circle();
      const double ap = std::abs(eval(p, z));
      CHECK(std::abs(std::abs(eval(q, z)) - ap) <= 1e-12 * (1.0 + ap));
    }
  }
}

TEST_CASE("property: from_roots residuals") {
  testutil::Rand rng(14);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.i(1, 16);
    std::vector<Complex> roots;
    for (int j = 0; j < n; ++j) roots.push_back(rng.c(1.5));
    const Complex lead = rng.on_circle(rng.u(0.5, 2.0));
    const Polynomial p = from_roots(roots, lead);
    CHECK(p.degree() == n);
    CHECK(close(p.leading(), lead, 1e-15));
    for (const auto& r : roots) CHECK(std::abs(eval(p, r)) <= 1e-10 * (1.0 + p.max_coeff_modulus()));
  }
}

TEST_CASE("property: dilate composition") {
  testutil::Rand rng(15);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.poly(rng.i(0, 16));
    const double r1 = rng.u(0.2, 2.5), r2 = rng.u(0.2, 2.5);
    const Polynomial a = dilate(dilate(p, r1), r2);
    const Polynomial b = dilate(p, r1 * r2);
    for (int k = 0; k <= p.degree(); ++k) CHECK(close(a[k], b[k], 1e-12));
  }
}

TEST_CASE("property: derivative matches finite difference") {
  testutil::Rand rng(16);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = rng.poly(rng.i(1, 10));
    const Complex z = rng.c(1.0);
    const double h = 1e-5;
    const Complex fd = (eval(p, z + h) - eval(p, z - h)) / (2.0 * h);
    CHECK(close(eval(derivative(p), z), fd, 1e-6));
    CHECK(derivative(p).degree() == p.degree() - 1);
  }
}
