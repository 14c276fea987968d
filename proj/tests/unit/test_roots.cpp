#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bineq/errors.hpp"
#include "bineq/roots.hpp"
#include "test_util.hpp"

using namespace bineq;
using testutil::close;

namespace {
const Complex I{0.0, 1.0};
Polynomial P(std::vector<Complex> c) { return Polynomial(std::move(c)); }

// greedy matching of two multisets; returns the worst distance
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) {
      return std::abs(u - x) < std::abs(v - x);
    });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}
}  // namespace

TEST_CASE("find_roots examples") {
  const RootSet a = find_roots(P({1.0, 0.0, 1.0}));
  CHECK(a.converged);
  CHECK(multiset_distance(a.roots, {I, -I}) <= 1e-12);
  const RootSet b = find_roots(P({-1.0, 0.0, 1.0}));
  CHECK(multiset_distance(b.roots, {1.0, -1.0}) <= 1e-12);
  const std::vector<Complex> s{0.3, -0.5 * I, 0.9};
  const RootSet c = find_roots(from_roots(s, 1.0));
  CHECK(c.converged);
  CHECK(multiset_distance(c.roots, s) <= 1e-8);
  CHECK(c.residuals.size() == 3);
  for (double r : c.residuals) CHECK(r <= 1e-10);
}

TEST_CASE("max_root_modulus examples") {
  CHECK(close(max_root_modulus(find_roots(P({1.0, 0.0, 1.0}))), 1.0, 1e-12));
  const std::vector<Complex> s{0.3, -0.5 * I, 0.9};
  CHECK(close(max_root_modulus(find_roots(from_roots(s, 1.0))), 0.9, 1e-10));
  for (int n = 1; n <= 8; ++n) {
    const RootSet z = find_roots(Polynomial::monomial(n));
    CHECK(z.converged);
    CHECK(z.roots.size() == static_cast<std::size_t>(n));
    CHECK(max_root_modulus(z) <= 1e-6);
  }
}

TEST_CASE("count_in_disk examples") {
  CHECK(count_in_disk(find_roots(P({1.0, 0.0, 1.0})), 1.0, 1e-10) == 2);
  CHECK(count_in_disk(find_roots(P({-2.0, 1.0})), 1.0, 0.0) == 0);
  const std::vector<Complex> s{0.5, 1.5};
  CHECK(count_in_disk(find_roots(from_roots(s, 1.0)), 1.0, 0.0) == 1);
}

TEST_CASE("effective degree and errors") {
  CHECK(effective_degree(P({1.0, 2.0, 0.0, 0.0})) == 1);
  CHECK(effective_degree(P({1.0, 2.0, 1e-20})) == 1);
  CHECK(effective_degree(P({1.0, 2.0, 1e-3})) == 2);
  const RootSet r = find_roots(P({1.0, 2.0, 0.0}));
  CHECK(r.roots.size() == 1);
  CHECK(close(r.roots[0], -0.5, 1e-14));
  CHECK_THROWS_AS(find_roots(P({3.0})), DomainError);
  CHECK_THROWS_AS(find_roots(P({3.0, 0.0, 0.0})), DomainError);
  RootConfig tight;
  tight.max_sweeps = 1;
  testutil::Rand rng(41);
  const RootSet u = find_roots(rng.poly(12), tight);
  CHECK_FALSE(u.converged);
  CHECK_THROWS_AS(max_root_modulus(u), NotConvergedError);
  CHECK_THROWS_AS(count_in_disk(u, 1.0, 0.0), NotConvergedError);
}

TEST_CASE("exact zeros at the origin are split off") {
  const RootSet r = find_roots(P({0.0, 0.0, -1.0, 0.0, 1.0}));
  CHECK(r.converged);
  CHECK(multiset_distance(r.roots, {0.0, 0.0, 1.0, -1.0}) <= 1e-12);
}

TEST_CASE("property: round trip for separated roots") {
  testutil::Rand rng(42);
  int done = 0;
  while (done < 150) {
    const int n = rng.i(1, 16);
    std::vector<Complex> s;
    while (static_cast<int>(s.size()) < n) {
      const Complex c = rng.c(1.5);
      if (std::all_of(s.begin(), s.end(), [&](Complex x) { return std::abs(x - c) >= 1e-2; }))
        s.push_back(c);
    }
    const RootSet rs = find_roots(from_roots(s, rng.on_circle(rng.u(0.5, 2.0))));
    REQUIRE(rs.converged);
    CHECK(multiset_distance(rs.roots, s) <= 1e-8);
    ++done;
  }
}

TEST_CASE("property: coefficient reconstruction") {
  testutil::Rand rng(43);
  for (int t = 0; t < 150; ++t) {
    const Polynomial p = rng.poly(rng.i(1, 16));
    const RootSet rs = find_roots(p);
    REQUIRE(rs.converged);
    for (double r : rs.residuals) CHECK(r <= 1e-10);
    const Polynomial q = from_roots(rs.roots, p.leading());
    const double scale = 1.0 + p.max_coeff_modulus();
    for (int k = 0; k <= p.degree(); ++k) CHECK(std::abs(q[k] - p[k]) <= 1e-8 * scale);
  }
}

TEST_CASE("property: real inputs give conjugate-closed root sets") {
  testutil::Rand rng(44);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.i(1, 16);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = rng.u(-1.0, 1.0);
    c.back() = rng.u(0.5, 1.0);
    const RootSet rs = find_roots(Polynomial(c));
    REQUIRE(rs.converged);
    std::vector<Complex> conj;
    for (auto r : rs.roots) conj.push_back(std::conj(r));
    CHECK(multiset_distance(rs.roots, conj) <= 1e-8);
  }
}
