#include "bineq/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bineq/errors.hpp"

namespace bineq {

int effective_degree(const Polynomial& p, double degeneracy) {
  const double threshold = degeneracy * p.max_coeff_modulus();
  for (int k = p.degree(); k > 0; --k) {
    if (std::abs(p[k]) > threshold) return k;
  }
  return 0;
}

RootSet find_roots(const Polynomial& p, const RootConfig& cfg) {
  const int deg = effective_degree(p, cfg.degeneracy);
  if (deg < 1) throw DomainError("polynomial has no roots to find (effective degree 0)");

  int origin = 0;
  while (origin < deg && p[origin] == Complex{}) ++origin;

  // Work on the monic reduced polynomial c[origin..deg] / c[deg].
  const int m = deg - origin;
  std::vector<Complex> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) c[static_cast<std::size_t>(k)] = p[k + origin] / p[deg];

  RootSet rs;
  rs.roots.assign(static_cast<std::size_t>(origin), Complex{});

  std::vector<Complex> z(static_cast<std::size_t>(m));
  if (m > 0) {
    double cauchy = 0.0;
    for (int k = 0; k < m; ++k) cauchy = std::max(cauchy, std::abs(c[static_cast<std::size_t>(k)]));
    const double radius = 1.2 * (1.0 + cauchy);
    const double offset = std::numbers::sqrt2 / 3.0;  // irrational, breaks symmetric stalls
    for (int j = 0; j < m; ++j)
      z[static_cast<std::size_t>(j)] =
          std::polar(radius, 2.0 * std::numbers::pi * j / m + offset);
  }

  auto eval_with_derivative = [&](Complex x, Complex& value, Complex& slope) {
    value = c[static_cast<std::size_t>(m)];
    slope = Complex{};
    for (int k = m; k-- > 0;) {
      slope = slope * x + value;
      value = value * x + c[static_cast<std::size_t>(k)];
    }
  };

  // outside the unit disk the rounding floor of |P(x)| grows like |x|^deg
  const double scale = 1.0 + p.max_coeff_modulus();
  auto residual = [&](Complex x) {
    return std::abs(eval(p, x)) / (scale * std::pow(std::max(1.0, std::abs(x)), deg));
  };

  bool done = m == 0;
  int sweep = 0;
  std::vector<Complex> converged_at;
  int polish = 2;  // Aberth is cubic: two more sweeps reach the rounding floor
  for (; polish > 0 && sweep < cfg.max_sweeps; ++sweep) {
    if (done) --polish;
    for (int j = 0; j < m; ++j) {
      auto& zj = z[static_cast<std::size_t>(j)];
      Complex value, slope;
      eval_with_derivative(zj, value, slope);
      if (value == Complex{}) continue;
      const Complex newton = slope == Complex{} ? Complex{1e-3, 1e-3} : value / slope;
      Complex repulsion{};
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        const Complex d = zj - z[static_cast<std::size_t>(k)];
        if (d != Complex{}) repulsion += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = denom == Complex{} ? newton : newton / denom;
      if (is_finite(step)) zj -= step;
    }
    if (!done && std::all_of(z.begin(), z.end(),
                             [&](Complex x) { return residual(x) <= cfg.residual_tol; })) {
      done = true;
      converged_at = z;
    }
  }

  const auto within = [&](const std::vector<Complex>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](Complex x) { return residual(x) <= cfg.residual_tol; });
  };
  if (!converged_at.empty() && !within(z)) z = converged_at;  // polishing must not hurt

  rs.roots.insert(rs.roots.end(), z.begin(), z.end());
  rs.residuals.reserve(rs.roots.size());
  for (const auto& r : rs.roots) rs.residuals.push_back(residual(r));
  rs.sweeps = sweep;
  rs.converged = std::all_of(rs.residuals.begin(), rs.residuals.end(),
                             [&](double r) { return r <= cfg.residual_tol; });
  return rs;
}

double max_root_modulus(const RootSet& rs) {
  if (!rs.converged) throw NotConvergedError("root set did not converge");
  double m = 0.0;
  for (const auto& r : rs.roots) m = std::max(m, std::abs(r));
  return m;
}

int count_in_disk(const RootSet& rs, double radius, double tol) {
  if (!rs.converged) throw NotConvergedError("root set did not converge");
  return static_cast<int>(std::count_if(rs.roots.begin(), rs.roots.end(), [&](Complex r) {
    return std::abs(r) <= radius + tol;
  }));
}

}  // namespace bineq
