#include "bineq/b_operator.hpp"

#include <cmath>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

// Unit-modulus grid values such as e^{i pi/4} evaluate to 1 + ulp.
constexpr double kUnitSlack = 1e-12;

double binom2(int n) { return 0.5 * n * (n - 1); }

}  // namespace

OperatorParams::OperatorParams(int n, Complex lambda0, Complex lambda1, Complex lambda2)
    : n_(n), lambda_{lambda0, lambda1, lambda2} {
  if (n < 1) throw DomainError("operator degree must be at least 1");
  for (const auto& l : lambda_) {
    if (!is_finite(l)) throw DomainError("operator coefficient is not finite");
  }
  if (lambda0 == Complex{} && lambda1 == Complex{} && lambda2 == Complex{})
    throw DomainError("operator coefficients must not all be zero");
}

OperatorParams OperatorParams::checked(double tol_adm) const {
  OperatorParams out = *this;
  auto result = is_admissible(*this, tol_adm);
  out.status_ = result.admissible ? Admissibility::Admissible : Admissibility::Inadmissible;
  out.u_roots_ = std::move(result.roots);
  return out;
}

Polynomial u_polynomial(const OperatorParams& params) {
  const int n = params.degree();
  const Complex c0 = params.lambda0();
  const Complex c1 = static_cast<double>(n) * params.lambda1();
  const Complex c2 = binom2(n) * params.lambda2();
  if (params.lambda2() != Complex{} && n >= 2) return Polynomial({c0, c1, c2});
  if (params.lambda1() != Complex{}) return Polynomial({c0, c1});
  return Polynomial({c0});
}

std::vector<Complex> u_zeros(const OperatorParams& params) {
  const Polynomial u = u_polynomial(params);
  const auto c = u.coeffs();
  if (u.degree() == 0) {
    if (c[0] == Complex{}) throw DomainError("u(z) is identically zero");
    return {};
  }
  if (u.degree() == 1) return {-c[0] / c[1]};

  const Complex a = c[2], b = c[1], cc = c[0];
  const Complex disc = std::sqrt(b * b - 4.0 * a * cc);
  // pick the sign that avoids cancellation in b + sqrt(disc)
  const Complex q = std::abs(b + disc) >= std::abs(b - disc) ? -0.5 * (b + disc)
                                                              : -0.5 * (b - disc);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q / a, cc / q};
}

AdmissibilityResult is_admissible(const OperatorParams& params, double tol_adm) {
  if (!(tol_adm >= 0.0)) throw DomainError("admissibility tolerance must be nonnegative");
  AdmissibilityResult result{true, u_zeros(params)};
  const double half_n = 0.5 * params.degree();
  for (const auto& rho : result.roots) {
    if (!(std::abs(rho) <= std::abs(rho - half_n) + tol_adm)) result.admissible = false;
  }
  return result;
}

Polynomial apply_b(const OperatorParams& params, const Polynomial& p) {
  const int n = params.degree();
  const int m = p.degree();
  if (m > n)
    throw DomainError("polynomial degree " + std::to_string(m) + " exceeds operator degree " +
                      std::to_string(n));
  const Polynomial d1 = derivative(p);
  const Polynomial d2 = derivative(d1);
  const double half_n = 0.5 * n;
  // l0 P + l1 (n/2) z P' + l2 (n/2)^2 z^2 P'' / 2
  Polynomial out = axpy(params.lambda0(), p, params.lambda1() * half_n, mul_z_power(d1, 1));
  out = axpy(1.0, out, params.lambda2() * (half_n * half_n * 0.5), mul_z_power(d2, 2));
  return with_degree(out, m);
}

Complex phi_n(const OperatorParams& params) {
  const double n = params.degree();
  return params.lambda0() + params.lambda1() * (n * n / 2.0) +
         params.lambda2() * (n * n * n * (n - 1.0) / 8.0);
}

CombineFactors combine_factors(Complex alpha, Complex beta, double radius, int n) {
  if (!is_finite(alpha) || std::abs(alpha) > 1.0 + kUnitSlack)
    throw DomainError("|alpha| must be at most 1");
  if (!is_finite(beta) || std::abs(beta) > 1.0 + kUnitSlack)
    throw DomainError("|beta| must be at most 1");
  if (!std::isfinite(radius) || radius < 1.0) throw DomainError("R must be at least 1");
  if (n < 0) throw DomainError("negative degree");
  const Complex shift = beta * (std::pow(0.5 * (radius + 1.0), n) - std::abs(alpha));
  return {shift, std::pow(radius, n) - alpha + shift, 1.0 - alpha + shift};
}

Polynomial combine(const Polynomial& p, Complex alpha, Complex beta, double radius, int n) {
  const auto f = combine_factors(alpha, beta, radius, n);
  return axpy(1.0, dilate(p, radius), f.shift - alpha, p);
}

}  // namespace bineq
