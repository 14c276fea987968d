#include "bineq/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bineq/errors.hpp"

namespace bineq {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Polynomial::Polynomial() : coeffs_{Complex{0.0, 0.0}} {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!is_finite(coeffs_[k]))
      throw DomainError("non-finite coefficient at index " + std::to_string(k));
  }
}

Polynomial Polynomial::zero(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  return Polynomial(std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

Polynomial Polynomial::monomial(int degree, Complex scale) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c.back() = scale;
  return Polynomial(std::move(c));
}

double Polynomial::max_coeff_modulus() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const { return eval(*this, z); }

Complex eval(const Polynomial& p, Complex z) {
  if (!is_finite(z)) throw DomainError("evaluation point is not finite");
  auto c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  auto c = p.coeffs();
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

Polynomial dilate(const Polynomial& p, double radius) {
  if (!std::isfinite(radius) || radius <= 0.0)
    throw DomainError("dilation radius must be finite and positive");
  auto c = p.coeffs();
  std::vector<Complex> out(c.size());
  double scale = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k] = c[k] * scale;
    scale *= radius;
  }
  return Polynomial(std::move(out));
}

Polynomial from_roots(std::span<const Complex> roots, Complex leading) {
  if (!is_finite(leading)) throw DomainError("leading coefficient is not finite");
  if (leading == Complex{}) throw DomainError("leading coefficient must be nonzero");
  std::vector<Complex> c{leading};
  for (const auto& root : roots) {
    if (!is_finite(root)) throw DomainError("root is not finite");
    // multiply by (z - root)
    c.push_back(Complex{});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - root * c[k];
    c[0] = -root * c[0];
  }
  return Polynomial(std::move(c));
}

Polynomial reciprocal(const Polynomial& p) {
  auto c = p.coeffs();
  std::vector<Complex> q(c.rbegin(), c.rend());
  for (auto& x : q) x = std::conj(x);
  return Polynomial(std::move(q));
}

Polynomial axpy(Complex a, const Polynomial& p, Complex b, const Polynomial& s) {
  const auto n = static_cast<std::size_t>(std::max(p.degree(), s.degree())) + 1;
  std::vector<Complex> out(n);
  auto pc = p.coeffs();
  auto sc = s.coeffs();
  for (std::size_t k = 0; k < pc.size(); ++k) out[k] += a * pc[k];
  for (std::size_t k = 0; k < sc.size(); ++k) out[k] += b * sc[k];
  return Polynomial(std::move(out));
}

Polynomial mul_z_power(const Polynomial& p, int j) {
  if (j < 0) throw DomainError("negative shift");
  auto c = p.coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(j), Complex{});
  out.insert(out.end(), c.begin(), c.end());
  return Polynomial(std::move(out));
}

Polynomial with_degree(const Polynomial& p, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  auto c = p.coeffs();
  std::vector<Complex> out(c.begin(), c.end());
  const auto want = static_cast<std::size_t>(degree) + 1;
  for (std::size_t k = want; k < out.size(); ++k) {
    if (out[k] != Complex{})
      throw DomainError("cannot drop nonzero coefficient at index " + std::to_string(k));
  }
  out.resize(want);
  return Polynomial(std::move(out));
}

}  // namespace bineq
