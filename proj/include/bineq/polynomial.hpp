#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bineq {

using Complex = std::complex<double>;

/// Dense complex polynomial, coefficients ascending (index k holds z^k).
///
/// The nominal degree is carried by the coefficient count rather than by the
/// last nonzero coefficient: a degree-3 polynomial may store trailing zeros.
/// This matters for the conjugate reciprocal z^n * conj(P(1/conj(z))), which
/// depends on n and not on where the coefficients happen to end.
class Polynomial {
 public:
  /// The zero polynomial of nominal degree 0.
  Polynomial();

  /// Throws DomainError on an empty list or any non-finite coefficient.
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial zero(int degree);
  static Polynomial monomial(int degree, Complex scale = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Complex leading() const { return coeffs_.back(); }
  double max_coeff_modulus() const;

  Complex operator()(Complex z) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

bool is_finite(Complex z);

/// Horner evaluation. Throws DomainError for non-finite z.
Complex eval(const Polynomial& p, Complex z);

/// P'. Nominal degree drops by one; a constant maps to the zero polynomial of
/// degree 0.
Polynomial derivative(const Polynomial& p);

/// z -> P(Rz). Requires finite R > 0.
Polynomial dilate(const Polynomial& p, double radius);

/// leading * prod(z - root_i), accumulated in the given order.
Polynomial from_roots(std::span<const Complex> roots, Complex leading);

/// Conjugate reciprocal Q(z) = z^n conj(P(1/conj z)) for the nominal degree n.
Polynomial reciprocal(const Polynomial& p);

/// a*P + b*S; the shorter operand is zero padded.
Polynomial axpy(Complex a, const Polynomial& p, Complex b, const Polynomial& s);

/// z^j * P(z); nominal degree grows by j.
Polynomial mul_z_power(const Polynomial& p, int j);

/// Same polynomial with a different nominal degree. Shrinking is only allowed
/// over coefficients that are exactly zero.
Polynomial with_degree(const Polynomial& p, int degree);

}  // namespace bineq
