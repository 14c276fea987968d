#pragma once

#include <array>
#include <vector>

#include "bineq/polynomial.hpp"

namespace bineq {

inline constexpr double kDefaultAdmissibilityTol = 1e-10;

enum class Admissibility { Unchecked, Admissible, Inadmissible };

/// Coefficients (lambda0, lambda1, lambda2) of
///   B[P](z) = l0 P(z) + l1 (nz/2) P'(z) + l2 (nz/2)^2 P''(z)/2
/// for a fixed operator degree n. The degree stays fixed when the operator is
/// applied to dilated or combined polynomials.
class OperatorParams {
 public:
  /// Throws DomainError if n < 1, any lambda is non-finite, or all are zero.
  OperatorParams(int n, Complex lambda0, Complex lambda1, Complex lambda2);
  OperatorParams(int n, const std::array<Complex, 3>& lambdas)
      : OperatorParams(n, lambdas[0], lambdas[1], lambdas[2]) {}

  int degree() const { return n_; }
  const std::array<Complex, 3>& lambdas() const { return lambda_; }
  Complex lambda0() const { return lambda_[0]; }
  Complex lambda1() const { return lambda_[1]; }
  Complex lambda2() const { return lambda_[2]; }

  Admissibility admissibility() const { return status_; }
  /// Zeros of u(z) recorded when the status was resolved.
  const std::vector<Complex>& witness_roots() const { return u_roots_; }

  /// Copy with the admissibility status resolved at the given tolerance.
  OperatorParams checked(double tol_adm = kDefaultAdmissibilityTol) const;

  bool operator==(const OperatorParams&) const = default;

 private:
  int n_;
  std::array<Complex, 3> lambda_;
  Admissibility status_ = Admissibility::Unchecked;
  std::vector<Complex> u_roots_;
};

/// u(z) = l0 + C(n,1) l1 z + C(n,2) l2 z^2, trimmed to its structural degree.
Polynomial u_polynomial(const OperatorParams& params);

struct AdmissibilityResult {
  bool admissible;
  std::vector<Complex> roots;
};

/// Tests |rho| <= |rho - n/2| + tol_adm for every zero rho of u. A nonzero
/// constant u is vacuously admissible; u identically zero (n = 1 with only
/// lambda2 set) raises DomainError.
AdmissibilityResult is_admissible(const OperatorParams& params,
                                  double tol_adm = kDefaultAdmissibilityTol);

/// Zeros of u in closed form (stable quadratic formula).
std::vector<Complex> u_zeros(const OperatorParams& params);

/// B[P]. The output keeps the nominal degree of P, which must not exceed n.
Polynomial apply_b(const OperatorParams& params, const Polynomial& p);

/// The eigenvalue with B[z^n] = phi_n z^n: l0 + l1 n^2/2 + l2 n^3 (n-1)/8.
Complex phi_n(const OperatorParams& params);

/// Scalars shared by the combined operand and the right-hand sides:
///   shift  = beta * (((R+1)/2)^n - |alpha|)
///   outer  = R^n - alpha + shift     (multiplies |B[z^n]|)
///   inner  = 1 - alpha + shift       (multiplies |lambda0|)
struct CombineFactors {
  Complex shift;
  Complex outer;
  Complex inner;
};

/// Validates |alpha| <= 1, |beta| <= 1, R >= 1 (DomainError otherwise).
CombineFactors combine_factors(Complex alpha, Complex beta, double radius, int n);

/// P(Rz) - alpha P(z) + beta (((R+1)/2)^n - |alpha|) P(z).
Polynomial combine(const Polynomial& p, Complex alpha, Complex beta, double radius, int n);

}  // namespace bineq
