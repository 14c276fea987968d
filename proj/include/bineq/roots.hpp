#pragma once

#include <vector>

#include "bineq/polynomial.hpp"

namespace bineq {

struct RootConfig {
  double residual_tol = 1e-10;
  int max_sweeps = 500;
  // coefficients with modulus <= degeneracy * max|coeff| count as zero when
  // determining the effective degree
  double degeneracy = 1e-14;
};

struct RootSet {
  std::vector<Complex> roots;
  // |P(root)| / ((1 + max|coeff|) max(1, |root|)^deg)
  std::vector<double> residuals;
  bool converged = false;
  int sweeps = 0;
};

/// Index of the last coefficient above the degeneracy threshold.
int effective_degree(const Polynomial& p, double degeneracy = RootConfig{}.degeneracy);

/// Aberth-Ehrlich simultaneous iteration. Exactly zero low-order coefficients
/// are split off as roots at the origin first. Throws DomainError when the
/// effective degree is 0.
RootSet find_roots(const Polynomial& p, const RootConfig& cfg = {});

/// Throws NotConvergedError on an unconverged set.
double max_root_modulus(const RootSet& rs);

/// Number of roots with |root| <= radius + tol.
int count_in_disk(const RootSet& rs, double radius, double tol);

}  // namespace bineq
