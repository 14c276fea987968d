#pragma once

#include <functional>

#include "bineq/polynomial.hpp"

namespace bineq {

struct ProbeConfig {
  int samples = 4096;        // power of two, >= 8
  int refine_count = 8;      // local extrema refined by golden-section search
  double refine_tol = 1e-13; // relative bracket width at which refinement stops
};

/// Extremum of |P| (or a derived quantity) on the circle |z| = radius.
struct CircleProbe {
  double radius = 1.0;
  double value = 0.0;
  double witness_angle = 0.0;  // in [0, 2pi)
  double certified_error = 0.0;
  int samples_used = 0;

  Complex witness() const { return std::polar(radius, witness_angle); }
};

/// Outcome of maximizing a 2pi-periodic function of the angle.
struct AngularMax {
  double angle = 0.0;
  double value = 0.0;
  double bracket = 0.0;  // bracket width around the winner after refinement
  int evaluations = 0;
  double tie_gap = 0.0;  // best value seen minus the reported (tied, smaller-angle) value
};

/// Samples f at cfg.samples uniform angles, refines the best cfg.refine_count
/// local maxima by golden-section search and returns the best point found.
/// Near-ties resolve to the smallest angle; a grid sample beats a refined
/// point that does not strictly improve on it.
AngularMax maximize_angle(const std::function<double(double)>& f, const ProbeConfig& cfg);

void validate(const ProbeConfig& cfg);

CircleProbe max_modulus(const Polynomial& p, double radius, const ProbeConfig& cfg = {});
CircleProbe min_modulus(const Polynomial& p, double radius, const ProbeConfig& cfg = {});

/// max |num(z)| / |den(z)| on the circle. Throws UnboundedRatioError when den
/// vanishes on the circle to within tolerance.
CircleProbe ratio_max(const Polynomial& num, const Polynomial& den, double radius,
                      const ProbeConfig& cfg = {});

}  // namespace bineq
