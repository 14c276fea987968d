#include "bineq/circle_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieRel = 1e-14;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

struct Refined {
  double angle;
  double value;
  double bracket;
};

Refined golden_section(const std::function<double(double)>& f, double lo, double hi,
                       double tol, int& evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  evaluations += 2;
  for (int it = 0; it < 200; ++it) {
    if (b - a <= tol * std::max(1.0, std::abs(0.5 * (a + b)))) break;
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    ++evaluations;
  }
  return f1 >= f2 ? Refined{x1, f1, b - a} : Refined{x2, f2, b - a};
}

bool better(double value, double angle, double best_value, double best_angle) {
  const double scale = std::max(std::abs(value), std::abs(best_value));
  if (value > best_value + kTieRel * scale) return true;
  if (value < best_value - kTieRel * scale) return false;
  return angle < best_angle;
}

}  // namespace

void validate(const ProbeConfig& cfg) {
  if (cfg.samples < 8 || (cfg.samples & (cfg.samples - 1)) != 0)
    throw DomainError("probe samples must be a power of two and at least 8");
  if (cfg.refine_count < 1) throw DomainError("refine_count must be positive");
  if (!(cfg.refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
}

AngularMax maximize_angle(const std::function<double(double)>& f, const ProbeConfig& cfg) {
  validate(cfg);
  const int n = cfg.samples;
  const double step = kTwoPi / n;
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = f(step * j);

  auto at = [&](int j) { return s[static_cast<std::size_t>((j % n + n) % n)]; };
  std::vector<int> peaks;
  for (int j = 0; j < n; ++j) {
    if (at(j) >= at(j - 1) && at(j) >= at(j + 1)) peaks.push_back(j);
  }
  if (peaks.empty()) peaks.push_back(0);  // NaN-only input; refinement below is moot
  std::stable_sort(peaks.begin(), peaks.end(), [&](int a, int b) { return at(a) > at(b); });
  peaks.resize(std::min<std::size_t>(peaks.size(), static_cast<std::size_t>(cfg.refine_count)));
  std::sort(peaks.begin(), peaks.end());

  AngularMax best;
  best.value = -std::numeric_limits<double>::infinity();
  best.angle = kTwoPi;
  best.evaluations = n;
  for (int j : peaks) {
    const double center = step * j;
    const Refined r = golden_section(f, center - step, center + step, cfg.refine_tol,
                                     best.evaluations);
    // grid sample first so that an equal refined value keeps the exact grid angle
    double value = at(j);
    double angle = center;
    if (r.value > value) {
      value = r.value;
      angle = wrap_angle(r.angle);
    }
    if (better(value, angle, best.value, best.angle)) {
      best.value = value;
      best.angle = angle;
      best.bracket = r.bracket;
    }
  }
  // flat or near-flat maxima: the first grid sample that ties the winner takes over
  const double top = best.value;
  for (int j = 0; j < n && step * j < best.angle; ++j) {
    if (better(at(j), step * j, best.value, best.angle)) {
      best.value = at(j);
      best.angle = step * j;
      best.tie_gap = std::max(0.0, top - at(j));
      break;
    }
  }
  return best;
}

CircleProbe max_modulus(const Polynomial& p, double radius, const ProbeConfig& cfg) {
  if (!std::isfinite(radius) || radius <= 0.0) throw DomainError("radius must be positive");
  auto f = [&](double t) { return std::norm(eval(p, std::polar(radius, t))); };
  const AngularMax m = maximize_angle(f, cfg);
  CircleProbe probe;
  probe.radius = radius;
  probe.value = std::sqrt(std::max(0.0, m.value));
  probe.witness_angle = m.angle;
  probe.certified_error = p.degree() * probe.value * m.bracket / 2.0 +
                          (std::sqrt(std::max(0.0, m.value + m.tie_gap)) - probe.value);
  probe.samples_used = m.evaluations;
  return probe;
}

CircleProbe min_modulus(const Polynomial& p, double radius, const ProbeConfig& cfg) {
  if (!std::isfinite(radius) || radius <= 0.0) throw DomainError("radius must be positive");
  double lipschitz_scale = 0.0;
  auto f = [&](double t) {
    const double v = std::norm(eval(p, std::polar(radius, t)));
    lipschitz_scale = std::max(lipschitz_scale, v);
    return -v;
  };
  const AngularMax m = maximize_angle(f, cfg);
  CircleProbe probe;
  probe.radius = radius;
  probe.value = std::sqrt(std::max(0.0, -m.value));
  probe.witness_angle = m.angle;
  // |d|P|/dtheta| <= n max|P| on the circle
  probe.certified_error = p.degree() * std::sqrt(lipschitz_scale) * m.bracket / 2.0 +
                          (probe.value - std::sqrt(std::max(0.0, -m.value - m.tie_gap)));
  probe.samples_used = m.evaluations;
  return probe;
}

CircleProbe ratio_max(const Polynomial& num, const Polynomial& den, double radius,
                      const ProbeConfig& cfg) {
  const CircleProbe low = min_modulus(den, radius, cfg);
  const double floor = 1e-12 * (1.0 + den.max_coeff_modulus() * std::pow(std::max(1.0, radius),
                                                                          den.degree()));
  if (low.value <= floor) throw UnboundedRatioError("denominator vanishes on the circle");
  auto f = [&](double t) {
    const Complex z = std::polar(radius, t);
    return std::norm(eval(num, z)) / std::norm(eval(den, z));
  };
  const AngularMax m = maximize_angle(f, cfg);
  CircleProbe probe;
  probe.radius = radius;
  probe.value = std::sqrt(std::max(0.0, m.value));
  probe.witness_angle = m.angle;
  probe.certified_error = (num.degree() + den.degree()) * probe.value * m.bracket / 2.0 +
                          (std::sqrt(std::max(0.0, m.value + m.tie_gap)) - probe.value);
  probe.samples_used = m.evaluations + low.samples_used;
  return probe;
}

}  // namespace bineq
