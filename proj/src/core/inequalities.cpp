#include "bineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

struct NamedStatement {
  StatementId id;
  std::string_view name;
};

constexpr std::array<NamedStatement, kAllStatements.size()> kNames = {{
    {StatementId::I1_1, "I1_1"},
    {StatementId::I1_2, "I1_2"},
    {StatementId::I1_3, "I1_3"},
    {StatementId::I1_4, "I1_4"},
    {StatementId::THM_A_1_5, "THM_A_1_5"},
    {StatementId::THM_A_1_6, "THM_A_1_6"},
    {StatementId::THM_B_1_7, "THM_B_1_7"},
    {StatementId::THM1_1_11, "THM1_1_11"},
    {StatementId::RMK1_1_12, "RMK1_1_12"},
    {StatementId::RMK1_1_13, "RMK1_1_13"},
    {StatementId::RMK1_1_14, "RMK1_1_14"},
    {StatementId::THM2_1_15, "THM2_1_15"},
    {StatementId::COR1_1_16, "COR1_1_16"},
    {StatementId::THM3_1_17, "THM3_1_17"},
    {StatementId::COR2_1_18, "COR2_1_18"},
    {StatementId::LEM1_2_1, "LEM1_2_1"},
    {StatementId::LEM2_2_2, "LEM2_2_2"},
    {StatementId::LEM3, "LEM3"},
    {StatementId::LEM4_2_3, "LEM4_2_3"},
    {StatementId::LEM5_2_4, "LEM5_2_4"},
    {StatementId::LEM6_2_5, "LEM6_2_5"},
}};

enum class Gate { Met, NotMet, Undecided };

using PointFn = std::function<double(Complex)>;

// A statement reduced to "max over the circle of lhs(z)" against either a
// scalar or a pointwise right-hand side.
struct Form {
  double radius = 1.0;
  PointFn lhs;
  PointFn rhs_point;  // empty: scalar rhs
  double rhs = 0.0;
  Gate gate = Gate::Met;
  std::string note;
  bool boundary = false;
  StatementArgs args;
};

RootSet roots_or_empty(const Polynomial& p, const RootConfig& cfg) {
  if (effective_degree(p, cfg.degeneracy) == 0) return RootSet{{}, {}, true, 0};
  return find_roots(p, cfg);
}

Gate zero_free_gate(const Polynomial& p, const CheckOptions& opts, std::string& note) {
  const RootSet rs = roots_or_empty(p, opts.roots);
  if (!rs.converged) {
    note = "root search did not converge; zero-free hypothesis undecided";
    return Gate::Undecided;
  }
  for (const auto& z : rs.roots) {
    if (std::abs(z) < 1.0 - opts.tol_hypothesis) {
      note = "zero inside the open unit disk";
      return Gate::NotMet;
    }
  }
  return Gate::Met;
}

Gate disk_gate(const Polynomial& p, double radius, double tol, bool strict,
               const CheckOptions& opts, std::string& note) {
  const RootSet rs = roots_or_empty(p, opts.roots);
  if (!rs.converged) {
    note = "root search did not converge; root-location hypothesis undecided";
    return Gate::Undecided;
  }
  for (const auto& z : rs.roots) {
    const double m = std::abs(z);
    if (strict ? !(m < radius) : !(m <= radius + tol)) {
      note = "zero outside the hypothesis disk";
      return Gate::NotMet;
    }
  }
  return Gate::Met;
}

Gate combine_gates(Gate a, Gate b) {
  if (a == Gate::NotMet || b == Gate::NotMet) return Gate::NotMet;
  if (a == Gate::Undecided || b == Gate::Undecided) return Gate::Undecided;
  return Gate::Met;
}

OperatorParams require_params(const StatementArgs& args, const Polynomial& p,
                              const CheckOptions& opts) {
  if (!args.params) throw DomainError("statement needs operator parameters");
  OperatorParams params = *args.params;
  if (params.admissibility() == Admissibility::Unchecked) params = params.checked(opts.tol_adm);
  if (params.admissibility() != Admissibility::Admissible)
    throw DomainError("operator parameters are not admissible");
  if (p.degree() != params.degree())
    throw DomainError("polynomial degree " + std::to_string(p.degree()) +
                      " differs from operator degree " + std::to_string(params.degree()));
  return params;
}

void require_outer_radius(double r) {
  if (!std::isfinite(r) || r < 1.0) throw DomainError("circle radius r must be at least 1");
}

PointFn modulus_of(Polynomial q) {
  return [q = std::move(q)](Complex z) { return std::abs(eval(q, z)); };
}

PointFn sum_of_moduli(Polynomial a, Polynomial b) {
  return [a = std::move(a), b = std::move(b)](Complex z) {
    return std::abs(eval(a, z)) + std::abs(eval(b, z));
  };
}

// |P(Rz) + self * P(z)| from point values of P, with self = beta{...} - alpha.
PointFn direct_combination(Polynomial p, Complex self, double R) {
  return [p = std::move(p), self, R](Complex z) {
    return std::abs(eval(p, R * z) + self * eval(p, z));
  };
}

Form build_form(StatementId id, const Polynomial& p, const StatementArgs& in,
                const CheckOptions& opts, bool want_gate) {
  Form form;
  form.args = in;
  const int n = p.degree();
  const double dn = n;
  const auto unit_max = [&] { return max_modulus(p, 1.0, opts.probe).value; };

  switch (id) {
    case StatementId::I1_1:
    case StatementId::I1_3: {
      form.radius = 1.0;
      form.lhs = modulus_of(derivative(p));
      form.rhs = (id == StatementId::I1_1 ? dn : dn / 2.0) * unit_max();
      if (id == StatementId::I1_3 && want_gate) form.gate = zero_free_gate(p, opts, form.note);
      break;
    }
    case StatementId::I1_2:
    case StatementId::I1_4: {
      const double R = in.R;
      if (!std::isfinite(R) || R < 1.0) throw DomainError("R must be at least 1");
      const double Rn = std::pow(R, n);
      form.radius = R;
      form.lhs = modulus_of(p);
      form.rhs = (id == StatementId::I1_2 ? Rn : (Rn + 1.0) / 2.0) * unit_max();
      if (id == StatementId::I1_4 && want_gate) form.gate = zero_free_gate(p, opts, form.note);
      break;
    }
    case StatementId::THM_A_1_5:
    case StatementId::THM_A_1_6:
    case StatementId::THM_B_1_7: {
      require_outer_radius(in.r);
      auto f = combine_factors(in.alpha, in.beta, in.R, n);
      const double rn = std::pow(in.r, n);
      form.radius = in.r;
      const Complex g = f.shift - in.alpha;
      const double M = unit_max();
      if (id == StatementId::THM_A_1_6) {
        auto pf = direct_combination(p, g, in.R);
        auto qf = direct_combination(reciprocal(p), g, in.R);
        form.lhs = [pf, qf](Complex z) { return pf(z) + qf(z); };
        form.rhs = (std::abs(f.outer) * rn + std::abs(f.inner)) * M;
      } else {
        form.lhs = direct_combination(p, g, in.R);
        form.rhs = id == StatementId::THM_A_1_5
                       ? std::abs(f.outer) * rn * M
                       : 0.5 * (std::abs(f.outer) * rn + std::abs(f.inner)) * M;
      }
      if (id == StatementId::THM_B_1_7) {
        form.boundary = in.r == 1.0;
        if (want_gate) form.gate = zero_free_gate(p, opts, form.note);
      }
      break;
    }
    case StatementId::THM1_1_11:
    case StatementId::THM2_1_15:
    case StatementId::THM3_1_17:
    case StatementId::COR2_1_18: {
      const OperatorParams params = require_params(in, p, opts);
      form.args.params = params;
      require_outer_radius(in.r);
      Complex alpha = in.alpha, beta = in.beta;
      if (id == StatementId::COR2_1_18) {
        alpha = 0.0;
        beta = 0.0;
        form.args.alpha = 0.0;
        form.args.beta = 0.0;
      }
      const auto f = combine_factors(alpha, beta, in.R, n);
      const double rn = std::pow(in.r, n);
      const double phi = std::abs(phi_n(params));
      const double l0 = std::abs(params.lambda0());
      const double M = unit_max();
      form.radius = in.r;
      Polynomial bp = apply_b(params, combine(p, alpha, beta, in.R, n));
      if (id == StatementId::THM2_1_15) {
        Polynomial bq = apply_b(params, combine(reciprocal(p), alpha, beta, in.R, n));
        form.lhs = sum_of_moduli(std::move(bp), std::move(bq));
        form.rhs = (std::abs(f.outer) * phi * rn + std::abs(f.inner) * l0) * M;
      } else {
        form.lhs = modulus_of(std::move(bp));
        if (id == StatementId::THM1_1_11) {
          form.rhs = std::abs(f.outer) * phi * rn * M;
        } else {
          form.rhs = 0.5 * (std::abs(f.outer) * phi * rn + std::abs(f.inner) * l0) * M;
          if (want_gate) form.gate = zero_free_gate(p, opts, form.note);
        }
      }
      break;
    }
    case StatementId::RMK1_1_12:
    case StatementId::RMK1_1_13:
    case StatementId::RMK1_1_14: {
      require_outer_radius(in.r);
      const double M = unit_max();
      const double rn1 = n >= 1 ? std::pow(in.r, n - 1) : 0.0;
      form.radius = in.r;
      if (id == StatementId::RMK1_1_12) {
        const auto f = combine_factors(in.alpha, in.beta, in.R, n);
        form.lhs = modulus_of(remark1_operand(p, in.alpha, in.beta, in.R));
        form.rhs = dn * std::abs(f.outer) * rn1 * M;
      } else if (id == StatementId::RMK1_1_13) {
        const Polynomial d1 = derivative(p);
        form.lhs = modulus_of(axpy(1.0, mul_z_power(derivative(d1), 1), 1.0, d1));
        form.rhs = dn * dn * rn1 * M;
        form.args.alpha = 1.0;
        form.args.beta = 0.0;
        form.args.R = 1.0;
      } else {
        form.lhs = modulus_of(derivative(p));
        form.rhs = dn * rn1 * M;
        form.args.alpha = 0.0;
        form.args.beta = 0.0;
        form.args.R = 1.0;
      }
      break;
    }
    case StatementId::COR1_1_16: {
      require_outer_radius(in.r);
      if (!std::isfinite(in.R) || in.R < 1.0) throw DomainError("R must be at least 1");
      form.args.alpha = 1.0;
      form.args.beta = 0.0;
      form.radius = in.r;
      form.lhs = sum_of_moduli(remark1_operand(p, 1.0, 0.0, in.R),
                               remark1_operand(reciprocal(p), 1.0, 0.0, in.R));
      form.rhs = dn * (std::pow(in.R, n) - 1.0) * std::pow(in.r, std::max(n - 1, 0)) *
                 unit_max();
      break;
    }
    case StatementId::LEM1_2_1:
    case StatementId::LEM2_2_2: {
      const double k = id == StatementId::LEM2_2_2 ? 1.0 : in.k;
      if (!std::isfinite(k) || k <= 0.0) throw DomainError("k must be positive");
      if (!std::isfinite(in.R) || in.R <= 0.0) throw DomainError("R must be positive");
      if (id == StatementId::LEM2_2_2 && !(in.R > 1.0)) throw DomainError("LEM2_2_2 needs R > 1");
      form.args.k = k;
      form.radius = 1.0;
      const double c = std::pow((in.R + k) / (1.0 + k), n);
      form.lhs = [p, c](Complex z) { return c * std::abs(eval(p, z)); };
      form.rhs_point = modulus_of(dilate(p, in.R));
      if (want_gate) {
        Gate g = in.R > 1.0 && k <= 1.0 ? Gate::Met : Gate::NotMet;
        if (g == Gate::NotMet) form.note = "needs R > 1 and k <= 1";
        std::string roots_note;
        const Gate rg = id == StatementId::LEM2_2_2
                            ? disk_gate(p, 1.0, 0.0, true, opts, roots_note)
                            : disk_gate(p, k, opts.tol_hypothesis, false, opts, roots_note);
        if (form.note.empty()) form.note = roots_note;
        form.gate = combine_gates(g, rg);
      }
      break;
    }
    case StatementId::LEM4_2_3:
    case StatementId::LEM5_2_4:
    case StatementId::LEM6_2_5: {
      const OperatorParams params = require_params(in, p, opts);
      form.args.params = params;
      require_outer_radius(in.r);
      form.radius = in.r;
      const Polynomial q = reciprocal(p);
      if (id == StatementId::LEM5_2_4) {
        form.lhs = sum_of_moduli(apply_b(params, p), apply_b(params, q));
        form.rhs = (std::abs(phi_n(params)) * std::pow(in.r, n) + std::abs(params.lambda0())) *
                   unit_max();
      } else if (id == StatementId::LEM4_2_3) {
        form.lhs = modulus_of(apply_b(params, p));
        form.rhs_point = modulus_of(apply_b(params, q));
      } else {
        form.lhs = modulus_of(apply_b(params, combine(p, in.alpha, in.beta, in.R, n)));
        form.rhs_point = modulus_of(apply_b(params, combine(q, in.alpha, in.beta, in.R, n)));
      }
      if (id != StatementId::LEM5_2_4 && want_gate) form.gate = zero_free_gate(p, opts, form.note);
      break;
    }
    case StatementId::LEM3:
      throw DomainError("LEM3 has no pointwise form");
  }
  return form;
}

Verdict decide(Gate gate, double relative_margin, double tol, bool enforce) {
  if (enforce && gate == Gate::NotMet) return Verdict::HypothesisNotMet;
  if (enforce && gate == Gate::Undecided) return Verdict::Indeterminate;
  return relative_margin >= -tol ? Verdict::Holds : Verdict::Violated;
}

IneqReport evaluate(StatementId id, const Polynomial& p, const Form& form,
                    const CheckOptions& opts) {
  IneqReport rep;
  rep.statement = id;
  rep.poly = p;
  rep.args = form.args;
  const double radius = form.radius;
  if (!form.rhs_point) {
    const AngularMax m =
        maximize_angle([&](double t) { return form.lhs(std::polar(radius, t)); }, opts.probe);
    rep.lhs = m.value;
    rep.rhs = form.rhs;
    rep.witness = std::polar(radius, m.angle);
  } else {
    const AngularMax m = maximize_angle(
        [&](double t) {
          const Complex z = std::polar(radius, t);
          const double b = form.rhs_point(z);
          return (form.lhs(z) - b) / (1.0 + b);
        },
        opts.probe);
    rep.witness = std::polar(radius, m.angle);
    rep.lhs = form.lhs(rep.witness);
    rep.rhs = form.rhs_point(rep.witness);
  }
  rep.margin = rep.rhs - rep.lhs;
  rep.relative_margin = rep.margin / (1.0 + rep.rhs);
  rep.hypothesis_met = form.gate == Gate::Met;
  rep.verdict = decide(form.gate, rep.relative_margin, opts.tol_verdict, opts.enforce_gates);
  rep.boundary_case = form.boundary;
  rep.note = form.note;
  if (id == StatementId::LEM2_2_2) rep.strict_margin = rep.margin;
  return rep;
}

IneqReport run(StatementId id, const Polynomial& p, const StatementArgs& args,
               const CheckOptions& opts) {
  if (id == StatementId::LEM3) {
    if (!args.params) throw DomainError("statement needs operator parameters");
    return check_lemma3(p, *args.params, opts);
  }
  return evaluate(id, p, build_form(id, p, args, opts, true), opts);
}

StatementArgs make_args(std::optional<OperatorParams> params, Complex alpha, Complex beta,
                        double R, double r) {
  StatementArgs a;
  a.params = std::move(params);
  a.alpha = alpha;
  a.beta = beta;
  a.R = R;
  a.r = r;
  return a;
}

double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale < 1e-300 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

std::string_view to_string(StatementId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

std::optional<StatementId> parse_statement(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

bool uses_operator(StatementId id) {
  switch (id) {
    case StatementId::THM1_1_11:
    case StatementId::THM2_1_15:
    case StatementId::THM3_1_17:
    case StatementId::COR2_1_18:
    case StatementId::LEM3:
    case StatementId::LEM4_2_3:
    case StatementId::LEM5_2_4:
    case StatementId::LEM6_2_5:
      return true;
    default:
      return false;
  }
}

bool has_gate(StatementId id) {
  switch (id) {
    case StatementId::I1_3:
    case StatementId::I1_4:
    case StatementId::THM_B_1_7:
    case StatementId::THM3_1_17:
    case StatementId::COR2_1_18:
    case StatementId::LEM1_2_1:
    case StatementId::LEM2_2_2:
    case StatementId::LEM3:
    case StatementId::LEM4_2_3:
    case StatementId::LEM6_2_5:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::HypothesisNotMet:
      return "hypothesis_not_met";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

Polynomial remark1_operand(const Polynomial& p, Complex alpha, Complex beta, double R) {
  const auto f = combine_factors(alpha, beta, R, p.degree());
  const Polynomial d = derivative(p);
  return axpy(R, dilate(d, R), f.shift - alpha, d);
}

IneqReport check_classical(const Polynomial& p, StatementId which, double R,
                           const CheckOptions& opts) {
  switch (which) {
    case StatementId::I1_1:
    case StatementId::I1_2:
    case StatementId::I1_3:
    case StatementId::I1_4:
      break;
    default:
      throw DomainError("not a classical statement");
  }
  StatementArgs a;
  a.R = R;
  return run(which, p, a, opts);
}

IneqReport check_theorem_a(const Polynomial& p, StatementId which, Complex alpha, Complex beta,
                           double R, double r, const CheckOptions& opts) {
  if (which != StatementId::THM_A_1_5 && which != StatementId::THM_A_1_6 &&
      which != StatementId::THM_B_1_7)
    throw DomainError("not a Theorem A/B statement");
  return run(which, p, make_args(std::nullopt, alpha, beta, R, r), opts);
}

IneqReport check_theorem1(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts) {
  return run(StatementId::THM1_1_11, p, make_args(params, alpha, beta, R, r), opts);
}

IneqReport check_remark1(const Polynomial& p, Complex alpha, Complex beta, double R, double r,
                         StatementId variant, const CheckOptions& opts) {
  if (variant != StatementId::RMK1_1_12 && variant != StatementId::RMK1_1_13 &&
      variant != StatementId::RMK1_1_14)
    throw DomainError("not a Remark 1 variant");
  return run(variant, p, make_args(std::nullopt, alpha, beta, R, r), opts);
}

IneqReport check_theorem2(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts) {
  return run(StatementId::THM2_1_15, p, make_args(params, alpha, beta, R, r), opts);
}

IneqReport check_corollary1(const Polynomial& p, double R, double r, const CheckOptions& opts) {
  return run(StatementId::COR1_1_16, p, make_args(std::nullopt, 1.0, 0.0, R, r), opts);
}

IneqReport check_theorem3(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts) {
  return run(StatementId::THM3_1_17, p, make_args(params, alpha, beta, R, r), opts);
}

IneqReport check_corollary2(const Polynomial& p, const OperatorParams& params, double R,
                            double r, const CheckOptions& opts) {
  return run(StatementId::COR2_1_18, p, make_args(params, 0.0, 0.0, R, r), opts);
}

IneqReport check_lemma(const Polynomial& p, StatementId which, const StatementArgs& args,
                       const CheckOptions& opts) {
  switch (which) {
    case StatementId::LEM1_2_1:
    case StatementId::LEM2_2_2:
    case StatementId::LEM4_2_3:
    case StatementId::LEM5_2_4:
    case StatementId::LEM6_2_5:
      return run(which, p, args, opts);
    default:
      throw DomainError("not a lemma with a modulus form");
  }
}

IneqReport check_lemma3(const Polynomial& p, const OperatorParams& params,
                        const CheckOptions& opts) {
  StatementArgs args;
  args.params = params;
  const OperatorParams checked = require_params(args, p, opts);
  args.params = checked;

  IneqReport rep;
  rep.statement = StatementId::LEM3;
  rep.poly = p;
  rep.args = args;
  rep.rhs = 1.0;

  std::string note;
  const Gate gate = disk_gate(p, 1.0, opts.tol_hypothesis, false, opts, note);
  rep.hypothesis_met = gate == Gate::Met;
  rep.note = note;

  const Polynomial bp = apply_b(checked, p);
  const RootSet rs = roots_or_empty(bp, opts.roots);
  if (!rs.converged) {
    rep.verdict = Verdict::Indeterminate;
    rep.note = "root search for B[P] did not converge";
    rep.lhs = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  for (const auto& z : rs.roots) {
    if (std::abs(z) >= rep.lhs) {
      rep.lhs = std::abs(z);
      rep.witness = z;
    }
  }
  rep.margin = rep.rhs - rep.lhs;
  rep.relative_margin = rep.margin / (1.0 + rep.rhs);
  // relative margin >= -tol/2 is exactly max|root| <= 1 + tol
  rep.verdict = decide(gate, rep.relative_margin, 0.5 * opts.tol_lemma3, opts.enforce_gates);
  return rep;
}

IneqReport check(StatementId id, const Polynomial& p, const StatementArgs& args,
                 const CheckOptions& opts) {
  return run(id, p, args, opts);
}

Tightness tightness(const Polynomial& p, StatementId id, const StatementArgs& args,
                    const CheckOptions& opts) {
  const Form form = build_form(id, p, args, opts, false);
  const double radius = form.radius;
  AngularMax m;
  if (!form.rhs_point) {
    if (!(form.rhs > 0.0)) throw DomainError("right-hand side is zero; ratio undefined");
    m = maximize_angle([&](double t) { return form.lhs(std::polar(radius, t)) / form.rhs; },
                       opts.probe);
  } else {
    const AngularMax low = maximize_angle(
        [&](double t) { return -form.rhs_point(std::polar(radius, t)); }, opts.probe);
    if (-low.value <= 1e-14 * (1.0 + p.max_coeff_modulus()))
      throw UnboundedRatioError("pointwise right-hand side vanishes on the circle");
    m = maximize_angle(
        [&](double t) {
          const Complex z = std::polar(radius, t);
          return form.lhs(z) / form.rhs_point(z);
        },
        opts.probe);
  }
  return {m.value, std::polar(radius, m.angle), m.angle};
}

double ratio_at(const Polynomial& p, StatementId id, const StatementArgs& args, Complex z,
                const CheckOptions& opts) {
  const Form form = build_form(id, p, args, opts, false);
  const double rhs = form.rhs_point ? form.rhs_point(z) : form.rhs;
  if (!(rhs > 0.0)) throw DomainError("right-hand side is zero; ratio undefined");
  return form.lhs(z) / rhs;
}

CrosscheckResult reduction_crosscheck(const Polynomial& p, Complex alpha, Complex beta, double R,
                                      double r, Complex lambda0, Complex lambda1,
                                      const CheckOptions& opts) {
  const int n = p.degree();
  if (n < 1) throw DomainError("reduction checks need degree >= 1");
  constexpr double kTol = 1e-10;
  CheckOptions ungated = opts;
  ungated.enforce_gates = false;

  CrosscheckResult out;
  auto leg = [&](std::string name, double x_lhs, double y_lhs, double x_rhs, double y_rhs) {
    const double err = std::max(rel_diff(x_lhs, y_lhs), rel_diff(x_rhs, y_rhs));
    out.legs.push_back({std::move(name), err, kTol, err <= kTol});
  };

  const OperatorParams id0 = OperatorParams(n, lambda0, 0.0, 0.0).checked(opts.tol_adm);
  const OperatorParams id1 = OperatorParams(n, 0.0, lambda1, 0.0).checked(opts.tol_adm);
  const double s0 = std::abs(lambda0);
  const double s1 = std::abs(lambda1) * n / 2.0;

  {
    const auto t = check_theorem1(p, id0, alpha, beta, R, r, ungated);
    const auto a = check_theorem_a(p, StatementId::THM_A_1_5, alpha, beta, R, r, ungated);
    leg("THM1_1_11[l0,0,0] = |l0| THM_A_1_5", t.lhs, s0 * a.lhs, t.rhs, s0 * a.rhs);
  }
  {
    const auto t = check_theorem2(p, id0, alpha, beta, R, r, ungated);
    const auto a = check_theorem_a(p, StatementId::THM_A_1_6, alpha, beta, R, r, ungated);
    leg("THM2_1_15[l0,0,0] = |l0| THM_A_1_6", t.lhs, s0 * a.lhs, t.rhs, s0 * a.rhs);
  }
  {
    const auto t = check_theorem3(p, id0, alpha, beta, R, r, ungated);
    const auto a = check_theorem_a(p, StatementId::THM_B_1_7, alpha, beta, R, r, ungated);
    leg("THM3_1_17[l0,0,0] = |l0| THM_B_1_7", t.lhs, s0 * a.lhs, t.rhs, s0 * a.rhs);
  }
  {
    const auto t = check_theorem1(p, id1, alpha, beta, R, r, ungated);
    const auto m = check_remark1(p, alpha, beta, R, r, StatementId::RMK1_1_12, ungated);
    leg("THM1_1_11[0,l1,0] = |l1|(n/2) r RMK1_1_12", t.lhs, s1 * r * m.lhs, t.rhs,
        s1 * r * m.rhs);
  }
  {
    const auto a = check_remark1(p, 0.0, 0.0, 1.0, r, StatementId::RMK1_1_12, ungated);
    const auto b = check_remark1(p, 0.0, 0.0, 1.0, r, StatementId::RMK1_1_14, ungated);
    leg("RMK1_1_12[alpha=beta=0,R=1] = RMK1_1_14", a.lhs, b.lhs, a.rhs, b.rhs);
  }
  {
    // (R P'(Rz) - P'(z)) / (R - 1) is a polynomial of degree n-1 in h = R - 1,
    // so n+1 nodes extrapolate it to h = 0 exactly up to rounding.
    const int nodes = n + 1;
    std::vector<double> hs(static_cast<std::size_t>(nodes));
    std::vector<Polynomial> quotients;
    std::vector<double> rhs_quotients;
    const double M = max_modulus(p, 1.0, opts.probe).value;
    for (int j = 0; j < nodes; ++j) {
      const double h = 0.05 * (j + 1);
      hs[static_cast<std::size_t>(j)] = h;
      const Polynomial y = remark1_operand(p, 1.0, 0.0, 1.0 + h);
      quotients.push_back(axpy(1.0 / h, y, 0.0, y));
      const auto f = combine_factors(1.0, 0.0, 1.0 + h, n);
      rhs_quotients.push_back(n * std::abs(f.outer) * std::pow(r, n - 1) * M / h);
    }
    // Neville at h = 0
    for (int level = 1; level < nodes; ++level) {
      for (int j = nodes - 1; j >= level; --j) {
        const double hj = hs[static_cast<std::size_t>(j)];
        const double hl = hs[static_cast<std::size_t>(j - level)];
        const double wa = hj / (hj - hl);
        const double wb = -hl / (hj - hl);
        auto& qj = quotients[static_cast<std::size_t>(j)];
        qj = axpy(wb, qj, wa, quotients[static_cast<std::size_t>(j - 1)]);
        auto& rj = rhs_quotients[static_cast<std::size_t>(j)];
        rj = wb * rj + wa * rhs_quotients[static_cast<std::size_t>(j - 1)];
      }
    }
    const Polynomial limit = quotients.back();
    const double lim_lhs =
        maximize_angle([&](double t) { return std::abs(eval(limit, std::polar(r, t))); },
                       opts.probe)
            .value;
    const auto b = check_remark1(p, 1.0, 0.0, 1.0, r, StatementId::RMK1_1_13, ungated);
    leg("lim_{R->1} RMK1_1_12[alpha=1,beta=0]/(R-1) = RMK1_1_13", lim_lhs, b.lhs,
        rhs_quotients.back(), b.rhs);
  }
  {
    const auto t = check_theorem3(p, id1, 0.0, 0.0, 1.0, 1.0, ungated);
    const auto c = check_classical(p, StatementId::I1_3, 1.0, ungated);
    leg("THM3_1_17[0,l1,0; alpha=beta=0, R=1] = |l1|(n/2) I1_3", t.lhs, s1 * c.lhs, t.rhs,
        s1 * c.rhs);
  }
  {
    const auto t = check_corollary2(p, id0, R, 1.0, ungated);
    const auto c = check_classical(p, StatementId::I1_4, R, ungated);
    leg("COR2_1_18[l0,0,0] = |l0| I1_4", t.lhs, s0 * c.lhs, t.rhs, s0 * c.rhs);
  }

  out.ok = std::all_of(out.legs.begin(), out.legs.end(), [](const auto& l) { return l.ok; });
  return out;
}

}  // namespace bineq
