#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bineq/b_operator.hpp"
#include "bineq/circle_norms.hpp"
#include "bineq/polynomial.hpp"
#include "bineq/roots.hpp"

namespace bineq {

enum class StatementId {
  I1_1,
  I1_2,
  I1_3,
  I1_4,
  THM_A_1_5,
  THM_A_1_6,
  THM_B_1_7,
  THM1_1_11,
  RMK1_1_12,
  RMK1_1_13,
  RMK1_1_14,
  THM2_1_15,
  COR1_1_16,
  THM3_1_17,
  COR2_1_18,
  LEM1_2_1,
  LEM2_2_2,
  LEM3,
  LEM4_2_3,
  LEM5_2_4,
  LEM6_2_5,
};

inline constexpr std::array kAllStatements = {
    StatementId::I1_1,      StatementId::I1_2,      StatementId::I1_3,
    StatementId::I1_4,      StatementId::THM_A_1_5, StatementId::THM_A_1_6,
    StatementId::THM_B_1_7, StatementId::THM1_1_11, StatementId::RMK1_1_12,
    StatementId::RMK1_1_13, StatementId::RMK1_1_14, StatementId::THM2_1_15,
    StatementId::COR1_1_16, StatementId::THM3_1_17, StatementId::COR2_1_18,
    StatementId::LEM1_2_1,  StatementId::LEM2_2_2,  StatementId::LEM3,
    StatementId::LEM4_2_3,  StatementId::LEM5_2_4,  StatementId::LEM6_2_5,
};

std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement(std::string_view name);

/// Statements built on the B operator (they need OperatorParams).
bool uses_operator(StatementId id);
/// Statements whose hypothesis is checked at run time.
bool has_gate(StatementId id);

enum class Verdict { Holds, Violated, HypothesisNotMet, Indeterminate };
std::string_view to_string(Verdict v);

/// Every parameter any statement may take; each checker reads what it needs.
struct StatementArgs {
  std::optional<OperatorParams> params;
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
  double R = 1.0;
  double r = 1.0;
  double k = 1.0;
};

struct CheckOptions {
  ProbeConfig probe;
  RootConfig roots;
  double tol_verdict = 1e-8;     // relative margin floor for "holds"
  double tol_hypothesis = 1e-8;  // root-location slack in hypothesis gates
  double tol_lemma3 = 1e-8;      // containment slack for the zeros of B[P]
  double tol_adm = kDefaultAdmissibilityTol;
  bool enforce_gates = true;
};

struct IneqReport {
  StatementId statement = StatementId::I1_1;
  Polynomial poly;
  StatementArgs args;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double relative_margin = 0.0;
  Complex witness{};
  Verdict verdict = Verdict::Holds;
  bool hypothesis_met = true;
  std::optional<double> strict_margin;  // Lemma 2: observed positive margin
  bool boundary_case = false;           // r == 1 for statements posed on |z| > 1
  std::string note;
};

// Classical bounds: I1_1 (Bernstein), I1_2 (maximum modulus), I1_3 and I1_4
// (zero-free in |z| < 1).
IneqReport check_classical(const Polynomial& p, StatementId which, double R,
                           const CheckOptions& opts = {});

// THM_A_1_5, THM_A_1_6 and THM_B_1_7, evaluated directly from P(Rz) and P(z)
// without the operator. These are the independent side of the lambda=(l0,0,0)
// reduction checks.
IneqReport check_theorem_a(const Polynomial& p, StatementId which, Complex alpha, Complex beta,
                           double R, double r, const CheckOptions& opts = {});

IneqReport check_theorem1(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts = {});

/// RMK1_1_12 uses alpha, beta, R; RMK1_1_13 and RMK1_1_14 ignore them.
IneqReport check_remark1(const Polynomial& p, Complex alpha, Complex beta, double R, double r,
                         StatementId variant, const CheckOptions& opts = {});

IneqReport check_theorem2(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts = {});

IneqReport check_corollary1(const Polynomial& p, double R, double r,
                            const CheckOptions& opts = {});

IneqReport check_theorem3(const Polynomial& p, const OperatorParams& params, Complex alpha,
                          Complex beta, double R, double r, const CheckOptions& opts = {});

IneqReport check_corollary2(const Polynomial& p, const OperatorParams& params, double R,
                            double r, const CheckOptions& opts = {});

/// LEM1_2_1, LEM2_2_2, LEM4_2_3, LEM5_2_4, LEM6_2_5.
IneqReport check_lemma(const Polynomial& p, StatementId which, const StatementArgs& args,
                       const CheckOptions& opts = {});

/// Zeros of B[P] stay in the closed unit disk. An unconverged root search
/// yields Verdict::Indeterminate.
IneqReport check_lemma3(const Polynomial& p, const OperatorParams& params,
                        const CheckOptions& opts = {});

/// Dispatch on the statement id.
IneqReport check(StatementId id, const Polynomial& p, const StatementArgs& args,
                 const CheckOptions& opts = {});

struct Tightness {
  double ratio = 0.0;
  Complex witness{};
  double witness_angle = 0.0;
};

/// max over |z| = args.r of LHS(z)/RHS. Ratio 1 marks a sharp instance.
/// Preconditions are enforced, hypothesis gates are not. Throws DomainError
/// when RHS is zero and for LEM3, which has no pointwise form.
Tightness tightness(const Polynomial& p, StatementId id, const StatementArgs& args,
                    const CheckOptions& opts = {});

/// LHS(z)/RHS at one point; z is taken as given, not projected onto |z| = r.
double ratio_at(const Polynomial& p, StatementId id, const StatementArgs& args, Complex z,
                const CheckOptions& opts = {});

/// R P'(Rz) - alpha P'(z) + beta(((R+1)/2)^n - |alpha|) P'(z), the operand of
/// RMK1_1_12, with n the nominal degree of P.
Polynomial remark1_operand(const Polynomial& p, Complex alpha, Complex beta, double R);

struct CrosscheckLeg {
  std::string name;
  double rel_error = 0.0;
  double tol = 0.0;
  bool ok = false;
};

struct CrosscheckResult {
  bool ok = false;
  std::vector<CrosscheckLeg> legs;
};

/// Compares operator statements at special lambda triples against the
/// classical statements they reduce to. Every leg must agree to 1e-10
/// relative, on both sides of the inequality.
CrosscheckResult reduction_crosscheck(const Polynomial& p, Complex alpha, Complex beta, double R,
                                      double r, Complex lambda0 = 2.0, Complex lambda1 = 1.0,
                                      const CheckOptions& opts = {});

}  // namespace bineq
