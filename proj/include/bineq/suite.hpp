#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bineq/generators.hpp"
#include "bineq/inequalities.hpp"
#include "bineq/json_io.hpp"

namespace bineq {

using LambdaTriple = std::array<Complex, 3>;

struct SuiteConfig {
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency; BINEQ_THREADS overrides
  CheckOptions check;
  double sharpness_tol = 1e-6;
  double corollary1_margin_tol = 1e-8;

  int degree_lo = 1;
  int degree_hi = 8;
  std::vector<LambdaTriple> lambdas;
  std::vector<Complex> alpha_grid;
  std::vector<Complex> beta_grid;
  // (alpha, beta) pairs added to the grid product
  std::vector<std::pair<Complex, Complex>> special_pairs;
  std::vector<double> R_grid;
  std::vector<double> r_grid;
  std::vector<double> k_grid;

  // cases per statement; statements absent from the map are not run
  std::map<StatementId, int> cases;
  int lemma3_polys = 200;
  int crosscheck_cases = 50;
  std::vector<int> sharpness_degrees;
  bool sharpness = true;
  bool negative_controls = true;
};

SuiteConfig default_suite_config();

/// Starts from the defaults and applies every key present. Unknown keys and
/// inadmissible lambda triples are UsageErrors.
SuiteConfig suite_config_from_json(const Json& j);
Json to_json(const SuiteConfig& cfg);

struct StatementTally {
  int holds = 0;
  int violated = 0;
  int hypothesis_not_met = 0;
  int indeterminate = 0;
  double worst_relative_margin = 0.0;  // over holds/violated reports
  bool any_decided = false;
  std::optional<double> min_strict_margin;

  int total() const { return holds + violated + hypothesis_not_met + indeterminate; }
};

struct SharpnessResult {
  StatementId statement = StatementId::I1_1;
  std::string label;
  Polynomial poly;
  StatementArgs args;
  double ratio = 0.0;
  Complex witness{};
  std::optional<double> lower;  // absent: measured only
  std::optional<double> upper;
  std::optional<Complex> expected_witness;
  std::optional<double> ratio_at_expected;
  bool pass = true;
};

struct NegativeControl {
  std::string label;
  IneqReport ungated;
  IneqReport gated;
  bool fired = false;        // ungated report is violated
  bool gate_blocked = false; // gated report is hypothesis_not_met
};

struct CampaignEntry {
  std::size_t case_index = 0;
  IneqReport report;
};

struct SuiteReport {
  SuiteConfig config;
  std::map<StatementId, StatementTally> tallies;
  std::vector<CampaignEntry> reports;  // campaign order: statement, case, r
  std::vector<SharpnessResult> sharpness;
  std::vector<CrosscheckResult> crosschecks;
  std::vector<NegativeControl> negative_controls;
  double wall_time_seconds = 0.0;
  int exit_status = 0;  // 0 pass, 1 violation

  bool campaigns_clean() const;
  bool sharpness_clean() const;
  bool crosschecks_clean() const;
  bool negative_controls_clean() const;
};

/// Every enabled campaign, sharpness probe, cross-check and negative control.
/// Output is independent of the thread count.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Suite summary without the per-case reports and without wall time, so the
/// serialization is byte-identical for a fixed config.
Json to_json(const SuiteReport& rep);
/// One JSON object per line for every campaign report.
std::string reports_jsonl(const SuiteReport& rep);

/// Admissible lambda triples for operator degree n (those with u identically
/// zero at this degree are skipped). Throws UsageError for inadmissible ones.
std::vector<OperatorParams> admissible_params(const std::vector<LambdaTriple>& lambdas, int n,
                                              double tol_adm);

struct ScanConfig {
  std::vector<StatementId> statements;
  std::vector<Polynomial> polys;
  std::vector<LambdaTriple> lambdas;
  std::vector<Complex> alphas;
  std::vector<Complex> betas;
  std::vector<double> Rs;
  double r = 1.0;
  double k = 1.0;
  CheckOptions check;
};

ScanConfig default_scan_config();
ScanConfig scan_config_from_json(const Json& j);

/// CSV: header plus one row per grid point, ordered by (statement, poly,
/// lambda, alpha, beta, R) index. Throws UsageError on an empty statement list
/// or an empty grid axis.
std::string run_scan(const ScanConfig& cfg);

int resolve_threads(int configured);

}  // namespace bineq
