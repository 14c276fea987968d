#include "bineq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

constexpr int kMaxDegree = 16;

// Runs fn(i) for i in [0, count) on a worker pool. Results are written by
// index, so ordering never depends on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Complex> polar_grid(std::initializer_list<double> moduli,
                                std::initializer_list<double> phases) {
  std::vector<Complex> out;
  for (double m : moduli) {
    if (m == 0.0) {
      out.emplace_back(0.0, 0.0);
      continue;
    }
    for (double ph : phases) out.push_back(std::polar(m, ph));
  }
  return out;
}

std::uint64_t statement_stream(StatementId id) { return 0x100 + static_cast<std::uint64_t>(id); }
constexpr std::uint64_t kCrosscheckStream = 0x51;
constexpr std::uint64_t kNegativeStream = 0x52;

struct AlphaBeta {
  Complex alpha;
  Complex beta;
};

std::vector<AlphaBeta> alpha_beta_pairs(const SuiteConfig& cfg) {
  std::vector<AlphaBeta> out;
  for (const auto& a : cfg.alpha_grid)
    for (const auto& b : cfg.beta_grid) out.push_back({a, b});
  for (const auto& [a, b] : cfg.special_pairs) out.push_back({a, b});
  return out;
}

bool uses_circle_radius(StatementId id) {
  switch (id) {
    case StatementId::I1_1:
    case StatementId::I1_2:
    case StatementId::I1_3:
    case StatementId::I1_4:
    case StatementId::LEM1_2_1:
    case StatementId::LEM2_2_2:
    case StatementId::LEM3:
      return false;
    default:
      return true;
  }
}

GenSpec family_for(StatementId id, std::size_t index, const SuiteConfig& cfg, CaseRng& rng) {
  GenSpec g;
  g.degree_lo = cfg.degree_lo;
  g.degree_hi = cfg.degree_hi;
  switch (id) {
    case StatementId::I1_3:
    case StatementId::I1_4:
    case StatementId::THM_B_1_7:
    case StatementId::THM3_1_17:
    case StatementId::COR2_1_18:
    case StatementId::LEM4_2_3:
    case StatementId::LEM6_2_5:
      g.family = Family::RootsOutsideDisk;
      g.min_mod = 1.0;
      g.max_mod = 3.0;
      break;
    case StatementId::LEM1_2_1:
      g.family = Family::RootsInDisk;
      g.k = rng.pick(cfg.k_grid);
      break;
    case StatementId::LEM2_2_2:
    case StatementId::LEM3:
      g.family = Family::RootsInDisk;
      g.k = 1.0;
      break;
    default:
      // statements without a hypothesis cycle through all three families
      switch (index % 3) {
        case 0:
          g.family = Family::RandomCoefficients;
          break;
        case 1:
          g.family = Family::RootsInDisk;
          break;
        default:
          g.family = Family::RootsOutsideDisk;
          break;
      }
  }
  return g;
}

struct Context {
  const SuiteConfig& cfg;
  std::vector<std::vector<OperatorParams>> params_by_degree;  // index n
  std::vector<AlphaBeta> pairs;
  std::vector<double> R_above_one;

  const std::vector<OperatorParams>& params(int n) const {
    return params_by_degree[static_cast<std::size_t>(n)];
  }
};

std::vector<IneqReport> run_case(StatementId id, std::size_t index, const Context& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  CaseRng rng(derive_seed(cfg.seed, statement_stream(id), index));
  const GenSpec g = family_for(id, index, cfg, rng);
  const Polynomial p = generate_one(g, rng);
  const int n = p.degree();

  StatementArgs args;
  args.k = g.k;
  const AlphaBeta ab = rng.pick(ctx.pairs);
  args.alpha = ab.alpha;
  args.beta = ab.beta;
  args.R = (id == StatementId::LEM1_2_1 || id == StatementId::LEM2_2_2) ? rng.pick(ctx.R_above_one)
                                                                        : rng.pick(cfg.R_grid);

  std::vector<IneqReport> out;
  if (id == StatementId::LEM3) {
    for (const auto& params : ctx.params(n)) out.push_back(check_lemma3(p, params, cfg.check));
    return out;
  }
  if (uses_operator(id)) args.params = rng.pick(ctx.params(n));

  const std::vector<double> radii =
      uses_circle_radius(id) ? cfg.r_grid : std::vector<double>{1.0};
  for (double r : radii) {
    args.r = r;
    out.push_back(check(id, p, args, cfg.check));
  }
  return out;
}

void tally(StatementTally& t, const IneqReport& rep) {
  switch (rep.verdict) {
    case Verdict::Holds:
      ++t.holds;
      break;
    case Verdict::Violated:
      ++t.violated;
      break;
    case Verdict::HypothesisNotMet:
      ++t.hypothesis_not_met;
      break;
    case Verdict::Indeterminate:
      ++t.indeterminate;
      break;
  }
  if (rep.verdict == Verdict::Holds || rep.verdict == Verdict::Violated) {
    if (!t.any_decided || rep.relative_margin < t.worst_relative_margin)
      t.worst_relative_margin = rep.relative_margin;
    t.any_decided = true;
    if (rep.strict_margin)
      t.min_strict_margin = t.min_strict_margin ? std::min(*t.min_strict_margin, *rep.strict_margin)
                                                : *rep.strict_margin;
  }
}

// --- sharpness -------------------------------------------------------------

struct SharpnessProbe {
  StatementId id;
  std::string label;
  Polynomial poly;
  StatementArgs args;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<Complex> expected_witness;
  bool via_margin = false;  // compare lhs/rhs of a check instead of tightness
};

bool real_nonneg(const OperatorParams& p) {
  return std::all_of(p.lambdas().begin(), p.lambdas().end(),
                     [](Complex l) { return l.imag() == 0.0 && l.real() >= 0.0; });
}

std::string describe_args(const StatementArgs& a) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "alpha=(%.3g,%.3g) beta=(%.3g,%.3g) R=%.3g", a.alpha.real(),
                a.alpha.imag(), a.beta.real(), a.beta.imag(), a.R);
  return buf;
}

std::vector<SharpnessProbe> sharpness_probes(const Context& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  const double tol = cfg.sharpness_tol;
  std::vector<SharpnessProbe> out;
  auto add = [&](StatementId id, std::string label, const Polynomial& p, const StatementArgs& a,
                 std::optional<double> lo, std::optional<double> hi,
                 std::optional<Complex> witness = std::nullopt, bool via_margin = false) {
    out.push_back({id, std::move(label), p, a, lo, hi, witness, via_margin});
  };

  for (int n : cfg.sharpness_degrees) {
    for (Complex scale : {Complex{1.0, 0.0}, Complex{0.0, 2.0}}) {
      const Polynomial p = Polynomial::monomial(n, scale);
      const std::string pl = scale == Complex{1.0, 0.0} ? "z^n" : "2i z^n";
      add(StatementId::I1_1, pl, p, {}, 1 - tol, 1 + tol);
      for (double R : cfg.R_grid) {
        StatementArgs a;
        a.R = R;
        add(StatementId::I1_2, pl, p, a, 1 - tol, 1 + tol);
        add(StatementId::RMK1_1_13, pl, p, {}, 1 - tol, 1 + tol);
        add(StatementId::RMK1_1_14, pl, p, {}, 1 - tol, 1 + tol);
        if (R > 1.0) {
          StatementArgs c;
          c.R = R;
          add(StatementId::COR1_1_16, pl, p, c, 1 - tol, 1 + tol);
        }
        for (const auto& ab : ctx.pairs) {
          StatementArgs t;
          t.alpha = ab.alpha;
          t.beta = ab.beta;
          t.R = R;
          const auto f = combine_factors(ab.alpha, ab.beta, R, n);
          // outer = 0 makes both sides vanish identically; nothing to measure
          if (std::abs(f.outer) <= 1e-12) continue;
          add(StatementId::THM_A_1_5, pl, p, t, 1 - tol, 1 + tol);
          add(StatementId::THM_A_1_6, pl, p, t, 1 - tol, 1 + tol);
          add(StatementId::RMK1_1_12, pl, p, t, 1 - tol, 1 + tol);
          for (const auto& params : ctx.params(n)) {
            t.params = params;
            add(StatementId::THM1_1_11, pl, p, t, 1 - tol, 1 + tol);
          }
        }
      }
    }

    const Polynomial plus_one = axpy(1.0, Polynomial::monomial(n), 1.0, Polynomial({1.0}));
    add(StatementId::I1_3, "z^n+1", plus_one, {}, 1 - tol, 1 + tol);
    for (double R : cfg.R_grid) {
      StatementArgs a;
      a.R = R;
      add(StatementId::I1_4, "z^n+1", plus_one, a, 1 - tol, 1 + tol);
      for (const auto& ab : ctx.pairs) {
        const bool real_unit = ab.alpha.imag() == 0.0 && ab.alpha.real() >= 0.0 &&
                               ab.beta.imag() == 0.0 && ab.beta.real() >= 0.0;
        if (!real_unit) continue;
        if (std::abs(combine_factors(ab.alpha, ab.beta, R, n).outer) <= 1e-12) continue;
        StatementArgs t = a;
        t.alpha = ab.alpha;
        t.beta = ab.beta;
        add(StatementId::THM_B_1_7, "z^n+1", plus_one, t, 1 - tol, 1 + tol, Complex{1.0, 0.0});
      }
      for (const auto& params : ctx.params(n)) {
        StatementArgs t = a;
        t.params = params;
        if (real_nonneg(params)) {
          add(StatementId::THM3_1_17, "z^n+1", plus_one, t, 1 - tol, 1 + tol, Complex{1.0, 0.0});
          add(StatementId::COR2_1_18, "z^n+1", plus_one, t, 1 - tol, 1 + tol, Complex{1.0, 0.0});
        }
        // no equality case is claimed for THM2_1_15; measured only
        add(StatementId::THM2_1_15, "z^n+1", plus_one, t, std::nullopt, std::nullopt);
      }
      if (R > 1.0) {
        StatementArgs t = a;
        t.params = OperatorParams(n, 0.0, 1.0, 0.0).checked(cfg.check.tol_adm);
        t.alpha = 1.0;
        t.beta = 0.0;
        const double m = cfg.corollary1_margin_tol;
        add(StatementId::THM2_1_15, "z^n [COR1 via THM2]", Polynomial::monomial(n), t, 1 - m,
            1 + m, std::nullopt, true);
      }
    }
  }
  return out;
}

SharpnessResult run_probe(const SharpnessProbe& probe, const CheckOptions& opts) {
  SharpnessResult res;
  res.statement = probe.id;
  res.label = probe.label + " " + describe_args(probe.args);
  res.poly = probe.poly;
  res.args = probe.args;
  res.lower = probe.lower;
  res.upper = probe.upper;
  res.expected_witness = probe.expected_witness;
  if (probe.via_margin) {
    CheckOptions ungated = opts;
    ungated.enforce_gates = false;
    const IneqReport rep = check(probe.id, probe.poly, probe.args, ungated);
    res.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    res.witness = rep.witness;
  } else {
    Tightness t;
    try {
      t = tightness(probe.poly, probe.id, probe.args, opts);
    } catch (const DomainError& e) {
      throw DomainError(std::string(to_string(probe.id)) + " sharpness probe " + res.label + ": " +
                        e.what());
    }
    res.ratio = t.ratio;
    res.witness = t.witness;
  }
  if (res.lower && res.ratio < *res.lower) res.pass = false;
  if (res.upper && res.ratio > *res.upper) res.pass = false;
  if (res.expected_witness) {
    // the extremal point must attain the bound; other maximizers may tie with it
    const double at = ratio_at(probe.poly, probe.id, probe.args, *res.expected_witness, opts);
    res.ratio_at_expected = at;
    if (res.lower && at < *res.lower) res.pass = false;
    if (at < res.ratio - 1e-6) res.pass = false;
  }
  return res;
}

// --- negative controls -------------------------------------------------------

struct Candidate {
  Polynomial poly;
  StatementArgs args;
};

std::vector<Candidate> violation_pool(StatementId id, const Context& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  std::vector<Polynomial> polys;
  const bool disk_hypothesis =
      id == StatementId::LEM1_2_1 || id == StatementId::LEM2_2_2 || id == StatementId::LEM3;
  GenSpec g;
  g.degree_lo = cfg.degree_lo;
  g.degree_hi = cfg.degree_hi;
  g.seed = cfg.seed;
  g.stream = kNegativeStream;
  if (disk_hypothesis) {
    g.family = Family::RootsOutsideDisk;
    g.min_mod = 1.5;
    g.max_mod = 3.0;
    for (double R : ctx.R_above_one) polys.push_back(from_roots(std::vector<Complex>{R}, 1.0));
  } else {
    g.family = Family::RootsInDisk;
    g.k = 0.5;
    std::set<int> degrees{cfg.degree_lo, std::min(cfg.degree_lo + 1, cfg.degree_hi),
                          (cfg.degree_lo + cfg.degree_hi) / 2, cfg.degree_hi};
    for (int n : degrees) polys.push_back(Polynomial::monomial(n));
  }
  for (std::uint64_t i = 0; i < 4; ++i) polys.push_back(generate_one(g, i));

  std::vector<Candidate> out;
  for (const auto& p : polys) {
    const int n = p.degree();
    std::vector<std::optional<OperatorParams>> params{std::nullopt};
    if (uses_operator(id)) {
      params.clear();
      const auto& avail = ctx.params(n);
      for (std::size_t j = 0; j < std::min<std::size_t>(2, avail.size()); ++j)
        params.emplace_back(avail[j]);
    }
    for (const auto& pr : params) {
      if (id == StatementId::LEM3) {
        StatementArgs a;
        a.params = pr;
        out.push_back({p, a});
        continue;
      }
      const std::vector<double>& Rs =
          id == StatementId::LEM1_2_1 || id == StatementId::LEM2_2_2 ? ctx.R_above_one
                                                                       : cfg.R_grid;
      const std::vector<double> ks = id == StatementId::LEM1_2_1 ? cfg.k_grid
                                                                  : std::vector<double>{1.0};
      const std::vector<double> rs = uses_circle_radius(id)
                                         ? std::vector<double>{1.0, cfg.r_grid.back()}
                                         : std::vector<double>{1.0};
      for (double R : Rs)
        for (double k : ks)
          for (double r : rs)
            for (const AlphaBeta& ab : {AlphaBeta{0.0, 0.0}, AlphaBeta{1.0, 0.0}}) {
              StatementArgs a;
              a.params = pr;
              a.R = R;
              a.k = k;
              a.r = r;
              a.alpha = ab.alpha;
              a.beta = ab.beta;
              out.push_back({p, a});
            }
    }
  }
  return out;
}

NegativeControl make_control(std::string label, StatementId id, const Polynomial& p,
                             const StatementArgs& args, const CheckOptions& opts) {
  CheckOptions ungated = opts;
  ungated.enforce_gates = false;
  CheckOptions gated = opts;
  gated.enforce_gates = true;
  NegativeControl nc;
  nc.label = std::move(label);
  nc.ungated = check(id, p, args, ungated);
  nc.gated = check(id, p, args, gated);
  nc.fired = nc.ungated.verdict == Verdict::Violated;
  nc.gate_blocked = nc.gated.verdict == Verdict::HypothesisNotMet;
  return nc;
}

NegativeControl scanned_control(StatementId id, const Context& ctx) {
  CheckOptions ungated = ctx.cfg.check;
  ungated.enforce_gates = false;
  const auto pool = violation_pool(id, ctx);
  std::optional<std::size_t> worst;
  double worst_margin = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const IneqReport rep = check(id, pool[i].poly, pool[i].args, ungated);
    if (rep.verdict != Verdict::Violated && rep.verdict != Verdict::Holds) continue;
    if (!worst || rep.relative_margin < worst_margin) {
      worst = i;
      worst_margin = rep.relative_margin;
    }
  }
  if (!worst) throw UsageError("negative-control scan found no decidable candidate");
  return make_control(std::string(to_string(id)) + " scanned worst case", id, pool[*worst].poly,
                      pool[*worst].args, ctx.cfg.check);
}

// --- config parsing -------------------------------------------------------

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw UsageError(std::string(what) + " must be a nonempty list");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number() || !std::isfinite(x.get<double>()))
      throw UsageError(std::string(what) + " entries must be finite numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<Complex> complex_list(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw UsageError(std::string(what) + " must be a nonempty list");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

LambdaTriple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw UsageError("lambda triple must have 3 entries");
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

Json triple_to_json(const LambdaTriple& t) {
  return Json::array({complex_to_json(t[0]), complex_to_json(t[1]), complex_to_json(t[2])});
}

template <class F>
void with_keys(const Json& j, std::initializer_list<const char*> allowed, const char* section,
               F&& body) {
  if (!j.is_object()) throw UsageError(std::string(section) + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return it.key() == k; }))
      throw UsageError(std::string("unknown key '") + it.key() + "' in " + section);
  }
  body();
}

double get_number(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number() || !std::isfinite(v.get<double>()))
    throw UsageError(std::string("'") + key + "' must be a finite number");
  return v.get<double>();
}

int get_int(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw UsageError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

bool get_bool(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_boolean()) throw UsageError(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

void validate(const SuiteConfig& cfg) {
  if (cfg.degree_lo < 1 || cfg.degree_hi < cfg.degree_lo || cfg.degree_hi > kMaxDegree)
    throw UsageError("degrees must satisfy 1 <= lo <= hi <= 16");
  if (cfg.lambdas.empty()) throw UsageError("at least one lambda triple is required");
  if (cfg.alpha_grid.empty() || cfg.beta_grid.empty())
    throw UsageError("alpha and beta grids must be nonempty");
  auto unit = [](Complex z) { return std::abs(z) <= 1.0 + 1e-12; };
  for (const auto& a : cfg.alpha_grid)
    if (!unit(a)) throw UsageError("alpha grid entries need |alpha| <= 1");
  for (const auto& b : cfg.beta_grid)
    if (!unit(b)) throw UsageError("beta grid entries need |beta| <= 1");
  for (const auto& [a, b] : cfg.special_pairs)
    if (!unit(a) || !unit(b)) throw UsageError("special pairs need |alpha|, |beta| <= 1");
  if (cfg.R_grid.empty() || cfg.r_grid.empty() || cfg.k_grid.empty())
    throw UsageError("R, r and k grids must be nonempty");
  for (double R : cfg.R_grid)
    if (!(R >= 1.0)) throw UsageError("R grid entries must be >= 1");
  for (double r : cfg.r_grid)
    if (!(r >= 1.0)) throw UsageError("r grid entries must be >= 1");
  for (double k : cfg.k_grid)
    if (!(k > 0.0 && k <= 1.0)) throw UsageError("k grid entries must lie in (0, 1]");
  for (const auto& [id, n] : cfg.cases)
    if (n < 0) throw UsageError("case counts must be nonnegative");
  if (cfg.lemma3_polys < 0 || cfg.crosscheck_cases < 0)
    throw UsageError("case counts must be nonnegative");
  for (int n : cfg.sharpness_degrees)
    if (n < 1 || n > kMaxDegree) throw UsageError("sharpness degrees must lie in [1, 16]");
  try {
    validate(cfg.check.probe);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.check.tol_verdict >= 0.0) || !(cfg.check.tol_hypothesis >= 0.0) ||
      !(cfg.check.tol_lemma3 >= 0.0) || !(cfg.check.tol_adm >= 0.0) ||
      !(cfg.sharpness_tol >= 0.0) || !(cfg.corollary1_margin_tol >= 0.0))
    throw UsageError("tolerances must be nonnegative");
  if (cfg.check.roots.max_sweeps < 1 || !(cfg.check.roots.residual_tol > 0.0))
    throw UsageError("root settings must be positive");
}

Context make_context(const SuiteConfig& cfg) {
  validate(cfg);
  Context ctx{cfg, {}, alpha_beta_pairs(cfg), {}};
  ctx.params_by_degree.resize(static_cast<std::size_t>(kMaxDegree) + 1);
  std::set<int> degrees;
  for (int n = cfg.degree_lo; n <= cfg.degree_hi; ++n) degrees.insert(n);
  for (int n : cfg.sharpness_degrees) degrees.insert(n);
  for (int n : degrees) {
    ctx.params_by_degree[static_cast<std::size_t>(n)] =
        admissible_params(cfg.lambdas, n, cfg.check.tol_adm);
    if (ctx.params_by_degree[static_cast<std::size_t>(n)].empty())
      throw UsageError("no usable lambda triple for degree " + std::to_string(n));
  }
  for (double R : cfg.R_grid)
    if (R > 1.0) ctx.R_above_one.push_back(R);
  if (ctx.R_above_one.empty()) throw UsageError("R grid needs an entry above 1 for the lemmas");
  return ctx;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int resolve_threads(int configured) {
  if (const char* env = std::getenv("BINEQ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  if (configured >= 1) return configured;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<OperatorParams> admissible_params(const std::vector<LambdaTriple>& lambdas, int n,
                                              double tol_adm) {
  std::vector<OperatorParams> out;
  for (const auto& t : lambdas) {
    OperatorParams params = [&] {
      try {
        return OperatorParams(n, t);
      } catch (const DomainError& e) {
        throw UsageError(std::string("bad lambda triple: ") + e.what());
      }
    }();
    if (u_polynomial(params).coeffs()[0] == Complex{} && u_polynomial(params).degree() == 0)
      continue;  // u identically zero at this degree; the operator is void here
    params = params.checked(tol_adm);
    if (params.admissibility() != Admissibility::Admissible) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "lambda triple (%g%+gi, %g%+gi, %g%+gi) is not admissible for n = %d",
                    t[0].real(), t[0].imag(), t[1].real(), t[1].imag(), t[2].real(), t[2].imag(),
                    n);
      throw UsageError(buf);
    }
    out.push_back(std::move(params));
  }
  return out;
}

SuiteConfig default_suite_config() {
  SuiteConfig cfg;
  const Complex i{0.0, 1.0};
  cfg.lambdas = {
      {1.0, 0.0, 0.0},         {0.0, 1.0, 0.0},       {0.0, 0.0, 1.0},
      {1.0, 1.0, 0.0},         {2.0, 1.0, 1.0},       {1.0, 0.5 * i, 0.0},
      {1.0 + i, 1.0, 0.25},    {0.0, 1.0, 1.0},       {0.5 - 0.5 * i, 1.0 + i, 0.5},
      {1.0, 2.0, 1.0},         {i, 0.0, 0.0},         {1.0, i, 1.0},
  };
  const double pi = std::numbers::pi;
  cfg.alpha_grid = polar_grid({0.0, 0.5, 1.0}, {0.0, pi / 4, pi / 2, pi});
  cfg.beta_grid = cfg.alpha_grid;
  cfg.special_pairs = {{1.0, 0.0}, {0.0, 0.0}};
  cfg.R_grid = {1.0, 1.5, 2.0};
  cfg.r_grid = {1.0, 1.3, 2.0};
  cfg.k_grid = {0.25, 0.5, 1.0};
  cfg.sharpness_degrees = {1, 2, 3, 5, 8};
  for (StatementId id : kAllStatements) cfg.cases[id] = 200;
  cfg.cases[StatementId::THM1_1_11] = 500;
  cfg.cases[StatementId::THM2_1_15] = 500;
  cfg.cases[StatementId::THM3_1_17] = 500;
  cfg.cases.erase(StatementId::LEM3);  // sized by lemma3_polys
  return cfg;
}

SuiteConfig suite_config_from_json(const Json& j) {
  SuiteConfig cfg = default_suite_config();
  bool lemma3_enabled = true;
  with_keys(
      j,
      {"seed", "threads", "probe", "roots", "tolerances", "degrees", "lambdas", "alpha_grid",
       "beta_grid", "special_pairs", "R_grid", "r_grid", "k_grid", "cases", "statements",
       "lemma3_polys", "crosscheck_cases", "sharpness_degrees", "sharpness", "negative_controls"},
      "config", [&] {
        if (j.contains("seed")) cfg.seed = seed_from_json(j.at("seed"));
        if (j.contains("threads")) cfg.threads = get_int(j, "threads");
        if (j.contains("probe")) {
          const Json& p = j.at("probe");
          with_keys(p, {"samples", "refine_count", "refine_tol"}, "probe", [&] {
            if (p.contains("samples")) cfg.check.probe.samples = get_int(p, "samples");
            if (p.contains("refine_count")) cfg.check.probe.refine_count = get_int(p, "refine_count");
            if (p.contains("refine_tol")) cfg.check.probe.refine_tol = get_number(p, "refine_tol");
          });
        }
        if (j.contains("roots")) {
          const Json& p = j.at("roots");
          with_keys(p, {"residual_tol", "max_sweeps", "degeneracy"}, "roots", [&] {
            if (p.contains("residual_tol")) cfg.check.roots.residual_tol = get_number(p, "residual_tol");
            if (p.contains("max_sweeps")) cfg.check.roots.max_sweeps = get_int(p, "max_sweeps");
            if (p.contains("degeneracy")) cfg.check.roots.degeneracy = get_number(p, "degeneracy");
          });
        }
        if (j.contains("tolerances")) {
          const Json& t = j.at("tolerances");
          with_keys(t,
                    {"verdict", "hypothesis", "lemma3", "admissibility", "sharpness",
                     "corollary1_margin"},
                    "tolerances", [&] {
                      if (t.contains("verdict")) cfg.check.tol_verdict = get_number(t, "verdict");
                      if (t.contains("hypothesis"))
                        cfg.check.tol_hypothesis = get_number(t, "hypothesis");
                      if (t.contains("lemma3")) cfg.check.tol_lemma3 = get_number(t, "lemma3");
                      if (t.contains("admissibility"))
                        cfg.check.tol_adm = get_number(t, "admissibility");
                      if (t.contains("sharpness")) cfg.sharpness_tol = get_number(t, "sharpness");
                      if (t.contains("corollary1_margin"))
                        cfg.corollary1_margin_tol = get_number(t, "corollary1_margin");
                    });
        }
        if (j.contains("degrees")) {
          const Json& d = j.at("degrees");
          if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
              !d[1].is_number_integer())
            throw UsageError("'degrees' must be [lo, hi]");
          cfg.degree_lo = d[0].get<int>();
          cfg.degree_hi = d[1].get<int>();
        }
        if (j.contains("lambdas")) {
          const Json& l = j.at("lambdas");
          if (!l.is_array() || l.empty()) throw UsageError("'lambdas' must be a nonempty list");
          cfg.lambdas.clear();
          for (const auto& t : l) cfg.lambdas.push_back(triple_from_json(t));
        }
        if (j.contains("alpha_grid")) cfg.alpha_grid = complex_list(j.at("alpha_grid"), "alpha_grid");
        if (j.contains("beta_grid")) cfg.beta_grid = complex_list(j.at("beta_grid"), "beta_grid");
        if (j.contains("special_pairs")) {
          const Json& s = j.at("special_pairs");
          if (!s.is_array()) throw UsageError("'special_pairs' must be a list");
          cfg.special_pairs.clear();
          for (const auto& pr : s) {
            if (!pr.is_array() || pr.size() != 2)
              throw UsageError("special pair must be [alpha, beta]");
            cfg.special_pairs.emplace_back(complex_from_json(pr[0]), complex_from_json(pr[1]));
          }
        }
        if (j.contains("R_grid")) cfg.R_grid = number_list(j.at("R_grid"), "R_grid");
        if (j.contains("r_grid")) cfg.r_grid = number_list(j.at("r_grid"), "r_grid");
        if (j.contains("k_grid")) cfg.k_grid = number_list(j.at("k_grid"), "k_grid");
        if (j.contains("statements")) {
          const Json& s = j.at("statements");
          if (!s.is_array()) throw UsageError("'statements' must be a list");
          std::map<StatementId, int> kept;
          lemma3_enabled = false;
          for (const auto& name : s) {
            if (!name.is_string()) throw UsageError("statement names must be strings");
            const auto id = parse_statement(name.get<std::string>());
            if (!id) throw UsageError("unknown statement '" + name.get<std::string>() + "'");
            if (*id == StatementId::LEM3) {
              lemma3_enabled = true;
              continue;
            }
            kept[*id] = cfg.cases.count(*id) ? cfg.cases.at(*id) : 200;
          }
          cfg.cases = std::move(kept);
        }
        if (j.contains("cases")) {
          const Json& c = j.at("cases");
          if (!c.is_object()) throw UsageError("'cases' must be an object");
          for (auto it = c.begin(); it != c.end(); ++it) {
            const auto id = parse_statement(it.key());
            if (!id) throw UsageError("unknown statement '" + it.key() + "' in cases");
            if (!it.value().is_number_integer()) throw UsageError("case counts must be integers");
            if (*id == StatementId::LEM3) {
              cfg.lemma3_polys = it.value().get<int>();
              continue;
            }
            cfg.cases[*id] = it.value().get<int>();
          }
        }
        if (j.contains("lemma3_polys")) cfg.lemma3_polys = get_int(j, "lemma3_polys");
        if (j.contains("crosscheck_cases")) cfg.crosscheck_cases = get_int(j, "crosscheck_cases");
        if (j.contains("sharpness_degrees")) {
          const Json& d = j.at("sharpness_degrees");
          if (!d.is_array()) throw UsageError("'sharpness_degrees' must be a list");
          cfg.sharpness_degrees.clear();
          for (const auto& x : d) {
            if (!x.is_number_integer()) throw UsageError("sharpness degrees must be integers");
            cfg.sharpness_degrees.push_back(x.get<int>());
          }
        }
        if (j.contains("sharpness")) cfg.sharpness = get_bool(j, "sharpness");
        if (j.contains("negative_controls")) cfg.negative_controls = get_bool(j, "negative_controls");
      });
  if (!lemma3_enabled) cfg.lemma3_polys = 0;
  validate(cfg);
  // admissibility of every triple over the configured degrees
  (void)make_context(cfg);
  return cfg;
}

Json to_json(const SuiteConfig& cfg) {
  Json lambdas = Json::array();
  for (const auto& t : cfg.lambdas) lambdas.push_back(triple_to_json(t));
  auto clist = [](const std::vector<Complex>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(complex_to_json(z));
    return a;
  };
  Json pairs = Json::array();
  for (const auto& [a, b] : cfg.special_pairs)
    pairs.push_back(Json::array({complex_to_json(a), complex_to_json(b)}));
  Json cases = Json::object();
  for (const auto& [id, n] : cfg.cases) cases[std::string(to_string(id))] = n;
  return Json{
      {"seed", cfg.seed},
      {"probe",
       {{"samples", cfg.check.probe.samples},
        {"refine_count", cfg.check.probe.refine_count},
        {"refine_tol", cfg.check.probe.refine_tol}}},
      {"roots",
       {{"residual_tol", cfg.check.roots.residual_tol},
        {"max_sweeps", cfg.check.roots.max_sweeps},
        {"degeneracy", cfg.check.roots.degeneracy}}},
      {"tolerances",
       {{"verdict", cfg.check.tol_verdict},
        {"hypothesis", cfg.check.tol_hypothesis},
        {"lemma3", cfg.check.tol_lemma3},
        {"admissibility", cfg.check.tol_adm},
        {"sharpness", cfg.sharpness_tol},
        {"corollary1_margin", cfg.corollary1_margin_tol}}},
      {"degrees", {cfg.degree_lo, cfg.degree_hi}},
      {"lambdas", std::move(lambdas)},
      {"alpha_grid", clist(cfg.alpha_grid)},
      {"beta_grid", clist(cfg.beta_grid)},
      {"special_pairs", std::move(pairs)},
      {"R_grid", cfg.R_grid},
      {"r_grid", cfg.r_grid},
      {"k_grid", cfg.k_grid},
      {"cases", std::move(cases)},
      {"lemma3_polys", cfg.lemma3_polys},
      {"crosscheck_cases", cfg.crosscheck_cases},
      {"sharpness_degrees", cfg.sharpness_degrees},
      {"sharpness", cfg.sharpness},
      {"negative_controls", cfg.negative_controls},
  };
}

bool SuiteReport::campaigns_clean() const {
  return std::none_of(reports.begin(), reports.end(),
                      [](const auto& e) { return e.report.verdict == Verdict::Violated; });
}

bool SuiteReport::sharpness_clean() const {
  return std::all_of(sharpness.begin(), sharpness.end(), [](const auto& s) { return s.pass; });
}

bool SuiteReport::crosschecks_clean() const {
  return std::all_of(crosschecks.begin(), crosschecks.end(), [](const auto& c) { return c.ok; });
}

bool SuiteReport::negative_controls_clean() const {
  return std::all_of(negative_controls.begin(), negative_controls.end(),
                     [](const auto& n) { return n.fired && n.gate_blocked; });
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Context ctx = make_context(cfg);
  const int threads = resolve_threads(cfg.threads);

  SuiteReport rep;
  rep.config = cfg;

  struct Job {
    StatementId id;
    std::size_t index;
  };
  std::vector<Job> jobs;
  for (StatementId id : kAllStatements) {
    const int count = id == StatementId::LEM3 ? cfg.lemma3_polys
                                              : (cfg.cases.count(id) ? cfg.cases.at(id) : 0);
    for (int i = 0; i < count; ++i) jobs.push_back({id, static_cast<std::size_t>(i)});
  }
  std::vector<std::vector<IneqReport>> results(jobs.size());
  parallel_for(jobs.size(), threads,
               [&](std::size_t j) { results[j] = run_case(jobs[j].id, jobs[j].index, ctx); });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    auto& t = rep.tallies[jobs[j].id];
    for (auto& r : results[j]) {
      tally(t, r);
      rep.reports.push_back({jobs[j].index, std::move(r)});
    }
  }

  if (cfg.sharpness) {
    const auto probes = sharpness_probes(ctx);
    rep.sharpness.resize(probes.size());
    parallel_for(probes.size(), threads,
                 [&](std::size_t i) { rep.sharpness[i] = run_probe(probes[i], cfg.check); });
  }

  rep.crosschecks.resize(static_cast<std::size_t>(cfg.crosscheck_cases));
  parallel_for(rep.crosschecks.size(), threads, [&](std::size_t i) {
    CaseRng rng(derive_seed(cfg.seed, kCrosscheckStream, i));
    GenSpec g;
    g.degree_lo = cfg.degree_lo;
    g.degree_hi = cfg.degree_hi;
    const Polynomial p = generate_one(g, rng);
    const AlphaBeta ab = rng.pick(ctx.pairs);
    const double R = rng.pick(cfg.R_grid);
    const double r = rng.pick(cfg.r_grid);
    const Complex l0 = rng.uniform(0.5, 2.0) * rng.unit_phase();
    const Complex l1 = rng.uniform(0.5, 2.0) * rng.unit_phase();
    rep.crosschecks[i] = reduction_crosscheck(p, ab.alpha, ab.beta, R, r, l0, l1, cfg.check);
  });

  if (cfg.negative_controls) {
    const int n = std::min(std::max(3, cfg.degree_lo), cfg.degree_hi);
    rep.negative_controls.push_back(make_control("I1_3 on z^n (designated)", StatementId::I1_3,
                                                 Polynomial::monomial(n), {}, cfg.check));
    std::vector<StatementId> gated;
    for (StatementId id : kAllStatements)
      if (has_gate(id)) gated.push_back(id);
    std::vector<NegativeControl> scanned(gated.size());
    parallel_for(gated.size(), threads,
                 [&](std::size_t i) { scanned[i] = scanned_control(gated[i], ctx); });
    for (auto& s : scanned) rep.negative_controls.push_back(std::move(s));
  }

  const bool clean = rep.campaigns_clean() && rep.sharpness_clean() && rep.crosschecks_clean() &&
                     rep.negative_controls_clean();
  rep.exit_status = clean ? 0 : 1;
  rep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Json to_json(const SuiteReport& rep) {
  Json statements = Json::object();
  for (const auto& [id, t] : rep.tallies) {
    Json s{{"holds", t.holds},
           {"violated", t.violated},
           {"hypothesis_not_met", t.hypothesis_not_met},
           {"indeterminate", t.indeterminate},
           {"total", t.total()}};
    s["worst_relative_margin"] = t.any_decided ? Json(t.worst_relative_margin) : Json(nullptr);
    if (t.min_strict_margin) s["min_strict_margin"] = *t.min_strict_margin;
    statements[std::string(to_string(id))] = std::move(s);
  }

  std::map<StatementId, Json> sharp;
  Json sharp_failures = Json::array();
  for (const auto& s : rep.sharpness) {
    Json& e = sharp[s.statement];
    if (e.is_null()) {
      e = Json{{"probes", 0}, {"failures", 0}, {"min_ratio", s.ratio}, {"max_ratio", s.ratio},
               {"bounded", s.lower.has_value() || s.upper.has_value()}};
    }
    e["probes"] = e["probes"].get<int>() + 1;
    e["min_ratio"] = std::min(e["min_ratio"].get<double>(), s.ratio);
    e["max_ratio"] = std::max(e["max_ratio"].get<double>(), s.ratio);
    if (!s.pass) {
      e["failures"] = e["failures"].get<int>() + 1;
      sharp_failures.push_back({{"statement", std::string(to_string(s.statement))},
                                {"label", s.label},
                                {"poly", to_json(s.poly)},
                                {"ratio", s.ratio},
                                {"witness", complex_to_json(s.witness)}});
      if (s.ratio_at_expected) sharp_failures.back()["ratio_at_expected"] = *s.ratio_at_expected;
    }
  }
  Json sharp_json = Json::object();
  for (auto& [id, e] : sharp) sharp_json[std::string(to_string(id))] = std::move(e);

  double worst_cc = 0.0;
  Json cc_failures = Json::array();
  for (std::size_t i = 0; i < rep.crosschecks.size(); ++i) {
    for (const auto& l : rep.crosschecks[i].legs) worst_cc = std::max(worst_cc, l.rel_error);
    if (!rep.crosschecks[i].ok) {
      Json f = to_json(rep.crosschecks[i]);
      f["case"] = i;
      cc_failures.push_back(std::move(f));
    }
  }

  Json negatives = Json::array();
  for (const auto& n : rep.negative_controls) {
    negatives.push_back({{"label", n.label},
                         {"fired", n.fired},
                         {"gate_blocked", n.gate_blocked},
                         {"ungated", to_json(n.ungated)},
                         {"gated", to_json(n.gated)}});
  }

  return Json{{"seed", rep.config.seed},
              {"config", to_json(rep.config)},
              {"statements", std::move(statements)},
              {"sharpness", {{"by_statement", std::move(sharp_json)},
                             {"failures", std::move(sharp_failures)}}},
              {"crosschecks",
               {{"cases", rep.crosschecks.size()},
                {"ok", rep.crosschecks_clean()},
                {"worst_rel_error", worst_cc},
                {"failures", std::move(cc_failures)}}},
              {"negative_controls", std::move(negatives)},
              {"exit_status", rep.exit_status}};
}

std::string reports_jsonl(const SuiteReport& rep) {
  std::string out;
  for (const auto& e : rep.reports) {
    Json j = to_json(e.report);
    j["case"] = e.case_index;
    out += j.dump();
    out += '\n';
  }
  return out;
}

ScanConfig default_scan_config() {
  ScanConfig cfg;
  cfg.statements = {StatementId::THM1_1_11};
  cfg.polys = {Polynomial::monomial(3)};
  cfg.lambdas = {{1.0, 0.0, 0.0}};
  cfg.alphas = {0.0};
  cfg.betas = {0.0};
  cfg.Rs = {1.0, 1.5, 2.0};
  return cfg;
}

ScanConfig scan_config_from_json(const Json& j) {
  ScanConfig cfg = default_scan_config();
  with_keys(j,
            {"statements", "poly", "polys", "generator", "lambdas", "alpha", "beta", "R", "r",
             "k", "probe"},
            "scan config", [&] {
              if (j.contains("statements")) {
                const Json& s = j.at("statements");
                if (!s.is_array()) throw UsageError("'statements' must be a list");
                cfg.statements.clear();
                for (const auto& name : s) {
                  if (!name.is_string()) throw UsageError("statement names must be strings");
                  const auto id = parse_statement(name.get<std::string>());
                  if (!id) throw UsageError("unknown statement '" + name.get<std::string>() + "'");
                  cfg.statements.push_back(*id);
                }
                if (cfg.statements.empty()) throw UsageError("statement list is empty");
              }
              auto poly = [](const Json& pj) {
                try {
                  return polynomial_from_json(pj);
                } catch (const DomainError& e) {
                  throw UsageError(e.what());
                }
              };
              if (j.contains("poly")) cfg.polys = {poly(j.at("poly"))};
              if (j.contains("polys")) {
                const Json& ps = j.at("polys");
                if (!ps.is_array()) throw UsageError("'polys' must be a list");
                cfg.polys.clear();
                for (const auto& pj : ps) cfg.polys.push_back(poly(pj));
              }
              if (j.contains("generator")) cfg.polys = generate(genspec_from_json(j.at("generator")));
              if (j.contains("lambdas")) {
                const Json& l = j.at("lambdas");
                if (!l.is_array()) throw UsageError("'lambdas' must be a list");
                cfg.lambdas.clear();
                for (const auto& t : l) cfg.lambdas.push_back(triple_from_json(t));
              }
              if (j.contains("alpha")) cfg.alphas = complex_list(j.at("alpha"), "alpha");
              if (j.contains("beta")) cfg.betas = complex_list(j.at("beta"), "beta");
              if (j.contains("R")) cfg.Rs = number_list(j.at("R"), "R");
              if (j.contains("r")) cfg.r = get_number(j, "r");
              if (j.contains("k")) cfg.k = get_number(j, "k");
              if (j.contains("probe")) {
                const Json& p = j.at("probe");
                with_keys(p, {"samples", "refine_count", "refine_tol"}, "probe", [&] {
                  if (p.contains("samples")) cfg.check.probe.samples = get_int(p, "samples");
                  if (p.contains("refine_count"))
                    cfg.check.probe.refine_count = get_int(p, "refine_count");
                  if (p.contains("refine_tol"))
                    cfg.check.probe.refine_tol = get_number(p, "refine_tol");
                });
              }
            });
  return cfg;
}

std::string run_scan(const ScanConfig& cfg) {
  if (cfg.statements.empty()) throw UsageError("scan needs at least one statement");
  if (cfg.polys.empty() || cfg.alphas.empty() || cfg.betas.empty() || cfg.Rs.empty())
    throw UsageError("scan grid axes must be nonempty");
  if (std::any_of(cfg.statements.begin(), cfg.statements.end(),
                  [](StatementId id) { return uses_operator(id); }) &&
      cfg.lambdas.empty())
    throw UsageError("operator statements need at least one lambda triple");
  try {
    validate(cfg.check.probe);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::ostringstream out;
  out << "statement,poly,lambda,alpha_re,alpha_im,beta_re,beta_im,R,ratio,witness_angle,status\n";
  for (StatementId id : cfg.statements) {
    const bool op = uses_operator(id);
    const std::size_t nl = op ? cfg.lambdas.size() : 1;
    for (std::size_t pi = 0; pi < cfg.polys.size(); ++pi) {
      const Polynomial& p = cfg.polys[pi];
      for (std::size_t li = 0; li < nl; ++li) {
        for (const Complex& a : cfg.alphas) {
          for (const Complex& b : cfg.betas) {
            for (double R : cfg.Rs) {
              out << to_string(id) << ',' << pi << ',' << (op ? std::to_string(li) : "-") << ','
                  << fmt17(a.real()) << ',' << fmt17(a.imag()) << ',' << fmt17(b.real()) << ','
                  << fmt17(b.imag()) << ',' << fmt17(R) << ',';
              try {
                StatementArgs args;
                args.alpha = a;
                args.beta = b;
                args.R = R;
                args.r = cfg.r;
                args.k = cfg.k;
                if (op) args.params = OperatorParams(p.degree(), cfg.lambdas[li]);
                const Tightness t = tightness(p, id, args, cfg.check);
                out << fmt17(t.ratio) << ',' << fmt17(t.witness_angle) << ",ok\n";
              } catch (const std::exception& e) {
                std::string msg = e.what();
                std::replace(msg.begin(), msg.end(), ',', ';');
                out << ",,refused: " << msg << '\n';
              }
            }
          }
        }
      }
    }
  }
  return out.str();
}

}  // namespace bineq
