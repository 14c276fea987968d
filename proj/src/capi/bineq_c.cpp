#include "bineq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "bineq/b_operator.hpp"
#include "bineq/circle_norms.hpp"
#include "bineq/errors.hpp"
#include "bineq/inequalities.hpp"
#include "bineq/json_io.hpp"
#include "bineq/polynomial.hpp"
#include "bineq/roots.hpp"
#include "bineq/suite.hpp"

struct bineq_poly {
  bineq::Polynomial value;
};

struct bineq_params {
  bineq::OperatorParams value;
};

namespace {

thread_local std::string g_last_error;

bineq_status fail(bineq_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Maps the core exception hierarchy onto status codes. Order matters:
// UnboundedRatioError derives from DomainError, UsageError from invalid_argument.
template <class F>
bineq_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BINEQ_OK;
  } catch (const bineq::UnboundedRatioError& e) {
    return fail(BINEQ_ERR_UNBOUNDED, e.what());
  } catch (const bineq::DomainError& e) {
    return fail(BINEQ_ERR_DOMAIN, e.what());
  } catch (const bineq::UsageError& e) {
    return fail(BINEQ_ERR_USAGE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(BINEQ_ERR_USAGE, e.what());
  } catch (const bineq::NotConvergedError& e) {
    return fail(BINEQ_ERR_NOT_CONVERGED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BINEQ_ERR_INVALID_ARG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BINEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BINEQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BINEQ_ERR_INTERNAL, "unknown failure");
  }
}

struct NullArg : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
void need(const T* p, const char* name) {
  if (p == nullptr) throw NullArg(std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bineq::Json parse(const char* text) {
  need(text, "json");
  return bineq::Json::parse(text);
}

bineq::Complex to_cpp(bineq_complex z) { return {z.re, z.im}; }
bineq_complex to_c(bineq::Complex z) { return {z.real(), z.imag()}; }

bineq_poly* wrap(bineq::Polynomial p) { return new bineq_poly{std::move(p)}; }

bineq_circle_probe to_c(const bineq::CircleProbe& p) {
  return {p.radius, p.value, p.witness_angle, p.certified_error, p.samples_used};
}

bineq::ProbeConfig probe_with(int samples) {
  bineq::ProbeConfig cfg;
  if (samples != 0) cfg.samples = samples;
  return cfg;
}

bineq::CheckOptions request_options(const bineq::CheckRequest& req) {
  bineq::CheckOptions opts;
  opts.enforce_gates = req.gates;
  return opts;
}

}  // namespace

extern "C" {

const char* bineq_last_error(void) { return g_last_error.c_str(); }

void bineq_string_free(char* s) { std::free(s); }

const char* bineq_version(void) { return "1.0.0"; }

const char* bineq_status_name(bineq_status s) {
  switch (s) {
    case BINEQ_OK:
      return "ok";
    case BINEQ_ERR_DOMAIN:
      return "domain_error";
    case BINEQ_ERR_USAGE:
      return "usage_error";
    case BINEQ_ERR_INVALID_ARG:
      return "invalid_argument";
    case BINEQ_ERR_NOT_CONVERGED:
      return "not_converged";
    case BINEQ_ERR_UNBOUNDED:
      return "unbounded_ratio";
    case BINEQ_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

bineq_status bineq_poly_create(const bineq_complex* coeffs, size_t count, bineq_poly** out) {
  return guarded([&] {
    need(out, "out");
    need(coeffs, "coeffs");
    std::vector<bineq::Complex> c(count);
    for (size_t i = 0; i < count; ++i) c[i] = to_cpp(coeffs[i]);
    *out = wrap(bineq::Polynomial(std::move(c)));
  });
}

bineq_status bineq_poly_from_json(const char* json, bineq_poly** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(bineq::polynomial_from_json(parse(json)));
  });
}

bineq_status bineq_poly_to_json(const bineq_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup_string(bineq::to_json(p->value).dump());
  });
}

void bineq_poly_destroy(bineq_poly* p) { delete p; }

bineq_status bineq_poly_degree(const bineq_poly* p, int* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->value.degree();
  });
}

bineq_status bineq_poly_coeff(const bineq_poly* p, int k, bineq_complex* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    if (k < 0 || k > p->value.degree()) throw NullArg("coefficient index out of range");
    *out = to_c(p->value[static_cast<std::size_t>(k)]);
  });
}

bineq_status bineq_poly_eval(const bineq_poly* p, bineq_complex z, bineq_complex* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = to_c(bineq::eval(p->value, to_cpp(z)));
  });
}

bineq_status bineq_poly_derivative(const bineq_poly* p, bineq_poly** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = wrap(bineq::derivative(p->value));
  });
}

bineq_status bineq_poly_reciprocal(const bineq_poly* p, bineq_poly** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = wrap(bineq::reciprocal(p->value));
  });
}

bineq_status bineq_poly_dilate(const bineq_poly* p, double radius, bineq_poly** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = wrap(bineq::dilate(p->value, radius));
  });
}

bineq_status bineq_params_create(int n, bineq_complex l0, bineq_complex l1, bineq_complex l2,
                                 bineq_params** out) {
  return guarded([&] {
    need(out, "out");
    *out = new bineq_params{bineq::OperatorParams(n, to_cpp(l0), to_cpp(l1), to_cpp(l2))};
  });
}

bineq_status bineq_params_from_json(const char* json, bineq_params** out) {
  return guarded([&] {
    need(out, "out");
    *out = new bineq_params{bineq::params_from_json(parse(json))};
  });
}

void bineq_params_destroy(bineq_params* params) { delete params; }

bineq_status bineq_params_is_admissible(const bineq_params* params, double tol, int* admissible) {
  return guarded([&] {
    need(params, "params");
    need(admissible, "admissible");
    const double t = tol > 0.0 ? tol : bineq::kDefaultAdmissibilityTol;
    *admissible = bineq::is_admissible(params->value, t).admissible ? 1 : 0;
  });
}

bineq_status bineq_params_phi(const bineq_params* params, bineq_complex* out) {
  return guarded([&] {
    need(params, "params");
    need(out, "out");
    *out = to_c(bineq::phi_n(params->value));
  });
}

bineq_status bineq_apply_b(const bineq_params* params, const bineq_poly* p, bineq_poly** out) {
  return guarded([&] {
    need(params, "params");
    need(p, "poly");
    need(out, "out");
    *out = wrap(bineq::apply_b(params->value, p->value));
  });
}

bineq_status bineq_max_modulus(const bineq_poly* p, double radius, int samples,
                               bineq_circle_probe* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = to_c(bineq::max_modulus(p->value, radius, probe_with(samples)));
  });
}

bineq_status bineq_min_modulus(const bineq_poly* p, double radius, int samples,
                               bineq_circle_probe* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = to_c(bineq::min_modulus(p->value, radius, probe_with(samples)));
  });
}

bineq_status bineq_roots_json(const bineq_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup_string(bineq::to_json(bineq::find_roots(p->value)).dump());
  });
}

bineq_status bineq_check_json(const char* request, char** report) {
  return guarded([&] {
    need(report, "report");
    const auto req = bineq::check_request_from_json(parse(request));
    const auto rep = bineq::check(req.statement, req.poly, req.args, request_options(req));
    *report = dup_string(bineq::to_json(rep).dump());
  });
}

bineq_status bineq_tightness_json(const char* request, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto req = bineq::check_request_from_json(parse(request));
    const auto t = bineq::tightness(req.poly, req.statement, req.args, request_options(req));
    bineq::Json j{{"statement", std::string(bineq::to_string(req.statement))},
                  {"poly", bineq::to_json(req.poly)},
                  {"ratio", t.ratio},
                  {"witness", bineq::complex_to_json(t.witness)},
                  {"witness_angle", t.witness_angle}};
    *out = dup_string(j.dump());
  });
}

bineq_status bineq_crosscheck_json(const char* request, char** out) {
  return guarded([&] {
    need(out, "out");
    bineq::Json j = parse(request);
    if (!j.is_object()) throw bineq::UsageError("request must be a JSON object");
    j["statement"] = "THM1_1_11";  // reuse the request parser for the shared fields
    const auto req = bineq::check_request_from_json(j);
    const auto cc = bineq::reduction_crosscheck(req.poly, req.args.alpha, req.args.beta,
                                                req.args.R, req.args.r);
    *out = dup_string(bineq::to_json(cc).dump());
  });
}

bineq_status bineq_run_suite(const char* config, const uint64_t* seed_override, char** summary,
                             char** reports_jsonl, int* exit_class, double* wall_seconds) {
  return guarded([&] {
    need(summary, "summary");
    bineq::SuiteConfig cfg = config == nullptr ? bineq::default_suite_config()
                                               : bineq::suite_config_from_json(parse(config));
    if (seed_override != nullptr) cfg.seed = *seed_override;
    const auto rep = bineq::run_suite(cfg);
    std::string s = bineq::to_json(rep).dump(2);
    s += '\n';
    char* sum = dup_string(s);
    char* lines = nullptr;
    if (reports_jsonl != nullptr) {
      try {
        lines = dup_string(bineq::reports_jsonl(rep));
      } catch (...) {
        std::free(sum);
        throw;
      }
      *reports_jsonl = lines;
    }
    *summary = sum;
    if (exit_class != nullptr) *exit_class = rep.exit_status;
    if (wall_seconds != nullptr) *wall_seconds = rep.wall_time_seconds;
  });
}

bineq_status bineq_scan(const char* config, char** csv) {
  return guarded([&] {
    need(csv, "csv");
    const auto cfg = config == nullptr ? bineq::default_scan_config()
                                       : bineq::scan_config_from_json(parse(config));
    *csv = dup_string(bineq::run_scan(cfg));
  });
}

}  // extern "C"
