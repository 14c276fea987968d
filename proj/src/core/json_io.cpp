#include "bineq/json_io.hpp"

#include <cmath>
#include <string>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw UsageError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw UsageError(std::string(what) + " must be finite");
  return v;
}

int integer_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw UsageError(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

std::uint64_t seed_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw UsageError("'seed' must be a nonnegative integer");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {finite_number(j, "complex value"), 0.0};
  if (!j.is_array() || j.size() != 2) throw UsageError("complex value must be [re, im]");
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
  return Json{{"n", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Polynomial polynomial_from_json(const Json& j) {
  const int n = integer_field(j, "n");
  if (n < 0) throw UsageError("polynomial degree must be nonnegative");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw UsageError("polynomial needs a 'coeffs' array");
  const Json& c = j.at("coeffs");
  if (c.size() != static_cast<std::size_t>(n) + 1)
    throw UsageError("polynomial of degree " + std::to_string(n) + " needs " +
                     std::to_string(n + 1) + " coefficients, got " + std::to_string(c.size()));
  std::vector<Complex> coeffs;
  coeffs.reserve(c.size());
  for (const auto& x : c) coeffs.push_back(complex_from_json(x));
  return Polynomial(std::move(coeffs));
}

Json to_json(const OperatorParams& params) {
  Json lambdas = Json::array();
  for (const auto& l : params.lambdas()) lambdas.push_back(complex_to_json(l));
  return Json{{"n", params.degree()}, {"lambda", std::move(lambdas)}};
}

OperatorParams params_from_json(const Json& j) {
  const int n = integer_field(j, "n");
  if (!j.contains("lambda") || !j.at("lambda").is_array() || j.at("lambda").size() != 3)
    throw UsageError("operator parameters need a 3-element 'lambda' array");
  const Json& l = j.at("lambda");
  try {
    return OperatorParams(n, complex_from_json(l[0]), complex_from_json(l[1]),
                          complex_from_json(l[2]));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Json to_json(const IneqReport& rep) {
  Json inputs{{"poly", to_json(rep.poly)}};
  const auto& a = rep.args;
  if (a.params) inputs["params"] = to_json(*a.params);
  inputs["alpha"] = complex_to_json(a.alpha);
  inputs["beta"] = complex_to_json(a.beta);
  inputs["R"] = a.R;
  inputs["r"] = a.r;
  inputs["k"] = a.k;
  Json j{{"statement", std::string(to_string(rep.statement))},
         {"inputs", std::move(inputs)},
         {"lhs", rep.lhs},
         {"rhs", rep.rhs},
         {"margin", rep.margin},
         {"relative_margin", rep.relative_margin},
         {"witness", complex_to_json(rep.witness)},
         {"verdict", std::string(to_string(rep.verdict))},
         {"hypothesis_met", rep.hypothesis_met}};
  if (rep.strict_margin) j["strict_margin"] = *rep.strict_margin;
  if (rep.boundary_case) j["boundary_case"] = true;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Json to_json(const RootSet& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(complex_to_json(r));
  double max_mod = 0.0;
  for (const auto& r : rs.roots) max_mod = std::max(max_mod, std::abs(r));
  return Json{{"roots", std::move(roots)},
              {"residuals", rs.residuals},
              {"converged", rs.converged},
              {"sweeps", rs.sweeps},
              {"max_modulus", max_mod}};
}

Json to_json(const CrosscheckResult& cc) {
  Json legs = Json::array();
  for (const auto& l : cc.legs)
    legs.push_back({{"name", l.name}, {"rel_error", l.rel_error}, {"tol", l.tol}, {"ok", l.ok}});
  return Json{{"ok", cc.ok}, {"legs", std::move(legs)}};
}

CheckRequest check_request_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("request must be a JSON object");
  CheckRequest req;
  if (!j.contains("statement") || !j.at("statement").is_string())
    throw UsageError("request needs a 'statement' string");
  const auto id = parse_statement(j.at("statement").get<std::string>());
  if (!id) throw UsageError("unknown statement '" + j.at("statement").get<std::string>() + "'");
  req.statement = *id;
  if (!j.contains("poly")) throw UsageError("request needs a 'poly' object");
  try {
    req.poly = polynomial_from_json(j.at("poly"));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (j.contains("params")) req.args.params = params_from_json(j.at("params"));
  if (j.contains("alpha")) req.args.alpha = complex_from_json(j.at("alpha"));
  if (j.contains("beta")) req.args.beta = complex_from_json(j.at("beta"));
  if (j.contains("R")) req.args.R = finite_number(j.at("R"), "R");
  if (j.contains("r")) req.args.r = finite_number(j.at("r"), "r");
  if (j.contains("k")) req.args.k = finite_number(j.at("k"), "k");
  if (j.contains("gates")) {
    if (!j.at("gates").is_boolean()) throw UsageError("'gates' must be a boolean");
    req.gates = j.at("gates").get<bool>();
  }
  return req;
}

}  // namespace bineq
