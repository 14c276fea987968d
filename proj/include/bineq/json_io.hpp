#pragma once

#include <cstdint>
#include <json.hpp>

#include "bineq/b_operator.hpp"
#include "bineq/inequalities.hpp"
#include "bineq/polynomial.hpp"
#include "bineq/roots.hpp"

namespace bineq {

using Json = nlohmann::json;

// Complex scalars serialize as [re, im]; a bare number is read as real.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Nonnegative integer that fits 64 bits; UsageError otherwise.
std::uint64_t seed_from_json(const Json& j);

// {"n": int, "coeffs": [[re, im], ...]} ascending.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"n": int, "lambda": [[re, im], [re, im], [re, im]]}
Json to_json(const OperatorParams& params);
OperatorParams params_from_json(const Json& j);

// {"statement", "inputs", "lhs", "rhs", "margin", "relative_margin", "witness", "verdict", ...}
Json to_json(const IneqReport& rep);

Json to_json(const RootSet& rs);
Json to_json(const CrosscheckResult& cc);

/// Request object shared by the C API and the CLI:
///   {"statement": ID, "poly": {...}, "params": {...}, "alpha": [re, im],
///    "beta": [re, im], "R": x, "r": x, "k": x, "gates": bool}
struct CheckRequest {
  StatementId statement = StatementId::I1_1;
  Polynomial poly;
  StatementArgs args;
  bool gates = true;
};
CheckRequest check_request_from_json(const Json& j);

}  // namespace bineq
