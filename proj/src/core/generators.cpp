#include "bineq/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bineq/errors.hpp"

namespace bineq {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::RootsInDisk, "roots_in_disk"},
    {Family::RootsOutsideDisk, "roots_outside_disk"},
    {Family::RandomCoefficients, "random_coefficients"},
    {Family::ExtremalMonomial, "extremal_monomial"},
    {Family::ExtremalPlusOne, "extremal_plus_one"},
};

Complex random_leading(CaseRng& rng) { return rng.uniform(0.5, 2.0) * rng.unit_phase(); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(splitmix(master) ^ stream) ^ index);
}

std::uint64_t CaseRng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CaseRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CaseRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int CaseRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Complex CaseRng::unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

void validate(const GenSpec& spec) {
  if (spec.degree_lo < 1) throw UsageError("degree range must start at 1 or above");
  if (spec.degree_hi < spec.degree_lo) throw UsageError("degree range is empty");
  if (spec.count < 1) throw UsageError("count must be at least 1");
  switch (spec.family) {
    case Family::RootsInDisk:
      if (!(spec.k > 0.0 && spec.k <= 1.0)) throw UsageError("k must lie in (0, 1]");
      break;
    case Family::RootsOutsideDisk:
      if (!(spec.min_mod >= 1.0)) throw UsageError("min_mod must be at least 1");
      if (!(spec.max_mod >= spec.min_mod)) throw UsageError("max_mod must be >= min_mod");
      break;
    case Family::RandomCoefficients:
      if (!(spec.bound > 0.0) || !std::isfinite(spec.bound))
        throw UsageError("coefficient bound must be positive");
      break;
    case Family::ExtremalMonomial:
      if (spec.scale == Complex{} || !is_finite(spec.scale))
        throw UsageError("extremal scale must be finite and nonzero");
      break;
    case Family::ExtremalPlusOne:
      break;
  }
}

Polynomial generate_one(const GenSpec& spec, CaseRng& rng) {
  const int n = rng.uniform_int(spec.degree_lo, spec.degree_hi);
  switch (spec.family) {
    case Family::RootsInDisk: {
      std::vector<Complex> roots(static_cast<std::size_t>(n));
      for (auto& z : roots) z = spec.k * std::sqrt(rng.uniform()) * rng.unit_phase();
      return from_roots(roots, random_leading(rng));
    }
    case Family::RootsOutsideDisk: {
      std::vector<Complex> roots(static_cast<std::size_t>(n));
      for (auto& z : roots) z = rng.uniform(spec.min_mod, spec.max_mod) * rng.unit_phase();
      return from_roots(roots, random_leading(rng));
    }
    case Family::RandomCoefficients: {
      std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
      for (auto& x : c) x = {rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound)};
      while (std::abs(c.back()) < 1e-3 * spec.bound)
        c.back() = {rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound)};
      return Polynomial(std::move(c));
    }
    case Family::ExtremalMonomial:
      return Polynomial::monomial(n, spec.scale);
    case Family::ExtremalPlusOne: {
      Polynomial m = Polynomial::monomial(n);
      return axpy(1.0, m, 1.0, Polynomial({1.0}));
    }
  }
  throw UsageError("unknown family");
}

Polynomial generate_one(const GenSpec& spec, std::uint64_t index) {
  CaseRng rng(derive_seed(spec.seed, spec.stream, index));
  return generate_one(spec, rng);
}

std::vector<Polynomial> generate(const GenSpec& spec) {
  validate(spec);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(generate_one(spec, static_cast<std::uint64_t>(i)));
  return out;
}

GenSpec genspec_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("generator spec must be an object");
  GenSpec spec;
  if (!j.contains("family") || !j.at("family").is_string())
    throw UsageError("generator spec needs a 'family' string");
  const auto name = j.at("family").get<std::string>();
  bool found = false;
  for (const auto& f : kFamilies) {
    if (name == f.name) {
      spec.family = f.family;
      found = true;
    }
  }
  if (!found) throw UsageError("unknown generator family '" + name + "'");
  auto number = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number()) throw UsageError(std::string("'") + key + "' must be a number");
    out = j.at(key).get<double>();
  };
  number("k", spec.k);
  number("min_mod", spec.min_mod);
  number("max_mod", spec.max_mod);
  number("bound", spec.bound);
  if (j.contains("scale")) spec.scale = complex_from_json(j.at("scale"));
  if (j.contains("degrees")) {
    const Json& d = j.at("degrees");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
      throw UsageError("'degrees' must be [lo, hi]");
    spec.degree_lo = d[0].get<int>();
    spec.degree_hi = d[1].get<int>();
  }
  if (j.contains("count")) {
    if (!j.at("count").is_number_integer()) throw UsageError("'count' must be an integer");
    spec.count = j.at("count").get<int>();
  }
  if (j.contains("seed")) spec.seed = seed_from_json(j.at("seed"));
  validate(spec);
  return spec;
}

Json to_json(const GenSpec& spec) {
  std::string name;
  for (const auto& f : kFamilies) {
    if (f.family == spec.family) name = f.name;
  }
  Json j{{"family", name}, {"degrees", {spec.degree_lo, spec.degree_hi}}, {"count", spec.count},
         {"seed", spec.seed}};
  switch (spec.family) {
    case Family::RootsInDisk:
      j["k"] = spec.k;
      break;
    case Family::RootsOutsideDisk:
      j["min_mod"] = spec.min_mod;
      j["max_mod"] = spec.max_mod;
      break;
    case Family::RandomCoefficients:
      j["bound"] = spec.bound;
      break;
    case Family::ExtremalMonomial:
      j["scale"] = complex_to_json(spec.scale);
      break;
    case Family::ExtremalPlusOne:
      break;
  }
  return j;
}

}  // namespace bineq
