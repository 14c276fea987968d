#pragma once

#include <cstdint>
#include <vector>

#include "bineq/json_io.hpp"
#include "bineq/polynomial.hpp"

namespace bineq {

/// splitmix64 mix of (master, stream, index). Per-case streams depend only on
/// these three values, never on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Small counter-based generator (splitmix64). Doubles use the top 53 bits so
/// the sequence is identical across standard libraries.
class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int lo, int hi);       // [lo, hi]
  Complex unit_phase();

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform_int(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::uint64_t state_;
};

enum class Family {
  RootsInDisk,         // roots uniform by area in |z| <= k
  RootsOutsideDisk,    // |root| uniform in [min_mod, max_mod], angle uniform
  RandomCoefficients,  // coefficients uniform in the square [-bound, bound]^2
  ExtremalMonomial,    // scale * z^n
  ExtremalPlusOne,     // z^n + 1
};

struct GenSpec {
  Family family = Family::RandomCoefficients;
  double k = 1.0;
  double min_mod = 1.0;
  double max_mod = 3.0;
  double bound = 1.0;
  Complex scale = 1.0;
  int degree_lo = 1;
  int degree_hi = 8;
  int count = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Throws UsageError on lo < 1, hi < lo, count < 1, k outside (0, 1],
/// min_mod < 1, max_mod < min_mod, or a non-positive bound.
void validate(const GenSpec& spec);

/// Case `index` of the family. Roots-based families use a leading coefficient
/// with modulus in [0.5, 2] and a random phase.
Polynomial generate_one(const GenSpec& spec, std::uint64_t index);
Polynomial generate_one(const GenSpec& spec, CaseRng& rng);

std::vector<Polynomial> generate(const GenSpec& spec);

GenSpec genspec_from_json(const Json& j);
Json to_json(const GenSpec& spec);

}  // namespace bineq
