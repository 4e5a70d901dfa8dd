#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kzindex/geometry.hpp"
#include "kzindex/origami.hpp"

namespace kz {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // inputs outside the property's precondition
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > skipped; }
};

// Random H(2) origami of degree in [dmin, dmax], randomly relabelled.
Origami random_h2_origami(std::mt19937_64& rng, int dmin, int dmax);
// Primitive direction with |p|, |q| <= bound.
Direction random_direction(std::mt19937_64& rng, int bound);
Word random_word(std::mt19937_64& rng, std::size_t max_len);

// Shear reduction against separatrix tracing on `cases` random pairs of an
// H(2) origami of degree <= 12 and a direction with |p|, |q| <= 7: cylinder
// count, multiset of f and number of saddle connections.
PropertyResult cross_algorithm_check(std::uint64_t seed, std::size_t cases);

// Every invariant the library promises, on inputs drawn from `seed`.
// `scale` multiplies the number of cases per property.
std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t scale = 1);

}  // namespace kz
