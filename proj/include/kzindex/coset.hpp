#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kzindex/sl2.hpp"

namespace kz {

inline constexpr std::size_t kDefaultCosetCap = 10'000;

// Letters of the presentation <a, b | a^4, a^2 b^-3> of SL2(Z), a = S, b = ST.
enum GenLetter { kA = 0, kAInv = 1, kB = 2, kBInv = 3 };
using GenWord = std::vector<int>;

// S -> a, T -> a^-1 b.
GenWord to_presentation(const Word& w);

// Closed coset table of a subgroup. Coset 0 is the subgroup; action[c][x]
// is the coset reached from c by the letter x.
struct CosetTable {
  std::vector<std::array<int, 4>> action;
  std::size_t defined = 0;  // cosets created during the enumeration

  std::size_t index() const { return action.size(); }
  int apply(int coset, const GenWord& w) const;
};

// Hasselgrove-Leech-Trotter enumeration. Throws IndexExceedsCap once more
// than `cap` cosets are alive at the same time.
CosetTable enumerate_cosets(const std::vector<Mat2>& gens, std::size_t cap = kDefaultCosetCap);

std::size_t index_in_sl2(const std::vector<Mat2>& gens, std::size_t cap = kDefaultCosetCap);

// Whether -I = a^2 fixes the subgroup coset.
bool contains_minus_identity(const std::vector<Mat2>& gens, std::size_t cap = kDefaultCosetCap);

// Checks that a and b act as permutations, satisfy both relators, the
// subgroup generators fix coset 0 and the action is transitive.
bool table_is_consistent(const CosetTable& t, const std::vector<Mat2>& gens);

}  // namespace kz
