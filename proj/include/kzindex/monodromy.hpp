#pragma once

#include <cstdint>
#include <vector>

#include "kzindex/homology.hpp"

namespace kz {

struct TwistSpec {
  CylinderDecomposition decomposition;
  std::vector<std::int64_t> multiplicities;  // per cylinder
};

// Smallest positive integers n_i proportional to c_i / f_i.
TwistSpec twist_multiplicities(const CylinderDecomposition& dec);

// Everything computed on the way to one multitwist matrix.
struct TwistAnalysis {
  TwistSpec twist;
  std::vector<ClassVector> omegas;   // per cylinder: Omega(b_k, core) for the 4 basis curves
  std::vector<ClassVector> classes;  // per cylinder: core curve in the basis
  ClassVector image_x{};
  ClassVector image_y{};
  Mat2 matrix;  // columns are the images of X and Y
};

// D(z) = z + sum_i n_i Omega(z, gamma_i) gamma_i on the non-tautological part.
// Throws IntegralityError or UnimodularityError.
TwistAnalysis analyze_twist(const Origami& o, const Direction& dir, const HomologyBasis& basis);
Mat2 dehn_twist_action(const Origami& o, const Direction& dir, const HomologyBasis& basis);

// One matrix per direction, all in the standard basis if it exists and in
// the basis of find_basis_directions otherwise.
std::vector<Mat2> kz_generators(const Origami& o, const std::vector<Direction>& dirs,
                                std::size_t basis_cap = 64);

HomologyBasis default_basis(const Origami& o, std::size_t basis_cap = 64);

}  // namespace kz
