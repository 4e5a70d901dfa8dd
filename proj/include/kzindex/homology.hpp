#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "kzindex/geometry.hpp"

namespace kz {

// Coefficients over (X1, X2, Y1, Y2).
using ClassVector = std::array<std::int64_t, 4>;
// A[i][j] = Omega(basis_i, basis_j)
using GramMatrix = std::array<std::array<std::int64_t, 4>, 4>;

struct HomologyBasis {
  Direction dir_x;  // direction of X1, X2
  Direction dir_y;  // direction of Y1, Y2
  std::array<GeodesicLoop, 4> loops;
  std::array<int, 4> f{};
  GramMatrix gram{};
  std::int64_t gram_det = 0;
};

struct NonTautBasis {
  ClassVector x{};
  ClassVector y{};
};

// Algebraic intersection number: each transverse crossing contributes the
// sign of det[dir(alpha), dir(beta)]. Crossings on square edges are moved off
// by re-tracing anchored core curves at other heights.
std::int64_t intersection_number(const Origami& o, const GeodesicLoop& alpha, const GeodesicLoop& beta);

// Core curves of two 2-cylinder directions, each pair ordered by f (ties:
// lowest square id). Throws BasisUnavailable or RankError.
HomologyBasis basis_from_directions(const Origami& o, const Direction& dx, const Direction& dy);
HomologyBasis standard_basis(const Origami& o);

// First pair of 2-cylinder directions, in order of |p|+|q|, whose core curves
// have a unimodular Gram matrix. `cap` bounds the number of candidate
// directions examined.
std::pair<Direction, Direction> find_basis_directions(const Origami& o, std::size_t cap);

// Solves A x = (Omega(b_i, loop))_i. Throws RankError or IntegralityError.
ClassVector express_in_basis(const Origami& o, const GeodesicLoop& loop, const HomologyBasis& basis);
ClassVector solve_gram(const HomologyBasis& basis, const ClassVector& rhs);

std::pair<std::int64_t, std::int64_t> pushforward(const GeodesicLoop& loop);
std::pair<std::int64_t, std::int64_t> pushforward(const ClassVector& z, const HomologyBasis& basis);

NonTautBasis nontaut_basis(const HomologyBasis& basis);

// u^T A w
std::int64_t omega(const ClassVector& u, const ClassVector& w, const GramMatrix& a);

}  // namespace kz
