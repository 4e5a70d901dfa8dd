#include <doctest.h>

#include "kzindex/census.hpp"
#include "kzindex/errors.hpp"
#include "kzindex/homology.hpp"

using namespace kz;

namespace {

const GramMatrix kLGram{{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, -1, 0, 0}, {-1, -1, 0, 0}}};

// Core curve of the cylinder of decompose(o, dir) with combinatorial length f.
GeodesicLoop core_with_f(const Origami& o, const Direction& dir, int f) {
  for (const auto& c : decompose(o, dir).cylinders) {
    if (c.f == f) return c.core;
  }
  FAIL("no cylinder with f = " << f);
  return {};
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("standard basis of L(2,m)") {
  for (int m = 2; m <= 9; ++m) {
    const HomologyBasis b = standard_basis(make_l_origami(2, m));
    CHECK(b.f == std::array<int, 4>{1, 2, 1, m});
    CHECK(b.gram == kLGram);
    CHECK(b.gram_det == 1);
  }
}

TEST_CASE("one horizontal cylinder has no standard basis") {
  int tried = 0;
  for (const auto& o : h2_origamis(4)) {
    if (horizontal_decomposition(o).cylinders.size() != 1) continue;
    ++tried;
    CHECK_THROWS_AS(standard_basis(o), BasisUnavailable);
    const auto [dx, dy] = find_basis_directions(o, 64);
    CHECK(determinant(dx, dy) != 0);
  }
  CHECK(tried > 0);
}

TEST_CASE("intersection numbers") {
  const Origami o = make_l_origami(2, 4);
  const HomologyBasis b = standard_basis(o);
  const auto& [x1, x2, y1, y2] = b.loops;
  CHECK(intersection_number(o, x1, y2) == 1);
  CHECK(intersection_number(o, y2, x1) == -1);
  CHECK(intersection_number(o, x1, x1) == 0);
  CHECK(intersection_number(o, y1, y2) == 0);

  const Direction d{2, 3};
  const auto theta_r = core_with_f(o, d, 3);
  const auto theta_g = core_with_f(o, d, 2);
  CHECK(intersection_number(o, x2, theta_r) == 3);
  CHECK(intersection_number(o, x2, theta_g) == 3);
  CHECK(intersection_number(o, x1, theta_r) == 2);
  CHECK(intersection_number(o, y2, theta_g) == -3);
  CHECK(intersection_number(o, theta_r, theta_g) == 0);
}

TEST_CASE("classes in the basis and their holonomy") {
  const Origami o = make_l_origami(2, 4);
  const HomologyBasis b = standard_basis(o);
  const Direction d{2, 3};
  CHECK(express_in_basis(o, b.loops[0], b) == ClassVector{1, 0, 0, 0});
  CHECK(express_in_basis(o, b.loops[3], b) == ClassVector{0, 0, 0, 1});
  const ClassVector r = express_in_basis(o, core_with_f(o, d, 3), b);
  const ClassVector g = express_in_basis(o, core_with_f(o, d, 2), b);
  CHECK(r == ClassVector{4, 1, 1, 2});
  CHECK(g == ClassVector{2, 1, 2, 1});
  CHECK(pushforward(r, b) == std::pair<std::int64_t, std::int64_t>{6, 9});
  CHECK(pushforward(g, b) == std::pair<std::int64_t, std::int64_t>{4, 6});
  CHECK(pushforward(b.loops[1]) == std::pair<std::int64_t, std::int64_t>{2, 0});
  CHECK(omega(r, g, b.gram) == 0);
}

TEST_CASE("non-tautological basis") {
  const auto nt4 = nontaut_basis(standard_basis(make_l_origami(2, 4)));
  CHECK(nt4.x == ClassVector{-2, 1, 0, 0});
  CHECK(nt4.y == ClassVector{0, 0, -4, 1});
  const auto nt3 = nontaut_basis(standard_basis(make_l_origami(2, 3)));
  CHECK(nt3.y == ClassVector{0, 0, -3, 1});

  HomologyBasis unit;
  unit.f = {1, 1, 1, 1};
  unit.gram = kLGram;
  const auto nt = nontaut_basis(unit);
  CHECK(nt.x == ClassVector{-1, 1, 0, 0});
  CHECK(nt.y == ClassVector{0, 0, -1, 1});

  HomologyBasis shared;
  shared.f = {2, 4, 6, 9};
  shared.gram = kLGram;
  const auto ns = nontaut_basis(shared);
  CHECK(ns.x == ClassVector{-2, 1, 0, 0});
  CHECK(ns.y == ClassVector{0, 0, -3, 2});

  const HomologyBasis b = standard_basis(make_l_origami(2, 4));
  CHECK(pushforward(nt4.x, b) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(pushforward(nt4.y, b) == std::pair<std::int64_t, std::int64_t>{0, 0});
}

TEST_CASE("gram solve failures") {
  HomologyBasis b;
  b.gram = kLGram;
  CHECK(solve_gram(b, ClassVector{0, 0, 0, 1}) == ClassVector{-1, 0, 0, 0});
  for (auto& row : b.gram) {
    for (auto& x : row) x *= 2;
  }
  CHECK_THROWS_AS(solve_gram(b, ClassVector{1, 0, 0, 0}), IntegralityError);
  HomologyBasis zero;
  CHECK_THROWS_AS(solve_gram(zero, ClassVector{1, 0, 0, 0}), RankError);
}

TEST_CASE("basis direction search") {
  const auto [dx, dy] = find_basis_directions(make_l_origami(2, 4), 64);
  CHECK(dx == Direction{1, 0});
  CHECK(dy == Direction{0, 1});
  CHECK_THROWS_AS(find_basis_directions(make_l_origami(2, 4), 0), NoBasisFound);
}

}  // TEST_SUITE
