#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kzindex/errors.hpp"
#include "kzindex/geometry.hpp"

using namespace kz;

namespace {

std::vector<int> sorted_f(const CylinderDecomposition& d) {
  std::vector<int> f;
  for (const auto& c : d.cylinders) f.push_back(c.f);
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::pair<int, int>> shapes(const CylinderDecomposition& d) {
  std::vector<std::pair<int, int>> s;
  for (const auto& c : d.cylinders) s.emplace_back(c.circumference, c.height_rows);
  std::sort(s.begin(), s.end());
  return s;
}

const Origami kTorus{Permutation::identity(1), Permutation::identity(1)};

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("direction normalisation") {
  CHECK(Direction::make(-2, -3) == Direction{2, 3});
  CHECK(Direction::make(2, -3) == Direction{-2, 3});
  CHECK(Direction::make(-1, 0) == Direction{1, 0});
  CHECK(Direction::make(0, -1) == Direction{0, 1});
  CHECK_THROWS_AS(Direction::make(0, 0), InvalidDirection);
  CHECK_THROWS_AS(Direction::make(2, 4), InvalidDirection);
  CHECK(determinant(Direction{1, 0}, Direction{0, 1}) == 1);
  CHECK(determinant(Direction{2, 3}, Direction{0, 1}) == 2);
}

TEST_CASE("shear matrix sends the direction to the horizontal") {
  CHECK(shear_matrix(Direction{1, 0}) == Mat2::identity());
  CHECK(shear_matrix(Direction{2, 3}) == Mat2{-1, 1, -3, 2});
  for (int p = -7; p <= 7; ++p) {
    for (int q = 0; q <= 7; ++q) {
      if (std::gcd(p, q) != 1 || (q == 0 && p < 0)) continue;
      const Mat2 m = shear_matrix(Direction{p, q});
      CHECK(m.det() == 1);
      CHECK(m.a * p + m.b * q == 1);
      CHECK(m.c * p + m.d * q == 0);
    }
  }
}

TEST_CASE("horizontal decompositions") {
  CHECK(shapes(horizontal_decomposition(make_l_origami(2, 4))) == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}});
  CHECK(shapes(horizontal_decomposition(make_l_origami(2, 6))) == std::vector<std::pair<int, int>>{{1, 5}, {2, 1}});
  CHECK(shapes(horizontal_decomposition(make_l_origami(4, 2))) == std::vector<std::pair<int, int>>{{1, 1}, {4, 1}});
  CHECK(shapes(horizontal_decomposition(kTorus)) == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(horizontal_decomposition(kTorus).saddle_connections.empty());
}

TEST_CASE("decompositions in rational directions") {
  const Origami l24 = make_l_origami(2, 4);
  const auto d23 = decompose(l24, Direction{2, 3});
  CHECK(sorted_f(d23) == std::vector<int>{2, 3});
  for (const auto& c : d23.cylinders) {
    CHECK(c.c == 1);
    CHECK(c.core.holonomy() == Vec2{Rational(2 * c.f), Rational(3 * c.f)});
  }
  CHECK(d23.saddle_connections.size() == 3);

  const auto d01 = decompose(l24, Direction{0, 1});
  CHECK(sorted_f(d01) == std::vector<int>{1, 4});

  const auto d35 = decompose(make_l_origami(2, 3), Direction{3, 5});
  CHECK(sorted_f(d35) == std::vector<int>{1, 2});
  for (const auto& c : d35.cylinders) CHECK(c.c == (c.f == 1 ? 2 : 1));

  // Area is preserved by the shear.
  int area = 0;
  for (const auto& c : d35.cylinders) area += c.circumference * c.height_rows;
  CHECK(area == 4);
}

TEST_CASE("saddle connections") {
  const Origami l24 = make_l_origami(2, 4);
  const auto d = decompose(l24, Direction{2, 3});
  std::int64_t total = 0;
  for (const auto& sc : d.saddle_connections) {
    CHECK(sc.multiple > 0);
    Vec2 sum{Rational(0), Rational(0)};
    for (const auto& s : sc.segments) sum = sum + (s.exit - s.entry);
    CHECK(sum == Vec2{Rational(2 * sc.multiple), Rational(3 * sc.multiple)});
    CHECK(sc.cylinder_above >= 0);
    CHECK(sc.cylinder_below >= 0);
    total += sc.multiple;
  }
  // Every saddle connection lies on exactly one upper boundary.
  CHECK(total == 5);
  CHECK(trace_separatrices(l24, Direction{2, 3}).size() == 3);
  CHECK(saddle_connections(kTorus, Direction{1, 1}).empty());
}

TEST_CASE("separatrix diagram and boundary walk") {
  const auto diag = separatrix_diagram(make_l_origami(2, 4), Direction{2, 3});
  REQUIRE(diag.vertices.size() == 1);
  CHECK(diag.vertices[0].cone_order == 2);
  CHECK(diag.vertices[0].cyclic_order.size() == 6);
  CHECK(diag.edges.size() == 3);
  // Outgoing and incoming ends alternate around the cone point.
  const auto& ends = diag.vertices[0].cyclic_order;
  for (std::size_t i = 0; i < ends.size(); ++i) CHECK(ends[i].outgoing != ends[(i + 1) % ends.size()].outgoing);

  const auto parts = trace_boundaries(diag);
  REQUIRE(parts.size() == 2);
  std::vector<std::int64_t> lengths;
  std::vector<std::size_t> sizes;
  for (const auto& part : parts) {
    std::int64_t len = 0;
    for (int e : part) len += diag.edges[static_cast<std::size_t>(e)].multiple;
    lengths.push_back(len);
    sizes.push_back(part.size());
  }
  std::sort(lengths.begin(), lengths.end());
  std::sort(sizes.begin(), sizes.end());
  CHECK(lengths == std::vector<std::int64_t>{2, 3});
  CHECK(sizes == std::vector<std::size_t>{1, 2});

  CHECK(separatrix_diagram(kTorus, Direction{1, 0}).edges.empty());
}

TEST_CASE("boundary walk on a hand-made diagram") {
  // One vertex, one loop: the single part is the loop itself.
  SeparatrixDiagram diag;
  diag.edges.resize(1);
  diag.edges[0].start_vertex = 0;
  diag.edges[0].end_vertex = 0;
  diag.vertices.resize(1);
  diag.vertices[0].cyclic_order = {EdgeEnd{0, true}, EdgeEnd{0, false}};
  CHECK(trace_boundaries(diag) == std::vector<std::vector<int>>{{0}});

  diag.vertices[0].cyclic_order = {EdgeEnd{0, true}, EdgeEnd{0, true}};
  CHECK_THROWS_AS(trace_boundaries(diag), DegenerateConfiguration);
}

TEST_CASE("lattice points") {
  const Origami l24 = make_l_origami(2, 4);
  const auto pts = lattice_points(l24, Direction{2, 3});
  CHECK(pts.size() == 30);
  const auto scs = saddle_connections(l24, Direction{2, 3});
  for (const auto& p : pts) {
    bool on = false;
    for (const auto& sc : scs) on = on || lies_on(l24, p, sc.segments);
    CHECK(on);
  }
  CHECK(lattice_points(kTorus, Direction{1, 1}).size() == 1);
  CHECK(lattice_points(make_l_origami(2, 2), Direction{1, 2}).size() == 6);

  // The centre of a square is on no saddle connection in the horizontal direction.
  const SurfacePoint centre{0, Vec2{Rational(1, 2), Rational(1, 2)}};
  const auto hor = saddle_connections(l24, Direction{1, 0});
  bool hit = false;
  for (const auto& sc : hor) hit = hit || lies_on(l24, centre, sc.segments);
  CHECK_FALSE(hit);
}

TEST_CASE("closed geodesics") {
  const Origami l24 = make_l_origami(2, 4);
  const auto loop = trace_loop(l24, SurfacePoint{1, Vec2{Rational(1, 2), Rational(1, 2)}}, Direction{1, 0});
  CHECK(loop.holonomy() == Vec2{Rational(2), Rational(0)});
  const auto up = trace_loop(l24, SurfacePoint{1, Vec2{Rational(1, 2), Rational(1, 2)}}, Direction{0, 1});
  CHECK(up.holonomy() == Vec2{Rational(0), Rational(1)});
  CHECK_THROWS_AS(trace_loop(l24, SurfacePoint{0, Vec2{Rational(0), Rational(0)}}, Direction{1, 0}),
                  DegenerateConfiguration);

  const auto core = core_curve(l24, Direction{2, 3}, 0);
  CHECK(core.anchor.has_value());
  CHECK(core.holonomy().x * 3 == core.holonomy().y * 2);
}

}  // TEST_SUITE
