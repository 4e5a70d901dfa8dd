#include <doctest.h>

#include <algorithm>
#include <set>

#include "kzindex/census.hpp"
#include "kzindex/errors.hpp"
#include "kzindex/origami.hpp"

using namespace kz;

namespace {

Origami from_text(const char* text) { return parse_origami(text); }

}  // namespace

TEST_SUITE("origami") {

TEST_CASE("L-origami layout") {
  const Origami o = make_l_origami(2, 4);
  CHECK(o.degree() == 5);
  CHECK(format_cycles(o.h()) == "(1 2)");
  CHECK(format_cycles(o.v()) == "(1 3 4 5)");

  const Origami l33 = make_l_origami(3, 3);
  CHECK(format_cycles(l33.h()) == "(1 2 3)");
  CHECK(format_cycles(l33.v()) == "(1 4 5)");

  CHECK_THROWS_AS(make_l_origami(1, 3), InvalidShape);
  CHECK_THROWS_AS(make_l_origami(3, 1), InvalidShape);
}

TEST_CASE("singularity data") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 5}, {3, 3}, {4, 7}}) {
    const auto s = singularity_data(make_l_origami(n, m));
    CHECK(s.in_h2());
    CHECK(s.genus == 2);
  }
  const Origami torus(Permutation::identity(1), Permutation::identity(1));
  CHECK(singularity_data(torus).cone_orders.empty());
  CHECK(singularity_data(torus).genus == 1);

  // 2x2 torus cover is unbranched.
  const auto cover = from_text("h=(1 2)(3 4)\nv=(1 3)(2 4)\n");
  CHECK(singularity_data(cover).genus == 1);
}

TEST_CASE("corner permutation of L(2,2)") {
  const Permutation k = corner_permutation(make_l_origami(2, 2));
  int fixed = 0, three = 0;
  for (const auto& c : k.cycles()) {
    if (c.size() == 1) ++fixed;
    if (c.size() == 3) ++three;
  }
  CHECK(three == 1);
  CHECK(fixed == 0);
}

TEST_CASE("generators act with the expected orders") {
  const Origami o = make_l_origami(2, 4);
  CHECK(canonical_form(act_generator(act_generator(o, Letter::T), Letter::TInv)) == canonical_form(o));
  CHECK(canonical_form(act_generator(act_generator(o, Letter::S), Letter::SInv)) == canonical_form(o));
  const Word s4{Letter::S, Letter::S, Letter::S, Letter::S};
  CHECK(act_word(o, s4) == o);
  // S^2 = -I acts as the half turn, which is a relabelling for H(2).
  const Word s2{Letter::S, Letter::S};
  CHECK(canonical_form(act_word(o, s2)) == canonical_form(o));
  CHECK(canonical_form(act_t_power(o, 3)) == canonical_form(act(Mat2{1, 3, 0, 1}, o)));
  CHECK(canonical_form(act_t_power(o, -2)) == canonical_form(act(Mat2{1, -2, 0, 1}, o)));
}

TEST_CASE("canonical form is a class function of relabelling") {
  const Origami o = make_l_origami(3, 4);
  const Permutation sigma = Permutation::from_cycles(6, {{0, 4, 2}, {1, 5}});
  const Origami r = relabel(o, sigma);
  CHECK(r != o);
  CHECK(canonical_form(r) == canonical_form(o));
  CHECK(canonical_form(canonical_form(o)) == canonical_form(o));
  CHECK(canonical_form(make_l_origami(2, 4)) != canonical_form(make_l_origami(3, 3)));
}

TEST_CASE("orbits") {
  CHECK(orbit(make_l_origami(2, 2)).size() == 3);
  CHECK(same_orbit(make_l_origami(2, 3), make_l_origami(3, 2)));
  CHECK_FALSE(same_orbit(make_l_origami(2, 4), make_l_origami(3, 3)));
  CHECK(same_orbit(make_l_origami(2, 4), act_word(make_l_origami(2, 4), {Letter::T, Letter::S, Letter::T})));

  const auto members = orbit(make_l_origami(2, 4));
  CHECK(members.size() == 18);
  CHECK(std::is_sorted(members.begin(), members.end()));
  for (const auto& m : members) {
    CHECK(canonical_form(m) == m);
    CHECK(std::binary_search(members.begin(), members.end(), canonical_form(act_generator(m, Letter::S))));
    CHECK(std::binary_search(members.begin(), members.end(), canonical_form(act_generator(m, Letter::T))));
  }

  try {
    (void)orbit(make_l_origami(2, 4), 5);
    FAIL("cap was not enforced");
  } catch (const OrbitTooLarge& e) {
    CHECK(e.partial().size() >= 5);
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(make_l_origami(2, 4)));
  CHECK(is_primitive(make_l_origami(3, 3)));
  CHECK_FALSE(is_primitive(from_text("h=(1 2)(3 4)\nv=(1 3)(2 4)\n")));
  // 45 H(2) origamis of degree 6, 9 of them covers of a larger torus.
  const Census c6 = census(6);
  std::size_t imprimitive = 0;
  for (const auto& o : h2_origamis(6)) imprimitive += is_primitive(o) ? 0 : 1;
  CHECK(imprimitive == 9);
  CHECK(c6.origami_count == 36);
}

TEST_CASE("text format") {
  const Origami o = from_text("# L(2,4)\nd=5\nh=(1 2)\nv=(1 3 4 5)\n");
  CHECK(o == make_l_origami(2, 4));
  CHECK(parse_origami(format_origami(o)) == o);
  // Trailing fixed points need the degree line.
  const Origami p = from_text("h=(1 2)\nv=(1 3)\nd=3\n");
  CHECK(p.degree() == 3);
  CHECK(format_cycles(Permutation::identity(3)) == "()");

  CHECK_THROWS_AS(from_text("h=(1 2)\n"), ParseError);
  CHECK_THROWS_AS(from_text("h=(1 2)\nv=(1 2)\nw=(1)\n"), ParseError);
  CHECK_THROWS_AS(from_text("h=(1 2\nv=(1)\n"), ParseError);
  CHECK_THROWS_AS(from_text("h=(0 1)\nv=(1)\n"), ParseError);
  CHECK_THROWS_AS(from_text("d=2\nh=(1 2 3)\nv=(1)\n"), ParseError);
  CHECK_THROWS_AS(from_text("h=(1 2)(2 3)\nv=(1)\n"), ParseError);
  // Not transitive.
  CHECK_THROWS_AS(from_text("h=(1 2)\nv=(1 2)\nd=3\n"), ParseError);
}

}  // TEST_SUITE
