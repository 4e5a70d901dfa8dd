#include <doctest.h>

#include <random>

#include "kzindex/coset.hpp"
#include "kzindex/errors.hpp"
#include "kzindex/sl2.hpp"

using namespace kz;

namespace {

std::vector<Mat2> conjugate(const std::vector<Mat2>& gens, const Mat2& g) {
  std::vector<Mat2> out;
  for (const auto& m : gens) out.push_back(g * m * g.inverse());
  return out;
}

const Mat2 kMinusI{-1, 0, 0, -1};

}  // namespace

TEST_SUITE("sl2") {

TEST_CASE("words and matrices") {
  CHECK(word_to_matrix({}) == Mat2::identity());
  CHECK(word_to_matrix({Letter::S, Letter::S}) == kMinusI);
  CHECK(word_to_matrix({Letter::S, Letter::S, Letter::S, Letter::S}) == Mat2::identity());
  Word st6;
  for (int i = 0; i < 6; ++i) {
    st6.push_back(Letter::S);
    st6.push_back(Letter::T);
  }
  CHECK(word_to_matrix(st6) == Mat2::identity());
  CHECK(word_to_matrix({Letter::T, Letter::TInv}) == Mat2::identity());
  CHECK(to_string(Word{Letter::S, Letter::TInv}) == "St");

  CHECK(matrix_to_word(Mat2::identity()).empty());
  CHECK(matrix_to_word(kMatT) == Word{Letter::T});
  for (const Mat2 m : {Mat2{2, 1, -1, 0}, Mat2{3, 2, -2, -1}, Mat2{1, 0, -1, 1}, kMinusI, Mat2{13, 8, 8, 5}}) {
    CHECK(word_to_matrix(matrix_to_word(m)) == m);
  }
  CHECK_THROWS_AS(matrix_to_word(Mat2{2, 0, 0, 1}), UnimodularityError);

  Word w{Letter::S, Letter::T, Letter::TInv, Letter::SInv, Letter::T};
  free_reduce(w);
  CHECK(w == Word{Letter::T});
  CHECK(word_to_matrix(inverse(Word{Letter::S, Letter::T})) == word_to_matrix({Letter::S, Letter::T}).inverse());
}

TEST_CASE("matrix parsing") {
  CHECK(parse_mat2("2,1,-1,0") == Mat2{2, 1, -1, 0});
  CHECK(parse_mat2(" 1, 0 ,-1,1") == Mat2{1, 0, -1, 1});
  CHECK_THROWS_AS(parse_mat2("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_mat2("1;2;3;4"), ParseError);
  CHECK_THROWS_AS(parse_mat2("1,2,3,4,5"), ParseError);
}

TEST_CASE("presentation words are freely reduced") {
  const GenWord w = to_presentation({Letter::S, Letter::T});
  CHECK(w == GenWord{kB});
  CHECK(to_presentation({Letter::T, Letter::TInv}).empty());
}

TEST_CASE("indices of classical subgroups") {
  CHECK(index_in_sl2({kMatS, kMatT}) == 1);
  CHECK(index_in_sl2({Mat2{2, 1, -1, 0}, Mat2{1, 0, -1, 1}}) == 1);
  CHECK(index_in_sl2({Mat2{3, 2, -2, -1}, Mat2{1, 0, -1, 1}}) == 3);
  // Gamma_0(2)
  CHECK(index_in_sl2({kMatT, Mat2{1, 0, 2, 1}, kMinusI}) == 3);
  // Gamma(2), with and without -I
  CHECK(index_in_sl2({Mat2{1, 2, 0, 1}, Mat2{1, 0, 2, 1}, kMinusI}) == 6);
  CHECK(index_in_sl2({Mat2{1, 2, 0, 1}, Mat2{1, 0, 2, 1}}) == 12);
  CHECK_THROWS_AS(index_in_sl2({kMinusI}, 50), IndexExceedsCap);
  CHECK_THROWS_AS(index_in_sl2({kMatT}, 50), IndexExceedsCap);
  CHECK_THROWS_AS(index_in_sl2({}, 50), IndexExceedsCap);
}

TEST_CASE("minus identity") {
  CHECK(contains_minus_identity({kMatS, kMatT}));
  CHECK(contains_minus_identity({Mat2{3, 2, -2, -1}, Mat2{1, 0, -1, 1}}));
  CHECK_FALSE(contains_minus_identity({Mat2{1, 2, 0, 1}, Mat2{1, 0, 2, 1}}));
}

TEST_CASE("conjugation does not change the index") {
  std::mt19937_64 rng(7);
  const std::vector<std::pair<std::vector<Mat2>, std::size_t>> groups{
      {{kMatS, kMatT}, 1},
      {{Mat2{3, 2, -2, -1}, Mat2{1, 0, -1, 1}}, 3},
      {{Mat2{1, 2, 0, 1}, Mat2{1, 0, 2, 1}, kMinusI}, 6},
  };
  for (int trial = 0; trial < 30; ++trial) {
    Word w;
    for (int i = 0; i < 8; ++i) w.push_back(static_cast<Letter>(rng() % 4));
    const Mat2 g = word_to_matrix(w);
    for (const auto& [gens, idx] : groups) {
      const auto conj = conjugate(gens, g);
      const CosetTable t = enumerate_cosets(conj);
      CHECK(t.index() == idx);
      CHECK(table_is_consistent(t, conj));
    }
  }
}

}  // TEST_SUITE
