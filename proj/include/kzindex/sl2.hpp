#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kz {

// Integer 2x2 matrix [[a, b], [c, d]]. Elements of SL2(Z) have det() == 1;
// the type itself does not enforce it so intermediate products stay cheap.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;

  constexpr Mat2 operator*(const Mat2& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
  }
  constexpr Mat2 operator-() const { return {-a, -b, -c, -d}; }
  constexpr std::int64_t det() const { return a * d - b * c; }
  constexpr std::int64_t trace() const { return a + d; }
  // Inverse of a determinant-one matrix.
  constexpr Mat2 inverse() const { return {d, -b, -c, a}; }

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
};

inline constexpr Mat2 kMatS{0, -1, 1, 0};
inline constexpr Mat2 kMatT{1, 1, 0, 1};

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::string to_string(const Mat2& m);

enum class Letter { S, SInv, T, TInv };

using Word = std::vector<Letter>;

Letter inverse(Letter l);
Mat2 letter_matrix(Letter l);
char letter_symbol(Letter l);  // 'S', 's', 'T', 't'
std::string to_string(const Word& w);

// Product of the generator matrices, left to right.
Mat2 word_to_matrix(const Word& w);

// Euclidean reduction of the first column. Throws UnimodularityError unless
// det M == 1. The result is freely reduced and word_to_matrix(result) == M.
Word matrix_to_word(const Mat2& m);

Word inverse(const Word& w);
void free_reduce(Word& w);

// Parses "a,b,c,d" (row major).
Mat2 parse_mat2(const std::string& text);

}  // namespace kz
