#include "kzindex/sl2.hpp"

#include <sstream>

#include "kzindex/errors.hpp"

namespace kz {

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "((" << m.a << "," << m.b << "),(" << m.c << "," << m.d << "))";
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

Letter inverse(Letter l) {
  switch (l) {
    case Letter::S: return Letter::SInv;
    case Letter::SInv: return Letter::S;
    case Letter::T: return Letter::TInv;
    case Letter::TInv: return Letter::T;
  }
  return l;
}

Mat2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::S: return kMatS;
    case Letter::SInv: return kMatS.inverse();
    case Letter::T: return kMatT;
    case Letter::TInv: return kMatT.inverse();
  }
  return Mat2::identity();
}

char letter_symbol(Letter l) {
  switch (l) {
    case Letter::S: return 'S';
    case Letter::SInv: return 's';
    case Letter::T: return 'T';
    case Letter::TInv: return 't';
  }
  return '?';
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter_symbol(l));
  return out;
}

Mat2 word_to_matrix(const Word& w) {
  Mat2 m = Mat2::identity();
  for (Letter l : w) m = m * letter_matrix(l);
  return m;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = inverse(l);
  return out;
}

void free_reduce(Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  w = std::move(out);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void push_t_power(Word& w, std::int64_t k) {
  const Letter l = k > 0 ? Letter::T : Letter::TInv;
  for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i) w.push_back(l);
}

}  // namespace

Word matrix_to_word(const Mat2& m) {
  if (m.det() != 1) {
    throw UnimodularityError("matrix_to_word: determinant of " + to_string(m) + " is not 1");
  }
  // Left-multiply by T^k and S until the matrix is +-I. `applied` records the
  // left factors G_1, G_2, ... so that G_n...G_1 M = +-I, hence
  // M = G_1^-1 ... G_n^-1 (+-I).
  Word result;
  Mat2 cur = m;
  while (cur.c != 0) {
    const std::int64_t k = -floor_div(cur.a, cur.c);
    // G = T^k, inverse T^-k.
    push_t_power(result, -k);
    cur = Mat2{cur.a + k * cur.c, cur.b + k * cur.d, cur.c, cur.d};
    // G = S, inverse S^-1.
    result.push_back(Letter::SInv);
    cur = kMatS * cur;
  }
  // cur = [[e, b], [0, e]] with e = +-1.
  const std::int64_t e = cur.a;
  const std::int64_t k = -cur.b * e;
  push_t_power(result, -k);
  if (e == -1) {
    result.push_back(Letter::S);
    result.push_back(Letter::S);
  }
  free_reduce(result);
  return result;
}

Mat2 parse_mat2(const std::string& text) {
  std::int64_t v[4];
  std::istringstream is(text);
  for (int i = 0; i < 4; ++i) {
    if (!(is >> v[i])) throw ParseError("matrix needs four integers a,b,c,d: '" + text + "'");
    if (i < 3) {
      char comma = 0;
      is >> comma;
      if (comma != ',') throw ParseError("matrix entries must be comma separated: '" + text + "'");
    }
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing input in matrix: '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace kz
