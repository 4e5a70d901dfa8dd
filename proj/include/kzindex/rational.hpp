#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace kz {

using Rational = boost::rational<std::int64_t>;

// boost::rational's mixed comparisons recurse forever under the C++20
// reversed-operator rules; these exact overloads take precedence.
inline bool operator==(const Rational& a, int b) { return a == Rational(b); }
inline bool operator<(const Rational& a, int b) { return a < Rational(b); }
inline bool operator>(const Rational& a, int b) { return a > Rational(b); }
inline bool operator<=(const Rational& a, int b) { return !(a > Rational(b)); }
inline bool operator>=(const Rational& a, int b) { return !(a < Rational(b)); }

struct Vec2 {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << "(" << to_string(v.x) << ", " << to_string(v.y) << ")";
}

}  // namespace kz
