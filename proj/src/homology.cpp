#include "kzindex/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "kzindex/errors.hpp"

namespace kz {

namespace {

constexpr int kOffsetRounds = 12;

// 1/2, 1/2 - 1/3, 1/2 + 1/3, 1/2 - 1/5, ...
Rational offset(int i) {
  if (i == 0) return Rational(1, 2);
  const int k = (i + 1) / 2;
  const Rational delta(1, 2 * k + 1);
  return i % 2 == 1 ? Rational(1, 2) - delta : Rational(1, 2) + delta;
}

// Number of transverse crossings, or nullopt if some crossing touches a
// segment end.
std::optional<std::int64_t> count_crossings(const GeodesicLoop& a, const GeodesicLoop& b) {
  std::multimap<int, const Segment*> by_square;
  for (const auto& s : b.segments) by_square.emplace(s.square, &s);
  std::int64_t count = 0;
  for (const auto& sa : a.segments) {
    const Vec2 da = sa.exit - sa.entry;
    auto [lo, hi] = by_square.equal_range(sa.square);
    for (auto it = lo; it != hi; ++it) {
      const Segment& sb = *it->second;
      const Vec2 db = sb.exit - sb.entry;
      const Rational den = cross(da, db);
      if (den == 0) continue;
      const Vec2 w = sb.entry - sa.entry;
      const Rational s = cross(w, db) / den;
      const Rational t = cross(w, da) / den;
      if (s < 0 || s > 1 || t < 0 || t > 1) continue;
      if (s == 0 || s == 1 || t == 0 || t == 1) return std::nullopt;
      ++count;
    }
  }
  return count;
}

GeodesicLoop at_height(const Origami& o, const GeodesicLoop& loop, int i) {
  if (i == 0) return loop;
  return core_curve(o, loop.dir, loop.anchor->sheared_square, offset(i));
}

std::int64_t det4(const GramMatrix& a) {
  std::array<std::array<Rational, 4>, 4> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Rational(a[i][j]);
  Rational det(1);
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const Rational fct = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= fct * m[c][k];
    }
  }
  return det.numerator();
}

struct SortedPair {
  GeodesicLoop first, second;
  int f1 = 0, f2 = 0;
};

SortedPair two_cylinders(const Origami& o, const Direction& dir) {
  const auto dec = decompose(o, dir);
  if (dec.cylinders.size() != 2) {
    throw BasisUnavailable("direction (" + std::to_string(dir.p) + "," + std::to_string(dir.q) + ") has " +
                           std::to_string(dec.cylinders.size()) + " cylinders, need 2");
  }
  auto low = [](const Cylinder& c) {
    int m = c.rows[0][0];
    for (const auto& row : c.rows) m = std::min(m, *std::min_element(row.begin(), row.end()));
    return m;
  };
  const Cylinder* a = &dec.cylinders[0];
  const Cylinder* b = &dec.cylinders[1];
  if (std::make_pair(b->f, low(*b)) < std::make_pair(a->f, low(*a))) std::swap(a, b);
  return {a->core, b->core, a->f, b->f};
}

}  // namespace

std::int64_t intersection_number(const Origami& o, const GeodesicLoop& alpha, const GeodesicLoop& beta) {
  const std::int64_t sign = determinant(alpha.dir, beta.dir);
  if (sign == 0) return 0;
  const int na = alpha.anchor ? 2 * kOffsetRounds + 1 : 1;
  const int nb = beta.anchor ? 2 * kOffsetRounds + 1 : 1;
  for (int total = 0; total <= na + nb - 2; ++total) {
    for (int i = std::max(0, total - nb + 1); i <= std::min(total, na - 1); ++i) {
      const int j = total - i;
      const auto c = count_crossings(at_height(o, alpha, i), at_height(o, beta, j));
      if (c) return sign > 0 ? *c : -*c;
    }
  }
  throw DegenerateConfiguration("intersection count stays degenerate for every core-curve offset");
}

HomologyBasis basis_from_directions(const Origami& o, const Direction& dx, const Direction& dy) {
  if (determinant(dx, dy) == 0) throw BasisUnavailable("basis directions must not be parallel");
  HomologyBasis b;
  b.dir_x = dx;
  b.dir_y = dy;
  auto px = two_cylinders(o, dx);
  auto py = two_cylinders(o, dy);
  b.loops = {px.first, px.second, py.first, py.second};
  b.f = {px.f1, px.f2, py.f1, py.f2};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      b.gram[i][j] = intersection_number(o, b.loops[i], b.loops[j]);
      b.gram[j][i] = -b.gram[i][j];
    }
  }
  b.gram_det = det4(b.gram);
  if (b.gram_det == 0) throw RankError("intersection matrix of the core curves is singular");
  return b;
}

HomologyBasis standard_basis(const Origami& o) {
  return basis_from_directions(o, Direction::make(1, 0), Direction::make(0, 1));
}

std::pair<Direction, Direction> find_basis_directions(const Origami& o, std::size_t cap) {
  std::vector<Direction> usable;
  std::size_t examined = 0;
  for (int s = 1; examined < cap; ++s) {
    for (int q = 0; q <= s && examined < cap; ++q) {
      for (int sgn : {1, -1}) {
        const int p = sgn * (s - q);
        if (sgn == -1 && (p == 0 || q == 0)) continue;
        if (std::gcd(p, q) != 1 || examined >= cap) continue;
        ++examined;
        const Direction cand = Direction::make(p, q);
        if (decompose(o, cand).cylinders.size() != 2) continue;
        for (const auto& prev : usable) {
          if (determinant(prev, cand) == 0) continue;
          try {
            const auto b = basis_from_directions(o, prev, cand);
            if (b.gram_det == 1) return {prev, cand};
          } catch (const RankError&) {
          }
        }
        usable.push_back(cand);
      }
    }
  }
  throw NoBasisFound("no pair of 2-cylinder directions with unimodular intersection matrix among " +
                     std::to_string(cap) + " candidates");
}

ClassVector solve_gram(const HomologyBasis& basis, const ClassVector& rhs) {
  std::array<std::array<Rational, 5>, 4> m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = Rational(basis.gram[i][j]);
    m[i][4] = Rational(rhs[i]);
  }
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw RankError("intersection matrix is singular");
    std::swap(m[piv], m[c]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational fct = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= fct * m[c][k];
    }
  }
  ClassVector x{};
  for (int i = 0; i < 4; ++i) {
    const Rational v = m[i][4] / m[i][i];
    if (!is_integer(v)) {
      throw IntegralityError("class has non-integral coordinate " + to_string(v) + " in the basis");
    }
    x[i] = v.numerator();
  }
  return x;
}

ClassVector express_in_basis(const Origami& o, const GeodesicLoop& loop, const HomologyBasis& basis) {
  ClassVector rhs{};
  for (int i = 0; i < 4; ++i) rhs[i] = intersection_number(o, basis.loops[i], loop);
  return solve_gram(basis, rhs);
}

std::pair<std::int64_t, std::int64_t> pushforward(const GeodesicLoop& loop) {
  const Vec2 h = loop.holonomy();
  return {h.x.numerator(), h.y.numerator()};
}

std::pair<std::int64_t, std::int64_t> pushforward(const ClassVector& z, const HomologyBasis& basis) {
  std::int64_t x = 0, y = 0;
  for (int i = 0; i < 4; ++i) {
    const auto [hx, hy] = pushforward(basis.loops[i]);
    x += z[i] * hx;
    y += z[i] * hy;
  }
  return {x, y};
}

NonTautBasis nontaut_basis(const HomologyBasis& basis) {
  NonTautBasis nb;
  const std::int64_t gx = std::gcd(basis.f[0], basis.f[1]);
  const std::int64_t gy = std::gcd(basis.f[2], basis.f[3]);
  nb.x = {-basis.f[1] / gx, basis.f[0] / gx, 0, 0};
  nb.y = {0, 0, -basis.f[3] / gy, basis.f[2] / gy};
  return nb;
}

std::int64_t omega(const ClassVector& u, const ClassVector& w, const GramMatrix& a) {
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += u[i] * a[i][j] * w[j];
  return s;
}

}  // namespace kz
