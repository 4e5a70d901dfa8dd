#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kzindex/errors.hpp"
#include "kzindex/sl2.hpp"

namespace kz {

// Bijection of {0, ..., degree-1}. Text and JSON use 1-based labels; the
// C++ API is 0-based throughout.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Cycles given with 0-based labels; unmentioned points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& b) const;
  Permutation pow(std::int64_t k) const;
  bool is_identity() const;

  // Cycles including fixed points, each starting at its smallest element,
  // ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Square-tiled surface: h(i) is the right neighbour of square i, v(i) the
// top neighbour.
class Origami {
 public:
  Origami() = default;
  Origami(Permutation h, Permutation v);

  const Permutation& h() const { return h_; }
  const Permutation& v() const { return v_; }
  int degree() const { return h_.degree(); }

  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami&, const Origami&) = default;

 private:
  Permutation h_;
  Permutation v_;
};

struct SingularityData {
  std::vector<int> cone_orders;  // sorted descending; cone angle 2*pi*(k+1)
  int genus = 1;

  bool in_h2() const { return cone_orders == std::vector<int>{2}; }
};

class OrbitTooLarge : public Error {
 public:
  OrbitTooLarge(const std::string& what, std::vector<Origami> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<Origami>& partial() const { return partial_; }

 private:
  std::vector<Origami> partial_;
};

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

// L-shaped origami: squares 0..n-1 form the bottom row and n..n+m-2 are
// stacked above square 0.
Origami make_l_origami(int n, int m);

// v h v^-1 h^-1: cycles are the vertices, a cycle of length l is a point of
// cone angle 2*pi*l.
Permutation corner_permutation(const Origami& o);

SingularityData singularity_data(const Origami& o);

// SL2(Z) action. T shears: (h, v) -> (h, v h^-1). S rotates by a quarter
// turn counter-clockwise: (h, v) -> (v^-1, h).
Origami act_generator(const Origami& o, Letter g);
Origami act_t_power(const Origami& o, std::int64_t k);
Origami act_word(const Origami& o, const Word& w);
// The origami M.O, where the affine map O -> M.O has derivative M.
Origami act(const Mat2& m, const Origami& o);

Origami relabel(const Origami& o, const Permutation& sigma);
Origami canonical_form(const Origami& o);
bool same_orbit(const Origami& a, const Origami& b, std::size_t cap = kDefaultOrbitCap);

// Canonical forms reachable through S and T, sorted.
std::vector<Origami> orbit(const Origami& o, std::size_t cap = kDefaultOrbitCap);

bool is_primitive(const Origami& o);

// Text format: "h=(1 2)" / "v=(1 3 4 5)", optional "d=<int>" line, '#'
// comments. Cycles are 1-based.
Origami parse_origami(const std::string& text);
std::string format_cycles(const Permutation& p);
std::string format_origami(const Origami& o);

struct OrigamiHash {
  std::size_t operator()(const Origami& o) const;
};

}  // namespace kz
