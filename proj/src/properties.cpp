#include "kzindex/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "kzindex/census.hpp"
#include "kzindex/coset.hpp"
#include "kzindex/homology.hpp"
#include "kzindex/monodromy.hpp"

namespace kz {

namespace {

const std::vector<Origami>& h2_cache(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<Origami>> cache;
  const std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, h2_origamis(d)).first;
  return it->second;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A check returns an empty optional on success, a message on failure, and
// throws Skip when the input does not satisfy the property's precondition.
struct Skip {};
using Check = std::function<std::optional<std::string>(std::mt19937_64&)>;

PropertyResult run(const std::string& name, std::uint64_t seed, std::size_t cases, const Check& check) {
  PropertyResult r;
  r.name = name;
  std::mt19937_64 rng(seed ^ std::hash<std::string>{}(name));
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    std::optional<std::string> fail;
    try {
      fail = check(rng);
    } catch (const Skip&) {
      ++r.skipped;
      continue;
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    if (fail) {
      if (r.failures == 0) r.first_failure = "case " + std::to_string(i) + ": " + *fail;
      ++r.failures;
    }
  }
  return r;
}

std::string describe(const Origami& o, const Direction& d) {
  std::ostringstream os;
  os << "h=" << format_cycles(o.h()) << " v=" << format_cycles(o.v()) << " dir=(" << d.p << "," << d.q << ")";
  return os.str();
}

std::vector<int> f_values(const CylinderDecomposition& dec) {
  std::vector<int> f;
  for (const auto& c : dec.cylinders) f.push_back(c.f);
  std::sort(f.begin(), f.end());
  return f;
}

// Every pair of directions with |p|+|q| <= 5 that yields a unimodular
// basis, except `avoid`.
std::optional<HomologyBasis> other_basis(const Origami& o, const HomologyBasis& avoid) {
  std::vector<Direction> dirs;
  for (int s = 1; s <= 5; ++s) {
    for (int q = 0; q <= s; ++q) {
      const int p = s - q;
      for (int sign : {1, -1}) {
        if (sign < 0 && (p == 0 || q == 0)) continue;
        if (std::gcd(p, q) != 1) continue;
        const Direction d = Direction::make(sign * p, q);
        if (decompose(o, d).cylinders.size() == 2) dirs.push_back(d);
      }
    }
  }
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (dirs[i] == avoid.dir_x && dirs[j] == avoid.dir_y) continue;
      if (determinant(dirs[i], dirs[j]) == 0) continue;
      try {
        auto b = basis_from_directions(o, dirs[i], dirs[j]);
        if (b.gram_det == 1) return b;
      } catch (const RankError&) {
      }
    }
  }
  return std::nullopt;
}

std::size_t index_of(const std::vector<Mat2>& gens) {
  try {
    return index_in_sl2(gens, 2000);
  } catch (const IndexExceedsCap&) {
    throw Skip{};
  }
}

}  // namespace

Origami random_h2_origami(std::mt19937_64& rng, int dmin, int dmax) {
  const int d = uniform(rng, dmin, dmax);
  const auto& all = h2_cache(d);
  const Origami& o = all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
  std::vector<int> sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return relabel(o, Permutation(sigma));
}

Direction random_direction(std::mt19937_64& rng, int bound) {
  while (true) {
    const int p = uniform(rng, -bound, bound);
    const int q = uniform(rng, -bound, bound);
    if ((p != 0 || q != 0) && std::gcd(p, q) == 1) return Direction::make(p, q);
  }
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  Word w(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len))));
  for (auto& l : w) l = static_cast<Letter>(uniform(rng, 0, 3));
  return w;
}

PropertyResult cross_algorithm_check(std::uint64_t seed, std::size_t cases) {
  return run("geometry.cross_algorithm", seed, cases, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 12);
    const Direction dir = random_direction(rng, 7);
    const auto dec = decompose(o, dir);
    const auto diag = separatrix_diagram(o, dir);
    const auto parts = trace_boundaries(diag);
    std::vector<int> traced_f;
    for (const auto& part : parts) {
      std::int64_t f = 0;
      for (int e : part) f += diag.edges[static_cast<std::size_t>(e)].multiple;
      traced_f.push_back(static_cast<int>(f));
    }
    std::sort(traced_f.begin(), traced_f.end());
    if (parts.size() != dec.cylinders.size()) {
      return describe(o, dir) + ": " + std::to_string(parts.size()) + " boundary orbits vs " +
             std::to_string(dec.cylinders.size()) + " cylinders";
    }
    if (traced_f != f_values(dec)) return describe(o, dir) + ": f-multisets differ";
    if (diag.edges.size() != 3 || dec.saddle_connections.size() != 3) {
      return describe(o, dir) + ": saddle connection count " + std::to_string(diag.edges.size()) + "/" +
             std::to_string(dec.saddle_connections.size());
    }
    return std::nullopt;
  });
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t scale) {
  const std::size_t k = std::max<std::size_t>(scale, 1);
  std::vector<PropertyResult> out;

  out.push_back(run("origami.gauss_bonnet", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = act_word(random_h2_origami(rng, 3, 12), random_word(rng, 12));
    const auto s = singularity_data(o);
    const int sum = std::accumulate(s.cone_orders.begin(), s.cone_orders.end(), 0);
    if (sum != 2 * s.genus - 2) return "sum of cone orders " + std::to_string(sum);
    if (!s.in_h2()) return "SL2 action left H(2)";
    return std::nullopt;
  }));

  out.push_back(run("origami.canonical_class_function", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 12);
    std::vector<int> sigma(static_cast<std::size_t>(o.degree()));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const Origami c = canonical_form(o);
    if (canonical_form(relabel(o, Permutation(sigma))) != c) return "canonical form changed under relabelling";
    if (canonical_form(c) != c) return "canonical form not idempotent";
    return std::nullopt;
  }));

  out.push_back(run("origami.orbit_closed", seed, 10 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const auto orb = orbit(random_h2_origami(rng, 3, 8));
    for (const auto& m : orb) {
      for (Letter g : {Letter::S, Letter::T}) {
        if (!std::binary_search(orb.begin(), orb.end(), canonical_form(act_generator(m, g)))) {
          return "orbit not closed under generator";
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run("geometry.area_and_frame", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 12);
    const Direction dir = random_direction(rng, 7);
    const auto dec = decompose(o, dir);
    int area = 0;
    for (const auto& c : dec.cylinders) area += c.circumference * c.height_rows;
    if (area != o.degree()) return describe(o, dir) + ": area " + std::to_string(area);
    std::vector<int> circ;
    for (const auto& c : horizontal_decomposition(act(shear_matrix(dir), o)).cylinders) circ.push_back(c.circumference);
    std::sort(circ.begin(), circ.end());
    if (circ != f_values(dec)) return describe(o, dir) + ": f depends on the frame";
    for (const auto& c : dec.cylinders) {
      const Vec2 hol = c.core.holonomy();
      if (hol.x != Rational(static_cast<std::int64_t>(c.f) * dir.p) || hol.y != Rational(static_cast<std::int64_t>(c.f) * dir.q)) {
        return describe(o, dir) + ": core holonomy is not f * direction";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run("geometry.saddle_connections", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 12);
    const Direction dir = random_direction(rng, 7);
    const auto scs = saddle_connections(o, dir);
    if (scs.size() != 3) return describe(o, dir) + ": " + std::to_string(scs.size()) + " saddle connections";
    for (const auto& sc : scs) {
      Vec2 hol;
      for (const auto& s : sc.segments) hol = hol + (s.exit - s.entry);
      if (sc.multiple <= 0 || hol.x != Rational(sc.multiple * dir.p) || hol.y != Rational(sc.multiple * dir.q)) {
        return describe(o, dir) + ": holonomy is not a positive multiple of the direction";
      }
    }
    return std::nullopt;
  }));

  out.push_back(cross_algorithm_check(seed, 100 * k));

  out.push_back(run("homology.skew_symmetry_bilinearity", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 9);
    if (!is_primitive(o)) throw Skip{};
    HomologyBasis basis;
    try {
      basis = default_basis(o);
    } catch (const NoBasisFound&) {
      throw Skip{};
    }
    const Direction dir = random_direction(rng, 5);
    std::vector<GeodesicLoop> loops(basis.loops.begin(), basis.loops.end());
    for (const auto& c : decompose(o, dir).cylinders) loops.push_back(c.core);
    std::vector<ClassVector> classes;
    for (const auto& l : loops) classes.push_back(express_in_basis(o, l, basis));
    for (std::size_t i = 0; i < loops.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const auto ij = intersection_number(o, loops[i], loops[j]);
        const auto ji = intersection_number(o, loops[j], loops[i]);
        if (ij != -ji) return describe(o, dir) + ": Omega not skew";
        if (ij != omega(classes[i], classes[j], basis.gram)) return describe(o, dir) + ": Omega not bilinear";
      }
    }
    const auto nt = nontaut_basis(basis);
    using P = std::pair<std::int64_t, std::int64_t>;
    if (pushforward(nt.x, basis) != P{0, 0} || pushforward(nt.y, basis) != P{0, 0}) {
      return describe(o, dir) + ": non-tautological basis has nonzero pushforward";
    }
    return std::nullopt;
  }));

  out.push_back(run("monodromy.det_trace_kernel", seed, 100 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 9);
    if (!is_primitive(o)) throw Skip{};
    HomologyBasis basis;
    try {
      basis = default_basis(o);
    } catch (const NoBasisFound&) {
      throw Skip{};
    }
    const Direction dir = random_direction(rng, 5);
    const auto t = analyze_twist(o, dir, basis);
    if (t.matrix.det() != 1 || t.matrix.trace() != 2) return describe(o, dir) + ": matrix " + to_string(t.matrix);
    using P = std::pair<std::int64_t, std::int64_t>;
    if (pushforward(t.image_x, basis) != P{0, 0} || pushforward(t.image_y, basis) != P{0, 0}) {
      return describe(o, dir) + ": twist leaves the non-tautological part";
    }
    return std::nullopt;
  }));

  out.push_back(run("monodromy.basis_independence", seed, 200 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Origami o = random_h2_origami(rng, 3, 7);
    if (!is_primitive(o)) throw Skip{};
    const HomologyBasis b1 = default_basis(o);
    const auto b2 = other_basis(o, b1);
    if (!b2) throw Skip{};
    const Direction d1 = random_direction(rng, 3);
    const Direction d2 = random_direction(rng, 3);
    if (d1 == d2) throw Skip{};
    const std::vector<Mat2> g1{dehn_twist_action(o, d1, b1), dehn_twist_action(o, d2, b1)};
    const std::vector<Mat2> g2{dehn_twist_action(o, d1, *b2), dehn_twist_action(o, d2, *b2)};
    if (index_of(g1) != index_of(g2)) return describe(o, d1) + ": index depends on the basis";
    return std::nullopt;
  }));

  out.push_back(run("sl2.word_round_trip", seed, 1000 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Mat2 m = word_to_matrix(random_word(rng, 20));
    const Word w = matrix_to_word(m);
    if (word_to_matrix(w) != m) return "round trip failed for " + to_string(m);
    return std::nullopt;
  }));

  out.push_back(run("sl2.index_invariance", seed, 50 * k, [](std::mt19937_64& rng) -> std::optional<std::string> {
    static const std::vector<std::vector<Mat2>> bases{
        {kMatS, kMatT},
        {{2, 1, -1, 0}, {1, 0, -1, 1}},
        {{3, 2, -2, -1}, {1, 0, -1, 1}},
        {{1, 2, 0, 1}, {1, 0, 2, 1}, -Mat2::identity()},
        {kMatT, {1, 0, 2, 1}, -Mat2::identity()},
        {{1, 3, 0, 1}, {1, 0, -3, 1}, {-1, 1, -3, 2}},
    };
    auto gens = bases[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(bases.size()) - 1))];
    const std::size_t base = index_of(gens);
    const CosetTable table = enumerate_cosets(gens, 2000);
    if (!table_is_consistent(table, gens)) return "inconsistent coset table";
    auto varied = gens;
    std::shuffle(varied.begin(), varied.end(), rng);
    for (auto& g : varied) {
      if (uniform(rng, 0, 1) == 1) g = g.inverse();
    }
    if (index_of(varied) != base) return "index depends on generator order or inversion";
    const Mat2 c = word_to_matrix(random_word(rng, 8));
    std::vector<Mat2> conj;
    for (const auto& g : gens) conj.push_back(c * g * c.inverse());
    if (index_of(conj) != base) return "index not conjugation invariant";
    return std::nullopt;
  }));

  return out;
}

}  // namespace kz
