#include "kzindex/monodromy.hpp"

#include <numeric>

#include "kzindex/errors.hpp"

namespace kz {

TwistSpec twist_multiplicities(const CylinderDecomposition& dec) {
  TwistSpec spec{dec, {}};
  if (dec.cylinders.empty()) return spec;
  std::int64_t l = 1;
  for (const auto& c : dec.cylinders) l = std::lcm(l, static_cast<std::int64_t>(c.f));
  std::int64_t g = 0;
  for (const auto& c : dec.cylinders) {
    spec.multiplicities.push_back(static_cast<std::int64_t>(c.c) * (l / c.f));
    g = std::gcd(g, spec.multiplicities.back());
  }
  for (auto& n : spec.multiplicities) n /= g;
  return spec;
}

TwistAnalysis analyze_twist(const Origami& o, const Direction& dir, const HomologyBasis& basis) {
  TwistAnalysis out;
  out.twist = twist_multiplicities(decompose(o, dir));
  for (const auto& cyl : out.twist.decomposition.cylinders) {
    ClassVector w{};
    for (int k = 0; k < 4; ++k) w[k] = intersection_number(o, basis.loops[k], cyl.core);
    out.omegas.push_back(w);
    out.classes.push_back(solve_gram(basis, w));
  }
  const NonTautBasis nb = nontaut_basis(basis);
  auto apply = [&](const ClassVector& z) {
    ClassVector r = z;
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      // Omega(z, gamma) = sum_k z_k Omega(b_k, gamma)
      std::int64_t om = 0;
      for (int k = 0; k < 4; ++k) om += z[k] * out.omegas[i][k];
      for (int k = 0; k < 4; ++k) r[k] += out.twist.multiplicities[i] * om * out.classes[i][k];
    }
    return r;
  };
  out.image_x = apply(nb.x);
  out.image_y = apply(nb.y);
  // Coordinates with respect to X = (x0, x1, 0, 0) and Y = (0, 0, y2, y3).
  auto coords = [&](const ClassVector& z) {
    std::int64_t alpha = 0, beta = 0;
    const std::int64_t xi = nb.x[0] != 0 ? 0 : 1;
    const std::int64_t yi = nb.y[2] != 0 ? 2 : 3;
    if (z[xi] % nb.x[xi] != 0 || z[yi] % nb.y[yi] != 0) {
      throw IntegralityError("twist image has non-integral coordinates on X, Y");
    }
    alpha = z[xi] / nb.x[xi];
    beta = z[yi] / nb.y[yi];
    for (int k = 0; k < 4; ++k) {
      if (z[k] != alpha * nb.x[k] + beta * nb.y[k]) {
        throw IntegralityError("twist image leaves the span of X and Y");
      }
    }
    return std::pair{alpha, beta};
  };
  const auto [a, c] = coords(out.image_x);
  const auto [b, d] = coords(out.image_y);
  out.matrix = Mat2{a, b, c, d};
  if (out.matrix.det() != 1) {
    throw UnimodularityError("multitwist matrix " + to_string(out.matrix) + " has determinant " +
                             std::to_string(out.matrix.det()));
  }
  return out;
}

Mat2 dehn_twist_action(const Origami& o, const Direction& dir, const HomologyBasis& basis) {
  return analyze_twist(o, dir, basis).matrix;
}

HomologyBasis default_basis(const Origami& o, std::size_t basis_cap) {
  try {
    auto b = standard_basis(o);
    if (b.gram_det == 1) return b;
  } catch (const BasisUnavailable&) {
  } catch (const RankError&) {
  }
  const auto [dx, dy] = find_basis_directions(o, basis_cap);
  return basis_from_directions(o, dx, dy);
}

std::vector<Mat2> kz_generators(const Origami& o, const std::vector<Direction>& dirs, std::size_t basis_cap) {
  std::vector<Mat2> out;
  if (dirs.empty()) return out;
  const HomologyBasis basis = default_basis(o, basis_cap);
  for (const auto& d : dirs) out.push_back(dehn_twist_action(o, d, basis));
  return out;
}

}  // namespace kz
