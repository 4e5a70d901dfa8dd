#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kzindex/origami.hpp"

namespace kz {

// All origamis of degree d in H(2), in canonical form, sorted. Built from
// the two horizontal cylinder diagrams of the stratum (one cylinder with
// boundary ABC/CBA, or two cylinders stacked as in an L-shape) over all
// widths, heights and twists.
std::vector<Origami> h2_origamis(int d);

// Same set by exhaustive search over permutation pairs. Only for small d.
std::vector<Origami> h2_origamis_exhaustive(int d);

struct OrbitInfo {
  std::vector<Origami> members;             // canonical, sorted
  std::vector<std::pair<int, int>> l_shapes;  // (n, m) with L(n, m) in the orbit
};

struct Census {
  int degree = 0;
  std::size_t origami_count = 0;  // primitive H(2) origamis up to relabelling
  std::vector<OrbitInfo> orbits;  // ordered by their smallest member
};

Census census(int d, std::size_t cap = kDefaultOrbitCap);

}  // namespace kz
