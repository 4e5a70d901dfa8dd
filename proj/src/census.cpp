#include "kzindex/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kz {

namespace {

// Squares laid out cylinder by cylinder, row by row.
struct Layout {
  int next = 0;
  std::vector<int> h, v;

  explicit Layout(int d) : h(static_cast<std::size_t>(d), -1), v(static_cast<std::size_t>(d), -1) {}

  // Returns rows[r][col]; rows are glued to each other vertically.
  std::vector<std::vector<int>> cylinder(int width, int height) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(height));
    for (auto& row : rows) {
      for (int c = 0; c < width; ++c) row.push_back(next++);
      for (int c = 0; c < width; ++c) h[static_cast<std::size_t>(row[static_cast<std::size_t>(c)])] = row[static_cast<std::size_t>((c + 1) % width)];
    }
    for (int r = 0; r + 1 < height; ++r) {
      for (int c = 0; c < width; ++c) {
        v[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])] =
            rows[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)];
      }
    }
    return rows;
  }

  Origami build() const { return Origami(Permutation(h), Permutation(v)); }
};

int mod(int a, int m) { return ((a % m) + m) % m; }

void add_if_h2(std::set<Origami>& out, const Origami& o) {
  if (singularity_data(o).in_h2()) out.insert(canonical_form(o));
}

}  // namespace

std::vector<Origami> h2_origamis(int d) {
  std::set<Origami> found;
  // One cylinder of width w and height k; top boundary A B C (lengths a, b,
  // c) is glued to the bottom boundary C B A shifted by t.
  for (int w = 3; w <= d; ++w) {
    if (d % w != 0) continue;
    const int k = d / w;
    for (int a = 1; a < w; ++a) {
      for (int b = 1; a + b < w; ++b) {
        const int c = w - a - b;
        for (int t = 0; t < w; ++t) {
          Layout lay(d);
          const auto rows = lay.cylinder(w, k);
          const auto& top = rows.back();
          const auto& bottom = rows.front();
          for (int j = 0; j < w; ++j) {
            int target = 0;
            if (j < a) target = t + c + b + j;
            else if (j < a + b) target = t + c + (j - a);
            else target = t + (j - a - b);
            lay.v[static_cast<std::size_t>(top[static_cast<std::size_t>(j)])] =
                bottom[static_cast<std::size_t>(mod(target, w))];
          }
          add_if_h2(found, lay.build());
        }
      }
    }
  }
  // Two cylinders: narrow one (w1 x k1) above the wide one (w2 x k2).
  for (int w1 = 1; w1 <= d; ++w1) {
    for (int k1 = 1; w1 * k1 < d; ++k1) {
      const int rest = d - w1 * k1;
      for (int w2 = w1 + 1; w2 <= rest; ++w2) {
        if (rest % w2 != 0) continue;
        const int k2 = rest / w2;
        for (int t1 = 0; t1 < w1; ++t1) {
          for (int t2 = 0; t2 < w2; ++t2) {
            Layout lay(d);
            const auto wide = lay.cylinder(w2, k2);
            const auto narrow = lay.cylinder(w1, k1);
            const auto& wide_top = wide.back();
            const auto& wide_bottom = wide.front();
            for (int j = 0; j < w2; ++j) {
              int target = 0;
              if (j < w1) {
                target = narrow.front()[static_cast<std::size_t>(j)];
              } else {
                target = wide_bottom[static_cast<std::size_t>(mod(t2 + j, w2))];
              }
              lay.v[static_cast<std::size_t>(wide_top[static_cast<std::size_t>(j)])] = target;
            }
            for (int j = 0; j < w1; ++j) {
              const int u = mod(j - t1, w1);
              lay.v[static_cast<std::size_t>(narrow.back()[static_cast<std::size_t>(j)])] =
                  wide_bottom[static_cast<std::size_t>(mod(t2 + u, w2))];
            }
            add_if_h2(found, lay.build());
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Origami> h2_origamis_exhaustive(int d) {
  std::set<Origami> found;
  // h up to conjugacy: one representative per cycle type.
  std::vector<std::vector<int>> partitions;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      partitions.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  gen(gen, d, d);
  for (const auto& part : partitions) {
    std::vector<int> himg(static_cast<std::size_t>(d));
    int start = 0;
    for (int len : part) {
      for (int i = 0; i < len; ++i) himg[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
      start += len;
    }
    const Permutation h(himg);
    std::vector<int> vimg(static_cast<std::size_t>(d));
    std::iota(vimg.begin(), vimg.end(), 0);
    do {
      const Permutation v(vimg);
      // Transitivity check before constructing the origami.
      std::vector<char> seen(static_cast<std::size_t>(d), 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {h(x), v(x)}) {
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            ++count;
            stack.push_back(y);
          }
        }
      }
      if (count != d) continue;
      add_if_h2(found, Origami(h, v));
    } while (std::next_permutation(vimg.begin(), vimg.end()));
  }
  return {found.begin(), found.end()};
}

Census census(int d, std::size_t cap) {
  Census out;
  out.degree = d;
  std::vector<Origami> all;
  for (auto& o : h2_origamis(d)) {
    if (is_primitive(o)) all.push_back(std::move(o));
  }
  out.origami_count = all.size();
  std::set<Origami> remaining(all.begin(), all.end());
  while (!remaining.empty()) {
    OrbitInfo info;
    info.members = orbit(*remaining.begin(), cap);
    for (const auto& m : info.members) remaining.erase(m);
    for (int n = 2; n <= d - 1; ++n) {
      const int m = d + 1 - n;
      if (m < 2) continue;
      const Origami l = canonical_form(make_l_origami(n, m));
      if (std::binary_search(info.members.begin(), info.members.end(), l)) info.l_shapes.emplace_back(n, m);
    }
    out.orbits.push_back(std::move(info));
  }
  return out;
}

}  // namespace kz
