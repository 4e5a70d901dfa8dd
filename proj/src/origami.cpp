#include "kzindex/origami.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace kz {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) {
      throw ParseError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int x = cyc[k];
      if (x < 0 || x >= degree) throw ParseError("cycle entry out of range");
      if (used[static_cast<std::size_t>(x)]) throw ParseError("symbol repeated across cycles");
      used[static_cast<std::size_t>(x)] = 1;
      images[static_cast<std::size_t>(x)] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (b.degree() != degree()) throw Error("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[static_cast<std::size_t>(i)] = (*this)(b(i));
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::pow(std::int64_t k) const {
  const Permutation base = k < 0 ? inverse() : *this;
  std::int64_t e = k < 0 ? -k : k;
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) {
    int x = i;
    // Orbit lengths are at most degree(), so reduce the exponent per point.
    std::vector<int> path{x};
    int y = base(x);
    while (y != x) {
      path.push_back(y);
      y = base(y);
    }
    out[static_cast<std::size_t>(i)] = path[static_cast<std::size_t>(e % static_cast<std::int64_t>(path.size()))];
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.degree() != v_.degree()) throw ParseError("h and v have different degrees");
  if (h_.degree() == 0) throw ParseError("origami needs at least one square");
  std::vector<char> seen(static_cast<std::size_t>(degree()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {h_(x), v_(x)}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  // A finite permutation group orbit is closed under inverses, so forward
  // reachability is enough for transitivity.
  if (reached != degree()) throw ParseError("h and v do not act transitively");
}

Origami make_l_origami(int n, int m) {
  if (n < 2 || m < 2) {
    throw InvalidShape("L-origami needs n >= 2 and m >= 2, got (" + std::to_string(n) + ", " +
                       std::to_string(m) + ")");
  }
  const int d = n + m - 1;
  std::vector<int> row(static_cast<std::size_t>(n));
  std::iota(row.begin(), row.end(), 0);
  std::vector<int> column{0};
  for (int k = n; k < d; ++k) column.push_back(k);
  return Origami(Permutation::from_cycles(d, {row}), Permutation::from_cycles(d, {column}));
}

Permutation corner_permutation(const Origami& o) {
  return o.v() * o.h() * o.v().inverse() * o.h().inverse();
}

SingularityData singularity_data(const Origami& o) {
  SingularityData s;
  int total = 0;
  for (const auto& cyc : corner_permutation(o).cycles()) {
    if (cyc.size() >= 2) {
      s.cone_orders.push_back(static_cast<int>(cyc.size()) - 1);
      total += static_cast<int>(cyc.size()) - 1;
    }
  }
  std::sort(s.cone_orders.rbegin(), s.cone_orders.rend());
  s.genus = 1 + total / 2;
  return s;
}

Origami act_t_power(const Origami& o, std::int64_t k) {
  if (k == 0) return o;
  return Origami(o.h(), o.v() * o.h().pow(-k));
}

Origami act_generator(const Origami& o, Letter g) {
  switch (g) {
    case Letter::T: return act_t_power(o, 1);
    case Letter::TInv: return act_t_power(o, -1);
    case Letter::S: return Origami(o.v().inverse(), o.h());
    case Letter::SInv: return Origami(o.v(), o.h().inverse());
  }
  return o;
}

Origami act_word(const Origami& o, const Word& w) {
  // (g_1 ... g_k).O = g_1.(g_2.( ... g_k.O))
  Origami cur = o;
  for (auto it = w.rbegin(); it != w.rend();) {
    if (*it == Letter::T || *it == Letter::TInv) {
      std::int64_t k = 0;
      while (it != w.rend() && (*it == Letter::T || *it == Letter::TInv)) {
        k += *it == Letter::T ? 1 : -1;
        ++it;
      }
      cur = act_t_power(cur, k);
    } else {
      cur = act_generator(cur, *it);
      ++it;
    }
  }
  return cur;
}

Origami act(const Mat2& m, const Origami& o) { return act_word(o, matrix_to_word(m)); }

Origami relabel(const Origami& o, const Permutation& sigma) {
  // New label of square i is sigma(i).
  const Permutation inv = sigma.inverse();
  return Origami(sigma * o.h() * inv, sigma * o.v() * inv);
}

namespace {

// Relabelling from a breadth-first walk starting at `start`, visiting
// neighbours in the order h, v, h^-1, v^-1.
std::vector<int> bfs_labels(const Origami& o, const Permutation& hinv, const Permutation& vinv,
                            int start) {
  const int d = o.degree();
  std::vector<int> label(static_cast<std::size_t>(d), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(d));
  label[static_cast<std::size_t>(start)] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (int y : {o.h()(x), o.v()(x), hinv(x), vinv(x)}) {
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  return label;
}

}  // namespace

Origami canonical_form(const Origami& o) {
  const int d = o.degree();
  const Permutation hinv = o.h().inverse();
  const Permutation vinv = o.v().inverse();
  std::vector<int> best_h, best_v;
  for (int start = 0; start < d; ++start) {
    const std::vector<int> label = bfs_labels(o, hinv, vinv, start);
    std::vector<int> nh(static_cast<std::size_t>(d)), nv(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      nh[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] =
          label[static_cast<std::size_t>(o.h()(i))];
      nv[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] =
          label[static_cast<std::size_t>(o.v()(i))];
    }
    if (best_h.empty() || std::tie(nh, nv) < std::tie(best_h, best_v)) {
      best_h = std::move(nh);
      best_v = std::move(nv);
    }
  }
  return Origami(Permutation(std::move(best_h)), Permutation(std::move(best_v)));
}

std::size_t OrigamiHash::operator()(const Origami& o) const {
  std::size_t seed = static_cast<std::size_t>(o.degree());
  auto mix = [&seed](int x) {
    seed ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  for (int x : o.h().images()) mix(x);
  for (int x : o.v().images()) mix(x);
  return seed;
}

std::vector<Origami> orbit(const Origami& o, std::size_t cap) {
  std::unordered_set<Origami, OrigamiHash> seen;
  std::vector<Origami> frontier{canonical_form(o)};
  seen.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Origami cur = frontier[head];
    for (Letter g : {Letter::S, Letter::T}) {
      Origami next = canonical_form(act_generator(cur, g));
      if (seen.insert(next).second) {
        frontier.push_back(std::move(next));
        if (seen.size() > cap) {
          std::vector<Origami> partial(seen.begin(), seen.end());
          std::sort(partial.begin(), partial.end());
          throw OrbitTooLarge("orbit exceeds cap of " + std::to_string(cap), std::move(partial));
        }
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

bool same_orbit(const Origami& a, const Origami& b, std::size_t cap) {
  if (a.degree() != b.degree()) return false;
  const Origami target = canonical_form(b);
  const auto members = orbit(a, cap);
  return std::binary_search(members.begin(), members.end(), target);
}

bool is_primitive(const Origami& o) {
  const int d = o.degree();
  // Developing positions along a spanning tree; every non-tree edge closes a
  // loop whose holonomy is pos(i) + step - pos(target).
  std::vector<std::int64_t> px(static_cast<std::size_t>(d)), py(static_cast<std::size_t>(d));
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  const Permutation hinv = o.h().inverse();
  const Permutation vinv = o.v().inverse();
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    const struct {
      int to;
      int dx, dy;
    } moves[] = {{o.h()(x), 1, 0}, {o.v()(x), 0, 1}, {hinv(x), -1, 0}, {vinv(x), 0, -1}};
    for (const auto& mv : moves) {
      if (!seen[static_cast<std::size_t>(mv.to)]) {
        seen[static_cast<std::size_t>(mv.to)] = 1;
        px[static_cast<std::size_t>(mv.to)] = px[static_cast<std::size_t>(x)] + mv.dx;
        py[static_cast<std::size_t>(mv.to)] = py[static_cast<std::size_t>(x)] + mv.dy;
        q.push(mv.to);
      }
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> periods;
  for (int i = 0; i < d; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(o.h()(i));
    const auto vi = static_cast<std::size_t>(o.v()(i));
    periods.emplace_back(px[si] + 1 - px[hi], py[si] - py[hi]);
    periods.emplace_back(px[si] - px[vi], py[si] + 1 - py[vi]);
  }
  // The index of the period lattice in Z^2 is the gcd of all 2x2 minors.
  std::int64_t g = 0;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    for (std::size_t j = i + 1; j < periods.size(); ++j) {
      const std::int64_t minor =
          periods[i].first * periods[j].second - periods[i].second * periods[j].first;
      g = std::gcd(g, minor < 0 ? -minor : minor);
      if (g == 1) return true;
    }
  }
  return g == 1;
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text, int& max_symbol) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle: '" + text + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character in cycle: '" + text + "'");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("symbol too large");
        ++i;
      }
      if (value < 1) throw ParseError("symbols are 1-based");
      max_symbol = std::max(max_symbol, value);
      cyc.push_back(value - 1);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Origami parse_origami(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  bool have_h = false, have_v = false;
  int explicit_degree = 0;
  int max_symbol = 0;
  std::vector<std::vector<int>> hc, vc;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value line: '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "h") {
      hc = parse_cycles(value, max_symbol);
      have_h = true;
    } else if (key == "v") {
      vc = parse_cycles(value, max_symbol);
      have_v = true;
    } else if (key == "d") {
      try {
        explicit_degree = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError("bad degree line: '" + line + "'");
      }
      if (explicit_degree < 1) throw ParseError("degree must be positive");
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!have_h || !have_v) throw ParseError("origami needs both an h= and a v= line");
  int d = explicit_degree > 0 ? explicit_degree : std::max(max_symbol, 1);
  if (max_symbol > d) throw ParseError("symbol exceeds declared degree");
  return Origami(Permutation::from_cycles(d, hc), Permutation::from_cycles(d, vc));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(cyc[k] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string format_origami(const Origami& o) {
  std::string out = "d=" + std::to_string(o.degree()) + "\n";
  out += "h=" + format_cycles(o.h()) + "\n";
  out += "v=" + format_cycles(o.v()) + "\n";
  return out;
}

}  // namespace kz
