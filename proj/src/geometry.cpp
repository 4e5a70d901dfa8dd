#include "kzindex/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace kz {

Direction Direction::make(int p, int q) {
  if (p == 0 && q == 0) throw InvalidDirection("direction (0,0) is not a direction");
  if (std::gcd(p, q) != 1) {
    throw InvalidDirection("direction (" + std::to_string(p) + "," + std::to_string(q) +
                           ") is not primitive");
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  Direction d;
  d.p = p;
  d.q = q;
  return d;
}

std::int64_t determinant(const Direction& u, const Direction& w) {
  return static_cast<std::int64_t>(u.p) * w.q - static_cast<std::int64_t>(u.q) * w.p;
}

Vec2 GeodesicLoop::holonomy() const {
  Vec2 sum;
  for (const auto& s : segments) sum = sum + (s.exit - s.entry);
  return sum;
}

Mat2 shear_matrix(const Direction& dir) {
  const std::int64_t p = dir.p;
  const std::int64_t q = dir.q;
  if (q == 0) return Mat2::identity();
  // a p + b q = 1 with |a| minimal, ties to a >= 0.
  std::int64_t a = 0;
  for (std::int64_t r = 0; r < q; ++r) {
    if (((r * p) % q + q) % q == 1 % q) {
      a = r;
      break;
    }
  }
  if (q - a < a) a -= q;
  const std::int64_t b = (1 - a * p) / q;
  return Mat2{a, b, -q, p};
}

VertexData vertex_data(const Origami& o) {
  VertexData vd;
  vd.vertex_of_square.assign(static_cast<std::size_t>(o.degree()), -1);
  for (auto& cyc : corner_permutation(o).cycles()) {
    const int id = static_cast<int>(vd.turns.size());
    for (int x : cyc) vd.vertex_of_square[static_cast<std::size_t>(x)] = id;
    vd.cone_index.push_back(cyc.size() > 1 ? vd.cone_count++ : -1);
    vd.turns.push_back(std::move(cyc));
  }
  return vd;
}

namespace {

Rational rat(std::int64_t v) { return Rational(v); }

bool on_closed_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const Vec2 ap = p - a;
  if (cross(ab, ap) != 0) return false;
  const Rational t = dot(ab, ap);
  return t >= 0 && t <= dot(ab, ab);
}

// Straight-line walker over the squares of one origami.
class Walker {
 public:
  explicit Walker(const Origami& o)
      : o_(o), hinv_(o.h().inverse()), vinv_(o.v().inverse()), vd_(vertex_data(o)) {}

  const Origami& origami() const { return o_; }
  const VertexData& vertices() const { return vd_; }
  int h(int s) const { return o_.h()(s); }
  int v(int s) const { return o_.v()(s); }
  int hinv(int s) const { return hinv_(s); }
  int vinv(int s) const { return vinv_(s); }

  // Vertex at corner (cx, cy) of square s.
  int corner_vertex(int s, int cx, int cy) const {
    int t = s;
    if (cy == 1) t = v(t);
    if (cx == 1) t = h(t);
    return vd_.vertex_of_square[static_cast<std::size_t>(t)];
  }
  bool is_cone(int vertex) const { return vd_.cone_index[static_cast<std::size_t>(vertex)] >= 0; }

  // Square whose lower-left sector contains square s near its corner (cx, cy).
  int turn_of(int s, int cx, int cy) const {
    if (cx == 0 && cy == 0) return s;
    if (cx == 1 && cy == 0) return h(s);
    if (cx == 1 && cy == 1) return h(v(s));
    return h(v(hinv(s)));
  }

  // Moves a point on the boundary into the square the ray enters. Only valid
  // away from cone points.
  void enter(int& s, Vec2& p, const Vec2& d) const {
    if (p.x == 1 && d.x > 0) { s = h(s); p.x = 0; }
    else if (p.x == 0 && d.x < 0) { s = hinv(s); p.x = 1; }
    if (p.y == 1 && d.y > 0) { s = v(s); p.y = 0; }
    else if (p.y == 0 && d.y < 0) { s = vinv(s); p.y = 1; }
  }

  struct Step {
    Segment seg;
    bool at_cone = false;
    int cx = -1, cy = -1;  // corner reached, if any
    int next_square = -1;
    Vec2 next_pos;
  };

  Step step(int s, const Vec2& p, const Vec2& d) const {
    std::optional<Rational> t;
    std::optional<Rational> tx, ty;
    if (d.x > 0) tx = (rat(1) - p.x) / d.x;
    if (d.x < 0) tx = -p.x / d.x;
    if (d.y > 0) ty = (rat(1) - p.y) / d.y;
    if (d.y < 0) ty = -p.y / d.y;
    if (tx && (!ty || *tx <= *ty)) t = tx;
    if (ty && (!t || *ty < *t)) t = ty;
    if (!t || *t <= 0) throw DegenerateConfiguration("walker: ray does not enter the square");
    Step out;
    const Vec2 exit = p + d * *t;
    out.seg = Segment{s, p, exit};
    const bool hit_x = tx && *tx == *t;
    const bool hit_y = ty && *ty == *t;
    const bool corner = (exit.x == 0 || exit.x == 1) && (exit.y == 0 || exit.y == 1);
    if (corner) {
      out.cx = static_cast<int>(exit.x.numerator());
      out.cy = static_cast<int>(exit.y.numerator());
      if (is_cone(corner_vertex(s, out.cx, out.cy))) {
        out.at_cone = true;
        return out;
      }
    }
    int ns = s;
    Vec2 np = exit;
    if (hit_x) {
      ns = d.x > 0 ? h(ns) : hinv(ns);
      np.x = d.x > 0 ? 0 : 1;
    }
    if (hit_y) {
      ns = d.y > 0 ? v(ns) : vinv(ns);
      np.y = d.y > 0 ? 0 : 1;
    }
    out.next_square = ns;
    out.next_pos = np;
    return out;
  }

  std::size_t step_limit(const Vec2& d) const {
    const auto span = boost::abs(d.x) + boost::abs(d.y) + 2;
    return static_cast<std::size_t>(span.numerator()) * 4 * static_cast<std::size_t>(o_.degree()) + 16;
  }

  // Walks from (s, p) until a cone point. (s, p) must already be inside the
  // square the ray enters.
  struct Ray {
    std::vector<Segment> segments;
    int end_square = -1;
    int cx = -1, cy = -1;
  };
  Ray ray_to_cone(int s, Vec2 p, const Vec2& d) const {
    Ray r;
    const std::size_t limit = step_limit(d);
    for (std::size_t i = 0; i < limit; ++i) {
      Step st = step(s, p, d);
      r.segments.push_back(st.seg);
      if (st.at_cone) {
        r.end_square = s;
        r.cx = st.cx;
        r.cy = st.cy;
        return r;
      }
      s = st.next_square;
      p = st.next_pos;
    }
    throw DegenerateConfiguration("walker: separatrix did not reach a cone point");
  }

  GeodesicLoop loop(int s, Vec2 p, const Direction& dir) const {
    const Vec2 d{rat(dir.p), rat(dir.q)};
    normalize(s, p);
    if (p.x == 0 && p.y == 0 && is_cone(corner_vertex(s, 0, 0))) {
      throw DegenerateConfiguration("closed geodesic requested through a cone point");
    }
    enter(s, p, d);
    const int s0 = s;
    const Vec2 p0 = p;
    GeodesicLoop out;
    out.dir = dir;
    const std::size_t limit = step_limit(d);
    for (std::size_t i = 0; i < limit; ++i) {
      Step st = step(s, p, d);
      if (i > 0 && s == s0 && p != p0 && on_closed_segment(p0, st.seg.entry, st.seg.exit)) {
        // Back in the start square with the start point in the interior of
        // the segment: splice the last piece onto the first.
        out.segments.front().entry = st.seg.entry;
        return out;
      }
      if (st.at_cone) throw DegenerateConfiguration("closed geodesic runs into a cone point");
      out.segments.push_back(st.seg);
      s = st.next_square;
      p = st.next_pos;
      if (s == s0 && p == p0) return out;
    }
    throw DegenerateConfiguration("closed geodesic did not close up");
  }

  void normalize(int& s, Vec2& p) const {
    const std::int64_t fx = floor_of(p.x);
    const std::int64_t fy = floor_of(p.y);
    p.x -= fx;
    p.y -= fy;
    s = o_.h().pow(fx)(s);
    s = o_.v().pow(fy)(s);
  }

 private:
  const Origami& o_;
  Permutation hinv_;
  Permutation vinv_;
  VertexData vd_;
};

// Position of an edge end in the counter-clockwise order around its vertex.
struct EndKey {
  int turn_pos = 0;
  int quadrant = 0;
  Rational frac{0};

  friend bool operator<(const EndKey& a, const EndKey& b) {
    return std::tie(a.turn_pos, a.quadrant, a.frac) < std::tie(b.turn_pos, b.quadrant, b.frac);
  }
};

int quadrant_of_corner(int cx, int cy) {
  if (cx == 0 && cy == 0) return 0;
  if (cx == 1 && cy == 0) return 1;
  if (cx == 1 && cy == 1) return 2;
  return 3;
}

// Ray r leaves the vertex at corner (cx, cy) of square s into s.
EndKey end_key(const Walker& w, int s, int cx, int cy, Vec2 r) {
  const VertexData& vd = w.vertices();
  int turn = w.turn_of(s, cx, cy);
  int quadrant = quadrant_of_corner(cx, cy);
  for (int i = 0; i < quadrant; ++i) r = Vec2{r.y, -r.x};
  Rational frac = r.y / (r.x + r.y);
  if (frac == 1) {
    frac = 0;
    if (++quadrant == 4) {
      quadrant = 0;
      turn = corner_permutation(w.origami())(turn);
    }
  }
  const auto& cyc = vd.turns[static_cast<std::size_t>(vd.vertex_of_square[static_cast<std::size_t>(turn)])];
  EndKey k;
  k.turn_pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), turn) - cyc.begin());
  k.quadrant = quadrant;
  k.frac = frac;
  return k;
}

struct TracedEdge {
  SaddleConnection sc;
  EndKey out_key;
  EndKey in_key;
};

std::int64_t multiple_of(const Vec2& hol, const Vec2& d) {
  const Rational m = d.x != 0 ? hol.x / d.x : hol.y / d.y;
  if (!is_integer(m) || hol != d * m) {
    throw DegenerateConfiguration("saddle connection holonomy is not a multiple of the direction");
  }
  return m.numerator();
}

// Saddle connection leaving the cone point at corner (cx, cy) of square s
// into s.
TracedEdge trace_from_corner(const Walker& w, int s, int cx, int cy, const Vec2& d) {
  TracedEdge te;
  SaddleConnection& sc = te.sc;
  const VertexData& vd = w.vertices();
  sc.start = SurfacePoint{s, Vec2{rat(cx), rat(cy)}};
  sc.start_turn = w.turn_of(s, cx, cy);
  sc.start_vertex = vd.cone_index[static_cast<std::size_t>(w.corner_vertex(s, cx, cy))];
  auto ray = w.ray_to_cone(s, sc.start.pos, d);
  sc.segments = std::move(ray.segments);
  sc.end_turn = w.turn_of(ray.end_square, ray.cx, ray.cy);
  sc.end_vertex = vd.cone_index[static_cast<std::size_t>(w.corner_vertex(ray.end_square, ray.cx, ray.cy))];
  Vec2 hol;
  for (const auto& seg : sc.segments) hol = hol + (seg.exit - seg.entry);
  sc.multiple = multiple_of(hol, d);
  te.out_key = end_key(w, s, cx, cy, d);
  te.in_key = end_key(w, ray.end_square, ray.cx, ray.cy, Vec2{-d.x, -d.y});
  return te;
}

// Square and corner from which the ray with direction d leaves the vertex
// inside turn x.
std::tuple<int, int, int> outgoing_slot(const Walker& w, int x, const Vec2& d) {
  if (d.x > 0 && d.y >= 0) return {x, 0, 0};
  if (d.x <= 0 && d.y > 0) return {w.hinv(x), 1, 0};
  if (d.x < 0 && d.y <= 0) return {w.vinv(w.hinv(x)), 1, 1};
  return {w.h(w.vinv(w.hinv(x))), 0, 1};
}

std::vector<TracedEdge> trace_all(const Origami& o, const Direction& dir) {
  const Walker w(o);
  const Vec2 d{rat(dir.p), rat(dir.q)};
  std::vector<TracedEdge> out;
  const VertexData& vd = w.vertices();
  for (std::size_t vi = 0; vi < vd.turns.size(); ++vi) {
    if (vd.cone_index[vi] < 0) continue;
    for (int x : vd.turns[vi]) {
      auto [s, cx, cy] = outgoing_slot(w, x, d);
      out.push_back(trace_from_corner(w, s, cx, cy, d));
    }
  }
  return out;
}

struct RowCylinder {
  std::vector<std::vector<int>> rows;
};

std::vector<RowCylinder> horizontal_cylinders(const Origami& o) {
  const int d = o.degree();
  const auto cycles = o.h().cycles();
  std::vector<int> row_of(static_cast<std::size_t>(d), -1);
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    for (int x : cycles[r]) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
  }
  // up[r]: row glued on top of r without a cone point in between, or -1.
  std::vector<int> up(cycles.size(), -1), down(cycles.size(), -1);
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    bool linked = true;
    for (int x : cycles[r]) {
      if (o.v()(o.h()(x)) != o.h()(o.v()(x))) {
        linked = false;
        break;
      }
    }
    if (linked) {
      const int above = row_of[static_cast<std::size_t>(o.v()(cycles[r][0]))];
      up[r] = above;
      down[static_cast<std::size_t>(above)] = static_cast<int>(r);
    }
  }
  std::vector<char> used(cycles.size(), 0);
  std::vector<RowCylinder> out;
  auto build = [&](std::size_t bottom) {
    RowCylinder cyl;
    std::vector<int> row;
    int x = *std::min_element(cycles[bottom].begin(), cycles[bottom].end());
    for (std::size_t k = 0; k < cycles[bottom].size(); ++k, x = o.h()(x)) row.push_back(x);
    std::size_t r = bottom;
    while (true) {
      used[r] = 1;
      cyl.rows.push_back(row);
      if (up[r] < 0 || used[static_cast<std::size_t>(up[r])]) break;
      r = static_cast<std::size_t>(up[r]);
      for (int& y : row) y = o.v()(y);
    }
    out.push_back(std::move(cyl));
  };
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    if (down[r] < 0) build(r);
  }
  // Rows closing up into a ring (only on a surface without cone points).
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    if (!used[r]) build(r);
  }
  std::sort(out.begin(), out.end(), [](const RowCylinder& a, const RowCylinder& b) {
    return a.rows[0][0] < b.rows[0][0];
  });
  return out;
}

void sort_connections(std::vector<SaddleConnection>& scs, const VertexData& vd) {
  auto key = [&](const SaddleConnection& s) {
    const auto vi = static_cast<std::size_t>(vd.vertex_of_square[static_cast<std::size_t>(s.start_turn)]);
    const auto& cyc = vd.turns[vi];
    return std::make_pair(s.start_vertex,
                          std::find(cyc.begin(), cyc.end(), s.start_turn) - cyc.begin());
  };
  std::stable_sort(scs.begin(), scs.end(),
                   [&](const SaddleConnection& a, const SaddleConnection& b) { return key(a) < key(b); });
}

}  // namespace

ShearedFrame::ShearedFrame(const Origami& o, const Mat2& m)
    : original_(o), sheared_(o), matrix_(m) {
  const Word w = matrix_to_word(m);
  Origami cur = o;
  for (auto it = w.rbegin(); it != w.rend();) {
    Step st;
    st.before = cur;
    if (*it == Letter::T || *it == Letter::TInv) {
      st.is_t = true;
      while (it != w.rend() && (*it == Letter::T || *it == Letter::TInv)) {
        st.t_power += *it == Letter::T ? 1 : -1;
        ++it;
      }
      if (st.t_power == 0) continue;
      cur = act_t_power(cur, st.t_power);
    } else {
      st.s_letter = *it;
      cur = act_generator(cur, *it);
      ++it;
    }
    steps_.push_back(std::move(st));
  }
  sheared_ = cur;
}

SurfacePoint ShearedFrame::pull_back(SurfacePoint p) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const Origami& b = it->before;
    Vec2 q;
    int s = p.square;
    if (it->is_t) {
      // (x, y) in T^k.B comes from (x - k y, y) in B.
      q = Vec2{p.pos.x - p.pos.y * Rational(it->t_power), p.pos.y};
    } else if (it->s_letter == Letter::S) {
      q = Vec2{p.pos.y, Rational(1) - p.pos.x};
    } else {
      q = Vec2{Rational(1) - p.pos.y, p.pos.x};
    }
    const std::int64_t fx = floor_of(q.x);
    const std::int64_t fy = floor_of(q.y);
    q.x -= fx;
    q.y -= fy;
    s = b.h().pow(fx)(s);
    s = b.v().pow(fy)(s);
    p = SurfacePoint{s, q};
  }
  return p;
}

GeodesicLoop trace_loop(const Origami& o, SurfacePoint p, const Direction& dir) {
  const Walker w(o);
  return w.loop(p.square, p.pos, dir);
}

GeodesicLoop core_curve(const Origami& o, const Direction& dir, int sheared_square, Rational height) {
  const ShearedFrame frame(o, shear_matrix(dir));
  const SurfacePoint start = frame.pull_back(SurfacePoint{sheared_square, Vec2{Rational(0), height}});
  GeodesicLoop loop = trace_loop(o, start, dir);
  loop.anchor = CoreAnchor{sheared_square, height};
  return loop;
}

CylinderDecomposition decompose(const Origami& o, const Direction& dir) {
  const ShearedFrame frame(o, shear_matrix(dir));
  const Origami& sh = frame.sheared();
  const Walker w(o);
  const Walker ws(sh);
  const Vec2 d{rat(dir.p), rat(dir.q)};

  CylinderDecomposition dec{dir, frame.matrix(), sh, {}, {}};
  const auto rows = horizontal_cylinders(sh);
  std::vector<int> cyl_of(static_cast<std::size_t>(o.degree()), -1);
  std::int64_t g = 0;
  for (const auto& rc : rows) g = std::gcd(g, static_cast<std::int64_t>(rc.rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Cylinder c;
    c.rows = rows[i].rows;
    c.circumference = static_cast<int>(c.rows[0].size());
    c.height_rows = static_cast<int>(c.rows.size());
    c.f = c.circumference;
    c.c = static_cast<int>(c.height_rows / g);
    for (const auto& row : c.rows) {
      for (int x : row) cyl_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    const SurfacePoint start =
        frame.pull_back(SurfacePoint{c.rows[0][0], Vec2{Rational(0), Rational(1, 2)}});
    c.core = w.loop(start.square, start.pos, dir);
    c.core.anchor = CoreAnchor{c.rows[0][0], Rational(1, 2)};
    dec.cylinders.push_back(std::move(c));
  }

  // Horizontal separatrices of the sheared surface run along bottom edges.
  const VertexData& svd = ws.vertices();
  const Vec2 back{-d.x, -d.y};
  for (std::size_t vi = 0; vi < svd.turns.size(); ++vi) {
    if (svd.cone_index[vi] < 0) continue;
    for (int x : svd.turns[vi]) {
      std::int64_t k = 1;
      int y = sh.h()(x);
      while (svd.cone_index[static_cast<std::size_t>(svd.vertex_of_square[static_cast<std::size_t>(y)])] < 0) {
        y = sh.h()(y);
        ++k;
      }
      // A point in the middle of the first unit of the connection, pulled
      // back, then walked back to its starting cone point.
      SurfacePoint mid = frame.pull_back(SurfacePoint{x, Vec2{Rational(1, 2), Rational(0)}});
      int s = mid.square;
      Vec2 p = mid.pos;
      w.enter(s, p, back);
      const auto ray = w.ray_to_cone(s, p, back);
      TracedEdge te = trace_from_corner(w, ray.end_square, ray.cx, ray.cy, d);
      if (te.sc.multiple != k) {
        throw DegenerateConfiguration("saddle connection length differs between frames");
      }
      te.sc.cylinder_above = cyl_of[static_cast<std::size_t>(x)];
      te.sc.cylinder_below = cyl_of[static_cast<std::size_t>(sh.v().inverse()(x))];
      dec.saddle_connections.push_back(std::move(te.sc));
    }
  }
  sort_connections(dec.saddle_connections, w.vertices());
  return dec;
}

CylinderDecomposition horizontal_decomposition(const Origami& o) {
  return decompose(o, Direction::make(1, 0));
}

std::vector<SaddleConnection> saddle_connections(const Origami& o, const Direction& dir) {
  return decompose(o, dir).saddle_connections;
}

std::vector<SaddleConnection> trace_separatrices(const Origami& o, const Direction& dir) {
  std::vector<SaddleConnection> out;
  for (auto& te : trace_all(o, dir)) out.push_back(std::move(te.sc));
  return out;
}

SeparatrixDiagram separatrix_diagram(const Origami& o, const Direction& dir) {
  const VertexData vd = vertex_data(o);
  auto traced = trace_all(o, dir);
  SeparatrixDiagram diag;
  diag.direction = dir;
  diag.vertices.resize(static_cast<std::size_t>(vd.cone_count));
  std::vector<std::vector<std::pair<EndKey, EdgeEnd>>> ends(static_cast<std::size_t>(vd.cone_count));
  for (std::size_t vi = 0; vi < vd.turns.size(); ++vi) {
    const int ci = vd.cone_index[vi];
    if (ci < 0) continue;
    diag.vertices[static_cast<std::size_t>(ci)].cone_order = static_cast<int>(vd.turns[vi].size()) - 1;
    diag.vertices[static_cast<std::size_t>(ci)].turns = vd.turns[vi];
  }
  for (std::size_t e = 0; e < traced.size(); ++e) {
    const auto& te = traced[e];
    ends[static_cast<std::size_t>(te.sc.start_vertex)].push_back({te.out_key, EdgeEnd{static_cast<int>(e), true}});
    ends[static_cast<std::size_t>(te.sc.end_vertex)].push_back({te.in_key, EdgeEnd{static_cast<int>(e), false}});
    diag.edges.push_back(te.sc);
  }
  for (std::size_t v = 0; v < ends.size(); ++v) {
    std::sort(ends[v].begin(), ends[v].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, end] : ends[v]) diag.vertices[v].cyclic_order.push_back(end);
  }
  return diag;
}

std::vector<std::vector<int>> trace_boundaries(const SeparatrixDiagram& diag) {
  const std::size_t n = diag.edges.size();
  std::vector<int> next(n, -1);
  for (std::size_t e = 0; e < n; ++e) {
    const int v = diag.edges[e].end_vertex;
    if (v < 0 || static_cast<std::size_t>(v) >= diag.vertices.size()) {
      throw DegenerateConfiguration("separatrix diagram: edge ends at no vertex");
    }
    const auto& order = diag.vertices[static_cast<std::size_t>(v)].cyclic_order;
    const auto it = std::find(order.begin(), order.end(), EdgeEnd{static_cast<int>(e), false});
    if (it == order.end()) throw DegenerateConfiguration("separatrix diagram: incoming end missing from its vertex");
    const auto pos = static_cast<std::size_t>(it - order.begin());
    const EdgeEnd& nxt = order[(pos + 1) % order.size()];
    if (!nxt.outgoing) throw DegenerateConfiguration("separatrix diagram: ends do not alternate");
    next[e] = nxt.edge;
  }
  std::vector<std::vector<int>> parts;
  std::vector<char> seen(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    std::vector<int> part;
    for (int x = static_cast<int>(e); !seen[static_cast<std::size_t>(x)]; x = next[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      part.push_back(x);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<SurfacePoint> lattice_points(const Origami& o, const Direction& dir) {
  const std::int64_t px = dir.q == 0 ? 1 : std::abs(dir.q);
  const std::int64_t py = dir.p == 0 ? 1 : std::abs(dir.p);
  std::vector<SurfacePoint> out;
  for (int s = 0; s < o.degree(); ++s) {
    for (std::int64_t a = 0; a < px; ++a) {
      for (std::int64_t b = 0; b < py; ++b) {
        out.push_back(SurfacePoint{s, Vec2{Rational(a, px), Rational(b, py)}});
      }
    }
  }
  return out;
}

bool lies_on(const Origami& o, const SurfacePoint& p, const std::vector<Segment>& segments) {
  const Walker w(o);
  int s = p.square;
  Vec2 q = p.pos;
  w.normalize(s, q);
  std::vector<std::pair<int, Vec2>> reps{{s, q}};
  if (q.x == 0 && q.y == 0) {
    const auto vi = static_cast<std::size_t>(w.vertices().vertex_of_square[static_cast<std::size_t>(s)]);
    for (int t : w.vertices().turns[vi]) {
      const int ul = w.hinv(t);
      const int ll = w.vinv(ul);
      const int lr = w.h(ll);
      reps.push_back({t, Vec2{Rational(0), Rational(0)}});
      reps.push_back({ul, Vec2{Rational(1), Rational(0)}});
      reps.push_back({ll, Vec2{Rational(1), Rational(1)}});
      reps.push_back({lr, Vec2{Rational(0), Rational(1)}});
    }
  } else if (q.x == 0) {
    reps.push_back({w.hinv(s), Vec2{Rational(1), q.y}});
  } else if (q.y == 0) {
    reps.push_back({w.vinv(s), Vec2{q.x, Rational(1)}});
  }
  for (const auto& seg : segments) {
    for (const auto& [rs, rp] : reps) {
      if (seg.square == rs && on_closed_segment(rp, seg.entry, seg.exit)) return true;
    }
  }
  return false;
}

}  // namespace kz
