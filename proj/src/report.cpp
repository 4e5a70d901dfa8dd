#include "kzindex/report.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kzindex/census.hpp"
#include "kzindex/homology.hpp"
#include "kzindex/monodromy.hpp"
#include "kzindex/properties.hpp"

namespace kz {

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["status"] = status;
  j["params"] = params;
  j["results"] = results;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

Json to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }
Json to_json(const Direction& d) { return Json::array({d.p, d.q}); }

namespace {

Json to_json(const ClassVector& v) { return Json::array({v[0], v[1], v[2], v[3]}); }
Json to_json(const Vec2& v) { return Json::array({to_string(v.x), to_string(v.y)}); }

Json gram_json(const GramMatrix& a) {
  Json j = Json::array();
  for (const auto& row : a) j.push_back(Json::array({row[0], row[1], row[2], row[3]}));
  return j;
}

// Holonomy as integers when it is integral (closed loops always are).
Json holonomy_json(const Vec2& v) {
  if (is_integer(v.x) && is_integer(v.y)) return Json::array({v.x.numerator(), v.y.numerator()});
  return to_json(v);
}

std::string stratum_name(const SingularityData& s) {
  if (s.cone_orders.empty()) return "H(0)";
  std::string out = "H(";
  for (std::size_t i = 0; i < s.cone_orders.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.cone_orders[i]);
  }
  return out + ")";
}

Json basis_json(const HomologyBasis& b) {
  Json j;
  j["directions"] = Json::array({to_json(b.dir_x), to_json(b.dir_y)});
  j["f"] = Json::object({{"X1", b.f[0]}, {"X2", b.f[1]}, {"Y1", b.f[2]}, {"Y2", b.f[3]}});
  j["gram"] = gram_json(b.gram);
  j["gram_det"] = b.gram_det;
  const auto nt = nontaut_basis(b);
  j["nontaut"] = Json::object({{"X", to_json(nt.x)}, {"Y", to_json(nt.y)}});
  return j;
}

Json decomposition_json(const CylinderDecomposition& dec) {
  Json j;
  j["direction"] = to_json(dec.direction);
  j["shear"] = to_json(dec.shear);
  j["cylinders"] = Json::array();
  for (const auto& c : dec.cylinders) {
    Json rows = Json::array();
    for (const auto& row : c.rows) {
      Json r = Json::array();
      for (int s : row) r.push_back(s + 1);
      rows.push_back(r);
    }
    j["cylinders"].push_back(Json::object({{"f", c.f},
                                           {"c", c.c},
                                           {"circumference", c.circumference},
                                           {"height_rows", c.height_rows},
                                           {"rows", rows},
                                           {"core_holonomy", holonomy_json(c.core.holonomy())}}));
  }
  j["saddle_connections"] = Json::array();
  for (const auto& sc : dec.saddle_connections) {
    j["saddle_connections"].push_back(
        Json::object({{"holonomy", Json::array({sc.multiple * dec.direction.p, sc.multiple * dec.direction.q})},
                      {"multiple", sc.multiple},
                      {"start", Json::object({{"square", sc.start.square + 1}, {"pos", to_json(sc.start.pos)}})},
                      {"segments", sc.segments.size()},
                      {"cylinder_above", sc.cylinder_above},
                      {"cylinder_below", sc.cylinder_below}}));
  }
  return j;
}

Json twist_json(const TwistAnalysis& t) {
  Json j;
  j["direction"] = to_json(t.twist.decomposition.direction);
  j["cylinders"] = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    const auto& c = t.twist.decomposition.cylinders[i];
    j["cylinders"].push_back(Json::object({{"f", c.f},
                                           {"c", c.c},
                                           {"multiplicity", t.twist.multiplicities[i]},
                                           {"omega_basis", to_json(t.omegas[i])},
                                           {"class", to_json(t.classes[i])}}));
  }
  j["image_X"] = to_json(t.image_x);
  j["image_Y"] = to_json(t.image_y);
  j["matrix"] = to_json(t.matrix);
  return j;
}

// Index and -I membership, or the cap-exceeded marker.
Json index_json(const std::vector<Mat2>& gens, std::size_t cap, std::string& status) {
  Json j;
  try {
    const CosetTable t = enumerate_cosets(gens, cap);
    j["index"] = t.index();
    j["contains_minus_identity"] = t.apply(0, {kA, kA}) == 0;
    j["cosets_defined"] = t.defined;
  } catch (const IndexExceedsCap& e) {
    j["index"] = nullptr;
    j["error"] = e.what();
    status = "cap_exceeded";
  }
  return j;
}

const std::vector<Origami>& cached_orbit(const Origami& l, std::size_t cap) {
  static std::mutex mu;
  static std::map<Origami, std::vector<Origami>> cache;
  const Origami key = canonical_form(l);
  {
    const std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto orb = orbit(key, cap);
  const std::lock_guard lock(mu);
  return cache.emplace(key, std::move(orb)).first->second;
}

std::string l_name(int n, int m) { return "L(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

}  // namespace

std::optional<std::string> orbit_label(const Origami& o, std::size_t cap) {
  const int d = o.degree();
  if (d < 3 || !singularity_data(o).in_h2() || !is_primitive(o)) return std::nullopt;
  const Origami c = canonical_form(o);
  try {
    const auto& a = cached_orbit(make_l_origami(2, d - 1), cap);
    const bool odd = d % 2 == 1 && d >= 5;
    if (std::binary_search(a.begin(), a.end(), c)) return (odd ? "A_" : "O_") + std::to_string(d);
    if (odd) {
      const auto& b = cached_orbit(make_l_origami(3, d - 2), cap);
      if (std::binary_search(b.begin(), b.end(), c)) return "B_" + std::to_string(d);
    }
  } catch (const OrbitTooLarge&) {
  }
  return std::nullopt;
}

Json origami_record(const Origami& o, std::size_t orbit_cap) {
  const auto s = singularity_data(o);
  Json j;
  j["degree"] = o.degree();
  j["h"] = format_cycles(o.h());
  j["v"] = format_cycles(o.v());
  j["stratum"] = stratum_name(s);
  j["genus"] = s.genus;
  j["primitive"] = is_primitive(o);
  const auto label = orbit_label(o, orbit_cap);
  j["orbit_label"] = label ? Json(*label) : Json(nullptr);
  return j;
}

Report cmd_decompose(const Origami& o, const Direction& dir) {
  Report r;
  r.command = "decompose";
  r.params["direction"] = to_json(dir);
  const auto dec = decompose(o, dir);
  Json j;
  j["origami"] = origami_record(o);
  j["decomposition"] = decomposition_json(dec);
  const auto diag = separatrix_diagram(o, dir);
  Json parts = Json::array();
  for (const auto& part : trace_boundaries(diag)) {
    std::int64_t len = 0;
    for (int e : part) len += diag.edges[static_cast<std::size_t>(e)].multiple;
    parts.push_back(Json::object({{"edges", part}, {"length", len}}));
  }
  j["traced_upper_boundaries"] = parts;
  r.results.push_back(j);
  return r;
}

Report cmd_homology(const Origami& o, std::size_t basis_cap) {
  Report r;
  r.command = "homology";
  r.params["basis_cap"] = basis_cap;
  Json j;
  j["origami"] = origami_record(o);
  j["basis"] = basis_json(default_basis(o, basis_cap));
  r.results.push_back(j);
  return r;
}

Report cmd_monodromy(const Origami& o, const std::vector<Direction>& dirs, std::size_t cap) {
  Report r;
  r.command = "monodromy";
  r.params["directions"] = Json::array();
  for (const auto& d : dirs) r.params["directions"].push_back(to_json(d));
  r.params["cap"] = cap;
  Json j;
  j["origami"] = origami_record(o);
  const HomologyBasis basis = default_basis(o);
  j["basis"] = basis_json(basis);
  j["twists"] = Json::array();
  std::vector<Mat2> gens;
  for (const auto& d : dirs) {
    const auto t = analyze_twist(o, d, basis);
    j["twists"].push_back(twist_json(t));
    gens.push_back(t.matrix);
  }
  j["generators"] = Json::array();
  for (const auto& g : gens) j["generators"].push_back(to_json(g));
  j["subgroup"] = index_json(gens, cap, r.status);
  r.results.push_back(j);
  return r;
}

Report cmd_index(const std::vector<Mat2>& gens, std::size_t cap) {
  Report r;
  r.command = "index";
  r.params["generators"] = Json::array();
  for (const auto& g : gens) r.params["generators"].push_back(to_json(g));
  r.params["cap"] = cap;
  r.results.push_back(index_json(gens, cap, r.status));
  return r;
}

Report cmd_orbit(const Origami& o, std::size_t cap) {
  Report r;
  r.command = "orbit";
  r.params["cap"] = cap;
  Json j;
  j["origami"] = origami_record(o, cap);
  std::vector<Origami> members;
  try {
    members = orbit(o, cap);
  } catch (const OrbitTooLarge& e) {
    r.status = "cap_exceeded";
    j["error"] = e.what();
    members = e.partial();
  }
  j["size"] = members.size();
  Json shapes = Json::array();
  const int d = o.degree();
  for (int n = 2; n <= d - 1; ++n) {
    const Origami l = canonical_form(make_l_origami(n, d + 1 - n));
    if (std::binary_search(members.begin(), members.end(), l)) shapes.push_back(l_name(n, d + 1 - n));
  }
  j["l_shapes"] = shapes;
  j["members"] = Json::array();
  for (const auto& m : members) j["members"].push_back(Json::object({{"h", format_cycles(m.h())}, {"v", format_cycles(m.v())}}));
  r.results.push_back(j);
  return r;
}

Report cmd_census(int d, std::size_t cap) {
  if (d < 3) throw std::invalid_argument("census needs degree >= 3");
  Report r;
  r.command = "census";
  r.params["degree"] = d;
  r.params["cap"] = cap;
  Census c;
  try {
    c = census(d, cap);
  } catch (const OrbitTooLarge& e) {
    r.status = "cap_exceeded";
    r.notes.push_back(e.what());
    return r;
  }
  Json j;
  j["degree"] = d;
  j["origami_count"] = c.origami_count;
  j["orbit_count"] = c.orbits.size();
  j["orbits"] = Json::array();
  for (const auto& orb : c.orbits) {
    Json shapes = Json::array();
    for (auto [n, m] : orb.l_shapes) shapes.push_back(l_name(n, m));
    const auto label = orbit_label(orb.members.front(), cap);
    j["orbits"].push_back(Json::object({{"label", label ? Json(*label) : Json(nullptr)},
                                        {"size", orb.members.size()},
                                        {"l_shapes", shapes},
                                        {"representative",
                                         Json::object({{"h", format_cycles(orb.members.front().h())},
                                                       {"v", format_cycles(orb.members.front().v())}})}}));
  }
  r.results.push_back(j);
  return r;
}

// ---------------------------------------------------------------------------
// Verification against the published L(2, 2n) and L(2, 2n+1) data.

namespace {

struct CaseChecks {
  Json checks = Json::array();
  bool ok = true;

  void expect(const std::string& name, const Json& expected, const Json& actual, const Json& extra = Json()) {
    Json c = Json::object({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
    if (!extra.is_null()) c["note"] = extra;
    if (expected != actual) ok = false;
    checks.push_back(c);
  }
};

std::int64_t pair(const ClassVector& z, const ClassVector& omegas) {
  std::int64_t s = 0;
  for (int k = 0; k < 4; ++k) s += z[k] * omegas[k];
  return s;
}

// Index of the cylinder with the given f; -1 if absent or ambiguous.
int cylinder_with_f(const TwistAnalysis& t, int f) {
  int found = -1;
  for (std::size_t i = 0; i < t.twist.decomposition.cylinders.size(); ++i) {
    if (t.twist.decomposition.cylinders[i].f == f) {
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
  }
  return found;
}

struct TableRow {
  std::string row;
  std::string col;
  std::int64_t printed;
  bool magnitude;  // the figure prints |value|; the signed value is negative
  std::int64_t actual;
};

// One intersection table: rows (B2, B1, B) against two cylinders.
void table_checks(CaseChecks& cc, Json& tables, const std::string& title, const std::string& r2,
                  const std::string& r1, const std::string& r, const std::array<std::string, 2>& cols,
                  const std::array<std::array<std::int64_t, 2>, 3>& printed, bool magnitude_rows,
                  const std::array<std::array<std::int64_t, 2>, 3>& actual) {
  Json t;
  t["title"] = title;
  t["columns"] = Json::array({cols[0], cols[1]});
  t["rows"] = Json::array();
  const std::array<std::string, 3> names{r2, r1, r};
  for (int i = 0; i < 3; ++i) {
    Json row = Json::object({{"row", names[i]}, {"values", Json::array()}});
    for (int k = 0; k < 2; ++k) {
      const bool mag = magnitude_rows && i < 2;
      const std::int64_t expected = mag ? -printed[i][k] : printed[i][k];
      const std::string name = "Omega(" + names[i] + "," + cols[k] + ")";
      cc.expect(name, expected, actual[i][k],
                mag ? Json("printed as magnitude " + std::to_string(printed[i][k])) : Json());
      row["values"].push_back(Json::object({{"actual", actual[i][k]}, {"printed", printed[i][k]}, {"pass", expected == actual[i][k]}}));
    }
    t["rows"].push_back(row);
  }
  tables.push_back(t);
}

const GramMatrix kLShapeGram{{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, -1, 0, 0}, {-1, -1, 0, 0}}};

Json verify_odd_case(int n) {
  const Origami o = make_l_origami(2, 2 * n);
  const Direction dt = Direction::make(n, n + 1);
  const Direction dy = Direction::make(0, 1);
  Json j;
  j["family"] = "L(2,2n)";
  j["n"] = n;
  j["origami"] = origami_record(o);
  j["directions"] = Json::array({to_json(dt), to_json(dy)});
  CaseChecks cc;
  Json tables = Json::array();
  try {
    const HomologyBasis b = standard_basis(o);
    cc.expect("f(X1,X2,Y1,Y2)", Json::array({1, 2, 1, 2 * n}), Json::array({b.f[0], b.f[1], b.f[2], b.f[3]}));
    cc.expect("gram", gram_json(kLShapeGram), gram_json(b.gram));
    const auto nt = nontaut_basis(b);
    cc.expect("X", to_json(ClassVector{-2, 1, 0, 0}), to_json(nt.x));
    cc.expect("Y", to_json(ClassVector{0, 0, -2 * n, 1}), to_json(nt.y));

    const auto th = analyze_twist(o, dt, b);
    const auto ya = analyze_twist(o, dy, b);
    const int ir = cylinder_with_f(th, 2 * n - 1);
    const int ig = cylinder_with_f(th, 2);
    std::vector<int> fs;
    for (const auto& c : th.twist.decomposition.cylinders) fs.push_back(c.f);
    std::sort(fs.begin(), fs.end());
    std::vector<int> want{2, 2 * n - 1};
    std::sort(want.begin(), want.end());
    cc.expect("f(Theta)", want, fs);
    std::vector<int> fy;
    for (const auto& c : ya.twist.decomposition.cylinders) fy.push_back(c.f);
    std::sort(fy.begin(), fy.end());
    cc.expect("f(Y)", std::vector<int>{1, 2 * n}, fy);
    std::vector<int> cs;
    for (const auto& c : th.twist.decomposition.cylinders) cs.push_back(c.c);
    for (const auto& c : ya.twist.decomposition.cylinders) cs.push_back(c.c);
    cc.expect("c all 1", std::vector<int>(cs.size(), 1), cs);
    if (ir < 0 || ig < 0) throw std::runtime_error("cannot identify Theta_r / Theta_g by f");
    const auto& wr = th.omegas[static_cast<std::size_t>(ir)];
    const auto& wg = th.omegas[static_cast<std::size_t>(ig)];
    const int n2 = n;
    table_checks(cc, tables, "Omega(X_i,Theta_j)", "X_2", "X_1", "X", {"Theta_r", "Theta_g"},
                 {{{2 * n2 - 1, 3}, {n2, 1}, {-1, 1}}}, false,
                 {{{wr[1], wg[1]}, {wr[0], wg[0]}, {pair(nt.x, wr), pair(nt.x, wg)}}});
    auto om = [&](const ClassVector& z, int k) {
      std::int64_t s = 0;
      for (int i = 0; i < 4; ++i) s += z[i] * b.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      return s;
    };
    const ClassVector x1{1, 0, 0, 0}, x2{0, 1, 0, 0}, y1{0, 0, 1, 0}, y2{0, 0, 0, 1};
    table_checks(cc, tables, "Omega(X_i,Y_j)", "X_2", "X_1", "X", {"Y_1", "Y_2"}, {{{1, 1}, {0, 1}, {1, -1}}}, false,
                 {{{om(x2, 2), om(x2, 3)}, {om(x1, 2), om(x1, 3)}, {om(nt.x, 2), om(nt.x, 3)}}});
    table_checks(cc, tables, "Omega(Y_i,Theta_j)", "Y_1", "Y_2", "Y", {"Theta_r", "Theta_g"},
                 {{{-(n2 - 1), -1}, {-(2 * n2 - 2) * n2 - 1, -(2 * n2 - 1)}, {-1, 1}}}, false,
                 {{{wr[2], wg[2]}, {wr[3], wg[3]}, {pair(nt.y, wr), pair(nt.y, wg)}}});
    table_checks(cc, tables, "Omega(Y_i,Y_j)", "Y_1", "Y_2", "Y", {"Y_1", "Y_2"}, {{{0, 0}, {0, 0}, {0, 0}}}, false,
                 {{{om(y1, 2), om(y1, 3)}, {om(y2, 2), om(y2, 3)}, {om(nt.y, 2), om(nt.y, 3)}}});

    cc.expect("class(Theta_r)", to_json(ClassVector{(2 * n - 3) * n + 2, n - 1, n - 1, n}),
              to_json(th.classes[static_cast<std::size_t>(ir)]));
    cc.expect("class(Theta_g)", to_json(ClassVector{2 * (n - 1), 1, 2, 1}), to_json(th.classes[static_cast<std::size_t>(ig)]));
    cc.expect("multiplicities(Theta_r,Theta_g)", Json::array({2, 2 * n - 1}),
              Json::array({th.twist.multiplicities[static_cast<std::size_t>(ir)], th.twist.multiplicities[static_cast<std::size_t>(ig)]}));
    cc.expect("D_Theta", to_json(Mat2{2, 1, -1, 0}), to_json(th.matrix));
    cc.expect("D_Y", to_json(Mat2{1, 0, -1, 1}), to_json(ya.matrix));
    const std::vector<Mat2> gens{th.matrix, ya.matrix};
    j["generators"] = Json::array({to_json(th.matrix), to_json(ya.matrix)});
    const std::size_t idx = index_in_sl2(gens);
    j["index"] = idx;
    cc.expect("index", 1, idx);

    // Separatrix picture: three saddle connections bounding two cylinders.
    const auto diag = separatrix_diagram(o, dt);
    std::vector<std::size_t> parts;
    for (const auto& p : trace_boundaries(diag)) parts.push_back(p.size());
    std::sort(parts.begin(), parts.end());
    cc.expect("saddle connections", 3, diag.edges.size());
    cc.expect("upper boundary sizes", std::vector<std::size_t>{1, 2}, parts);
    const auto scs = saddle_connections(o, dt);
    std::size_t on = 0;
    const auto pts = lattice_points(o, dt);
    for (const auto& p : pts) {
      if (std::any_of(scs.begin(), scs.end(), [&](const SaddleConnection& sc) { return lies_on(o, p, sc.segments); })) ++on;
    }
    cc.expect("lattice points on saddle connections", pts.size(), on);
  } catch (const std::exception& e) {
    cc.ok = false;
    j["error"] = e.what();
  }
  j["tables"] = tables;
  j["checks"] = cc.checks;
  j["status"] = cc.ok ? "pass" : "fail";
  return j;
}

Json verify_even_case(int n) {
  const Origami o = make_l_origami(2, 2 * n + 1);
  const Direction dp = Direction::make(2 * n + 1, 2 * n + 3);
  const Direction dt = Direction::make(2 * n + 2, 2 * n + 1);
  Json j;
  j["family"] = "L(2,2n+1)";
  j["n"] = n;
  j["origami"] = origami_record(o);
  j["directions"] = Json::array({to_json(dp), to_json(dt)});
  CaseChecks cc;
  Json tables = Json::array();
  try {
    const HomologyBasis b = standard_basis(o);
    cc.expect("f(X1,X2,Y1,Y2)", Json::array({1, 2, 1, 2 * n + 1}), Json::array({b.f[0], b.f[1], b.f[2], b.f[3]}));
    const auto nt = nontaut_basis(b);
    cc.expect("X", to_json(ClassVector{-2, 1, 0, 0}), to_json(nt.x));
    cc.expect("Y", to_json(ClassVector{0, 0, -(2 * n + 1), 1}), to_json(nt.y));

    const auto ps = analyze_twist(o, dp, b);
    const auto th = analyze_twist(o, dt, b);
    const int ir = cylinder_with_f(ps, 2 * n);
    const int ig = cylinder_with_f(ps, 1);
    const int im = cylinder_with_f(th, 2 * n + 1);
    const int ib = cylinder_with_f(th, 1);
    if (ir < 0 || ig < 0 || im < 0 || ib < 0) throw std::runtime_error("cannot identify cylinders by f");
    const auto uz = [](int i) { return static_cast<std::size_t>(i); };
    const auto& pc = ps.twist.decomposition.cylinders;
    const auto& tc = th.twist.decomposition.cylinders;
    cc.expect("f(Psi_r,Psi_g,Theta_m,Theta_b)", Json::array({2 * n, 1, 2 * n + 1, 1}),
              Json::array({pc[uz(ir)].f, pc[uz(ig)].f, tc[uz(im)].f, tc[uz(ib)].f}));
    cc.expect("c(Psi_r,Psi_g,Theta_m,Theta_b)", Json::array({1, 2, 1, 1}),
              Json::array({pc[uz(ir)].c, pc[uz(ig)].c, tc[uz(im)].c, tc[uz(ib)].c}));
    const auto& wm = th.omegas[uz(im)];
    const auto& wb = th.omegas[uz(ib)];
    const auto& wr = ps.omegas[uz(ir)];
    const auto& wg = ps.omegas[uz(ig)];
    const std::int64_t m = n;
    table_checks(cc, tables, "Omega(X_i,Theta_j)", "X_2", "X_1", "X", {"Theta_m", "Theta_b"},
                 {{{4 * m + 1, 1}, {2 * m, 1}, {1, -1}}}, false,
                 {{{wm[1], wb[1]}, {wm[0], wb[0]}, {pair(nt.x, wm), pair(nt.x, wb)}}});
    table_checks(cc, tables, "Omega(X_i,Psi_j)", "X_2", "X_1", "X", {"Psi_r", "Psi_g"},
                 {{{4 * m, 3}, {2 * m + 1, 1}, {-2, 1}}}, false,
                 {{{wr[1], wg[1]}, {wr[0], wg[0]}, {pair(nt.x, wr), pair(nt.x, wg)}}});
    table_checks(cc, tables, "Omega(Y_i,Theta_j)", "Y_1", "Y_2", "Y", {"Theta_m", "Theta_b"},
                 {{{2 * m + 1, 1}, {(2 * m + 1) * (2 * m + 1), 2 * m + 1}, {0, 0}}}, true,
                 {{{wm[2], wb[2]}, {wm[3], wb[3]}, {pair(nt.y, wm), pair(nt.y, wb)}}});
    table_checks(cc, tables, "Omega(Y_i,Psi_j)", "Y_1", "Y_2", "Y", {"Psi_r", "Psi_g"},
                 {{{2 * m - 1, 1}, {(2 * m - 1) * (2 * m + 1) + 2, 2 * m}, {-2, 1}}}, true,
                 {{{wr[2], wg[2]}, {wr[3], wg[3]}, {pair(nt.y, wr), pair(nt.y, wg)}}});

    cc.expect("class(Theta_m)", to_json(ClassVector{(2 * m + 1) * 2 * m, 2 * m + 1, 2 * m + 1, 2 * m}), to_json(th.classes[uz(im)]));
    cc.expect("class(Theta_b)", to_json(ClassVector{2 * m, 1, 0, 1}), to_json(th.classes[uz(ib)]));
    cc.expect("class(Psi_r)", to_json(ClassVector{2 * (m - 1) * (2 * m + 1) + 4, 2 * m - 1, 2 * m - 1, 2 * m + 1}),
              to_json(ps.classes[uz(ir)]));
    cc.expect("class(Psi_g)", to_json(ClassVector{2 * m - 1, 1, 2, 1}), to_json(ps.classes[uz(ig)]));
    cc.expect("multiplicities(Psi_r,Psi_g)", Json::array({1, 4 * m}),
              Json::array({ps.twist.multiplicities[uz(ir)], ps.twist.multiplicities[uz(ig)]}));
    cc.expect("multiplicities(Theta_m,Theta_b)", Json::array({1, 2 * m + 1}),
              Json::array({th.twist.multiplicities[uz(im)], th.twist.multiplicities[uz(ib)]}));
    cc.expect("D_Psi", to_json(Mat2{3, 2, -2, -1}), to_json(ps.matrix));
    cc.expect("D_Theta", to_json(Mat2{1, 0, -1, 1}), to_json(th.matrix));
    const std::vector<Mat2> gens{ps.matrix, th.matrix};
    j["generators"] = Json::array({to_json(ps.matrix), to_json(th.matrix)});
    const CosetTable t = enumerate_cosets(gens);
    j["index"] = t.index();
    j["contains_minus_identity"] = t.apply(0, {kA, kA}) == 0;
    cc.expect("index", 3, t.index());
  } catch (const std::exception& e) {
    cc.ok = false;
    j["error"] = e.what();
  }
  j["tables"] = tables;
  j["checks"] = cc.checks;
  j["status"] = cc.ok ? "pass" : "fail";
  return j;
}

Json properties_json(const std::vector<PropertyResult>& props, bool& ok) {
  Json arr = Json::array();
  for (const auto& p : props) {
    if (!p.ok()) ok = false;
    Json j = Json::object({{"name", p.name}, {"cases", p.cases}, {"skipped", p.skipped}, {"failures", p.failures}, {"pass", p.ok()}});
    if (!p.first_failure.empty()) j["first_failure"] = p.first_failure;
    arr.push_back(j);
  }
  return arr;
}

std::vector<Direction> directions_up_to(int budget) {
  std::vector<Direction> out;
  for (int s = 1; s <= budget; ++s) {
    for (int q = 0; q <= s; ++q) {
      const int p = s - q;
      for (int sign : {1, -1}) {
        if (sign < 0 && (p == 0 || q == 0)) continue;
        if (std::gcd(p, q) != 1) continue;
        out.push_back(Direction::make(sign * p, q));
      }
    }
  }
  return out;
}

}  // namespace

Report cmd_verify_paper(int n_max, std::optional<std::uint64_t> seed) {
  if (n_max < 1) throw std::invalid_argument("verify-paper needs n_max >= 1");
  Report r;
  r.command = "verify-paper";
  r.params["n_max"] = n_max;
  if (seed) r.params["seed"] = *seed;
  std::vector<std::future<Json>> jobs;
  for (int n = 1; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, verify_odd_case, n));
    jobs.push_back(std::async(std::launch::async, verify_even_case, n));
  }
  bool ok = true;
  std::size_t checks = 0, failed = 0;
  for (auto& f : jobs) {
    Json j = f.get();
    if (j["status"] != "pass") ok = false;
    for (const auto& c : j["checks"]) {
      ++checks;
      if (!c["pass"].get<bool>()) ++failed;
    }
    r.results.push_back(std::move(j));
  }
  Json summary = Json::object({{"cases", r.results.size()}, {"checks", checks}, {"failed_checks", failed}});
  if (seed) summary["properties"] = properties_json(run_properties(*seed), ok);
  r.notes.push_back("Y_1/Y_2 rows of the L(2,2n+1) tables list magnitudes; they are checked as negative signed values.");
  r.params["summary"] = summary;
  r.status = ok ? "ok" : "fail";
  return r;
}

Report cmd_conjecture(const std::vector<std::pair<int, int>>& reps, std::size_t cap) {
  constexpr int kBudget = 12;
  Report r;
  r.command = "conjecture";
  r.params["cap"] = cap;
  r.params["direction_budget"] = kBudget;
  for (auto [n, m] : reps) {
    Json j;
    j["representative"] = l_name(n, m);
    if (n < 3 || m < 3 || n % 2 == 0 || m % 2 == 0) {
      j["error"] = "representatives must have odd n, m >= 3";
      r.status = "error";
      r.results.push_back(j);
      continue;
    }
    try {
      const Origami o = make_l_origami(n, m);
      j["origami"] = origami_record(o);
      const HomologyBasis b = default_basis(o);
      j["basis_directions"] = Json::array({to_json(b.dir_x), to_json(b.dir_y)});
      // Twists in every direction with |p|+|q| <= s, for growing s. The
      // generated subgroup only grows, so its index can only drop.
      std::vector<Mat2> gens;
      std::vector<Direction> used;
      Json sweep = Json::array();
      std::optional<std::size_t> last;
      for (int s = 1; s <= kBudget; ++s) {
        for (const auto& d : directions_up_to(s)) {
          if (std::find(used.begin(), used.end(), d) != used.end()) continue;
          used.push_back(d);
          gens.push_back(dehn_twist_action(o, d, b));
        }
        Json step = Json::object({{"budget", s}, {"directions", used.size()}});
        try {
          const CosetTable t = enumerate_cosets(gens, cap);
          last = t.index();
          step["index"] = t.index();
          step["contains_minus_identity"] = t.apply(0, {kA, kA}) == 0;
        } catch (const IndexExceedsCap&) {
          step["index"] = nullptr;
        }
        sweep.push_back(step);
      }
      j["sweep"] = sweep;
      j["index"] = last ? Json(*last) : Json(nullptr);
      j["matches_conjecture"] = last && *last == 3;
      if (!last || *last != 3) {
        r.notes.push_back("WARNING: " + l_name(n, m) + " gives index " + (last ? std::to_string(*last) : "above cap") +
                          ", conjectured 3");
      }
    } catch (const std::exception& e) {
      j["error"] = e.what();
      r.status = "error";
    }
    r.results.push_back(j);
  }
  return r;
}

Report cmd_properties(std::uint64_t seed, std::size_t scale) {
  Report r;
  r.command = "properties";
  r.params["seed"] = seed;
  r.params["scale"] = scale;
  bool ok = true;
  r.results = properties_json(run_properties(seed, scale), ok);
  r.status = ok ? "ok" : "fail";
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_origami(std::ostringstream& os, const Json& o) {
  os << "origami: h=" << cell(o["h"]) << " v=" << cell(o["v"]) << "  degree " << o["degree"] << ", " << cell(o["stratum"])
     << ", genus " << o["genus"] << (o["primitive"].get<bool>() ? ", primitive" : ", not primitive");
  if (!o["orbit_label"].is_null()) os << ", orbit " << cell(o["orbit_label"]);
  os << "\n";
}

void render_table(std::ostringstream& os, const Json& t) {
  os << "  " << std::left << std::setw(20) << cell(t["title"]);
  for (const auto& c : t["columns"]) os << " | " << std::right << std::setw(9) << cell(c);
  os << "\n  " << std::string(20, '-') << std::string(t["columns"].size() * 12, '-') << "\n";
  for (const auto& row : t["rows"]) {
    os << "  " << std::left << std::setw(20) << cell(row["row"]);
    for (const auto& v : row["values"]) {
      std::string s = cell(v["actual"]);
      if (!v["pass"].get<bool>()) s += "!";
      os << " | " << std::right << std::setw(9) << s;
    }
    os << "\n";
  }
}

void render_verify(std::ostringstream& os, const Report& r) {
  for (const auto& c : r.results) {
    os << cell(c["family"]) << " n=" << c["n"] << "  " << cell(c["origami"]["h"]) << " / " << cell(c["origami"]["v"])
       << "  index " << (c.contains("index") ? cell(c["index"]) : "-") << "  [" << cell(c["status"]) << "]\n";
    for (const auto& t : c["tables"]) render_table(os, t);
    for (const auto& chk : c["checks"]) {
      if (!chk["pass"].get<bool>()) {
        os << "  MISMATCH " << cell(chk["name"]) << ": expected " << chk["expected"].dump() << ", got "
           << chk["actual"].dump() << "\n";
      }
    }
    if (c.contains("error")) os << "  ERROR " << cell(c["error"]) << "\n";
    os << "\n";
  }
  const auto& s = r.params["summary"];
  os << "checks: " << s["checks"] << ", failed: " << s["failed_checks"] << "\n";
  if (s.contains("properties")) {
    for (const auto& p : s["properties"]) {
      os << (p["pass"].get<bool>() ? "pass " : "FAIL ") << cell(p["name"]) << " (" << p["cases"] << " cases, "
         << p["skipped"] << " skipped)\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (r.command == "verify-paper") {
    render_verify(os, r);
  } else if (r.command == "decompose") {
    const auto& j = r.results.at(0);
    render_origami(os, j["origami"]);
    const auto& d = j["decomposition"];
    os << "direction " << d["direction"].dump() << ", shear " << d["shear"].dump() << "\n";
    int i = 0;
    for (const auto& c : d["cylinders"]) {
      os << "cylinder " << i++ << ": f=" << c["f"] << " c=" << c["c"] << " circumference=" << c["circumference"]
         << " height=" << c["height_rows"] << " rows=" << c["rows"].dump() << "\n";
    }
    for (const auto& s : d["saddle_connections"]) {
      os << "saddle connection: holonomy " << s["holonomy"].dump() << ", from square " << s["start"]["square"]
         << ", above cylinder " << s["cylinder_above"] << ", below cylinder " << s["cylinder_below"] << "\n";
    }
    for (const auto& p : j["traced_upper_boundaries"]) {
      os << "traced boundary: edges " << p["edges"].dump() << ", length " << p["length"] << "\n";
    }
  } else if (r.command == "homology") {
    const auto& j = r.results.at(0);
    render_origami(os, j["origami"]);
    const auto& b = j["basis"];
    os << "basis directions " << b["directions"].dump() << ", f " << b["f"].dump() << "\n";
    os << "gram (X1,X2,Y1,Y2):\n";
    for (const auto& row : b["gram"]) {
      os << " ";
      for (const auto& v : row) os << std::setw(4) << v.get<std::int64_t>();
      os << "\n";
    }
    os << "det " << b["gram_det"] << "\nX = " << b["nontaut"]["X"].dump() << "\nY = " << b["nontaut"]["Y"].dump() << "\n";
  } else if (r.command == "monodromy") {
    const auto& j = r.results.at(0);
    render_origami(os, j["origami"]);
    for (const auto& t : j["twists"]) {
      os << "direction " << t["direction"].dump() << ": matrix " << t["matrix"].dump() << "\n";
      for (const auto& c : t["cylinders"]) {
        os << "  f=" << c["f"] << " c=" << c["c"] << " n=" << c["multiplicity"] << " class " << c["class"].dump()
           << " Omega(basis,.) " << c["omega_basis"].dump() << "\n";
      }
    }
    const auto& s = j["subgroup"];
    os << "index " << (s["index"].is_null() ? std::string("exceeds cap") : s["index"].dump()) << "\n";
  } else if (r.command == "index") {
    const auto& s = r.results.at(0);
    os << (s["index"].is_null() ? std::string("index exceeds cap") : s["index"].dump()) << "\n";
  } else if (r.command == "orbit") {
    const auto& j = r.results.at(0);
    render_origami(os, j["origami"]);
    os << "orbit size " << j["size"] << ", L-shapes " << j["l_shapes"].dump() << "\n";
  } else if (r.command == "census") {
    if (!r.results.empty()) {
      const auto& j = r.results.at(0);
      os << "degree " << j["degree"] << ": " << j["origami_count"] << " primitive H(2) origamis, " << j["orbit_count"]
         << " orbits\n";
      for (const auto& o : j["orbits"]) {
        os << "  " << (o["label"].is_null() ? std::string("?") : cell(o["label"])) << " size " << o["size"] << " "
           << o["l_shapes"].dump() << "\n";
      }
    }
  } else if (r.command == "conjecture") {
    for (const auto& j : r.results) {
      os << cell(j["representative"]) << ": ";
      if (j.contains("error")) {
        os << "error: " << cell(j["error"]) << "\n";
        continue;
      }
      os << "index " << (j["index"].is_null() ? std::string("exceeds cap") : j["index"].dump())
         << (j["matches_conjecture"].get<bool>() ? "" : "   <-- differs from the conjectured 3") << "\n";
    }
  } else if (r.command == "properties") {
    for (const auto& p : r.results) {
      os << (p["pass"].get<bool>() ? "pass " : "FAIL ") << cell(p["name"]) << " (" << p["cases"] << " cases, " << p["skipped"]
         << " skipped)";
      if (p.contains("first_failure")) os << ": " << cell(p["first_failure"]);
      os << "\n";
    }
  }
  for (const auto& n : r.notes) os << "note: " << cell(n) << "\n";
  os << "status: " << r.status << "\n";
  return os.str();
}

}  // namespace kz
