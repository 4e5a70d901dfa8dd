#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kzindex/coset.hpp"
#include "kzindex/geometry.hpp"
#include "kzindex/origami.hpp"

namespace kz {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Result of one CLI command. `status` is "ok", "fail" (a check did not
// hold), "cap_exceeded" or "error".
struct Report {
  std::string command;
  std::string status = "ok";
  Json params = Json::object();
  Json results = Json::array();
  Json notes = Json::array();

  Json to_json() const;
};

// Degree, stratum, genus, primitivity and orbit label of an origami.
Json origami_record(const Origami& o, std::size_t orbit_cap = kDefaultOrbitCap);

// "A_d" / "B_d" for the orbits of L(2, d-1) and L(3, d-2) at odd d >= 5,
// "O_d" for the orbit of L(2, d-1) otherwise. Empty when the origami is not
// a primitive H(2) origami in one of those orbits or the orbit exceeds cap.
std::optional<std::string> orbit_label(const Origami& o, std::size_t cap = kDefaultOrbitCap);

Json to_json(const Mat2& m);
Json to_json(const Direction& d);

Report cmd_decompose(const Origami& o, const Direction& dir);
Report cmd_homology(const Origami& o, std::size_t basis_cap = 64);
Report cmd_monodromy(const Origami& o, const std::vector<Direction>& dirs, std::size_t cap = kDefaultCosetCap);
Report cmd_index(const std::vector<Mat2>& gens, std::size_t cap = kDefaultCosetCap);
Report cmd_orbit(const Origami& o, std::size_t cap = kDefaultOrbitCap);
Report cmd_census(int d, std::size_t cap = kDefaultOrbitCap);

// Runs L(2, 2n) and L(2, 2n+1) for n = 1..n_max through the pipeline and
// compares every published value. With a seed, the randomized property
// suites run as well. Throws std::invalid_argument for n_max < 1.
Report cmd_verify_paper(int n_max, std::optional<std::uint64_t> seed = std::nullopt);

// Generated-subgroup index for L(n, m) with n, m odd. Exploratory: a value
// other than 3 is flagged, never a failure.
Report cmd_conjecture(const std::vector<std::pair<int, int>>& reps, std::size_t cap = kDefaultCosetCap);

Report cmd_properties(std::uint64_t seed, std::size_t scale = 1);

std::string render_text(const Report& r);

}  // namespace kz
