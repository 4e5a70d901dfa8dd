// kzindex command-line tool.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error, 3 a cap was exceeded, 4 any other computation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "kzindex/errors.hpp"
#include "kzindex/report.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3, kFailure = 4 };

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw kz::ParseError("expected p,q but got '" + s + "'");
  try {
    return {std::stoi(parts[0]), std::stoi(parts[1])};
  } catch (const std::exception&) {
    throw kz::ParseError("expected integers in '" + s + "'");
  }
}

kz::Direction parse_direction(const std::string& s) {
  const auto [p, q] = parse_pair(s);
  return kz::Direction::make(p, q);
}

kz::Origami read_origami(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw kz::ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return kz::parse_origami(text);
}

int exit_for(const kz::Report& r) {
  if (r.status == "ok") return kOk;
  if (r.status == "fail") return kCheckFailed;
  if (r.status == "cap_exceeded") return kCap;
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylinder decompositions, multitwist monodromy and SL2(Z) indices of square-tiled surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::size_t cap = 0;
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* cap_opt = app.add_option("--cap", cap, "Coset cap (index, monodromy, conjecture), orbit cap (orbit, census) "
                                               "or basis search cap (homology)")
                      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Also run the randomized property suites with this seed (verify-paper)");

  std::string file;
  std::string dir;
  auto* decompose = app.add_subcommand("decompose", "Cylinder decomposition in a rational direction");
  decompose->add_option("file", file, "Origami file ('-' for stdin)")->required();
  decompose->add_option("--dir", dir, "Direction p,q")->required();

  auto* homology = app.add_subcommand("homology", "Gram matrix and non-tautological basis");
  homology->add_option("file", file, "Origami file ('-' for stdin)")->required();

  std::string dirs;
  auto* monodromy = app.add_subcommand("monodromy", "Multitwist matrices and the index of the group they generate");
  monodromy->add_option("file", file, "Origami file ('-' for stdin)")->required();
  monodromy->add_option("--dirs", dirs, "Directions \"p1,q1;p2,q2\"")->required();

  std::string gens;
  auto* index = app.add_subcommand("index", "Index in SL2(Z) of the group generated by integer matrices");
  index->add_option("--gens", gens, "Matrices \"a,b,c,d;a,b,c,d\" (row major)")->required();

  auto* orbit = app.add_subcommand("orbit", "SL2(Z) orbit of an origami");
  orbit->add_option("file", file, "Origami file ('-' for stdin)")->required();

  int degree = 0;
  bool unrestricted = false;
  auto* census = app.add_subcommand("census", "Orbits of primitive H(2) origamis of one degree");
  census->add_option("degree", degree, "Degree d >= 3")->required();
  census->add_flag("--unrestricted", unrestricted, "Allow degrees above 12");

  int n_max = 10;
  auto* verify = app.add_subcommand("verify-paper", "Check the published L(2,2n) and L(2,2n+1) data for n <= n_max");
  verify->add_option("--n-max", n_max, "Largest n");

  std::string reps = "3,3;3,5;5,5";
  auto* conjecture = app.add_subcommand("conjecture", "Generated-subgroup index for L(n,m) with n, m odd");
  conjecture->add_option("--reps", reps, "Shapes \"n,m;n,m\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool has_cap = cap_opt->count() > 0;
  kz::Report report;
  try {
    if (decompose->parsed()) {
      report = kz::cmd_decompose(read_origami(file), parse_direction(dir));
    } else if (homology->parsed()) {
      report = kz::cmd_homology(read_origami(file), has_cap ? cap : 64);
    } else if (monodromy->parsed()) {
      std::vector<kz::Direction> ds;
      for (const auto& s : split(dirs, ';')) ds.push_back(parse_direction(s));
      report = kz::cmd_monodromy(read_origami(file), ds, has_cap ? cap : kz::kDefaultCosetCap);
    } else if (index->parsed()) {
      std::vector<kz::Mat2> ms;
      for (const auto& s : split(gens, ';')) ms.push_back(kz::parse_mat2(s));
      for (const auto& m : ms) {
        if (m.det() != 1) throw kz::ParseError("matrix " + kz::to_string(m) + " does not have determinant 1");
      }
      report = kz::cmd_index(ms, has_cap ? cap : kz::kDefaultCosetCap);
    } else if (orbit->parsed()) {
      report = kz::cmd_orbit(read_origami(file), has_cap ? cap : kz::kDefaultOrbitCap);
    } else if (census->parsed()) {
      if (degree < 3 || (degree > 12 && !unrestricted)) {
        std::cerr << "census: degree must lie in 3..12 (use --unrestricted for larger degrees)\n";
        return kUsage;
      }
      report = kz::cmd_census(degree, has_cap ? cap : kz::kDefaultOrbitCap);
    } else if (verify->parsed()) {
      if (n_max < 1) {
        std::cerr << "verify-paper: --n-max must be at least 1\n";
        return kUsage;
      }
      report = kz::cmd_verify_paper(n_max, seed_opt->count() > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt);
    } else if (conjecture->parsed()) {
      std::vector<std::pair<int, int>> rs;
      for (const auto& s : split(reps, ';')) rs.push_back(parse_pair(s));
      report = kz::cmd_conjecture(rs, has_cap ? cap : kz::kDefaultCosetCap);
    }
  } catch (const kz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const kz::InvalidShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const kz::InvalidDirection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const kz::IndexExceedsCap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const kz::OrbitTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << kz::render_text(report);
  }
  return exit_for(report);
}
