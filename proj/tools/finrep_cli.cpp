// Command-line driver: classify the irreducibles of H |x A, list dual
// orbits, decompose representations of the abelian part into
// projection-valued measures, and run the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include "finrep/json_io.hpp"
#include "finrep/mackey.hpp"
#include "finrep/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace finrep;

std::string joined(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<int>& v) { return "{" + joined(v) + "}"; }

std::string sci(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x;
  return out.str();
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string input;
  std::string rep_path;
  std::string format = "table";
  std::string suite = "all";
  std::string fault = "none";
  std::vector<std::string> vectors;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  std::int64_t limit = kDefaultGroupLimit;
};

int run_classify(const Options& opt) {
  const SemidirectPtr g = load_group_definition(opt.input, opt.limit);
  const ClassificationReport report = classify(g, opt.seed);
  const CompletenessResult check = completeness_check(report, g, opt.seed);

  if (opt.format == "json") {
    std::cout << report_to_json(report, check);
    return check.ok ? 0 : 1;
  }

  std::cout << "entry  orbit  orbit_rep  orbit_size  stab_order  stalk_dim  dim  stalk\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const ClassificationEntry& e = report.entries[i];
    std::cout << std::setw(5) << i << "  " << std::setw(5) << e.orbit << "  " << std::setw(9)
              << e.orbit_rep << "  " << std::setw(10) << e.orbit_size << "  " << std::setw(10)
              << e.stabilizer.table->size << "  " << std::setw(9) << e.stalk_dim << "  "
              << std::setw(3) << e.induced.dim << "  " << e.stalk_label << "\n";
  }
  std::cout << "sum of squares " << report.sum_dim_sq
            << (report.sum_dim_sq == report.group_order ? " = " : " != ") << "|G| "
            << report.group_order << "\n";
  if (check.ok) {
    std::cout << "completeness pass\n";
  } else {
    for (const std::string& f : check.failures) std::cout << "completeness FAIL: " << f << "\n";
  }
  return check.ok ? 0 : 1;
}

int run_orbits(const Options& opt) {
  const SemidirectPtr g = load_group_definition(opt.input, opt.limit);
  const DualActionHom dual = dual_action(*g);
  const std::vector<Orbit> orbs = orbits(dual);

  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Orbit& orb : orbs) {
      rows.push_back({{"representative", orb.representative},
                      {"elements", orb.elements},
                      {"stabilizer_order", stabilizer(dual, orb.representative).table->size}});
    }
    std::cout << dump({{"orbits", rows}});
    return 0;
  }

  for (std::size_t i = 0; i < orbs.size(); ++i)
    std::cout << "orbit " << i << ": " << braces(orbs[i].elements) << " stab order "
              << stabilizer(dual, orbs[i].representative).table->size << "\n";
  return 0;
}

CVec parse_vector(const std::string& text, int dim) {
  std::vector<double> entries;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ParseError("vector: '" + piece + "' is not a number");
    }
  }
  if (static_cast<int>(entries.size()) != dim)
    throw ParseError("vector '" + text + "' has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(dim));
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = entries[i];
  return v;
}

int run_spectral(const Options& opt) {
  const SemidirectPtr g = load_group_definition(opt.input, opt.limit);
  const FiniteAbelianGroup a = g->a_part();
  MatrixRep raw = load_rep(opt.rep_path, share(abelian_as_group(a)), opt.tol);
  const AbelianRep rep = make_abelian_rep(a, std::move(raw.mats), opt.tol);
  const ProjectionValuedMeasure p = spectral_measure(rep, opt.tol);

  std::vector<std::string> names;
  std::vector<CVec> vecs;
  if (opt.vectors.empty()) {
    for (int i = 0; i < rep.dim; ++i) {
      names.push_back("e" + std::to_string(i));
      vecs.push_back(CVec::Unit(rep.dim, i));
    }
  } else {
    for (std::size_t i = 0; i < opt.vectors.size(); ++i) {
      names.push_back("v" + std::to_string(i));
      vecs.push_back(parse_vector(opt.vectors[i], rep.dim));
    }
  }

  if (opt.format == "json") {
    nlohmann::json j = nlohmann::json::parse(pvm_to_json(p, opt.tol));
    nlohmann::json sup = nlohmann::json::array();
    for (const CVec& v : vecs) sup.push_back(support_of_vector(p, v, opt.tol));
    j["supports"] = sup;
    std::cout << dump(j);
    return 0;
  }

  std::cout << "dim " << p.dim << " over orders [" << joined(a.orders) << "]\n";
  for (int chi : p.support(opt.tol))
    std::cout << "atom " << chi << ": rank "
              << range_basis_qr(p.atoms[chi], kRankCutoff).cols() << "\n";
  for (std::size_t i = 0; i < vecs.size(); ++i)
    std::cout << "E(" << names[i] << ") = " << braces(support_of_vector(p, vecs[i], opt.tol))
              << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  const SemidirectPtr g = load_group_definition(opt.input, opt.limit);
  const std::vector<SuiteResult> results =
      run_suites(g, opt.suite, fault_from_string(opt.fault), opt.seed, opt.tol);

  bool all_pass = true;
  for (const SuiteResult& r : results) all_pass = all_pass && r.pass;

  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const SuiteResult& r : results) {
      rows.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"max_deviation", r.max_deviation},
                      {"notes", r.notes}});
    }
    std::cout << dump({{"pass", all_pass}, {"suites", rows}});
    return all_pass ? 0 : 1;
  }

  for (const SuiteResult& r : results) {
    std::string notes;
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
      if (i) notes += "; ";
      notes += r.notes[i];
    }
    std::cout << std::left << std::setw(9) << r.name << std::right << "  "
              << (r.pass ? "pass" : "FAIL") << "  max dev " << sci(r.max_deviation) << "  "
              << notes << "\n";
  }
  std::cout << (all_pass ? "verify pass" : "verify FAIL") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"finite Mackey machine for semidirect products H |x A"};
  app.require_subcommand(1);

  app.add_option("--seed", opt.seed, "seed for the randomized checks");
  app.add_option("--tol", opt.tol, "verification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--limit", opt.limit, "largest group order accepted")
      ->check(CLI::PositiveNumber);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify the irreducibles by orbit and stalk");
  classify_cmd->add_option("file", opt.input, "group definition (JSON)")->required();
  classify_cmd->fallthrough();

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "list the dual orbits and stabilizers");
  orbits_cmd->add_option("file", opt.input, "group definition (JSON)")->required();
  orbits_cmd->fallthrough();

  CLI::App* spectral_cmd =
      app.add_subcommand("spectral", "spectral measure of a representation of the abelian part");
  spectral_cmd->add_option("file", opt.input, "group definition (JSON)")->required();
  spectral_cmd->add_option("--rep", opt.rep_path, "representation file (JSON)")->required();
  spectral_cmd->add_option("--vector", opt.vectors,
                           "comma-separated real vector for a support query (repeatable; "
                           "defaults to the standard basis)");
  spectral_cmd->fallthrough();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("file", opt.input, "group definition (JSON)")->required();
  verify_cmd->add_option("--suite", opt.suite, "suite to run")
      ->check(CLI::IsMember({"all", "thm1", "lemma1", "lemma2", "lemma3", "transport", "hom"}));
  verify_cmd->add_option("--fault", opt.fault, "inject a deliberate violation")
      ->check(CLI::IsMember({"none", "break-covariance", "drop-atom"}));
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(opt);
    if (orbits_cmd->parsed()) return run_orbits(opt);
    if (spectral_cmd->parsed()) return run_spectral(opt);
    return run_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
