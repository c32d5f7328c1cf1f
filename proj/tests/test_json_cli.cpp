#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "finrep/json_io.hpp"
#include "finrep/mackey.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace finrep;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FINREP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden_path(const std::string& name) {
  return std::string(FINREP_GOLDEN_DIR) + "/" + name;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("table outputs match the golden files byte for byte") {
  SUBCASE("classify affine3") {
    const RunResult r = run_cli("classify " + golden_path("affine3_group.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_all(golden_path("affine3_classify.txt")));
  }
  SUBCASE("orbits affine3") {
    const RunResult r = run_cli("orbits " + golden_path("affine3_group.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_all(golden_path("affine3_orbits.txt")));
  }
  SUBCASE("classify heis2") {
    const RunResult r = run_cli("classify " + golden_path("heis2_group.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_all(golden_path("heis2_classify.txt")));
  }
  SUBCASE("spectral z4") {
    const RunResult r = run_cli("spectral " + golden_path("z4_group.json") + " --rep " +
                                golden_path("z4_rep.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_all(golden_path("z4_spectral.txt")));
  }
}

TEST_CASE("json output reparses and reserializes byte-identically") {
  SUBCASE("classify") {
    const RunResult r =
        run_cli("classify " + golden_path("affine3_group.json") + " --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["entries"].size() == 3);
    CHECK(j["pass"] == true);
    CHECK(j["sum_dim_sq"] == 6);
  }
  SUBCASE("orbits") {
    const RunResult r = run_cli("orbits " + golden_path("affine3_group.json") + " --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["orbits"].size() == 2);
  }
  SUBCASE("spectral") {
    const RunResult r = run_cli("spectral " + golden_path("z4_group.json") + " --rep " +
                                golden_path("z4_rep.json") + " --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["supports"] == nlohmann::json::parse("[[1],[3]]"));
  }
  SUBCASE("verify") {
    const RunResult r = run_cli("verify " + golden_path("affine3_group.json") +
                                " --suite hom --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["pass"] == true);
  }
}

TEST_CASE("exit codes separate input errors from failed checks") {
  SUBCASE("malformed json is an input error") {
    const std::string bad = temp_file("finrep_bad.json", "{\"abelian\": [oops");
    CHECK(run_cli("classify " + bad).exit_code == 2);
  }
  SUBCASE("missing file is an input error") {
    CHECK(run_cli("classify /nonexistent/finrep_missing.json").exit_code == 2);
  }
  SUBCASE("valid json with a missing field is an input error") {
    const std::string bad = temp_file("finrep_nofield.json", "{\"h\": {\"cyclic\": 2}}");
    CHECK(run_cli("classify " + bad).exit_code == 2);
  }
  SUBCASE("size limit violations are input errors") {
    CHECK(run_cli("classify " + golden_path("affine3_group.json") + " --limit 5").exit_code == 2);
  }
  SUBCASE("unknown flag values are input errors") {
    CHECK(run_cli("classify " + golden_path("affine3_group.json") + " --format bogus").exit_code ==
          2);
    CHECK(run_cli("verify " + golden_path("affine3_group.json") + " --fault bogus").exit_code ==
          2);
    CHECK(run_cli("verify " + golden_path("affine3_group.json") + " --suite bogus").exit_code ==
          2);
  }
  SUBCASE("an injected fault is a failed check") {
    const RunResult r = run_cli("verify " + golden_path("affine3_group.json") +
                                " --suite thm1 --fault drop-atom");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
  SUBCASE("a clean single-suite run passes") {
    CHECK(run_cli("verify " + golden_path("affine3_group.json") + " --suite lemma3").exit_code ==
          0);
  }
}

TEST_CASE("group definitions parse with field diagnostics") {
  SUBCASE("omitted action means the trivial action") {
    const SemidirectPtr g =
        parse_group_definition(R"({"abelian": {"orders": [3]}, "h": {"cyclic": 2}})");
    CHECK(g->size() == 6);
    CHECK(orbits(dual_action(*g)).size() == 3);
  }
  SUBCASE("h variants agree") {
    const SemidirectPtr cyclic =
        parse_group_definition(R"({"abelian": {"orders": [2]}, "h": {"cyclic": 2}})");
    const SemidirectPtr table = parse_group_definition(
        R"({"abelian": {"orders": [2]}, "h": {"table": [[0, 1], [1, 0]]}})");
    CHECK(cyclic->h_part().same_structure(table->h_part()));
  }
  SUBCASE("missing field names the path") {
    CHECK_THROWS_WITH_AS(parse_group_definition(R"({"h": {"cyclic": 2}})"),
                         doctest::Contains("abelian"), ParseError);
    CHECK_THROWS_WITH_AS(parse_group_definition(R"({"abelian": {"orders": [2]}})"),
                         doctest::Contains("h"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_group_definition(R"({"abelian": {"orders": "x"}, "h": {"cyclic": 1}})"),
        doctest::Contains("abelian.orders"), ParseError);
  }
  SUBCASE("bad action shape is rejected") {
    CHECK_THROWS_AS(parse_group_definition(R"({"abelian": {"orders": [3]}, "h": {"cyclic": 2},
                                               "action": {"per_element": [[[1]]]}})"),
                    ParseError);
  }
  SUBCASE("group size limit is enforced") {
    CHECK_THROWS_WITH_AS(
        parse_group_definition(R"({"abelian": {"orders": [5]}, "h": {"cyclic": 2}})", 9),
        doctest::Contains("size limit"), ParseError);
  }
}

TEST_CASE("representation and measure files round-trip through json") {
  const SemidirectPtr g = catalog_group("affine3");
  const MatrixRep pi = decompose_regular(g->table()).irreps[2];

  const std::string rep_text = rep_to_json(pi);
  const MatrixRep back = parse_rep(rep_text, g->table());
  CHECK(back.dim == pi.dim);
  double dev = 0.0;
  for (int e = 0; e < g->size(); ++e) dev = std::max(dev, max_abs(CMat(back.mats[e] - pi.mats[e])));
  CHECK(dev == 0.0);
  CHECK(rep_to_json(back) == rep_text);

  const AbelianRep restricted = make_abelian_rep(
      g->a_part(),
      {pi.mats[g->index_of(g->h_part().identity, 0)], pi.mats[g->index_of(g->h_part().identity, 1)],
       pi.mats[g->index_of(g->h_part().identity, 2)]});
  const ProjectionValuedMeasure p = spectral_measure(restricted);
  const std::string pvm_text = pvm_to_json(p);
  const ProjectionValuedMeasure p2 = parse_pvm(pvm_text);
  CHECK(p2.support() == p.support());
  CHECK(pvm_to_json(p2) == pvm_text);

  CHECK_THROWS_AS(parse_rep(R"({"dim": 2, "mats": []})", g->table()), ParseError);
  CHECK_THROWS_WITH_AS(parse_pvm(R"({"orders": [2], "dim": 1, "atoms": {"7": [[[1, 0]]]}})"),
                       doctest::Contains("7"), ParseError);
}
