#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hjelm/conic.hpp"
#include "hjelm/io.hpp"
#include "hjelm/mub.hpp"

using namespace hjelm;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing " << p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("hjelm_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& out_dir) {
  const std::string cmd = std::string(HJELM_CLI_PATH) + " " + args + " --out-dir " +
                          out_dir.string() + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

} // namespace

TEST_CASE("repeated CLI runs are byte-identical") {
  struct Case {
    std::string args;
    std::string artifact;
  };
  const std::vector<Case> cases{
      {"plane --p 2 --r 1 --kind galois --format json", "plane.json"},
      {"plane --p 2 --r 1 --kind dual --format csv", "incidence.csv"},
      {"plane --p 2 --r 1 --kind galois --format dot", "neighbours.dot"},
      {"mub --p 2 --r 2", "mub.json"},
      {"arc --p 2 --r 1 --kind galois", "arc.json"},
      {"correspond --p 2 --r 1", "certificate.json"},
      {"conic --p 2 --r 1 --kind galois --pairwise", "conic_intersections.json"},
  };
  for (const auto& c : cases) {
    auto d1 = fresh_dir("a"), d2 = fresh_dir("b");
    REQUIRE(run_cli(c.args, d1) == 0);
    REQUIRE(run_cli(c.args, d2) == 0);
    CHECK_MESSAGE(slurp(d1 / c.artifact) == slurp(d2 / c.artifact), c.args);
    fs::remove_all(d1);
    fs::remove_all(d2);
  }
}

TEST_CASE("ring artifact schema and content") {
  auto dir = fresh_dir("ring");
  REQUIRE(run_cli("ring --p 2 --r 1 --kind galois", dir) == 0);
  auto j = nlohmann::json::parse(slurp(dir / "ring.json"));
  CHECK(j["schema"] == "hjelm.ring");
  CHECK(j["version"] == 1);
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 2);
  CHECK(j["kind"] == "galois");
  CHECK(j["counts"]["total"] == 4);
  CHECK(j["counts"]["zero_divisors"] == 2);
  CHECK(j["counts"]["units"] == 2);
  fs::remove_all(dir);
}

TEST_CASE("plane artifact lists 28 canonical triples and 7 classes of 4") {
  auto dir = fresh_dir("plane");
  REQUIRE(run_cli("plane --p 2 --r 1 --kind galois --format json", dir) == 0);
  auto j = nlohmann::json::parse(slurp(dir / "plane.json"));
  CHECK(j["schema"] == "hjelm.plane");
  CHECK(j["points"].size() == 28);
  CHECK(j["lines"].size() == 28);
  REQUIRE(j["neighbour_classes"].size() == 7);
  for (const auto& cls : j["neighbour_classes"]) CHECK(cls.size() == 4);
  // triples are coefficient arrays: [[1],[2],[0]] etc. for r = 1
  CHECK(j["points"][0].size() == 3);
  CHECK(j["points"][0][0].size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("incidence CSV is a 28 x 28 0/1 matrix with 6 ones per row") {
  auto dir = fresh_dir("csv");
  REQUIRE(run_cli("plane --p 2 --r 1 --kind galois --format csv", dir) == 0);
  std::istringstream in(slurp(dir / "incidence.csv"));
  std::string row;
  int rows = 0;
  while (std::getline(in, row)) {
    int cols = 0, ones = 0;
    for (char ch : row) {
      if (ch == '0' || ch == '1') ++cols;
      if (ch == '1') ++ones;
    }
    CHECK(cols == 28);
    CHECK(ones == 6); // q(q+1) lines through each point, dually points per line
    ++rows;
  }
  CHECK(rows == 28);
  fs::remove_all(dir);
}

TEST_CASE("neighbour graph DOT clusters the 7 classes of 4") {
  auto dir = fresh_dir("dot");
  REQUIRE(run_cli("plane --p 2 --r 1 --kind galois --format dot", dir) == 0);
  const std::string dot = slurp(dir / "neighbours.dot");
  for (int c = 0; c < 7; ++c)
    CHECK(dot.find("subgraph cluster_" + std::to_string(c)) != std::string::npos);
  CHECK(dot.find("subgraph cluster_7") == std::string::npos);
  size_t edges = 0, at = 0;
  while ((at = dot.find(" -- ", at)) != std::string::npos) {
    ++edges;
    at += 4;
  }
  CHECK(edges == 7 * 6); // K4 per class
  fs::remove_all(dir);
}

TEST_CASE("export writes the full artifact set") {
  auto dir = fresh_dir("export");
  REQUIRE(run_cli("export --p 2 --r 1 --kind galois", dir) == 0);
  for (const char* name : {"ring.json", "plane.json", "incidence.csv", "neighbours.dot"})
    CHECK(fs::exists(dir / name));
  fs::remove_all(dir);
}

TEST_CASE("library serialization is reproducible across separately built objects") {
  auto a = Plane::enumerate(Ring::galois(2, 1));
  auto b = Plane::enumerate(Ring::galois(2, 1));
  CHECK(plane_json(*a) == plane_json(*b));
  CHECK(mub_json(build_mub_set(3, 1)) == mub_json(build_mub_set(3, 1)));
}

TEST_CASE("certificate artifact carries the five named checks") {
  auto dir = fresh_dir("cert");
  REQUIRE(run_cli("correspond --p 2 --r 1", dir) == 0);
  auto j = nlohmann::json::parse(slurp(dir / "certificate.json"));
  CHECK(j["schema"] == "hjelm.correspondence");
  CHECK(j["all_pass"] == true);
  REQUIRE(j["checks"].size() == 5);
  const std::vector<std::string> names{
      "basis_count_matches_class_count", "vector_count_matches_class_size",
      "orthogonal_maps_to_neighbour", "unbiased_maps_to_remote", "modulo_p_collapse"};
  for (size_t i = 0; i < names.size(); ++i) {
    CHECK(j["checks"][i]["name"] == names[i]);
    CHECK(j["checks"][i]["pass"] == true);
  }
  CHECK(j["bijections"]["basis_to_class"].size() == 3);
  fs::remove_all(dir);
}

TEST_CASE("domain and config failures map to exit codes 1 and 2") {
  auto dir = fresh_dir("codes");
  CHECK(run_cli("ring --p 6 --r 1", dir) != 0);
  const int domain = WEXITSTATUS(run_cli("ring --p 6 --r 1", dir));
  CHECK(domain == 1);
  const int config = WEXITSTATUS(run_cli("plane --p 2 --r 1 --kind bogus", dir));
  CHECK(config == 2);
  fs::remove_all(dir);
}
