#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qcgeo/scene.hpp"

using namespace qcgeo;

#ifndef QCGEO_SCENE_DIR
#define QCGEO_SCENE_DIR "scenes"
#endif

TEST_CASE("example scenes parse and validate") {
  const Scene two = load_scene(std::string(QCGEO_SCENE_DIR) + "/two_disk_group.json");
  CHECK(two.disk_ids.size() == 2);
  CHECK(two.seed.has_value());

  const Scene narrow = load_scene(std::string(QCGEO_SCENE_DIR) + "/narrow_passage.json");
  REQUIRE(narrow.family.has_value());
  const FamilySpec fam = narrow.build_family();
  CHECK(fam.obstacles.size() == 2);
  CHECK(std::holds_alternative<ContinuumSample>(fam.e));

  const Scene loops = load_scene(std::string(QCGEO_SCENE_DIR) + "/three_loop_domain.json");
  CHECK(loops.loop_ids.size() == 3);
  for (const auto& id : loops.loop_ids) {
    CHECK(loops.loops.at(id).circularity_residual() < 0.3);
    CHECK(loops.loops.at(id).circularity_residual() > 0.0);
  }
}

TEST_CASE("schema violations name the offending field") {
  CHECK_THROWS_WITH_AS(parse_scene("{}"), "scene: missing 'version'", error);
  CHECK_THROWS_AS(parse_scene("{\"version\":1, \"metric\":\"flat\"}"), error);
  CHECK_THROWS_AS(parse_scene("not json"), error);
  // family references must resolve
  const char* bad_ref = R"({
    "version": 1,
    "continua": [{"id": "E", "kind": "segment", "a": [0,0], "b": [1,0]}],
    "family": {"e": "E", "f": "MISSING"}
  })";
  CHECK_THROWS_AS(parse_scene(bad_ref), error);
  // duplicate ids rejected
  const char* dup = R"({
    "version": 1,
    "disks": [
      {"id": "K", "center": [0,0], "radius": 1},
      {"id": "K", "center": [3,0], "radius": 1}
    ]
  })";
  CHECK_THROWS_AS(parse_scene(dup), error);
}

TEST_CASE("csv output is byte-deterministic") {
  const std::vector<std::string> header{"a", "b"};
  const std::vector<std::vector<double>> rows{{1.0 / 3.0, 2.5e-17}, {-0.1, 7.0}};
  const std::string s1 = csv_to_string(header, rows);
  const std::string s2 = csv_to_string(header, rows);
  CHECK(s1 == s2);
  // full-precision round trip
  CHECK(s1.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("perturbed loops are reproducible from the seed") {
  const char* text = R"({
    "version": 1,
    "loops": [{"id": "L", "center": [0,0], "radius": 1.0, "perturb": 0.05, "harmonics": 6, "seed": 9}]
  })";
  const Scene s1 = parse_scene(text);
  const Scene s2 = parse_scene(text);
  const auto& l1 = s1.loops.at("L");
  const auto& l2 = s2.loops.at("L");
  REQUIRE(l1.cos_coef.size() == l2.cos_coef.size());
  for (std::size_t i = 0; i < l1.cos_coef.size(); ++i) {
    CHECK(l1.cos_coef[i] == l2.cos_coef[i]);
  }
}

TEST_CASE("manifest and csv files are written") {
  const std::string dir = "scene_cli_tmp";
  std::filesystem::create_directories(dir);
  write_csv(dir + "/t.csv", {"x"}, {{1.5}});
  write_manifest(dir + "/m.json", "verify subannulus", "none", 7, {{"trials", "10"}});
  std::ifstream csv(dir + "/t.csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line == "x");
  std::ifstream mf(dir + "/m.json");
  std::string all((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
  CHECK(all.find("\"seed\": 7") != std::string::npos);
  CHECK(all.find("verify subannulus") != std::string::npos);
}
