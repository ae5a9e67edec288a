#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcgeo/annulus.hpp"
#include "qcgeo/circle.hpp"
#include "qcgeo/continuum.hpp"
#include "qcgeo/grid.hpp"
#include "qcgeo/loop.hpp"

namespace qcgeo {

// A scene document: named geometry plus solver settings. See
// scenes/*.json for examples of the schema.
struct Scene {
  int version = 1;
  Metric metric = Metric::euclidean;
  GridSpec grid;
  std::optional<std::uint64_t> seed;
  double tol = 1e-3;

  std::vector<std::string> disk_ids;
  std::map<std::string, DiskRegion> disks;
  std::vector<std::string> loop_ids;
  std::map<std::string, AnalyticLoop> loops;
  std::vector<std::string> continuum_ids;
  std::map<std::string, ContinuumSample> continua;
  std::vector<std::string> annulus_ids;
  std::map<std::string, Annulus> annuli;

  struct Family {
    std::string e_id, f_id;
    std::vector<std::string> obstacle_ids;
    std::string domain;  // "", or "annulus:<id>"
  };
  std::optional<Family> family;

  SphereSet lookup_set(const std::string& id) const;
  FamilySpec build_family() const;
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);

// Full-precision CSV writer: identical inputs produce identical bytes.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows);

// Run manifest: everything needed to reproduce a report.
void write_manifest(const std::string& path, const std::string& command,
                    const std::string& scene_path, std::uint64_t seed,
                    const std::map<std::string, std::string>& extras);

}  // namespace qcgeo
