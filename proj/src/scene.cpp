#include "qcgeo/scene.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcgeo/rng.hpp"

namespace qcgeo {

using nlohmann::json;

namespace {

Complex parse_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw error("scene: " + what + " must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

ContinuumSample parse_continuum(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.value("samples", 64);
  if (kind == "segment") {
    return make_segment(parse_complex(j.at("a"), "segment endpoint"),
                        parse_complex(j.at("b"), "segment endpoint"), n);
  }
  if (kind == "circle") {
    return make_circle_loop(parse_complex(j.at("center"), "circle center"),
                            j.at("radius").get<double>(), n);
  }
  if (kind == "arc") {
    return make_arc(parse_complex(j.at("center"), "arc center"), j.at("radius").get<double>(),
                    j.at("t0").get<double>(), j.at("t1").get<double>(), n);
  }
  throw error("scene: unknown continuum kind '" + kind + "'");
}

AnalyticLoop parse_loop(const json& j, Metric) {
  AnalyticLoop loop;
  loop.center = parse_complex(j.at("center"), "loop center");
  const double r0 = j.at("radius").get<double>();
  loop.cos_coef = {r0};
  loop.sin_coef = {0.0};
  if (j.contains("cos")) {
    for (const auto& v : j.at("cos")) loop.cos_coef.push_back(v.get<double>());
    loop.sin_coef.resize(loop.cos_coef.size(), 0.0);
  }
  if (j.contains("sin")) {
    std::size_t k = 1;
    for (const auto& v : j.at("sin")) {
      if (k >= loop.sin_coef.size()) loop.sin_coef.resize(k + 1, 0.0);
      loop.sin_coef[k++] = v.get<double>();
    }
    loop.cos_coef.resize(std::max(loop.cos_coef.size(), loop.sin_coef.size()), 0.0);
  }
  if (j.contains("perturb")) {
    // random Fourier perturbation, relative to the base radius
    const double amp = j.at("perturb").get<double>() * r0;
    const int harmonics = j.value("harmonics", 6);
    Rng rng(j.value("seed", 1));
    loop.cos_coef.resize(harmonics + 1, 0.0);
    loop.sin_coef.resize(harmonics + 1, 0.0);
    for (int k = 2; k <= harmonics; ++k) {
      loop.cos_coef[k] += amp * rng.uniform(-1.0, 1.0) / k;
      loop.sin_coef[k] += amp * rng.uniform(-1.0, 1.0) / k;
    }
  }
  if (!(loop.min_radius() > 0.0)) throw error("scene: loop radius must stay positive");
  return loop;
}

}  // namespace

SphereSet Scene::lookup_set(const std::string& id) const {
  if (disks.count(id)) return SphereSet(disks.at(id));
  if (continua.count(id)) return SphereSet(continua.at(id));
  throw error("scene: undefined reference '" + id + "'");
}

FamilySpec Scene::build_family() const {
  if (!family) throw error("scene: no family declared");
  FamilySpec fam;
  fam.e = lookup_set(family->e_id);
  fam.f = lookup_set(family->f_id);
  for (const auto& id : family->obstacle_ids) fam.obstacles.push_back(lookup_set(id));
  if (!family->domain.empty()) {
    const auto colon = family->domain.find(':');
    if (colon == std::string::npos || family->domain.substr(0, colon) != "annulus") {
      throw error("scene: unsupported domain spec '" + family->domain + "'");
    }
    const std::string id = family->domain.substr(colon + 1);
    if (!annuli.count(id)) throw error("scene: undefined annulus '" + id + "'");
    fam.domain = annulus_family(annuli.at(id)).domain;
  }
  return fam;
}

Scene parse_scene(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw error(std::string("scene: invalid JSON: ") + e.what());
  }
  Scene s;
  if (!j.contains("version")) throw error("scene: missing 'version'");
  s.version = j.at("version").get<int>();
  const std::string metric = j.value("metric", "euclidean");
  if (metric == "euclidean") {
    s.metric = Metric::euclidean;
  } else if (metric == "spherical") {
    s.metric = Metric::spherical;
  } else {
    throw error("scene: metric must be euclidean or spherical");
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    s.grid.x0 = g.at("x0").get<double>();
    s.grid.x1 = g.at("x1").get<double>();
    s.grid.y0 = g.at("y0").get<double>();
    s.grid.y1 = g.at("y1").get<double>();
    s.grid.nx = g.value("n", 128);
    s.grid.ny = g.value("ny", s.grid.nx);
  }
  s.grid.metric = s.metric;
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  s.tol = j.value("tol", 1e-3);

  if (j.contains("disks")) {
    for (const auto& d : j.at("disks")) {
      const std::string id = d.at("id").get<std::string>();
      const Complex c = parse_complex(d.at("center"), "disk center");
      const double r = d.at("radius").get<double>();
      if (s.disks.count(id)) throw error("scene: duplicate id '" + id + "'");
      s.disk_ids.push_back(id);
      s.disks.emplace(id, DiskRegion::disk(c, r));
    }
  }
  if (j.contains("loops")) {
    int k = 0;
    for (const auto& l : j.at("loops")) {
      const std::string id = l.value("id", "loop" + std::to_string(k++));
      s.loop_ids.push_back(id);
      s.loops.emplace(id, parse_loop(l, s.metric));
    }
  }
  if (j.contains("continua")) {
    for (const auto& c : j.at("continua")) {
      const std::string id = c.at("id").get<std::string>();
      if (s.continua.count(id)) throw error("scene: duplicate id '" + id + "'");
      s.continuum_ids.push_back(id);
      s.continua.emplace(id, parse_continuum(c));
    }
  }
  if (j.contains("annuli")) {
    int k = 0;
    for (const auto& a : j.at("annuli")) {
      const std::string id = a.value("id", "annulus" + std::to_string(k++));
      const Complex c = a.contains("center") ? parse_complex(a.at("center"), "annulus center")
                                             : Complex(0, 0);
      s.annulus_ids.push_back(id);
      s.annuli.emplace(id, Annulus(ExtendedPoint(c), a.at("r").get<double>(),
                                   a.at("R").get<double>(), s.metric));
    }
  }
  if (j.contains("family")) {
    const auto& f = j.at("family");
    Scene::Family fam;
    fam.e_id = f.at("e").get<std::string>();
    fam.f_id = f.at("f").get<std::string>();
    if (f.contains("obstacles")) {
      for (const auto& o : f.at("obstacles")) fam.obstacle_ids.push_back(o.get<std::string>());
    }
    fam.domain = f.value("domain", "");
    s.family = fam;
    // validate references now so failures name the missing id
    s.build_family();
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("scene: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += header[i];
    out += (i + 1 == header.size()) ? '\n' : ',';
  }
  char buf[64];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out += buf;
      out += (i + 1 == row.size()) ? '\n' : ',';
    }
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << csv_to_string(header, rows);
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::string& scene_path, std::uint64_t seed,
                    const std::map<std::string, std::string>& extras) {
  json j;
  j["tool"] = "qcgeo";
  j["format_version"] = 1;
  j["command"] = command;
  j["scene"] = scene_path;
  j["seed"] = seed;
  for (const auto& [k, v] : extras) j[k] = v;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace qcgeo
