// Command-line workbench: scene-driven renders, modulus solves, circle-domain
// uniformization, exhaustion stages, and the randomized verification suites.

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qcgeo/exhaustion.hpp"
#include "qcgeo/koebe.hpp"
#include "qcgeo/scene.hpp"
#include "qcgeo/schottky_group.hpp"
#include "qcgeo/suites.hpp"
#include "qcgeo/svg.hpp"

namespace fs = std::filesystem;
using namespace qcgeo;

namespace {

struct CommonArgs {
  std::string scene_path;
  std::string out_dir = "qcgeo_out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 1000;
  int depth = 6;
  int grid = 0;
  double tol = 0.0;
  std::string metric;
};

Scene load(const CommonArgs& args) {
  if (args.scene_path.empty()) throw error("missing --scene");
  Scene s = load_scene(args.scene_path);
  if (args.seed_set) s.seed = args.seed;
  if (args.grid > 0) {
    s.grid.nx = args.grid;
    s.grid.ny = args.grid;
  }
  if (args.tol > 0.0) s.tol = args.tol;
  if (!args.metric.empty()) {
    s.metric = args.metric == "spherical" ? Metric::spherical : Metric::euclidean;
    s.grid.metric = s.metric;
  }
  return s;
}

std::uint64_t require_seed(const Scene& s, const CommonArgs& args) {
  if (args.seed_set) return args.seed;
  if (s.seed) return *s.seed;
  throw error("randomized run needs a seed (scene 'seed' field or --seed)");
}

void ensure_dir(const std::string& d) { fs::create_directories(d); }

int cmd_orbit(const CommonArgs& args) {
  const Scene s = load(args);
  std::vector<DiskRegion> disks;
  for (const auto& id : s.disk_ids) disks.push_back(s.disks.at(id));
  SchottkyConfig cfg(disks);
  const auto orbit = orbit_disks(cfg, args.depth);
  ensure_dir(args.out_dir);

  SvgCanvas svg(s.grid.x0, s.grid.x1, s.grid.y0, s.grid.y1);
  std::vector<std::vector<double>> rows;
  static const char* palette[] = {"#14406e", "#9e2f2f", "#2c6e3f", "#8a6d1a", "#5b3a8a", "#333333"};
  for (const auto& od : orbit) {
    const auto& b = od.disk.boundary();
    if (b.kind() == GeneralizedCircle::Kind::circle) {
      svg.circle(b.center(), b.radius(), palette[od.depth % 6], od.depth == 0 ? 2.0 : 1.0);
      rows.push_back({static_cast<double>(od.depth), static_cast<double>(od.generator),
                      b.center().real(), b.center().imag(), b.radius()});
    }
  }
  if (cfg.generator_count() == 2) {
    const auto lim = limit_set_two(cfg);
    svg.dot(lim.p1.value, 3.0, "#000000");
    svg.dot(lim.p2.value, 3.0, "#000000");
    std::printf("limit points: (%.12g, %.12g) and (%.12g, %.12g), diameter bound %.3g\n",
                lim.p1.value.real(), lim.p1.value.imag(), lim.p2.value.real(),
                lim.p2.value.imag(), lim.diameter_bound);
  }
  svg.save(args.out_dir + "/orbit.svg");
  write_csv(args.out_dir + "/orbit.csv", {"depth", "generator", "cx", "cy", "radius"}, rows);
  write_manifest(args.out_dir + "/manifest.json", "orbit", args.scene_path, s.seed.value_or(0),
                 {{"depth", std::to_string(args.depth)}});
  std::printf("orbit: %zu disks to depth %d -> %s\n", orbit.size(), args.depth,
              args.out_dir.c_str());
  return 0;
}

int cmd_modulus(const CommonArgs& args) {
  const Scene s = load(args);
  const Grid grid(s.grid);
  const FamilySpec fam = s.build_family();
  ModulusOptions opt;
  if (s.tol > 0) opt.admissibility_tol = s.tol;
  const ModulusResult classical = classical_modulus(grid, fam, opt);
  const ModulusResult trans = transboundary_modulus(grid, fam, opt);
  ensure_dir(args.out_dir);

  std::vector<std::vector<double>> density_rows;
  for (int iy = 0; iy < grid.ny(); ++iy) {
    std::vector<double> row;
    row.reserve(grid.nx());
    for (int ix = 0; ix < grid.nx(); ++ix) row.push_back(trans.cell_density[grid.index(ix, iy)]);
    density_rows.push_back(std::move(row));
  }
  std::vector<std::string> header;
  for (int ix = 0; ix < grid.nx(); ++ix) header.push_back("c" + std::to_string(ix));
  write_csv(args.out_dir + "/density.csv", header, density_rows);

  std::vector<std::vector<double>> report{
      {classical.modulus, classical.min_path_value, classical.raw_mass,
       classical.disconnected ? 1.0 : 0.0},
      {trans.modulus, trans.min_path_value, trans.raw_mass, trans.disconnected ? 1.0 : 0.0}};
  write_csv(args.out_dir + "/report.csv", {"modulus", "min_path", "mass", "disconnected"}, report);
  std::vector<std::vector<double>> weights;
  for (std::size_t i = 0; i < trans.obstacle_weight.size(); ++i) {
    weights.push_back({static_cast<double>(i), trans.obstacle_weight[i]});
  }
  write_csv(args.out_dir + "/weights.csv", {"obstacle", "weight"}, weights);
  write_manifest(args.out_dir + "/manifest.json", "modulus", args.scene_path, s.seed.value_or(0),
                 {{"grid", std::to_string(grid.nx())}});
  std::printf("classical modulus %.6g (min path %.4f)%s\n", classical.modulus,
              classical.min_path_value, classical.disconnected ? " [disconnected]" : "");
  std::printf("transboundary modulus %.6g (min path %.4f)\n", trans.modulus, trans.min_path_value);
  return 0;
}

int cmd_uniformize(const CommonArgs& args) {
  const Scene s = load(args);
  KoebeOptions opt;
  if (s.tol > 0) opt.tol = s.tol;
  UniformizationResult result = [&] {
    if (!s.loop_ids.empty()) {
      std::vector<AnalyticLoop> loops;
      for (const auto& id : s.loop_ids) loops.push_back(s.loops.at(id));
      return uniformize_loops(loops, opt);
    }
    std::vector<DiskRegion> disks;
    for (const auto& id : s.disk_ids) disks.push_back(s.disks.at(id));
    return uniformize_configuration(disks, args.depth, opt);
  }();
  ensure_dir(args.out_dir);

  std::vector<std::vector<double>> circle_rows;
  for (const auto& c : result.circles) {
    circle_rows.push_back({c.center().real(), c.center().imag(), c.radius()});
  }
  write_csv(args.out_dir + "/circles.csv", {"cx", "cy", "radius"}, circle_rows);
  std::vector<std::vector<double>> trace;
  for (std::size_t i = 0; i < result.koebe.residual_trace.size(); ++i) {
    trace.push_back({static_cast<double>(i), result.koebe.residual_trace[i]});
  }
  write_csv(args.out_dir + "/residual_trace.csv", {"step", "residual"}, trace);
  std::vector<std::vector<double>> corr;
  for (std::size_t i = 0; i < result.koebe.boundary_start.size(); ++i) {
    for (std::size_t k = 0; k < result.koebe.boundary_start[i].size(); k += 8) {
      corr.push_back({static_cast<double>(i), result.koebe.boundary_start[i][k].real(),
                      result.koebe.boundary_start[i][k].imag(),
                      result.koebe.boundary_final[i][k].real(),
                      result.koebe.boundary_final[i][k].imag()});
    }
  }
  write_csv(args.out_dir + "/correspondence.csv", {"loop", "x", "y", "xp", "yp"}, corr);
  SvgCanvas svg(s.grid.x0, s.grid.x1, s.grid.y0, s.grid.y1);
  for (const auto& cloud : result.koebe.boundary_start) svg.polyline(cloud, "#9e2f2f", 1.0, true);
  for (const auto& c : result.circles) svg.circle(c.center(), c.radius(), "#14406e", 1.5);
  svg.save(args.out_dir + "/uniformize.svg");
  write_manifest(args.out_dir + "/manifest.json", "uniformize", args.scene_path,
                 s.seed.value_or(0), {{"tol", std::to_string(opt.tol)}});
  std::printf("uniformize: %s in %d steps, final residual %.3g, min gap %.4g, H^ = %.3f\n",
              result.koebe.converged ? "converged" : "NOT converged", result.koebe.steps,
              result.koebe.final_residual, result.min_gap, result.qs.h);
  return result.koebe.converged ? 0 : 3;
}

int cmd_exhaust(const CommonArgs& args) {
  const Scene s = load(args);
  std::vector<DiskRegion> disks;
  for (const auto& id : s.disk_ids) disks.push_back(s.disks.at(id));
  const ExhaustionStage stage = exhaust_tangent_disks(disks, args.depth);
  ensure_dir(args.out_dir);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < stage.regions.size(); ++i) {
    const auto& r = stage.regions[i];
    for (const auto& cap : r.caps) {
      rows.push_back({static_cast<double>(i), r.center.real(), r.center.imag(), r.radius,
                      cap.tangency.real(), cap.tangency.imag(), cap.sagitta});
    }
    if (r.caps.empty()) {
      rows.push_back({static_cast<double>(i), r.center.real(), r.center.imag(), r.radius, 0, 0, 0});
    }
  }
  write_csv(args.out_dir + "/regions.csv",
            {"region", "cx", "cy", "radius", "tx", "ty", "sagitta"}, rows);
  std::vector<std::vector<double>> chain_rows;
  for (const auto& chain : stage.chains) {
    for (const auto& f : chain.factors) {
      chain_rows.push_back({static_cast<double>(chain.i), static_cast<double>(chain.j),
                            f.role == "push" ? 0.0 : 1.0, f.bilip});
    }
  }
  write_csv(args.out_dir + "/chains.csv", {"i", "j", "kind", "bilip"}, chain_rows);
  SvgCanvas svg(s.grid.x0, s.grid.x1, s.grid.y0, s.grid.y1);
  for (const auto& r : stage.regions) svg.polyline(r.boundary_samples(24), "#14406e", 1.2, false);
  svg.save(args.out_dir + "/exhaust.svg");
  write_manifest(args.out_dir + "/manifest.json", "exhaust", args.scene_path, s.seed.value_or(0),
                 {{"stage", std::to_string(args.depth)}});
  std::printf("exhaust: stage %d, %zu regions, %zu pair chains -> %s\n", stage.stage,
              stage.regions.size(), stage.chains.size(), args.out_dir.c_str());
  return 0;
}

int cmd_verify(const std::string& suite, const CommonArgs& args) {
  ensure_dir(args.out_dir);
  const std::uint64_t seed = args.seed_set ? args.seed : 7;
  bool pass = false;
  std::map<std::string, std::string> extras{{"suite", suite}, {"trials", std::to_string(args.trials)}};

  if (suite == "subannulus") {
    const auto res = run_subannulus_suite(args.trials, seed);
    std::vector<std::vector<double>> rows;
    for (const auto& r : res.rows) {
      rows.push_back({r.w_a, r.w_selected, static_cast<double>(r.alternative),
                      static_cast<double>(r.exception_index), r.ok ? 1.0 : 0.0});
    }
    write_csv(args.out_dir + "/subannulus.csv",
              {"w_A", "w_selected", "alternative", "exception", "ok"}, rows);
    pass = res.violations == 0;
    std::printf("subannulus: %d/%d postcondition passes\n", res.trials - res.violations,
                res.trials);
  } else if (suite == "bigdisk") {
    const auto res = run_bigdisk_suite(1.0, args.trials, seed);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.widths.size(); ++i) {
      rows.push_back({res.widths[i], res.bounded_maxima[i], res.control_maxima[i]});
    }
    write_csv(args.out_dir + "/bigdisk.csv", {"width", "bounded_max", "control_max"}, rows);
    pass = res.bounded_slope <= 0.05 && res.control_slope > 1.0;
    std::printf("bigdisk: bounded slope %.4f (<= 0.05), control slope %.2f (> 1)\n",
                res.bounded_slope, res.control_slope);
  } else if (suite == "reflect-orbit") {
    const auto res = run_reflect_orbit_suite(args.trials, seed, std::min(args.trials, 200),
                                             args.depth);
    write_csv(args.out_dir + "/reflect_orbit.csv", {"alpha0", "beta0", "orbit_max"},
              {{res.alpha0.value, res.beta0.value, res.orbit_max}});
    pass = res.orbit_within_beta0 && res.alpha0.value > 0 && res.beta0.value > 0;
    std::printf("reflect-orbit: alpha0 %.4f, beta0 %.4f, orbit max %.4f (%d configs)\n",
                res.alpha0.value, res.beta0.value, res.orbit_max, res.orbit_trials);
  } else if (suite == "compare") {
    const int grid_n = args.grid > 0 ? args.grid : 96;
    const auto res = run_compare_suite(std::min(args.trials, 100), seed, grid_n, 1.0 / kPi);
    std::vector<std::vector<double>> rows;
    for (double r : res.ratios) rows.push_back({r});
    write_csv(args.out_dir + "/compare.csv", {"ratio"}, rows);
    pass = res.max_ratio < HUGE_VAL && res.configs > 0;
    std::printf("compare: %d configs, empirical c(tau) = %.4f\n", res.configs, res.max_ratio);
  } else if (suite == "loewner") {
    const int grid_n = args.grid > 0 ? args.grid : 96;
    const auto res = run_loewner_suite(std::max(1, args.trials / 4), seed, grid_n);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.deltas.size(); ++i) {
      rows.push_back({res.deltas[i], res.min_modulus[i]});
    }
    write_csv(args.out_dir + "/loewner.csv", {"delta", "min_modulus"}, rows);
    pass = res.profile_positive && res.profile.monotone();
    std::printf("loewner: profile %s and positive over deltas 0.5..4\n",
                res.profile.monotone() ? "monotone" : "NOT monotone");
  } else if (suite == "upper-density") {
    const auto res = run_upper_density_suite(std::max(2, args.trials / 100), 200, seed);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.widths.size(); ++i) {
      rows.push_back({res.widths[i], res.worst_residual[i], res.fitted_c[i]});
    }
    write_csv(args.out_dir + "/upper_density.csv", {"width", "worst_residual", "fitted_c"}, rows);
    const double worst =
        *std::min_element(res.worst_residual.begin(), res.worst_residual.end());
    pass = worst >= 1.0 - 1e-3 && res.c_spread < 0.25 && res.obstacle_free_margin >= 0.0;
    std::printf("upper-density: worst residual %.6f, c spread %.1f%%, free margin %.4g\n", worst,
                100 * res.c_spread, res.obstacle_free_margin);
  } else if (suite == "bilip") {
    const auto res = run_bilip_suite(args.trials, seed);
    write_csv(args.out_dir + "/bilip.csv", {"worst_seam", "lhat_spread"},
              {{res.worst_seam, res.lhat_spread}});
    pass = res.worst_seam < 1e-9 && res.identity_outside_exact && res.jacobian_bounds_ok &&
           res.lhat_spread <= 0.10;
    std::printf("bilip: seam %.2e, identity %s, jacobians %s, L^ spread %.1f%%\n", res.worst_seam,
                res.identity_outside_exact ? "exact" : "BROKEN",
                res.jacobian_bounds_ok ? "in bounds" : "OUT OF BOUNDS", 100 * res.lhat_spread);
  } else if (suite == "qs") {
    const auto res = run_qs_suite(seed);
    write_csv(args.out_dir + "/qs.csv", {"moebius_h", "moebius_h_doubled", "koebe_h", "koebe_h2"},
              {{res.moebius_h_small, res.moebius_h_big, res.koebe_h, res.koebe_h_doubled}});
    pass = res.stable && std::isfinite(res.moebius_h_small) && std::isfinite(res.koebe_h);
    std::printf("qs: Moebius H %.3f/%.3f, circle-domain H %.3f/%.3f (%s)\n", res.moebius_h_small,
                res.moebius_h_big, res.koebe_h, res.koebe_h_doubled,
                res.stable ? "stable" : "UNSTABLE");
  } else {
    throw error("unknown verify suite '" + suite + "'");
  }

  write_manifest(args.out_dir + "/manifest.json", "verify " + suite, args.scene_path, seed, extras);
  std::printf("%s: %s\n", suite.c_str(), pass ? "PASS" : "FAIL");
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal and quasiconformal geometry workbench"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scene", args.scene_path, "scene JSON path");
    cmd->add_option("--out-dir", args.out_dir, "artifact directory");
    cmd->add_option("--seed", args.seed, "RNG seed")->each([&](const std::string&) {
      args.seed_set = true;
    });
    cmd->add_option("--trials", args.trials, "trial count");
    cmd->add_option("--depth", args.depth, "orbit depth / exhaustion stage");
    cmd->add_option("--grid", args.grid, "grid resolution override");
    cmd->add_option("--tol", args.tol, "tolerance override");
    cmd->add_option("--metric", args.metric, "euclidean | spherical");
  };

  auto* orbit = app.add_subcommand("orbit", "render a reflection-group orbit");
  add_common(orbit);
  auto* modulus = app.add_subcommand("modulus", "classical/transboundary modulus solve");
  add_common(modulus);
  auto* uniformize = app.add_subcommand("uniformize", "circle-domain uniformization pipeline");
  add_common(uniformize);
  auto* exhaust = app.add_subcommand("exhaust", "tangency exhaustion stage outputs");
  add_common(exhaust);
  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  std::string suite;
  verify->add_option("suite", suite,
                     "subannulus | bigdisk | reflect-orbit | compare | loewner | upper-density | "
                     "bilip | qs")
      ->required();
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbit->parsed()) return cmd_orbit(args);
    if (modulus->parsed()) return cmd_modulus(args);
    if (uniformize->parsed()) return cmd_uniformize(args);
    if (exhaust->parsed()) return cmd_exhaust(args);
    if (verify->parsed()) return cmd_verify(suite, args);
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
