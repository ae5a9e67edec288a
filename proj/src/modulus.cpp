#include "qcgeo/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

#include "qcgeo/fatness.hpp"
#include "qcgeo/moebius.hpp"
#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

double set_set_distance(const SphereSet& a, const SphereSet& b, Metric metric) {
  // sample-based distance between two sets
  auto samples = [&](const SphereSet& s) {
    std::vector<Complex> pts;
    if (std::holds_alternative<DiskRegion>(s)) {
      const auto& d = std::get<DiskRegion>(s);
      if (d.boundary().kind() == GeneralizedCircle::Kind::circle) {
        for (int i = 0; i < 64; ++i) pts.push_back(d.boundary().boundary_point(2 * kPi * i / 64).value);
      } else {
        for (int i = -16; i <= 16; ++i) pts.push_back(d.boundary().boundary_point(i * 0.25).value);
      }
    } else {
      for (const auto& p : std::get<ContinuumSample>(s).points) {
        if (!p.at_infinity) pts.push_back(p.value);
      }
    }
    return pts;
  };
  double best = HUGE_VAL;
  for (const auto& p : samples(a)) best = std::fmin(best, dist_to_set(b, p, metric));
  for (const auto& p : samples(b)) best = std::fmin(best, dist_to_set(a, p, metric));
  return best;
}

struct Constraint {
  std::vector<int> cell_idx;
  std::vector<double> cell_coef;
  std::vector<double> cell_upd;  // coef / (2 area)
  std::vector<int> obs_idx;
  std::vector<double> obs_coef;
  double mjj = 0.0;
  double lambda = 0.0;
  int slack_rounds = 0;
  std::uint64_t hash = 0;
};

std::uint64_t hash_path(const std::vector<int>& nodes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : nodes) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

GridGraph::GridGraph(const Grid& grid, const FamilySpec& fam, bool crossable_obstacles,
                     int connectivity)
    : grid_(&grid), ncells_(grid.cell_count()) {
  if (connectivity != 4 && connectivity != 8 && connectivity != 16) {
    throw error("connectivity must be 4, 8 or 16");
  }
  const Metric metric = grid.spec().metric;
  const double cell = std::fmax(grid.spec().hx(), grid.spec().hy());
  const double efd = set_set_distance(fam.e, fam.f, metric);
  if (efd <= 0.0) throw error("infinite modulus: E and F touch");
  const double chart_gap = set_set_distance(fam.e, fam.f, Metric::euclidean);
  if (chart_gap <= cell) throw error("family degenerate for this grid: dist(E,F) within one cell");
  classify_cells(fam, crossable_obstacles);
  build_edges(fam, connectivity);
}

void GridGraph::classify_cells(const FamilySpec& fam, bool crossable) {
  nobs_ = static_cast<int>(fam.obstacles.size());
  state_.assign(ncells_, 0);
  const auto& spec = grid_->spec();
  const double hx = spec.hx(), hy = spec.hy();
  for (int c = 0; c < ncells_; ++c) {
    const Complex z = grid_->center(c);
    if (fam.domain && !fam.domain(z)) {
      state_[c] = 1;
      continue;
    }
    const int ix = c % spec.nx, iy = c / spec.nx;
    const double x0 = spec.x0 + ix * hx, y0 = spec.y0 + iy * hy;
    for (int k = 0; k < nobs_; ++k) {
      const bool inside = std::holds_alternative<DiskRegion>(fam.obstacles[k])
                              ? set_contains_point(fam.obstacles[k], z)
                              : set_chart_box_dist(fam.obstacles[k], x0, x0 + hx, y0, y0 + hy) == 0.0;
      if (inside) {
        if (state_[c] >= 2) throw error("obstacles must be pairwise disjoint");
        state_[c] = k + 2;
      }
    }
    if (!crossable && state_[c] >= 2) state_[c] = 1;  // classical: obstacles are holes
  }
  if (!crossable) nobs_ = 0;
}

void GridGraph::build_edges(const FamilySpec& fam, int connectivity) {
  const auto& spec = grid_->spec();
  const double hx = spec.hx(), hy = spec.hy();
  const int nx = spec.nx, ny = spec.ny;
  adj_.assign(node_count(), {});

  auto cell_node = [&](int c) -> int {
    if (state_[c] == 0) return c;
    if (state_[c] >= 2) return ncells_ + (state_[c] - 2);
    return -1;  // removed
  };
  // parallel edges into obstacle nodes: keep the cheapest representative so
  // shortest-path values and path constraints agree
  std::unordered_map<std::uint64_t, int> obstacle_pair_edge;
  auto pair_key = [](int u, int v) {
    const std::uint64_t a = static_cast<std::uint64_t>(std::min(u, v));
    const std::uint64_t b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
  };
  auto coef_total = [](const Edge& e) {
    double s = 0.0;
    for (int k = 0; k < e.ncell; ++k) s += e.coefs[k];
    return s;
  };
  auto add_edge = [&](Edge e) {
    if (e.u >= ncells_ || e.v >= ncells_) {
      const std::uint64_t key = pair_key(e.u, e.v);
      const auto it = obstacle_pair_edge.find(key);
      if (it != obstacle_pair_edge.end()) {
        if (coef_total(e) < coef_total(edges_[it->second])) edges_[it->second] = e;
        return;
      }
      obstacle_pair_edge.emplace(key, static_cast<int>(edges_.size()));
    }
    const int id = static_cast<int>(edges_.size());
    edges_.push_back(e);
    adj_[e.u].push_back(id);
    adj_[e.v].push_back(id);
  };

  struct Step {
    int dx, dy;
  };
  std::vector<Step> steps{{1, 0}, {0, 1}};
  if (connectivity >= 8) {
    steps.push_back({1, 1});
    steps.push_back({1, -1});
  }
  if (connectivity == 16) {
    steps.push_back({2, 1});
    steps.push_back({1, 2});
    steps.push_back({2, -1});
    steps.push_back({1, -2});
  }

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int a = iy * nx + ix;
      if (state_[a] == 1) continue;
      for (const auto& s : steps) {
        const int jx = ix + s.dx, jy = iy + s.dy;
        if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
        const int b = jy * nx + jx;
        if (state_[b] == 1) continue;
        const int na = cell_node(a), nb = cell_node(b);
        if (na == nb) continue;  // same obstacle component
        const double len = std::hypot(s.dx * hx, s.dy * hy);
        Edge e;
        e.u = na;
        e.v = nb;
        e.len = len;
        const bool knight = std::abs(s.dx) + std::abs(s.dy) == 3;
        if (knight) {
          int m1, m2;
          if (std::abs(s.dx) == 2) {
            m1 = iy * nx + (ix + s.dx / 2);
            m2 = (iy + s.dy) * nx + (ix + s.dx / 2);
          } else {
            m1 = (iy + s.dy / 2) * nx + ix;
            m2 = (iy + s.dy / 2) * nx + (ix + s.dx);
          }
          if (state_[m1] != 0 || state_[m2] != 0) continue;  // need free middles
          const double q = 0.25 * len;
          e.cells[e.ncell] = m1;
          e.coefs[e.ncell++] = q * grid_->length_density(m1);
          e.cells[e.ncell] = m2;
          e.coefs[e.ncell++] = q * grid_->length_density(m2);
          for (int cidx : {a, b}) {
            if (state_[cidx] == 0) {
              e.cells[e.ncell] = cidx;
              e.coefs[e.ncell++] = q * grid_->length_density(cidx);
            } else {
              e.obs[e.nobs] = state_[cidx] - 2;
              e.obs_coef[e.nobs++] = 0.5;
            }
          }
        } else {
          if (std::abs(s.dx) == 1 && std::abs(s.dy) == 1) {
            const int s1 = iy * nx + (ix + s.dx);
            const int s2 = (iy + s.dy) * nx + ix;
            if (state_[s1] != 0 && state_[s2] != 0) continue;  // pinched corner
          }
          const double half = 0.5 * len;
          for (int cidx : {a, b}) {
            if (state_[cidx] == 0) {
              e.cells[e.ncell] = cidx;
              e.coefs[e.ncell++] = half * grid_->length_density(cidx);
            } else {
              e.obs[e.nobs] = state_[cidx] - 2;
              e.obs_coef[e.nobs++] = 0.5;
            }
          }
        }
        add_edge(e);
      }
    }
  }

  // terminal edges
  const Metric metric = spec.metric;
  bool e_touch = false, f_touch = false;
  for (int c = 0; c < ncells_; ++c) {
    if (state_[c] == 1) continue;
    const int ix = c % nx, iy = c / nx;
    const double x0 = spec.x0 + ix * hx, y0 = spec.y0 + iy * hy;
    for (int which = 0; which < 2; ++which) {
      const SphereSet& target = which == 0 ? fam.e : fam.f;
      // boxes assembled from sums of hx wobble by a few ulp at the far edge
      const double touch_tol = 1e-9 * (hx + hy);
      if (set_chart_box_dist(target, x0, x0 + hx, y0, y0 + hy) > touch_tol) continue;
      Edge e;
      e.u = which == 0 ? e_node() : f_node();
      (which == 0 ? e_touch : f_touch) = true;
      if (state_[c] == 0) {
        e.v = c;
        e.cells[0] = c;
        e.coefs[0] = dist_to_set(target, grid_->center(c), metric);
        e.ncell = 1;
        e.len = std::fmax(hx, hy);
      } else {
        e.v = ncells_ + (state_[c] - 2);
        e.obs[0] = state_[c] - 2;
        e.obs_coef[0] = 0.5;
        e.nobs = 1;
      }
      // avoid duplicate terminal edges to the same obstacle node
      bool dup = false;
      for (int id : adj_[e.u]) {
        if ((edges_[id].u == e.u && edges_[id].v == e.v) ||
            (edges_[id].v == e.u && edges_[id].u == e.v)) {
          dup = e.v >= ncells_;
          if (dup) break;
        }
      }
      if (!dup) add_edge(e);
    }
  }
  if (!e_touch) throw error("E does not meet the grid");
  if (!f_touch) throw error("F does not meet the grid");
}

void GridGraph::shortest_tree(const std::vector<double>& rho_c, const std::vector<double>& rho_o,
                              std::vector<double>* dist, std::vector<int>* pred_edge) const {
  const int n = node_count();
  dist->assign(n, HUGE_VAL);
  pred_edge->assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  (*dist)[e_node()] = 0.0;
  heap.push({0.0, e_node()});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > (*dist)[u]) continue;
    if (u == f_node()) continue;  // paths must stop at F
    for (int id : adj_[u]) {
      const Edge& e = edges_[id];
      const int v = e.u == u ? e.v : e.u;
      if (v == e_node()) continue;
      const double w = edge_weight(e, rho_c, rho_o) + kTieBreak * e.len;
      if (d + w < (*dist)[v] - 1e-18) {
        (*dist)[v] = d + w;
        (*pred_edge)[v] = id;
        heap.push({d + w, v});
      }
    }
  }
}

std::vector<int> GridGraph::extract_path(const std::vector<int>& pred_edge, int endpoint) const {
  std::vector<int> nodes;
  int cur = endpoint;
  nodes.push_back(cur);
  while (cur != e_node()) {
    const int id = pred_edge[cur];
    if (id < 0) return {};
    const Edge& e = edges_[id];
    cur = e.u == cur ? e.v : e.u;
    nodes.push_back(cur);
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

double GridGraph::tie_break_slack() const {
  double total = 0.0;
  for (const auto& e : edges_) total = std::fmax(total, e.len);
  return kTieBreak * total * (ncells_ + nobs_ + 2);
}

int GridGraph::find_edge(int u, int v) const {
  for (int id : adj_[u]) {
    const Edge& e = edges_[id];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return id;
  }
  return -1;
}

PathConstraint GridGraph::constraint_for(const std::vector<int>& node_path,
                                         bool obstacle_once_total) const {
  std::unordered_map<int, double> cells;
  std::unordered_map<int, double> obs;
  for (std::size_t i = 0; i + 1 < node_path.size(); ++i) {
    const int id = find_edge(node_path[i], node_path[i + 1]);
    if (id < 0) throw error("path uses a nonexistent edge");
    const Edge& e = edges_[id];
    for (int k = 0; k < e.ncell; ++k) cells[e.cells[k]] += e.coefs[k];
    for (int k = 0; k < e.nobs; ++k) obs[e.obs[k]] += e.obs_coef[k];
  }
  PathConstraint c;
  for (const auto& [idx, coef] : cells) {
    c.cell_idx.push_back(idx);
    c.cell_coef.push_back(coef);
  }
  for (const auto& [idx, coef] : obs) {
    c.obs_idx.push_back(idx);
    c.obs_coef.push_back(obstacle_once_total ? std::fmin(coef, 1.0) : coef);
  }
  return c;
}

namespace {

ModulusResult solve(const Grid& grid, const FamilySpec& fam, const ModulusOptions& opt) {
  GridGraph g(grid, fam, opt.transboundary, opt.connectivity);
  const int ncells = g.cell_count();
  const int nobs = g.obstacle_count();

  std::vector<double> rho_c(ncells, 0.0), rho_o(nobs, 0.0);
  std::vector<Constraint> cons;
  std::unordered_set<std::uint64_t> seen;

  auto mass_of = [&]() {
    double m = 0.0;
    for (int c = 0; c < ncells; ++c) {
      if (rho_c[c] != 0.0) m += rho_c[c] * rho_c[c] * grid.area(c);
    }
    for (int k = 0; k < nobs; ++k) m += rho_o[k] * rho_o[k];
    return m;
  };

  auto add_constraint = [&](const std::vector<int>& nodes) -> bool {
    const std::uint64_t h = hash_path(nodes);
    if (seen.count(h)) return false;
    seen.insert(h);
    const PathConstraint pc = g.constraint_for(nodes);
    Constraint c;
    c.cell_idx = pc.cell_idx;
    c.cell_coef = pc.cell_coef;
    c.obs_idx = pc.obs_idx;
    c.obs_coef = pc.obs_coef;
    c.cell_upd.resize(c.cell_idx.size());
    double mjj = 0.0;
    for (std::size_t k = 0; k < c.cell_idx.size(); ++k) {
      const double a = grid.area(c.cell_idx[k]);
      c.cell_upd[k] = c.cell_coef[k] / (2.0 * a);
      mjj += c.cell_coef[k] * c.cell_coef[k] / (2.0 * a);
    }
    for (double oc : c.obs_coef) mjj += oc * oc / 2.0;
    if (mjj <= 0.0) return false;  // zero-length path cannot be satisfied
    c.mjj = mjj;
    c.hash = h;
    cons.push_back(std::move(c));
    return true;
  };

  auto cvalue = [&](const Constraint& c) {
    double v = 0.0;
    for (std::size_t k = 0; k < c.cell_idx.size(); ++k) v += c.cell_coef[k] * rho_c[c.cell_idx[k]];
    for (std::size_t k = 0; k < c.obs_idx.size(); ++k) v += c.obs_coef[k] * rho_o[c.obs_idx[k]];
    return v;
  };
  auto apply_delta = [&](Constraint& c, double delta) {
    c.lambda += delta;
    for (std::size_t k = 0; k < c.cell_idx.size(); ++k) rho_c[c.cell_idx[k]] += delta * c.cell_upd[k];
    for (std::size_t k = 0; k < c.obs_idx.size(); ++k) rho_o[c.obs_idx[k]] += delta * c.obs_coef[k] / 2.0;
  };

  ModulusResult res;
  std::vector<double> dist;
  std::vector<int> pred;
  std::vector<double> mass_history;
  const double tie_slack = g.tie_break_slack();
  double lmin = 0.0;

  for (int round = 0; round < opt.max_rounds; ++round) {
    res.rounds = round + 1;
    g.shortest_tree(rho_c, rho_o, &dist, &pred);
    lmin = std::fmax(0.0, dist[g.f_node()] - tie_slack);
    if (!std::isfinite(lmin)) {
      res.disconnected = true;
      res.modulus = 0.0;
      res.raw_mass = 0.0;
      res.cell_density.assign(ncells, 0.0);
      res.obstacle_weight.assign(nobs, 0.0);
      return res;
    }

    // batch of violated paths: one candidate per F-incident entry node
    const double violation_threshold = 1.0 - 0.5 * opt.admissibility_tol;
    struct Cand {
      double value;
      int node;
    };
    std::vector<Cand> cands;
    for (int id : g.adjacency(g.f_node())) {
      const auto& e = g.edges()[id];
      const int u = e.u == g.f_node() ? e.v : e.u;
      if (!std::isfinite(dist[u])) continue;
      const double v = dist[u] + g.edge_weight(e, rho_c, rho_o);
      if (v < violation_threshold) cands.push_back({v, u});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.value != b.value ? a.value < b.value : a.node < b.node;
    });
    int added = 0;
    for (const auto& cand : cands) {
      if (added >= opt.batch_size) break;
      std::vector<int> nodes = g.extract_path(pred, cand.node);
      if (nodes.empty()) continue;
      nodes.push_back(g.f_node());
      if (add_constraint(nodes)) added++;
    }

    // dual coordinate ascent (Hildreth) over the active set
    for (int sweep = 0; sweep < opt.max_sweeps_per_round; ++sweep) {
      double worst = 0.0;
      for (auto& c : cons) {
        const double v = cvalue(c);
        double delta = (1.0 - v) / c.mjj;
        if (delta < -c.lambda) delta = -c.lambda;
        if (delta != 0.0) apply_delta(c, delta);
        worst = std::fmax(worst, std::abs(delta) * c.mjj);
      }
      if (worst < opt.dual_tol) break;
    }

    // prune constraints that stay slack and inactive (they may come back)
    for (auto& c : cons) {
      const bool slack = c.lambda == 0.0 && cvalue(c) > 1.0 + 1e-3;
      c.slack_rounds = slack ? c.slack_rounds + 1 : 0;
    }
    for (const auto& c : cons) {
      if (c.slack_rounds >= 4) seen.erase(c.hash);
    }
    cons.erase(std::remove_if(cons.begin(), cons.end(),
                              [](const Constraint& c) { return c.slack_rounds >= 4; }),
               cons.end());

    // hard memory cap: release the weakest multipliers (rho stays dual
    // feasible) and let the paths re-enter if they still matter
    if (static_cast<int>(cons.size()) > opt.max_constraints) {
      std::nth_element(cons.begin(), cons.begin() + opt.max_constraints / 2, cons.end(),
                       [](const Constraint& a, const Constraint& b) { return a.lambda > b.lambda; });
      for (std::size_t i = opt.max_constraints / 2; i < cons.size(); ++i) {
        if (cons[i].lambda != 0.0) apply_delta(cons[i], -cons[i].lambda);
        seen.erase(cons[i].hash);
      }
      cons.resize(opt.max_constraints / 2);
    }

    const double mass = mass_of();
    mass_history.push_back(mass);
    bool stalled = false;
    if (static_cast<int>(mass_history.size()) > opt.stall_rounds) {
      const double prev = mass_history[mass_history.size() - 1 - opt.stall_rounds];
      stalled = std::abs(mass - prev) < opt.mass_change_tol * std::fmax(1.0, mass);
    }
    if (lmin >= 1.0 - opt.admissibility_tol && (stalled || added == 0)) break;
  }

  // final audit pass
  g.shortest_tree(rho_c, rho_o, &dist, &pred);
  lmin = std::fmax(0.0, dist[g.f_node()] - tie_slack);
  if (!std::isfinite(dist[g.f_node()])) lmin = HUGE_VAL;
  const double mass = mass_of();
  double lambda_sum = 0.0;
  for (const auto& c : cons) lambda_sum += c.lambda;
  res.raw_mass = mass;
  res.min_path_value = lmin;
  res.modulus = lmin > 0.0 ? mass / (lmin * lmin) : 0.0;
  res.dual_lower = lambda_sum - mass;
  res.constraints = static_cast<int>(cons.size());
  res.cell_density = rho_c;
  res.obstacle_weight = rho_o;
  return res;
}

}  // namespace

ModulusResult classical_modulus(const Grid& grid, const FamilySpec& fam, ModulusOptions opt) {
  opt.transboundary = false;
  return solve(grid, fam, opt);
}

ModulusResult transboundary_modulus(const Grid& grid, const FamilySpec& fam, ModulusOptions opt) {
  opt.transboundary = true;
  return solve(grid, fam, opt);
}

double admissibility_residual(const GridGraph& g, const ModulusResult& res, int paths,
                              std::uint64_t seed) {
  // random shortest-path trees under perturbed weights yield fresh paths
  double worst = HUGE_VAL;
  int produced = 0;
  std::vector<double> dist;
  std::vector<int> pred;
  for (int batch = 0; produced < paths && batch < 64; ++batch) {
    Rng rng(seed + batch * 7919);
    std::vector<double> jitter_c(res.cell_density);
    for (auto& v : jitter_c) v = v * rng.uniform(0.25, 4.0) + rng.u01() * 1e-4;
    std::vector<double> jitter_o(res.obstacle_weight);
    for (auto& v : jitter_o) v = v * rng.uniform(0.25, 4.0) + rng.u01() * 1e-4;
    g.shortest_tree(jitter_c, jitter_o, &dist, &pred);
    std::vector<int> entries;
    for (int id : g.adjacency(g.f_node())) {
      const auto& e = g.edges()[id];
      const int u = e.u == g.f_node() ? e.v : e.u;
      if (std::isfinite(dist[u])) entries.push_back(u);
    }
    std::sort(entries.begin(), entries.end());
    for (int u : entries) {
      if (produced >= paths) break;
      std::vector<int> nodes = g.extract_path(pred, u);
      if (nodes.empty()) continue;
      nodes.push_back(g.f_node());
      const auto pc = g.constraint_for(nodes);
      worst = std::fmin(worst, g.constraint_value(pc, res.cell_density, res.obstacle_weight));
      produced++;
    }
  }
  return produced > 0 ? worst : 0.0;
}

double invariance_check(const Grid& grid, const FamilySpec& fam, const MoebiusMap& m,
                        ModulusOptions opt) {
  opt.transboundary = true;
  const ModulusResult before = transboundary_modulus(grid, fam, opt);
  FamilySpec mapped = map_family(fam, m);
  if (grid.spec().metric == Metric::spherical) {
    // recenter so the mapped family stays away from the chart's excluded cap
    std::vector<Complex> pts;
    auto collect = [&pts](const SphereSet& s) {
      if (std::holds_alternative<DiskRegion>(s)) {
        const auto& d = std::get<DiskRegion>(s);
        Vec3 c;
        double r;
        d.spherical_cap(&c, &r);
        const auto p = unlift(c);
        if (!p.at_infinity) pts.push_back(p.value);
      } else {
        for (const auto& p : std::get<ContinuumSample>(s).points) {
          if (!p.at_infinity) pts.push_back(p.value);
        }
      }
    };
    collect(mapped.e);
    collect(mapped.f);
    Vec3 centroid{0, 0, 0};
    for (const auto& z : pts) {
      const Vec3 v = lift(ExtendedPoint(z));
      centroid = {centroid.x + v.x, centroid.y + v.y, centroid.z + v.z};
    }
    if (norm(centroid) > 1e-9) {
      centroid = normalized(centroid);
      // rotation moving the centroid to the chart origin (south pole)
      const ExtendedPoint c = unlift(centroid);
      if (!c.at_infinity) {
        const Complex a = c.value;
        const double s = std::sqrt(1.0 + std::norm(a));
        const MoebiusMap rot = MoebiusMap::sphere_rotation(Complex(1.0 / s, 0.0), -a / s);
        mapped = map_family(mapped, rot);
      }
    }
  }
  const ModulusResult after = transboundary_modulus(grid, mapped, opt);
  if (before.modulus == 0.0) return after.modulus == 0.0 ? 0.0 : HUGE_VAL;
  return std::abs(after.modulus - before.modulus) / before.modulus;
}

CompareReport compare_report(const Grid& grid, const FamilySpec& fam, double tau,
                             ModulusOptions opt) {
  for (std::size_t i = 0; i < fam.obstacles.size(); ++i) {
    const auto& k = fam.obstacles[i];
    const bool fat = std::holds_alternative<DiskRegion>(k)
                         ? fatness_test(std::get<DiskRegion>(k), tau, 200, 17 + i).passed
                         : fatness_test(std::get<ContinuumSample>(k), tau, 200, 17 + i).passed;
    if (!fat) throw error("compare_report: obstacle fails the fatness test");
  }
  CompareReport rep;
  rep.classical = classical_modulus(grid, fam, opt).modulus;
  rep.transboundary = transboundary_modulus(grid, fam, opt).modulus;
  rep.ratio = rep.transboundary > 0.0 ? std::fmin(1.0, rep.classical) / rep.transboundary : HUGE_VAL;
  return rep;
}

}  // namespace qcgeo
