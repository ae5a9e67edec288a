#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "qcgeo/grid.hpp"

namespace qcgeo {

struct ModulusOptions {
  int connectivity = 16;             // 4, 8 or 16 step neighborhoods
  bool transboundary = false;        // obstacles crossable at weight cost
  double admissibility_tol = 1e-3;   // stop once min path value >= 1 - tol
  double mass_change_tol = 1e-4;     // relative stall threshold over stall_rounds
  int stall_rounds = 5;
  int max_rounds = 600;
  int batch_size = 512;              // violated paths added per round
  int max_sweeps_per_round = 400;
  int max_constraints = 30000;       // active-set memory cap
  double dual_tol = 1e-9;            // Hildreth KKT tolerance
};

struct ModulusResult {
  double modulus = 0.0;      // certified admissible estimate: mass / lmin^2
  double raw_mass = 0.0;     // mass of the returned density
  double dual_lower = 0.0;   // certified lower bound for the discrete program
  double min_path_value = 0.0;
  bool disconnected = false;
  int rounds = 0;
  int constraints = 0;
  std::vector<double> cell_density;     // per grid cell (0 off the domain)
  std::vector<double> obstacle_weight;  // per obstacle component
};

// Sparse linear form of a path constraint: value(rho) >= 1.
struct PathConstraint {
  std::vector<int> cell_idx;
  std::vector<double> cell_coef;
  std::vector<int> obs_idx;
  std::vector<double> obs_coef;
};

// Discretization of a curve family on a grid: free cells are nodes, obstacle
// components contract to super-nodes, E and F become terminals. Edges carry
// the linear length form sum(coef * rho_cell) plus half an obstacle weight
// per obstacle endpoint, so a pass through a component costs its weight once
// per visit. Steps are 4/8/16-neighborhoods with true euclidean step lengths
// times the local metric density; knight steps require free intermediate
// cells and diagonal steps require at least one free side cell.
class GridGraph {
 public:
  GridGraph(const Grid& grid, const FamilySpec& fam, bool crossable_obstacles, int connectivity);

  const Grid& grid() const { return *grid_; }
  int cell_count() const { return ncells_; }
  int obstacle_count() const { return nobs_; }
  int node_count() const { return ncells_ + nobs_ + 2; }
  int e_node() const { return ncells_ + nobs_; }
  int f_node() const { return ncells_ + nobs_ + 1; }
  bool cell_free(int c) const { return state_[c] == 0; }
  int cell_obstacle(int c) const { return state_[c] >= 2 ? state_[c] - 2 : -1; }

  struct Edge {
    int u = 0, v = 0;
    int cells[4] = {-1, -1, -1, -1};
    double coefs[4] = {0, 0, 0, 0};
    int ncell = 0;
    int obs[2] = {-1, -1};
    double obs_coef[2] = {0, 0};
    int nobs = 0;
    double len = 0.0;  // chart length, used only to break shortest-path ties
  };

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& adjacency(int node) const { return adj_[node]; }

  double edge_weight(const Edge& e, const std::vector<double>& rho_c,
                     const std::vector<double>& rho_o) const {
    double w = 0.0;
    for (int k = 0; k < e.ncell; ++k) w += e.coefs[k] * rho_c[e.cells[k]];
    for (int k = 0; k < e.nobs; ++k) w += e.obs_coef[k] * rho_o[e.obs[k]];
    return w;
  }

  // Single-source shortest path tree from the E terminal. A vanishing
  // length-proportional tie-breaker keeps zero-density trees short; the
  // reported distances include it (bounded by tie_break * total length).
  static constexpr double kTieBreak = 1e-13;
  void shortest_tree(const std::vector<double>& rho_c, const std::vector<double>& rho_o,
                     std::vector<double>* dist, std::vector<int>* pred_edge) const;
  double tie_break_slack() const;

  // Node path E -> ... -> F from a predecessor tree.
  std::vector<int> extract_path(const std::vector<int>& pred_edge, int endpoint) const;

  PathConstraint constraint_for(const std::vector<int>& node_path,
                                bool obstacle_once_total = false) const;

  double constraint_value(const PathConstraint& c, const std::vector<double>& rho_c,
                          const std::vector<double>& rho_o) const {
    double v = 0.0;
    for (std::size_t k = 0; k < c.cell_idx.size(); ++k) v += c.cell_coef[k] * rho_c[c.cell_idx[k]];
    for (std::size_t k = 0; k < c.obs_idx.size(); ++k) v += c.obs_coef[k] * rho_o[c.obs_idx[k]];
    return v;
  }

  int find_edge(int u, int v) const;

 private:
  void classify_cells(const FamilySpec& fam, bool crossable);
  void build_edges(const FamilySpec& fam, int connectivity);

  const Grid* grid_;
  int ncells_ = 0, nobs_ = 0;
  std::vector<int> state_;  // 0 free, 1 removed, k+2 obstacle k
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Discrete conformal modulus: minimize sum rho^2 area subject to unit
// rho-length on every connecting grid path, solved by cutting-plane rounds
// with a shortest-path oracle and dual coordinate ascent.
ModulusResult classical_modulus(const Grid& grid, const FamilySpec& fam,
                                ModulusOptions opt = ModulusOptions{});

// Same program with obstacle components contracted to weighted super-nodes.
ModulusResult transboundary_modulus(const Grid& grid, const FamilySpec& fam,
                                    ModulusOptions opt = ModulusOptions{});

// Minimum value of the returned density over a fresh batch of random
// connecting paths that the solver never saw (feasibility audit).
double admissibility_residual(const GridGraph& g, const ModulusResult& res, int paths,
                              std::uint64_t seed);

// Relative deviation of the transboundary modulus under a Moebius map of the
// whole configuration (grid re-used; spherical configurations are
// re-centered on the chart by a follow-up rotation).
double invariance_check(const Grid& grid, const FamilySpec& fam, const MoebiusMap& m,
                        ModulusOptions opt = ModulusOptions{});

struct CompareReport {
  double classical = 0.0;
  double transboundary = 0.0;
  double ratio = 0.0;  // min{1, classical} / transboundary
};

// Classical and transboundary modulus of the same family on the same grid;
// every obstacle must pass the fatness test at the declared tau.
CompareReport compare_report(const Grid& grid, const FamilySpec& fam, double tau,
                             ModulusOptions opt = ModulusOptions{});

}  // namespace qcgeo
