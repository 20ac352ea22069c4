#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netpot/capacity.hpp"
#include "netpot/graph.hpp"

namespace netpot {

/// Vertex sequence with b(x_i, x_{i+1}) > 0 for consecutive entries.
struct PathSample {
  std::vector<Index> vertices;
};

/// Validates adjacency; throws contract otherwise.
PathSample make_path(const Graph& g, std::vector<Index> vertices);
PathSample make_path_from_ids(const Graph& g, std::span<const VertexId> ids);

/// L_w(gamma) = sum w(x_i, x_{i+1}).
double path_length(const Graph& g, std::span<const double> w, const PathSample& p);

/// Straight lattice ray from the origin along +/- axis, `length` steps.
PathSample lattice_ray(const Graph& g, int dim, int axis, int sign, int length);
/// Self-avoiding random walks from `start`; a walk stops early when stuck.
std::vector<PathSample> random_self_avoiding_walks(const Graph& g, Index start, std::size_t steps, std::size_t count,
                                                   std::uint64_t seed);

struct NullWitness {
  EdgeFunction w;              // strictly positive on every edge
  double total = 0.0;          // sum_{x,y} b(x,y) w(x,y)^2 over ordered pairs
  double epsilon = 0.0;        // slack: total <= 2 Q(f) + epsilon
  std::optional<Potential> potential;  // the perturbed potential w came from
};

/// w = |grad f_eps| with f_eps an injective perturbation of f, so that w > 0
/// on edges and total <= 2 Q(f) + eps. Default eps = 1e-9 max(1, Q(f)).
NullWitness null_witness_from_potential(const Graph& g, std::span<const double> f, std::uint64_t seed,
                                        std::optional<double> eps = std::nullopt);

struct NullWitnessReport {
  std::vector<double> lengths;
  std::vector<char> meets_threshold;
  std::size_t meeting = 0;
  double threshold = 0.0;
  std::string note;
};

NullWitnessReport verify_null_witness(const Graph& g, const NullWitness& w, const std::vector<PathSample>& paths,
                                      double threshold);

struct YamasakiWitness {
  Graph graph;                     // final level of the schedule
  Potential f;                     // sum_k (1 - u_k), u_k the level optimizers
  NullWitness witness;             // w = |grad f|
  double energy_bound = 0.0;       // (sum_k sqrt(cap_k))^2 >= Q(f)
  std::vector<double> ball_radii;  // 1, 2, 4, ...
  std::vector<std::size_t> ball_sizes;
};

YamasakiWitness yamasaki_witness(const LevelSource& src, const Verdict& verdict, const SolverConfig& cfg = {});

struct RootedTree {
  Index root = 0;
  std::vector<Index> parent;  // parent[root] == root
  std::vector<Index> parent_edge;
  std::vector<int> depth;
  std::vector<Index> order;   // BFS order
};

bool is_tree(const Graph& g);
/// Throws not_a_tree unless |E| = |V| - 1 (connectivity holds for every Graph).
RootedTree root_tree(const Graph& g, Index root);
Index greatest_common_ancestor(const RootedTree& t, Index x, Index y);

struct TreePotential {
  Potential f;
  double max_edge_deviation = 0.0;  // max | |f(x)-f(y)| - w(x,y) | over edges
};

/// f(x) = L_w(root path of x).
TreePotential tree_boundary_potential(const Graph& g, std::span<const double> w, VertexId root);

}  // namespace netpot
