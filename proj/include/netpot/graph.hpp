#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace netpot {

using VertexId = std::uint64_t;
using Index = std::size_t;

/// Real-valued vertex function, aligned with a graph's index order.
using Potential = std::vector<double>;
/// Symmetric edge function, one value per unordered edge (see Graph::edges()).
using EdgeFunction = std::vector<double>;

struct Edge {
  Index u;  // u < v
  Index v;
  double b;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double b;
};

/// Connected, symmetric, loop-free weighted graph (X, b) over opaque vertex
/// ids. Immutable after construction; degrees are computed eagerly.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from isolated ids plus an edge list. Repeated entries for
  /// the same unordered pair must carry the same weight.
  static Graph from_edges(std::vector<VertexId> ids, const std::vector<WeightedEdge>& edges);

  Index size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexId id(Index i) const { return ids_[i]; }
  const std::vector<VertexId>& ids() const { return ids_; }
  std::optional<Index> find(VertexId id) const;
  Index index(VertexId id) const;  // throws unknown_vertex

  std::span<const Index> neighbors(Index i) const {
    return {adj_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const double> weights(Index i) const {
    return {adj_w_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const Index> edge_ids(Index i) const {
    return {adj_e_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  const std::vector<Edge>& edges() const { return edges_; }

  double degree(Index i) const { return deg_[i]; }
  const std::vector<double>& degrees() const { return deg_; }
  double max_degree() const { return max_deg_; }

  double weight(Index u, Index v) const;
  std::optional<Index> edge_index(Index u, Index v) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> adj_;
  std::vector<double> adj_w_;
  std::vector<Index> adj_e_;
  std::vector<Edge> edges_;
  std::vector<double> deg_;
  double max_deg_ = 0.0;
};

/// Strictly positive vertex weights m with cached total m(X).
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::vector<double> values);

  static Measure unit(Index n) { return Measure(std::vector<double>(n, 1.0)); }

  double operator[](Index i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  Index size() const { return values_.size(); }
  double total() const { return total_; }
  double mass_of(std::span<const Index> set) const;

 private:
  std::vector<double> values_;
  double total_ = 0.0;
};

// ---------------------------------------------------------------------------
// Generators
//
// Vertex labelling (stable across radii so nested levels share ids):
//   lattice(d, R): coordinates c_1..c_d, each zig-zag encoded
//                  (0,-1,1,-2,2,... -> 0,1,2,3,4,...) into 63/d bits,
//                  coordinate k occupying bits [k*w, (k+1)*w).
//   tree(k, D):    heap order; root 0, children of v are k*v+1 .. k*v+k.
//   path(n):       0..n along the path (n edges).
//   cycle(n):      0..n-1 around the cycle.
//   tree_quotient(k, D): 0..D; edge (j-1, j) has weight k^j, the radial
//                  quotient of tree(k, D) seen from its root.
// ---------------------------------------------------------------------------

enum class Family { lattice, tree, path, cycle, tree_quotient };

struct GeneratorSpec {
  Family family = Family::lattice;
  int shape = 1;   // dimension d (lattice) or branching k (trees); n for path/cycle
  int radius = 1;  // ball radius / depth; ignored for path and cycle
  double weight = 1.0;

  GeneratorSpec with_radius(int r) const {
    GeneratorSpec s = *this;
    s.radius = r;
    return s;
  }
};

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

Graph generate(const GeneratorSpec& spec, std::size_t vertex_cap = kDefaultVertexCap);
std::size_t predicted_vertex_count(const GeneratorSpec& spec);
VertexId generator_root(const GeneratorSpec& spec);
VertexId lattice_id(std::span<const int> coords);
std::vector<int> lattice_coords(VertexId id, int dim);
std::string describe(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Exhaustions and truncations
// ---------------------------------------------------------------------------

/// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<int> hop_distances(const Graph& g, Index source);

/// Vertices outside F adjacent to F, sorted.
std::vector<Index> ring_of(const Graph& g, std::span<const Index> set);

struct Exhaustion {
  Index seed = 0;
  std::vector<int> radii;
  std::vector<std::vector<Index>> sets;   // F_n, sorted indices
  std::vector<std::vector<Index>> rings;  // R_n, sorted indices
};

Exhaustion make_exhaustion(const Graph& g, VertexId seed, std::span<const int> radii);

/// Subgraph on F plus its ring, keeping edges with an endpoint in F. Indices
/// in `interior` and `ring` refer to `graph`.
struct Truncation {
  Graph graph;
  std::vector<Index> interior;
  std::vector<Index> ring;
  bool exact = false;  // covers the whole parent graph
};

Truncation induced_truncation(const Graph& g, std::span<const Index> set);

/// Truncation of a finite graph whose Dirichlet set is a prescribed boundary
/// layer (edges inside the layer are dropped, as in induced_truncation).
Truncation boundary_layer_truncation(const Graph& g, std::span<const Index> layer);

struct GraphDiagnostics {
  bool symmetric = true;
  bool zero_diagonal = true;
  bool connected = true;
  bool finite_degrees = true;
  double max_degree = 0.0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

GraphDiagnostics validate_graph(const Graph& g);

/// Copies values of `f` (on `from`) onto `to` by vertex id; missing ids get `fill`.
Potential transfer(const Graph& from, std::span<const double> f, const Graph& to, double fill = 0.0);

}  // namespace netpot
