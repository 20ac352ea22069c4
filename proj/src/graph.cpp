#include "netpot/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "netpot/error.hpp"
#include "netpot/summation.hpp"

namespace netpot {

namespace {

std::string id_str(VertexId v) { return std::to_string(v); }

bool is_connected(const std::vector<std::size_t>& offsets, const std::vector<Index>& adj, Index n) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index count = 1;
  while (!stack.empty()) {
    Index v = stack.back();
    stack.pop_back();
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      Index u = adj[k];
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

}  // namespace

Graph Graph::from_edges(std::vector<VertexId> ids, const std::vector<WeightedEdge>& edges) {
  for (const auto& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw Error(ErrorKind::invalid_argument, "graph has no vertices");

  Graph g;
  g.ids_ = std::move(ids);
  const Index n = g.ids_.size();

  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::self_loop, "self-loop at vertex " + id_str(e.u));
    if (!(e.b > 0.0) || !std::isfinite(e.b)) {
      throw Error(ErrorKind::non_positive_weight,
                  "non-positive or non-finite weight on edge " + id_str(e.u) + "-" + id_str(e.v));
    }
    Index a = *g.find(e.u);
    Index c = *g.find(e.v);
    if (a > c) std::swap(a, c);
    raw.push_back({a, c, e.b});
  }
  std::sort(raw.begin(), raw.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  for (const auto& e : raw) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      if (g.edges_.back().b != e.b) {
        throw Error(ErrorKind::asymmetric_weight, "conflicting weights for edge " + id_str(g.ids_[e.u]) +
                                                      "-" + id_str(g.ids_[e.v]));
      }
      continue;
    }
    g.edges_.push_back(e);
  }

  std::vector<std::size_t> count(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++count[e.u + 1];
    ++count[e.v + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  g.offsets_ = count;
  g.adj_.resize(2 * g.edges_.size());
  g.adj_w_.resize(2 * g.edges_.size());
  g.adj_e_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so appending in edge order keeps every
  // adjacency row sorted by neighbour index.
  for (Index k = 0; k < g.edges_.size(); ++k) {
    const auto& e = g.edges_[k];
    std::size_t p = fill[e.u]++;
    g.adj_[p] = e.v;
    g.adj_w_[p] = e.b;
    g.adj_e_[p] = k;
  }
  for (Index k = 0; k < g.edges_.size(); ++k) {
    const auto& e = g.edges_[k];
    std::size_t p = fill[e.v]++;
    g.adj_[p] = e.u;
    g.adj_w_[p] = e.b;
    g.adj_e_[p] = k;
  }
  for (Index i = 0; i < n; ++i) {
    std::vector<std::size_t> order(g.offsets_[i + 1] - g.offsets_[i]);
    std::iota(order.begin(), order.end(), g.offsets_[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.adj_[a] < g.adj_[b]; });
    std::vector<Index> a2, e2;
    std::vector<double> w2;
    for (auto p : order) {
      a2.push_back(g.adj_[p]);
      w2.push_back(g.adj_w_[p]);
      e2.push_back(g.adj_e_[p]);
    }
    std::copy(a2.begin(), a2.end(), g.adj_.begin() + g.offsets_[i]);
    std::copy(w2.begin(), w2.end(), g.adj_w_.begin() + g.offsets_[i]);
    std::copy(e2.begin(), e2.end(), g.adj_e_.begin() + g.offsets_[i]);
  }

  if (!is_connected(g.offsets_, g.adj_, n)) throw Error(ErrorKind::disconnected, "graph is not connected");

  g.deg_.assign(n, 0.0);
  for (Index i = 0; i < n; ++i) {
    double d = 0.0;
    for (double w : g.weights(i)) d += w;
    g.deg_[i] = d;
    g.max_deg_ = std::max(g.max_deg_, d);
  }
  return g;
}

std::optional<Index> Graph::find(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - ids_.begin());
}

Index Graph::index(VertexId id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::unknown_vertex, "unknown vertex " + id_str(id));
  return *i;
}

std::optional<Index> Graph::edge_index(Index u, Index v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return edge_ids(u)[static_cast<std::size_t>(it - nb.begin())];
}

double Graph::weight(Index u, Index v) const {
  auto e = edge_index(u, v);
  return e ? edges_[*e].b : 0.0;
}

Measure::Measure(std::vector<double> values) : values_(std::move(values)) {
  CompensatedSum total;
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::invalid_argument, "measure must be strictly positive");
    total.add(v);
  }
  total_ = total.value();
}

double Measure::mass_of(std::span<const Index> set) const {
  double s = 0.0;
  for (Index i : set) s += values_[i];
  return s;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

int lattice_bits(int dim) { return 63 / dim; }

std::uint64_t zigzag(int c) {
  return c >= 0 ? 2 * static_cast<std::uint64_t>(c) : 2 * static_cast<std::uint64_t>(-static_cast<std::int64_t>(c)) - 1;
}

int unzigzag(std::uint64_t z) { return (z & 1) ? -static_cast<int>((z + 1) / 2) : static_cast<int>(z / 2); }

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double lattice_ball_size(int d, int r) {
  double total = 0.0;
  for (int k = 0; k <= d; ++k) total += std::ldexp(binom(d, k), k) * binom(r, k);
  return total;
}

void check_spec(const GeneratorSpec& s) {
  if (s.shape < 1 || s.radius < 0 || !(s.weight > 0.0) || !std::isfinite(s.weight)) {
    throw Error(ErrorKind::invalid_argument, "generator parameters must be positive: " + describe(s));
  }
  if (s.family == Family::lattice && s.shape > 8) {
    throw Error(ErrorKind::invalid_argument, "lattice dimension above 8 is not supported");
  }
  if ((s.family == Family::tree || s.family == Family::tree_quotient) && s.shape < 1) {
    throw Error(ErrorKind::invalid_argument, "tree branching must be at least 1");
  }
  if (s.family == Family::cycle && s.shape < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
}

double predicted_count_real(const GeneratorSpec& s) {
  switch (s.family) {
    case Family::lattice:
      return lattice_ball_size(s.shape, s.radius);
    case Family::tree: {
      if (s.shape == 1) return s.radius + 1.0;
      return (std::pow(static_cast<double>(s.shape), s.radius + 1) - 1.0) / (s.shape - 1);
    }
    case Family::path:
      return s.shape + 1.0;
    case Family::cycle:
      return s.shape;
    case Family::tree_quotient:
      return s.radius + 1.0;
  }
  return 0.0;
}

}  // namespace

std::size_t predicted_vertex_count(const GeneratorSpec& spec) {
  double c = predicted_count_real(spec);
  if (c > 1e18) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(c));
}

VertexId lattice_id(std::span<const int> coords) {
  const int w = lattice_bits(static_cast<int>(coords.size()));
  VertexId id = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    std::uint64_t z = zigzag(coords[k]);
    if (w < 64 && (z >> w) != 0) throw Error(ErrorKind::invalid_argument, "lattice coordinate out of range");
    id |= z << (k * w);
  }
  return id;
}

std::vector<int> lattice_coords(VertexId id, int dim) {
  const int w = lattice_bits(dim);
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  std::vector<int> c(dim);
  for (int k = 0; k < dim; ++k) c[k] = unzigzag((id >> (k * w)) & mask);
  return c;
}

VertexId generator_root(const GeneratorSpec&) { return 0; }

std::string describe(const GeneratorSpec& s) {
  std::string name;
  switch (s.family) {
    case Family::lattice: name = "lattice"; break;
    case Family::tree: name = "tree"; break;
    case Family::path: name = "path"; break;
    case Family::cycle: name = "cycle"; break;
    case Family::tree_quotient: name = "tree_quotient"; break;
  }
  std::string out = name + "(" + std::to_string(s.shape);
  if (s.family != Family::path && s.family != Family::cycle) out += "," + std::to_string(s.radius);
  out += ")";
  return out;
}

Graph generate(const GeneratorSpec& spec, std::size_t vertex_cap) {
  check_spec(spec);
  if (predicted_count_real(spec) > static_cast<double>(vertex_cap)) {
    throw Error(ErrorKind::vertex_cap, describe(spec) + " exceeds the vertex cap of " + std::to_string(vertex_cap));
  }
  const double b = spec.weight;
  std::vector<WeightedEdge> edges;
  std::vector<VertexId> ids{0};

  switch (spec.family) {
    case Family::lattice: {
      const int d = spec.shape;
      const int r = spec.radius;
      // Enumerate the L1 ball coordinate by coordinate; link each point to its
      // +e_k neighbour when that neighbour is still inside the ball.
      std::vector<int> c(d, -r);
      auto l1 = [](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s += std::abs(x);
        return s;
      };
      while (true) {
        if (l1(c) <= r) {
          VertexId here = lattice_id(c);
          ids.push_back(here);
          for (int k = 0; k < d; ++k) {
            c[k] += 1;
            if (l1(c) <= r) edges.push_back({here, lattice_id(c), b});
            c[k] -= 1;
          }
        }
        int k = 0;
        while (k < d && c[k] == r) {
          c[k] = -r;
          ++k;
        }
        if (k == d) break;
        ++c[k];
      }
      break;
    }
    case Family::tree: {
      const std::uint64_t k = spec.shape;
      const std::uint64_t total = predicted_vertex_count(spec);
      for (std::uint64_t v = 1; v < total; ++v) edges.push_back({(v - 1) / k, v, b});
      break;
    }
    case Family::path:
      for (int v = 0; v < spec.shape; ++v) edges.push_back({VertexId(v), VertexId(v + 1), b});
      break;
    case Family::cycle:
      for (int v = 0; v < spec.shape; ++v) edges.push_back({VertexId(v), VertexId((v + 1) % spec.shape), b});
      break;
    case Family::tree_quotient: {
      double w = b;
      for (int j = 1; j <= spec.radius; ++j) {
        w *= spec.shape;
        edges.push_back({VertexId(j - 1), VertexId(j), w});
      }
      break;
    }
  }
  return Graph::from_edges(std::move(ids), edges);
}

// ---------------------------------------------------------------------------
// Exhaustions and truncations

std::vector<int> hop_distances(const Graph& g, Index source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Index> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    for (Index u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<Index> ring_of(const Graph& g, std::span<const Index> set) {
  std::vector<char> in(g.size(), 0), mark(g.size(), 0);
  for (Index i : set) in[i] = 1;
  std::vector<Index> ring;
  for (Index i : set) {
    for (Index u : g.neighbors(i)) {
      if (!in[u] && !mark[u]) {
        mark[u] = 1;
        ring.push_back(u);
      }
    }
  }
  std::sort(ring.begin(), ring.end());
  return ring;
}

Exhaustion make_exhaustion(const Graph& g, VertexId seed, std::span<const int> radii) {
  Exhaustion ex;
  ex.seed = g.index(seed);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < 0 || (k > 0 && radii[k] <= radii[k - 1])) {
      throw Error(ErrorKind::invalid_argument, "exhaustion radii must be non-negative and strictly increasing");
    }
  }
  ex.radii.assign(radii.begin(), radii.end());
  auto dist = hop_distances(g, ex.seed);
  for (int r : radii) {
    std::vector<Index> set;
    for (Index i = 0; i < g.size(); ++i) {
      if (dist[i] >= 0 && dist[i] <= r) set.push_back(i);
    }
    ex.rings.push_back(ring_of(g, set));
    ex.sets.push_back(std::move(set));
  }
  return ex;
}

Truncation induced_truncation(const Graph& g, std::span<const Index> set) {
  if (set.empty()) throw Error(ErrorKind::invalid_argument, "truncation set is empty");
  std::vector<char> in(g.size(), 0);
  for (Index i : set) {
    if (i >= g.size()) throw Error(ErrorKind::unknown_vertex, "truncation index out of range");
    in[i] = 1;
  }
  auto ring = ring_of(g, set);
  std::vector<VertexId> ids;
  std::vector<WeightedEdge> edges;
  for (Index i = 0; i < g.size(); ++i) {
    if (in[i]) ids.push_back(g.id(i));
  }
  for (Index i : ring) ids.push_back(g.id(i));
  for (const auto& e : g.edges()) {
    if (in[e.u] || in[e.v]) edges.push_back({g.id(e.u), g.id(e.v), e.b});
  }
  Truncation t;
  t.graph = Graph::from_edges(std::move(ids), edges);
  for (Index i = 0; i < g.size(); ++i) {
    if (in[i]) t.interior.push_back(t.graph.index(g.id(i)));
  }
  for (Index i : ring) t.ring.push_back(t.graph.index(g.id(i)));
  std::sort(t.interior.begin(), t.interior.end());
  std::sort(t.ring.begin(), t.ring.end());
  t.exact = ring.empty();
  return t;
}

Truncation boundary_layer_truncation(const Graph& g, std::span<const Index> layer) {
  std::vector<char> in_layer(g.size(), 0);
  for (Index i : layer) in_layer[i] = 1;
  std::vector<Index> interior;
  for (Index i = 0; i < g.size(); ++i) {
    if (!in_layer[i]) interior.push_back(i);
  }
  if (interior.empty()) throw Error(ErrorKind::invalid_argument, "boundary layer covers the whole graph");
  Truncation t = induced_truncation(g, interior);
  t.exact = true;
  return t;
}

GraphDiagnostics validate_graph(const Graph& g) {
  GraphDiagnostics d;
  d.vertices = g.size();
  d.edges = g.edge_count();
  d.max_degree = g.max_degree();
  for (Index i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto w = g.weights(i);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] == i) d.zero_diagonal = false;
      if (g.weight(nb[k], i) != w[k]) d.symmetric = false;
    }
    if (!std::isfinite(g.degree(i))) d.finite_degrees = false;
  }
  auto dist = hop_distances(g, 0);
  d.connected = std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
  return d;
}

Potential transfer(const Graph& from, std::span<const double> f, const Graph& to, double fill) {
  Potential out(to.size(), fill);
  for (Index i = 0; i < to.size(); ++i) {
    if (auto j = from.find(to.id(i))) out[i] = f[*j];
  }
  return out;
}

}  // namespace netpot
