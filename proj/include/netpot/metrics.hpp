#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netpot/graph.hpp"

namespace netpot {

inline constexpr Index kExplicitMetricCap = 4096;
inline constexpr Index kExhaustiveTriangleCap = 512;

/// Pseudometric on the vertices of a finite graph: either a dense symmetric
/// matrix or the path metric d_w of an edge function (rows computed lazily
/// and cached under a lock).
class MetricObject {
 public:
  MetricObject() = default;

  /// Row-major n x n matrix; throws above kExplicitMetricCap vertices. The
  /// axioms are left to is_pseudometric so that violations can be reported.
  static MetricObject explicit_matrix(std::vector<double> data, Index n);
  static MetricObject path(const Graph& g, EdgeFunction w);

  Index size() const { return n_; }
  bool is_explicit() const { return !graph_; }
  double operator()(Index x, Index y) const;
  std::vector<double> row(Index x) const;
  /// True when all off-diagonal distances are positive.
  bool is_metric() const;

 private:
  Index n_ = 0;
  std::vector<double> dense_;
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const EdgeFunction> w_;
  struct Cache {
    std::mutex mu;
    std::map<Index, std::vector<double>> rows;
  };
  std::shared_ptr<Cache> cache_;
};

struct PseudometricCheck {
  bool ok = true;
  std::string reason;  // "diagonal", "symmetry", "negative", "triangle"
  std::optional<std::array<Index, 3>> triple;
  bool exhaustive = true;
};

/// Checks zero diagonal, symmetry and the triangle inequality (exhaustively
/// up to kExhaustiveTriangleCap vertices, else on `samples` random triples).
PseudometricCheck is_pseudometric(const MetricObject& s, double slack = 0.0, std::size_t samples = 100000,
                                  std::uint64_t seed = 1);

/// Values of sigma on the edges of g.
EdgeFunction edge_restriction(const Graph& g, const MetricObject& s);

struct IntrinsicReport {
  std::vector<double> load;   // 1/2 sum_y b(x,y) sigma(x,y)^2; also the smallest intrinsic measure
  std::vector<double> slack;  // m(x) - load(x)
  bool intrinsic = true;
  double total = 0.0;         // Q~(sigma|_E)
};

IntrinsicReport is_intrinsic(const Graph& g, const MetricObject& s, std::span<const double> m);
IntrinsicReport is_intrinsic_edges(const Graph& g, std::span<const double> sigma_on_edges, std::span<const double> m);

struct SigmaFromPotential {
  MetricObject sigma;
  std::vector<double> m_f;
};
SigmaFromPotential sigma_from_potential(const Graph& g, std::span<const double> f);

/// Single-source shortest path distances for w >= 0 on edges.
std::vector<double> path_metric_from(const Graph& g, std::span<const double> w, Index source);
/// Row-major all-pairs distances.
std::vector<double> path_metric_all(const Graph& g, std::span<const double> w);

struct IdempotenceReport {
  bool ok = true;
  double max_deviation = 0.0;
};
/// Compares d_{d_w|_E} with d_w on all pairs, up to `tol` relative.
IdempotenceReport idempotence_check(const Graph& g, std::span<const double> w, double tol = 0.0);

struct DiscTopMetric {
  MetricObject sigma;
  std::vector<double> f;     // f(x_n) = 2^{-n/2} / sqrt(deg x_n), n = 1, 2, ...
  double load_bound = 0.0;   // 2 sum deg(x) f(x)^2, at most 2
  double total_load = 0.0;   // sum_x 1/2 sum_y b sigma^2
  bool positive = true;      // sigma(x,y) >= f(x) > 0 for all y != x
};
DiscTopMetric disc_top_metric(const Graph& g, std::span<const Index> order);

/// f + offsets with pairwise distinct values, sup|offset| < sup_eps (default
/// eps) and Q(offset) < eps. Deterministic in `seed`.
Potential perturb_injective(const Graph& g, std::span<const double> f, double eps, std::uint64_t seed,
                            std::optional<double> sup_eps = std::nullopt);

Potential dist_to_set(const MetricObject& s, std::span<const Index> set);

struct DistBoundCheck {
  double energy = 0.0;
  double bound = 0.0;  // min{ m(X), 2 m(X \ U) }
  bool holds = true;
};
DistBoundCheck dist_bound_check(const Graph& g, std::span<const double> sigma_u, std::span<const double> m,
                                std::span<const Index> set, double rel_slack = 1e-12);

std::vector<Index> ball(const MetricObject& s, Index x, double r);
double diameter(const MetricObject& s);
/// Size of a greedy eps-net scanning vertices in index order.
std::size_t greedy_net_size(const MetricObject& s, double eps);

/// "u v distance" lines; every unordered pair of distinct vertices required.
MetricObject parse_metric_matrix(std::string_view text, const Graph& g);

}  // namespace netpot
