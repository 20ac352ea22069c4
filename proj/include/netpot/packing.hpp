#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netpot/graph.hpp"
#include "netpot/harmonic.hpp"
#include "netpot/linear_solve.hpp"
#include "netpot/metrics.hpp"

namespace netpot {

struct Disc {
  VertexId id = 0;
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

/// Closed discs with pairwise disjoint interiors, sorted by id.
class CirclePacking {
 public:
  CirclePacking() = default;

  /// Validates r > 0, unique ids and |c_x - c_y| >= r_x + r_y - tol with
  /// tol = overlap_factor * (min radius).
  static CirclePacking make(std::vector<Disc> discs, double overlap_factor = 1e-9);

  const std::vector<Disc>& discs() const { return discs_; }
  std::size_t size() const { return discs_.size(); }
  double min_radius() const { return min_r_; }
  double max_radius() const { return max_r_; }
  /// Axis-aligned bounding box: xmin, ymin, xmax, ymax.
  std::array<double, 4> bounding_box() const { return box_; }
  bool bounded() const { return true; }

 private:
  std::vector<Disc> discs_;
  double min_r_ = 0.0;
  double max_r_ = 0.0;
  std::array<double, 4> box_{};
};

CirclePacking parse_packing(std::string_view text);
std::string format_packing(const CirclePacking& p);

/// Hexagonal penny packing of radius-rho discs in the unit disk: centers
/// 2 rho (i + j/2, (sqrt 3 / 2) j) with |c| <= 1 - rho, ordered by (j, i).
CirclePacking hex_packing(double rho);

using ContactWeight = std::function<double(const Disc&, const Disc&)>;

/// Tangent pairs (index pairs into discs()). Gaps in (tol, 1000 tol] are
/// rejected as ambiguous. Default tol = 1e-9 * min radius.
std::vector<std::pair<Index, Index>> contact_pairs(const CirclePacking& p, std::optional<double> tol = std::nullopt);

/// Contact graph with vertex ids = disc ids; unit weights unless given.
Graph contact_graph(const CirclePacking& p, std::optional<double> tol = std::nullopt, const ContactWeight& w = {});

/// Image under z -> c + R^2 (z - c) / |z - c|^2. Throws if a disc meets c or
/// the contact structure is not preserved.
CirclePacking invert_packing(const CirclePacking& p, double cx, double cy, double radius);

struct PackingMetric {
  MetricObject sigma;           // Euclidean distance of centers
  std::vector<double> m;        // m_sigma: the load of sigma
  IntrinsicReport intrinsic;
  double omega = 0.0;           // max weighted degree
  double mass = 0.0;            // m(X)
  double mass_bound = 0.0;      // (2 Omega / pi) * area of the bounding disk
  double bounding_radius = 0.0;
  std::array<double, 2> bounding_center{};
};

/// `g` must be the contact graph (or subordinate to it) with vertex ids = disc ids.
PackingMetric packing_metric_measure(const CirclePacking& p, const Graph& g);

/// Throws if w lies in the interior of a disc.
void check_anchor(const CirclePacking& p, double wx, double wy);

/// f_r(x) = min(max(2 - |c_x - w| / r, 0), 1) at the disc centers (graph order).
Potential bump(const CirclePacking& p, const Graph& g, double wx, double wy, double r);

enum class ScaleSchedule { span, halving };

/// span: geometric from r1 down to r_last in n steps; halving: r1 2^{-(k-1)}.
std::vector<double> make_scales(ScaleSchedule kind, double r1, double r_last, std::size_t n);

/// Distance from w to the nearest disc center.
double nearest_center_distance(const CirclePacking& p, double wx, double wy);

struct CesaroResult {
  double wx = 0.0, wy = 0.0;
  std::vector<double> scales;
  std::vector<double> q_f;          // Q(f_{r_k})
  std::vector<double> m_f;          // ||f_{r_k}||_m^2
  std::vector<double> cesaro;       // ||g_n||_{Q,m}^2 after rescaling
  std::vector<double> rescale;      // 1 / min of g_n over B_{r_n}(w)
  std::vector<char> low_confidence;
  std::vector<double> triangle_bound;  // (sum_k ||f_k||_{Q,m})^2 / n^2 times rescale^2
  bool triangle_ok = true;
  std::vector<double> cross;        // Q(f_j, f_k), row-major over used scales
  std::optional<std::size_t> truncated_at;  // first scale whose ball holds no vertex
};

CesaroResult cesaro_boundary_capacity(const CirclePacking& p, const Graph& g, const PackingMetric& pm, double wx,
                                      double wy, std::span<const double> scales);

struct ResolvabilityConfig {
  std::size_t depth = 8;
  double r1 = 0.5;
  ScaleSchedule schedule = ScaleSchedule::span;
};

struct AnchorVerdict {
  CesaroResult cesaro;
  bool decaying = false;
  std::string error;  // precondition failure for this anchor
};

struct ResolvabilityReport {
  std::vector<AnchorVerdict> anchors;
  bool consistent = false;
  std::string note;
};

ResolvabilityReport resolvability_report(const CirclePacking& p, const Graph& g, const PackingMetric& pm,
                                         const std::vector<std::array<double, 2>>& anchors,
                                         const ResolvabilityConfig& cfg = {});

std::vector<std::array<double, 2>> circle_anchors(std::size_t n);

/// Disc-center radius from the bounding center plus r, per vertex.
struct PackingLevels {
  std::vector<Truncation> levels;   // growing Euclidean truncations, last = boundary layer (exact)
  std::vector<VertexId> window;     // vertices present at every level
  std::vector<Index> layer;         // boundary-layer vertices (graph indices)
};

/// Boundary layer = discs with |c - center| + r >= R_out - band.
PackingLevels packing_levels(const CirclePacking& p, const Graph& g, double band, std::size_t count = 4);

/// Vertices with |c_x - w| <= radius.
std::vector<Index> anchor_region(const CirclePacking& p, const Graph& g, double wx, double wy, double radius);

}  // namespace netpot
