#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netpot/capacity.hpp"
#include "netpot/graph.hpp"
#include "netpot/linear_solve.hpp"
#include "netpot/metrics.hpp"

namespace netpot {

// Sign convention used throughout:
//   Delta f(x) = f(x) - (1/deg x) sum_y b(x,y) f(y)
// so f is superharmonic iff Delta f >= 0 and harmonic iff Delta f = 0.
// With a measure the operator is (1/m(x)) sum_y b(x,y)(f(x) - f(y)).

Potential laplacian_apply(const Graph& g, std::span<const double> f, const Measure* m = nullptr);

enum class HarmonicClass { harmonic, superharmonic, neither };
const char* to_string(HarmonicClass c);

struct HarmonicityReport {
  HarmonicClass cls = HarmonicClass::harmonic;
  double max_residual = 0.0;  // max |Delta f| over the interior
  double min_delta = 0.0;
  double max_delta = 0.0;
};

HarmonicityReport harmonicity_check(const Graph& g, std::span<const double> f, std::span<const Index> interior,
                                    double tol);

struct HarmonicExtension {
  Potential h;
  double residual = 0.0;
};

/// h = data on `boundary`, Delta h = 0 elsewhere; the maximum principle is
/// asserted on the result.
HarmonicExtension harmonic_extension(const Graph& g, std::span<const Index> boundary, std::span<const double> data,
                                     const SolverConfig& cfg = {});

struct RoydenSplit {
  Potential f0;           // vanishes on the ring
  Potential fh;           // harmonic off the ring
  double q = 0.0;         // Q(f)
  double q0 = 0.0;
  double qh = 0.0;
  double cross = 0.0;     // Q(f0, fh)
  double harmonic_residual = 0.0;  // max |Delta fh| on the interior
  bool empty_ring = false;
  std::size_t level = 0;
};

RoydenSplit royden_split(const Truncation& t, std::span<const double> f, const SolverConfig& cfg = {});

/// Truncation view of a level: interior = everything but the grounded sphere.
Truncation level_truncation(const Level& lv);

using PotentialRule = std::function<Potential(const Graph&)>;

struct RoydenLevelEntry {
  std::size_t n = 0;
  std::size_t vertices = 0;
  double qh = 0.0;
  std::optional<double> sup_diff;     // on the window, against the previous level
  std::optional<double> energy_diff;
  bool exact = false;
};

struct RoydenLimitReport {
  std::vector<RoydenLevelEntry> levels;
  bool stabilized = false;
  std::string stabilized_by;          // "increments", "exhaustion" or ""
  std::vector<VertexId> window;
  std::vector<double> window_values;  // final f_h on the window
  bool constant_on_window = false;    // final f_h varies by less than tol on the window
  double tol = 1e-6;
  Graph final_graph;
  Potential final_fh;
  Potential final_f;
};

/// Royden splits over successive truncations. Stabilized when both window
/// sup-norm and energy increments of f_h drop below tol, or when the last
/// truncation is exact (no finer level exists).
RoydenLimitReport royden_limit(const std::vector<Truncation>& levels, const PotentialRule& rule,
                               std::span<const VertexId> window, double tol = 1e-6, const SolverConfig& cfg = {});

struct BoundaryAnchorData {
  std::vector<Index> region;  // vertices carrying the anchor value
  double value = 0.0;
  std::string label;
};

struct PhiResult {
  Potential f;                      // Lipschitz extension on the whole graph
  double lipschitz = 0.0;
  double energy = 0.0;              // Q(f)
  double certificate_bound = 0.0;   // L^2 m(X)
  bool certificate_ok = true;
  bool lipschitz_ok = true;
  double max_lipschitz_ratio = 0.0; // max |f(x)-f(y)| / sigma(x,y) over pairs with sigma > 0
  RoydenLimitReport report;
  Potential fh;                     // on the whole graph; boundary-layer vertices keep f
  bool ok = false;
};

/// Smallest L for which the anchor data are consistent: max |phi_i - phi_j| / sigma(region_i, region_j).
double minimal_lipschitz(const MetricObject& sigma, const std::vector<BoundaryAnchorData>& anchors);

/// f(x) = min_j (phi_j + L sigma(x, region_j)), then the Royden limit of f over `levels`.
PhiResult phi_boundary_to_harmonic(const Graph& g, const MetricObject& sigma, std::span<const double> m,
                                   const std::vector<BoundaryAnchorData>& anchors, double lipschitz,
                                   const std::vector<Truncation>& levels, std::span<const VertexId> window,
                                   double tol = 1e-6, const SolverConfig& cfg = {});

struct HarmonicRank {
  std::size_t rank = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> gram;         // row-major k x k
};

/// Rank of G_ij = Q(h_i, h_j) + h_i(o) h_j(o): eigenvalues above tol * max.
HarmonicRank harmonic_rank(const Graph& g, const std::vector<Potential>& family, VertexId o, double tol = 1e-8);

}  // namespace netpot
