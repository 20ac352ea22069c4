#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netpot/graph.hpp"
#include "netpot/linear_solve.hpp"
#include "netpot/metrics.hpp"

namespace netpot {

struct CapacityResult {
  double value = 0.0;        // recomputed from the optimizer: Q(f) + ||f||_m^2, or Q(f) when grounded
  double flux_value = 0.0;   // sum over U of ((L + M) f)(x), the solver-side value
  Potential optimizer;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool direct = false;
  std::string constraint;
};

/// Relative agreement required between the flux and the recomputed energy.
inline constexpr double kCapacityCrossCheck = 1e-10;

/// cap_m(U) = inf { Q(f) + ||f||_m^2 : f >= 1 on U } on a finite graph.
CapacityResult cap_finite(const Graph& g, const Measure& m, std::span<const Index> set, const SolverConfig& cfg = {});

/// inf { Q(f) : f = 1 on U, f = 0 on R }, the effective conductance between U and R.
CapacityResult effective_cap(const Graph& g, std::span<const Index> set, std::span<const Index> grounded,
                             const SolverConfig& cfg = {});

// ---------------------------------------------------------------------------
// Levels: finite pieces of a (possibly infinite) graph seen from a seed.
//
// The level at radius r is the ball B_r(seed) with its sphere S_r grounded.
// For generators this is generate(spec.with_radius(r)); for a fixed graph it
// is the truncation of B_{r-1}(seed), whose ring is S_r.
// ---------------------------------------------------------------------------

struct LevelSource {
  std::optional<GeneratorSpec> generator;
  Graph graph;
  VertexId seed = 0;
  std::size_t vertex_cap = kDefaultVertexCap;

  static LevelSource from_generator(const GeneratorSpec& spec, std::size_t vertex_cap = kDefaultVertexCap);
  static LevelSource from_graph(Graph g, VertexId seed);
};

struct Level {
  int radius = 0;
  Graph graph;
  Index source = 0;
  std::vector<Index> grounded;  // sphere S_r, sorted
  bool exhausted = false;       // nothing left to ground: the source covers the whole graph
};

Level materialize_level(const LevelSource& src, int radius);

// ---------------------------------------------------------------------------
// Flows

struct FlowBound {
  double value = 0.0;   // flux^2 / sum flow^2 / b
  double flux = 0.0;
  double energy = 0.0;
  double max_imbalance = 0.0;
};

/// Thomson lower bound on effective_cap(U; R) from an oriented edge flow
/// (value k flows from edges()[k].u to edges()[k].v).
FlowBound flow_lower_bound(const Graph& g, std::span<const Index> set, std::span<const Index> grounded,
                           std::span<const double> flow);

/// Unit flow from `source` pushed outward along BFS levels, split among
/// next-level neighbours in proportion to b. Every vertex before the
/// grounded sphere must have such a neighbour.
EdgeFunction radial_flow(const Graph& g, Index source, std::span<const Index> grounded);
/// Current b(x,y)(f(x) - f(y)) of a potential.
EdgeFunction harmonic_flow(const Graph& g, std::span<const double> f);

// ---------------------------------------------------------------------------
// Sequences

enum class MeasureRule { unit, given };

struct TailEntry {
  int radius = 0;
  double tail_cap = 0.0;     // cap_m(X_N \ F_n), F_n = B_{r_n - 1}
  double effective = 0.0;    // effective_cap(seed; S_{r_n})
  double residual = 0.0;
};

struct TailSequence {
  std::vector<TailEntry> entries;
  std::size_t outer_vertices = 0;
};

/// For a given measure (MeasureRule::given) `m` must be defined on the source
/// graph (fixed-graph sources only) and is transferred by vertex id.
TailSequence cap_tail_sequence(const LevelSource& src, std::span<const int> radii, MeasureRule rule,
                               const Measure* m = nullptr, const SolverConfig& cfg = {});

struct SliceCertificate {
  std::vector<double> norms_sq;       // ||S_n o f||_{Q,m}^2
  std::vector<double> energies;       // Q(S_n o f)
  std::vector<double> partial_sums;   // sum_{k<N} Q(S_k o f), N = 1..N_max
  std::vector<double> clamp_energies; // Q(C_[0,N] o f)
  bool superadditive = true;
  bool terminated = false;            // S_n o f vanished before N_max
};

SliceCertificate zero_cap_certificate(const Graph& g, const Measure& m, std::span<const double> f, int n_max);

struct NeighborhoodBasis {
  std::vector<std::vector<Index>> sets;  // U_k intersected with the truncation
  std::vector<std::string> labels;
};

/// Euclidean balls {x : |p(x) - w| < rho_k} around an anchor.
NeighborhoodBasis euclidean_basis(std::span<const double> xs, std::span<const double> ys, double wx, double wy,
                                  std::span<const double> rhos);

struct BoundaryCapEntry {
  std::size_t k = 0;
  bool skipped = false;
  std::size_t size = 0;
  double value = 0.0;
};

std::vector<BoundaryCapEntry> boundary_cap_upper(const Graph& g, const Measure& m, const NeighborhoodBasis& basis,
                                                 const SolverConfig& cfg = {});

/// inf of f over the complement of each set (tail liminf proxy); +inf when empty.
std::vector<double> liminf_at_infinity(std::span<const double> f, const std::vector<std::vector<Index>>& sets);
/// inf of f over each basis set; +inf when empty.
std::vector<double> liminf_at_basis(std::span<const double> f, const NeighborhoodBasis& basis);

// ---------------------------------------------------------------------------
// Recurrence classifier

enum class Classification { recurrent, transient, inconclusive };
const char* to_string(Classification c);

enum class FlowMode { radial, harmonic, none };

struct ClassifierConfig {
  double zero_threshold = 1e-3;
  double stabilization_tol = 0.05;
  double fit_tol = 0.05;          // rms of log-residuals accepted for a decay fit
  double slope_ratio_min = 0.9;   // last/first slope of 1/cap against log r
  FlowMode flow = FlowMode::radial;
  SolverConfig solver;
};

struct LevelResult {
  int radius = 0;
  std::size_t vertices = 0;
  double value = 0.0;
  double residual = 0.0;
  std::optional<double> flow_bound;
  bool exhausted = false;
};

struct DecayFit {
  std::string model;   // "power": c r^-a, "inverse_log": c (log r)^-a
  double log_c = 0.0;
  double exponent = 0.0;
  double rss = 0.0;
  double rms = 0.0;
};

struct Verdict {
  Classification classification = Classification::inconclusive;
  std::vector<LevelResult> levels;
  std::vector<DecayFit> fits;
  std::optional<std::size_t> best_fit;
  std::optional<double> relative_change;
  std::optional<double> slope_ratio;
  std::optional<double> crossing_radius;  // fitted radius where cap reaches zero_threshold
  std::optional<double> flow_bound;       // at the final level
  std::string reason;
  ClassifierConfig config;
};

std::vector<DecayFit> fit_decay(std::span<const int> radii, std::span<const double> caps);

Verdict recurrence_classifier(const LevelSource& src, std::span<const int> radii, const ClassifierConfig& cfg = {});

// ---------------------------------------------------------------------------
// Certificates from an intrinsic metric

struct MetricCertificateLevel {
  std::size_t n = 0;
  double energy = 0.0;
  double bound = 0.0;  // 2 m(X \ F_n)
  bool holds = true;
  bool support_ok = true;
  std::size_t support = 0;
  Potential g;
};

/// g_F = (1 - sigma_F)_+ for each F in `sets`; throws unless sigma is intrinsic for m.
std::vector<MetricCertificateLevel> recurrence_certificate_from_metric(const Graph& g, const MetricObject& sigma,
                                                                       std::span<const double> m,
                                                                       const std::vector<std::vector<Index>>& sets,
                                                                       double rel_slack = 1e-12);

}  // namespace netpot
