#include "netpot/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/summation.hpp"

namespace netpot {

namespace {

constexpr double kMonotoneSlack = 1e-9;
constexpr double kBoxSlack = 1e-8;

std::vector<char> mask_of(Index n, std::span<const Index> set, const char* what) {
  std::vector<char> mask(n, 0);
  for (Index i : set) {
    if (i >= n) throw Error(ErrorKind::unknown_vertex, std::string(what) + " index out of range");
    mask[i] = 1;
  }
  return mask;
}

struct Solved {
  SolveResult sol;
  double value = 0.0;
  double flux = 0.0;
};

// Solves, recomputes the objective from the optimizer and compares it with
// the flux through U. An iterative solve that misses the agreement target is
// repeated once at a tighter residual before giving up.
Solved solve_and_check(const Graph& g, std::span<const double> mass, const std::vector<char>& fixed,
                       const std::vector<double>& values, const std::vector<char>& in_u, const SolverConfig& cfg) {
  SolverConfig c = cfg;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Solved s;
    s.sol = solve_dirichlet(g, mass, fixed, values, c);
    const auto& f = s.sol.f;
    s.value = energy_value(g, f) + (mass.empty() ? 0.0 : [&] {
      CompensatedSum acc;
      for (Index i = 0; i < g.size(); ++i) acc.add(mass[i] * f[i] * f[i]);
      return acc.value();
    }());
    auto lf = laplacian_times(g, f);
    CompensatedSum flux;
    for (Index i = 0; i < g.size(); ++i) {
      if (in_u[i]) flux.add(lf[i] + (mass.empty() ? 0.0 : mass[i] * f[i]));
    }
    s.flux = flux.value();
    const double scale = std::max(std::abs(s.value), std::numeric_limits<double>::min());
    if (std::abs(s.flux - s.value) <= kCapacityCrossCheck * scale) return s;
    if (s.sol.direct || attempt == 1) {
      throw Error(ErrorKind::solver, "capacity cross-check failed: flux " + std::to_string(s.flux) + " vs energy " +
                                         std::to_string(s.value));
    }
    c.rel_tol = cfg.rel_tol * 1e-3;
  }
  throw Error(ErrorKind::solver, "unreachable");
}

void check_box(const Potential& f) {
  for (double x : f) {
    if (x < -kBoxSlack || x > 1.0 + kBoxSlack) {
      throw Error(ErrorKind::contract, "capacity optimizer left [0,1]: " + std::to_string(x));
    }
  }
}

}  // namespace

CapacityResult cap_finite(const Graph& g, const Measure& m, std::span<const Index> set, const SolverConfig& cfg) {
  if (m.size() != g.size()) throw Error(ErrorKind::invalid_argument, "measure size does not match graph");
  CapacityResult r;
  r.constraint = "f >= 1 on U (" + std::to_string(set.size()) + " vertices)";
  r.optimizer.assign(g.size(), 0.0);
  if (set.empty()) return r;
  auto in_u = mask_of(g.size(), set, "capacity set");
  std::vector<double> values(g.size(), 0.0);
  for (Index i : set) values[i] = 1.0;
  auto s = solve_and_check(g, m.values(), in_u, values, in_u, cfg);
  check_box(s.sol.f);
  r.value = s.value;
  r.flux_value = s.flux;
  r.optimizer = std::move(s.sol.f);
  r.residual = s.sol.residual;
  r.iterations = s.sol.iterations;
  r.direct = s.sol.direct;
  return r;
}

CapacityResult effective_cap(const Graph& g, std::span<const Index> set, std::span<const Index> grounded,
                             const SolverConfig& cfg) {
  if (set.empty() || grounded.empty()) throw Error(ErrorKind::invalid_argument, "effective capacity needs U and R");
  auto in_u = mask_of(g.size(), set, "source set");
  auto in_r = mask_of(g.size(), grounded, "grounded set");
  std::vector<char> fixed(g.size(), 0);
  std::vector<double> values(g.size(), 0.0);
  for (Index i = 0; i < g.size(); ++i) {
    if (in_u[i] && in_r[i]) throw Error(ErrorKind::invalid_argument, "source and grounded sets overlap");
    fixed[i] = in_u[i] || in_r[i];
    values[i] = in_u[i] ? 1.0 : 0.0;
  }
  auto s = solve_and_check(g, {}, fixed, values, in_u, cfg);
  check_box(s.sol.f);
  CapacityResult r;
  r.constraint = "f = 1 on U (" + std::to_string(set.size()) + "), f = 0 on R (" + std::to_string(grounded.size()) +
                 ")";
  r.value = s.value;
  r.flux_value = s.flux;
  r.optimizer = std::move(s.sol.f);
  r.residual = s.sol.residual;
  r.iterations = s.sol.iterations;
  r.direct = s.sol.direct;
  return r;
}

// ---------------------------------------------------------------------------

LevelSource LevelSource::from_generator(const GeneratorSpec& spec, std::size_t vertex_cap) {
  LevelSource s;
  s.vertex_cap = vertex_cap;
  if (spec.family == Family::path || spec.family == Family::cycle) {
    s.graph = generate(spec, vertex_cap);
  } else {
    s.generator = spec;
  }
  s.seed = generator_root(spec);
  return s;
}

LevelSource LevelSource::from_graph(Graph g, VertexId seed) {
  LevelSource s;
  g.index(seed);
  s.graph = std::move(g);
  s.seed = seed;
  return s;
}

Level materialize_level(const LevelSource& src, int radius) {
  if (radius < 1) throw Error(ErrorKind::invalid_argument, "level radius must be at least 1");
  Level lv;
  lv.radius = radius;
  if (src.generator) {
    lv.graph = generate(src.generator->with_radius(radius), src.vertex_cap);
    lv.source = lv.graph.index(src.seed);
    auto dist = hop_distances(lv.graph, lv.source);
    for (Index i = 0; i < lv.graph.size(); ++i) {
      if (dist[i] == radius) lv.grounded.push_back(i);
    }
    lv.exhausted = lv.grounded.empty();
    return lv;
  }
  const Graph& g = src.graph;
  const Index seed = g.index(src.seed);
  auto dist = hop_distances(g, seed);
  std::vector<Index> inner;
  for (Index i = 0; i < g.size(); ++i) {
    if (dist[i] <= radius - 1) inner.push_back(i);
  }
  Truncation t = induced_truncation(g, inner);
  lv.graph = std::move(t.graph);
  lv.source = lv.graph.index(src.seed);
  lv.grounded = std::move(t.ring);
  lv.exhausted = lv.grounded.empty();
  return lv;
}

// ---------------------------------------------------------------------------

FlowBound flow_lower_bound(const Graph& g, std::span<const Index> set, std::span<const Index> grounded,
                           std::span<const double> flow) {
  if (flow.size() != g.edge_count()) throw Error(ErrorKind::invalid_argument, "flow size does not match graph");
  auto in_u = mask_of(g.size(), set, "source set");
  auto in_r = mask_of(g.size(), grounded, "grounded set");
  std::vector<CompensatedSum> out(g.size());
  CompensatedSum energy;
  for (Index k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    out[e.u].add(flow[k]);
    out[e.v].add(-flow[k]);
    energy.add(flow[k] * flow[k] / e.b);
  }
  FlowBound fb;
  CompensatedSum flux;
  for (Index i = 0; i < g.size(); ++i) {
    if (in_u[i]) flux.add(out[i].value());
  }
  fb.flux = flux.value();
  const double tol = 1e-10 * std::max(1.0, std::abs(fb.flux));
  for (Index i = 0; i < g.size(); ++i) {
    if (in_u[i] || in_r[i]) continue;
    const double imb = std::abs(out[i].value());
    fb.max_imbalance = std::max(fb.max_imbalance, imb);
    if (imb > tol) {
      throw Error(ErrorKind::contract, "flow violates conservation at vertex " + std::to_string(g.id(i)));
    }
  }
  if (fb.flux == 0.0) throw Error(ErrorKind::contract, "flow carries no flux out of U");
  fb.energy = energy.value();
  fb.value = fb.flux * fb.flux / fb.energy;
  return fb;
}

EdgeFunction radial_flow(const Graph& g, Index source, std::span<const Index> grounded) {
  auto in_r = mask_of(g.size(), grounded, "grounded set");
  auto dist = hop_distances(g, source);
  std::vector<Index> order(g.size());
  for (Index i = 0; i < g.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return dist[a] < dist[b]; });
  std::vector<double> inflow(g.size(), 0.0);
  inflow[source] = 1.0;
  EdgeFunction flow(g.edge_count(), 0.0);
  for (Index v : order) {
    if (in_r[v] || inflow[v] == 0.0) continue;
    auto nb = g.neighbors(v);
    auto w = g.weights(v);
    auto ids = g.edge_ids(v);
    double total = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (dist[nb[k]] == dist[v] + 1) total += w[k];
    }
    if (total == 0.0) {
      throw Error(ErrorKind::contract, "radial flow hits a dead end at vertex " + std::to_string(g.id(v)));
    }
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (dist[nb[k]] != dist[v] + 1) continue;
      const double amount = inflow[v] * w[k] / total;
      flow[ids[k]] += (v < nb[k]) ? amount : -amount;
      inflow[nb[k]] += amount;
    }
  }
  return flow;
}

EdgeFunction harmonic_flow(const Graph& g, std::span<const double> f) {
  EdgeFunction flow(g.edge_count());
  for (Index k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    flow[k] = e.b * (f[e.u] - f[e.v]);
  }
  return flow;
}

// ---------------------------------------------------------------------------

TailSequence cap_tail_sequence(const LevelSource& src, std::span<const int> radii, MeasureRule rule, const Measure* m,
                               const SolverConfig& cfg) {
  if (radii.size() < 2) throw Error(ErrorKind::invalid_argument, "tail sequence needs at least two levels");
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (radii[k] <= radii[k - 1]) throw Error(ErrorKind::invalid_argument, "radii must be strictly increasing");
  }
  Level outer = materialize_level(src, radii.back());
  const Graph& x = outer.graph;
  Measure mx;
  if (rule == MeasureRule::unit) {
    mx = Measure::unit(x.size());
  } else {
    if (!m || src.generator) throw Error(ErrorKind::invalid_argument, "a given measure needs a fixed source graph");
    mx = Measure(transfer(src.graph, m->values(), x, 0.0));
  }
  auto dist = hop_distances(x, outer.source);
  TailSequence seq;
  seq.outer_vertices = x.size();
  for (int r : radii) {
    TailEntry e;
    e.radius = r;
    std::vector<Index> tail;
    for (Index i = 0; i < x.size(); ++i) {
      if (dist[i] > r - 1) tail.push_back(i);
    }
    e.tail_cap = cap_finite(x, mx, tail, cfg).value;
    Level lv = materialize_level(src, r);
    if (lv.exhausted) throw Error(ErrorKind::invalid_argument, "radius " + std::to_string(r) + " exhausts the graph");
    const Index s[] = {lv.source};
    auto eff = effective_cap(lv.graph, s, lv.grounded, cfg);
    e.effective = eff.value;
    e.residual = eff.residual;
    if (!seq.entries.empty()) {
      const auto& prev = seq.entries.back();
      if (e.tail_cap > prev.tail_cap * (1.0 + kMonotoneSlack) ||
          e.effective > prev.effective * (1.0 + kMonotoneSlack)) {
        throw Error(ErrorKind::contract, "capacity sequence is not monotone at radius " + std::to_string(r));
      }
    }
    seq.entries.push_back(e);
  }
  return seq;
}

SliceCertificate zero_cap_certificate(const Graph& g, const Measure& m, std::span<const double> f, int n_max) {
  if (f.size() != g.size()) throw Error(ErrorKind::invalid_argument, "potential size does not match graph");
  double top = 0.0;
  for (double x : f) {
    if (x < 0.0) throw Error(ErrorKind::invalid_argument, "slicing certificate needs f >= 0");
    top = std::max(top, x);
  }
  SliceCertificate c;
  CompensatedSum partial;
  for (int n = 0; n < n_max; ++n) {
    auto fn = contraction_apply(f, Contraction::slice(n));
    const double q = energy_value(g, fn);
    c.energies.push_back(q);
    c.norms_sq.push_back(q + mass_norm_sq(m, fn));
    partial.add(q);
    c.partial_sums.push_back(partial.value());
    const double qc = energy_value(g, contraction_apply(f, Contraction::clamp(0.0, n + 1.0)));
    c.clamp_energies.push_back(qc);
    if (c.partial_sums.back() > qc * (1.0 + 1e-12)) c.superadditive = false;
    if (top <= n) c.terminated = true;
  }
  return c;
}

NeighborhoodBasis euclidean_basis(std::span<const double> xs, std::span<const double> ys, double wx, double wy,
                                  std::span<const double> rhos) {
  NeighborhoodBasis b;
  for (double rho : rhos) {
    std::vector<Index> set;
    for (Index i = 0; i < xs.size(); ++i) {
      if (std::hypot(xs[i] - wx, ys[i] - wy) < rho) set.push_back(i);
    }
    b.sets.push_back(std::move(set));
    b.labels.push_back("ball(" + std::to_string(rho) + ")");
  }
  return b;
}

std::vector<BoundaryCapEntry> boundary_cap_upper(const Graph& g, const Measure& m, const NeighborhoodBasis& basis,
                                                 const SolverConfig& cfg) {
  std::vector<BoundaryCapEntry> out;
  std::vector<char> prev(g.size(), 1);
  std::optional<double> last;
  for (std::size_t k = 0; k < basis.sets.size(); ++k) {
    const auto& set = basis.sets[k];
    auto mask = mask_of(g.size(), set, "basis set");
    for (Index i : set) {
      if (!prev[i]) throw Error(ErrorKind::invalid_argument, "neighborhood basis is not decreasing");
    }
    prev = mask;
    BoundaryCapEntry e;
    e.k = k;
    e.size = set.size();
    if (set.empty()) {
      e.skipped = true;
      out.push_back(e);
      continue;
    }
    e.value = cap_finite(g, m, set, cfg).value;
    if (last && e.value > *last * (1.0 + kMonotoneSlack)) {
      throw Error(ErrorKind::contract, "boundary capacity bounds are not non-increasing");
    }
    last = e.value;
    out.push_back(e);
  }
  return out;
}

std::vector<double> liminf_at_infinity(std::span<const double> f, const std::vector<std::vector<Index>>& sets) {
  std::vector<double> out;
  for (const auto& set : sets) {
    std::vector<char> in(f.size(), 0);
    for (Index i : set) in[i] = 1;
    double v = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < f.size(); ++i) {
      if (!in[i]) v = std::min(v, f[i]);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> liminf_at_basis(std::span<const double> f, const NeighborhoodBasis& basis) {
  std::vector<double> out;
  for (const auto& set : basis.sets) {
    double v = std::numeric_limits<double>::infinity();
    for (Index i : set) v = std::min(v, f[i]);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(Classification c) {
  switch (c) {
    case Classification::recurrent: return "Recurrent";
    case Classification::transient: return "Transient";
    case Classification::inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

DecayFit least_squares(const std::string& model, const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  DecayFit fit;
  fit.model = model;
  const double slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.exponent = -slope;
  fit.log_c = my - slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.log_c + slope * x[i]);
    fit.rss += r * r;
  }
  fit.rms = std::sqrt(fit.rss / n);
  return fit;
}

}  // namespace

std::vector<DecayFit> fit_decay(std::span<const int> radii, std::span<const double> caps) {
  std::vector<double> lr, llr, lc, lc2;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(caps[i] > 0.0)) continue;
    lr.push_back(std::log(static_cast<double>(radii[i])));
    lc.push_back(std::log(caps[i]));
    if (radii[i] >= 2) {
      llr.push_back(std::log(std::log(static_cast<double>(radii[i]))));
      lc2.push_back(std::log(caps[i]));
    }
  }
  std::vector<DecayFit> fits;
  if (lr.size() >= 2) fits.push_back(least_squares("power", lr, lc));
  if (llr.size() >= 2) fits.push_back(least_squares("inverse_log", llr, lc2));
  return fits;
}

namespace {

std::optional<double> crossing(const DecayFit& f, double threshold) {
  if (!(f.exponent > 0.0)) return std::nullopt;
  const double t = (f.log_c - std::log(threshold)) / f.exponent;
  const double r = f.model == "power" ? std::exp(t) : std::exp(std::exp(t));
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

std::optional<std::size_t> best_vanishing(const std::vector<DecayFit>& fits) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (!(fits[i].exponent > 0.0)) continue;
    if (!best || fits[i].rms < fits[*best].rms) best = i;
  }
  return best;
}

}  // namespace

Verdict recurrence_classifier(const LevelSource& src, std::span<const int> radii, const ClassifierConfig& cfg) {
  Verdict v;
  v.config = cfg;
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (radii[k] <= radii[k - 1]) throw Error(ErrorKind::invalid_argument, "radii must be strictly increasing");
  }
  std::vector<int> used;
  std::vector<double> caps;
  for (int r : radii) {
    Level lv = materialize_level(src, r);
    LevelResult lr;
    lr.radius = r;
    lr.vertices = lv.graph.size();
    if (lv.exhausted) {
      lr.exhausted = true;
      v.levels.push_back(lr);
      v.reason = "the schedule exhausts the graph at radius " + std::to_string(r) +
                 ": a finite graph has no ring left to ground";
      return v;
    }
    const Index s[] = {lv.source};
    auto cap = effective_cap(lv.graph, s, lv.grounded, cfg.solver);
    lr.value = cap.value;
    lr.residual = cap.residual;
    if (cfg.flow != FlowMode::none) {
      try {
        auto flow = cfg.flow == FlowMode::radial ? radial_flow(lv.graph, lv.source, lv.grounded)
                                                 : harmonic_flow(lv.graph, cap.optimizer);
        lr.flow_bound = flow_lower_bound(lv.graph, s, lv.grounded, flow).value;
      } catch (const Error&) {
        lr.flow_bound.reset();
      }
    }
    if (!caps.empty() && lr.value > caps.back() * (1.0 + kMonotoneSlack)) {
      throw Error(ErrorKind::contract, "effective capacity increased from radius " + std::to_string(used.back()) +
                                           " to " + std::to_string(r));
    }
    used.push_back(r);
    caps.push_back(lr.value);
    v.levels.push_back(lr);
  }
  if (caps.size() < 2) {
    v.reason = "fewer than two levels";
    return v;
  }
  v.flow_bound = v.levels.back().flow_bound;
  v.fits = fit_decay(used, caps);
  v.best_fit = best_vanishing(v.fits);
  const double last = caps.back(), prev = caps[caps.size() - 2];
  v.relative_change = (prev - last) / prev;
  if (caps.size() >= 3) {
    auto slope = [&](std::size_t i) {
      return (1.0 / caps[i + 1] - 1.0 / caps[i]) / (std::log(double(used[i + 1])) - std::log(double(used[i])));
    };
    const double first = slope(0), lastslope = slope(caps.size() - 2);
    if (first > 0.0) v.slope_ratio = lastslope / first;
  }
  if (v.best_fit) v.crossing_radius = crossing(v.fits[*v.best_fit], cfg.zero_threshold);

  if (*std::min_element(caps.begin(), caps.end()) < cfg.zero_threshold && v.best_fit) {
    v.classification = Classification::recurrent;
    v.reason = "capacity upper bounds fell below the zero threshold";
    return v;
  }
  if (*v.relative_change < cfg.stabilization_tol) {
    if (cfg.flow == FlowMode::none) {
      v.classification = Classification::transient;
      v.reason = "capacity sequence stabilized";
    } else if (v.flow_bound && *v.flow_bound > 0.0) {
      v.classification = Classification::transient;
      v.reason = "capacity sequence stabilized and a flow certifies a positive lower bound";
    } else {
      v.reason = "capacity sequence stabilized but no flow lower bound is available";
    }
    return v;
  }
  if (caps.size() >= 3 && v.best_fit && v.fits[*v.best_fit].rms <= cfg.fit_tol && v.slope_ratio &&
      *v.slope_ratio >= cfg.slope_ratio_min) {
    v.classification = Classification::recurrent;
    v.reason = "decay fit with non-saturating resistance growth; fitted capacity reaches the zero threshold";
    return v;
  }
  v.reason = "neither stabilization nor sustained decay";
  return v;
}

// ---------------------------------------------------------------------------

std::vector<MetricCertificateLevel> recurrence_certificate_from_metric(const Graph& g, const MetricObject& sigma,
                                                                       std::span<const double> m,
                                                                       const std::vector<std::vector<Index>>& sets,
                                                                       double rel_slack) {
  auto rep = is_intrinsic(g, sigma, m);
  if (!rep.intrinsic) throw Error(ErrorKind::contract, "metric is not intrinsic for the given measure");
  std::vector<MetricCertificateLevel> out;
  for (std::size_t n = 0; n < sets.size(); ++n) {
    MetricCertificateLevel lv;
    lv.n = n;
    auto su = dist_to_set(sigma, sets[n]);
    lv.g.resize(g.size());
    for (Index i = 0; i < g.size(); ++i) {
      lv.g[i] = std::max(1.0 - su[i], 0.0);
      if (lv.g[i] > 0.0) {
        ++lv.support;
        if (!(su[i] < 1.0)) lv.support_ok = false;
      }
    }
    for (Index i : sets[n]) {
      if (lv.g[i] != 1.0) lv.support_ok = false;
    }
    std::vector<char> in(g.size(), 0);
    for (Index i : sets[n]) in[i] = 1;
    double outside = 0.0;
    for (Index i = 0; i < g.size(); ++i) {
      if (!in[i]) outside += m[i];
    }
    lv.energy = energy_value(g, lv.g);
    lv.bound = 2.0 * outside;
    lv.holds = lv.energy <= lv.bound * (1.0 + rel_slack);
    out.push_back(std::move(lv));
  }
  return out;
}

}  // namespace netpot
