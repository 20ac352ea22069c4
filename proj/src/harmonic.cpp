#include "netpot/harmonic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "netpot/energy.hpp"
#include "netpot/error.hpp"

namespace netpot {

Potential laplacian_apply(const Graph& g, std::span<const double> f, const Measure* m) {
  if (f.size() != g.size()) throw Error(ErrorKind::invalid_argument, "potential size does not match graph");
  Potential out(g.size(), 0.0);
  for (Index i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto w = g.weights(i);
    if (m) {
      double s = 0.0;
      for (std::size_t k = 0; k < nb.size(); ++k) s += w[k] * (f[i] - f[nb[k]]);
      out[i] = s / (*m)[i];
    } else if (g.degree(i) > 0.0) {
      double s = 0.0;
      for (std::size_t k = 0; k < nb.size(); ++k) s += w[k] * f[nb[k]];
      out[i] = f[i] - s / g.degree(i);
    }
  }
  return out;
}

const char* to_string(HarmonicClass c) {
  switch (c) {
    case HarmonicClass::harmonic: return "harmonic";
    case HarmonicClass::superharmonic: return "superharmonic";
    case HarmonicClass::neither: return "neither";
  }
  return "?";
}

HarmonicityReport harmonicity_check(const Graph& g, std::span<const double> f, std::span<const Index> interior,
                                    double tol) {
  auto d = laplacian_apply(g, f);
  HarmonicityReport r;
  if (interior.empty()) return r;
  r.min_delta = std::numeric_limits<double>::infinity();
  r.max_delta = -std::numeric_limits<double>::infinity();
  for (Index i : interior) {
    r.max_residual = std::max(r.max_residual, std::abs(d[i]));
    r.min_delta = std::min(r.min_delta, d[i]);
    r.max_delta = std::max(r.max_delta, d[i]);
  }
  if (r.max_residual <= tol) {
    r.cls = HarmonicClass::harmonic;
  } else if (r.min_delta >= -tol) {
    r.cls = HarmonicClass::superharmonic;
  } else {
    r.cls = HarmonicClass::neither;
  }
  return r;
}

HarmonicExtension harmonic_extension(const Graph& g, std::span<const Index> boundary, std::span<const double> data,
                                     const SolverConfig& cfg) {
  if (boundary.empty()) throw Error(ErrorKind::invalid_argument, "harmonic extension needs a boundary");
  if (boundary.size() != data.size()) throw Error(ErrorKind::invalid_argument, "boundary data size mismatch");
  std::vector<char> fixed(g.size(), 0);
  std::vector<double> values(g.size(), 0.0);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    fixed[boundary[k]] = 1;
    values[boundary[k]] = data[k];
    lo = std::min(lo, data[k]);
    hi = std::max(hi, data[k]);
  }
  auto sol = solve_dirichlet(g, {}, fixed, values, cfg);
  const double slack = 1e-8 * std::max({1.0, std::abs(lo), std::abs(hi)});
  for (double x : sol.f) {
    if (x < lo - slack || x > hi + slack) {
      throw Error(ErrorKind::contract, "harmonic extension violates the maximum principle");
    }
  }
  return HarmonicExtension{std::move(sol.f), sol.residual};
}

RoydenSplit royden_split(const Truncation& t, std::span<const double> f, const SolverConfig& cfg) {
  const Graph& g = t.graph;
  if (f.size() != g.size()) throw Error(ErrorKind::invalid_argument, "potential size does not match truncation");
  RoydenSplit s;
  s.q = energy_value(g, f);
  if (t.ring.empty()) {
    s.empty_ring = true;
    s.f0.assign(f.begin(), f.end());
    s.fh.assign(g.size(), 0.0);
    s.q0 = s.q;
    return s;
  }
  std::vector<double> data;
  for (Index i : t.ring) data.push_back(f[i]);
  s.fh = harmonic_extension(g, t.ring, data, cfg).h;
  s.f0.resize(g.size());
  for (Index i = 0; i < g.size(); ++i) s.f0[i] = f[i] - s.fh[i];
  for (Index i : t.ring) s.f0[i] = 0.0;
  s.q0 = energy_value(g, s.f0);
  s.qh = energy_value(g, s.fh);
  s.cross = energy_bilinear(g, s.f0, s.fh);
  s.harmonic_residual = harmonicity_check(g, s.fh, t.interior, 0.0).max_residual;
  return s;
}

Truncation level_truncation(const Level& lv) {
  Truncation t;
  t.graph = lv.graph;
  std::vector<char> in_r(lv.graph.size(), 0);
  for (Index i : lv.grounded) in_r[i] = 1;
  for (Index i = 0; i < lv.graph.size(); ++i) {
    if (!in_r[i]) t.interior.push_back(i);
  }
  t.ring = lv.grounded;
  t.exact = lv.exhausted;
  return t;
}

RoydenLimitReport royden_limit(const std::vector<Truncation>& levels, const PotentialRule& rule,
                               std::span<const VertexId> window, double tol, const SolverConfig& cfg) {
  if (levels.empty()) throw Error(ErrorKind::invalid_argument, "royden limit needs at least one level");
  RoydenLimitReport rep;
  rep.tol = tol;
  rep.window.assign(window.begin(), window.end());
  std::vector<double> prev_window;
  std::optional<double> prev_q;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const auto& t = levels[n];
    Potential f = rule(t.graph);
    auto split = royden_split(t, f, cfg);
    RoydenLevelEntry e;
    e.n = n;
    e.vertices = t.graph.size();
    e.qh = split.qh;
    e.exact = t.exact;
    std::vector<double> wv;
    for (VertexId id : window) {
      auto i = t.graph.find(id);
      if (!i) throw Error(ErrorKind::invalid_argument, "window vertex " + std::to_string(id) + " missing at level " +
                                                           std::to_string(n));
      wv.push_back(split.fh[*i]);
    }
    if (prev_q) {
      double sup = 0.0;
      for (std::size_t k = 0; k < wv.size(); ++k) sup = std::max(sup, std::abs(wv[k] - prev_window[k]));
      e.sup_diff = sup;
      e.energy_diff = std::abs(split.qh - *prev_q);
    }
    prev_window = wv;
    prev_q = split.qh;
    rep.levels.push_back(e);
    if (n + 1 == levels.size()) {
      rep.window_values = wv;
      rep.final_graph = t.graph;
      rep.final_fh = split.fh;
      rep.final_f = std::move(f);
    }
  }
  const auto& last = rep.levels.back();
  if (last.sup_diff && *last.sup_diff < tol && *last.energy_diff < tol) {
    rep.stabilized = true;
    rep.stabilized_by = "increments";
  } else if (last.exact) {
    rep.stabilized = true;
    rep.stabilized_by = "exhaustion";
  }
  if (!rep.window_values.empty()) {
    auto [lo, hi] = std::minmax_element(rep.window_values.begin(), rep.window_values.end());
    rep.constant_on_window = (*hi - *lo) < tol;
  }
  return rep;
}

namespace {

double region_distance(const MetricObject& s, const std::vector<Index>& a, const std::vector<Index>& b) {
  double d = std::numeric_limits<double>::infinity();
  for (Index x : a) {
    auto row = s.row(x);
    for (Index y : b) d = std::min(d, row[y]);
  }
  return d;
}

}  // namespace

double minimal_lipschitz(const MetricObject& sigma, const std::vector<BoundaryAnchorData>& anchors) {
  double l = 0.0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      const double gap = std::abs(anchors[i].value - anchors[j].value);
      if (gap == 0.0) continue;
      const double sep = region_distance(sigma, anchors[i].region, anchors[j].region);
      if (!(sep > 0.0)) throw Error(ErrorKind::invalid_argument, "anchor regions with different values touch");
      l = std::max(l, gap / sep);
    }
  }
  return l;
}

PhiResult phi_boundary_to_harmonic(const Graph& g, const MetricObject& sigma, std::span<const double> m,
                                   const std::vector<BoundaryAnchorData>& anchors, double lipschitz,
                                   const std::vector<Truncation>& levels, std::span<const VertexId> window,
                                   double tol, const SolverConfig& cfg) {
  if (anchors.empty()) throw Error(ErrorKind::invalid_argument, "no boundary anchors");
  if (!(lipschitz >= 0.0)) throw Error(ErrorKind::invalid_argument, "Lipschitz constant must be non-negative");
  if (sigma.size() != g.size()) throw Error(ErrorKind::invalid_argument, "metric size does not match graph");
  for (const auto& a : anchors) {
    if (a.region.empty()) throw Error(ErrorKind::invalid_argument, "anchor " + a.label + " has an empty region");
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      const double gap = std::abs(anchors[i].value - anchors[j].value);
      const double sep = region_distance(sigma, anchors[i].region, anchors[j].region);
      if (gap > lipschitz * sep * (1.0 + 1e-12)) {
        throw Error(ErrorKind::invalid_argument, "anchors " + anchors[i].label + " and " + anchors[j].label +
                                                     " are inconsistent with the Lipschitz constant");
      }
    }
  }
  auto intr = is_intrinsic(g, sigma, m);
  if (!intr.intrinsic) throw Error(ErrorKind::contract, "metric is not intrinsic for the given measure");

  PhiResult out;
  out.lipschitz = lipschitz;
  out.f.assign(g.size(), std::numeric_limits<double>::infinity());
  for (const auto& a : anchors) {
    auto d = dist_to_set(sigma, a.region);
    for (Index x = 0; x < g.size(); ++x) out.f[x] = std::min(out.f[x], a.value + lipschitz * d[x]);
  }
  out.energy = energy_value(g, out.f);
  double mass = 0.0;
  for (double v : m) mass += v;
  out.certificate_bound = lipschitz * lipschitz * mass;
  out.certificate_ok = out.energy <= out.certificate_bound * (1.0 + 1e-12);
  for (Index x = 0; x < g.size(); ++x) {
    auto row = sigma.row(x);
    for (Index y = x + 1; y < g.size(); ++y) {
      const double df = std::abs(out.f[x] - out.f[y]);
      if (row[y] > 0.0) out.max_lipschitz_ratio = std::max(out.max_lipschitz_ratio, df / row[y]);
      if (df > lipschitz * row[y] * (1.0 + 1e-12) + 1e-15) out.lipschitz_ok = false;
    }
  }
  const Potential& f = out.f;
  PotentialRule rule = [&](const Graph& level) { return transfer(g, f, level, 0.0); };
  out.report = royden_limit(levels, rule, window, tol, cfg);
  out.fh = out.f;
  const auto& fg = out.report.final_graph;
  for (Index i = 0; i < fg.size(); ++i) out.fh[g.index(fg.id(i))] = out.report.final_fh[i];
  out.ok = out.report.stabilized && out.certificate_ok && out.lipschitz_ok;
  return out;
}

HarmonicRank harmonic_rank(const Graph& g, const std::vector<Potential>& family, VertexId o, double tol) {
  if (family.empty()) throw Error(ErrorKind::invalid_argument, "harmonic family is empty");
  const Index oi = g.index(o);
  const std::size_t k = family.size();
  Eigen::MatrixXd gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double v = energy_bilinear(g, family[i], family[j]) + family[i][oi] * family[j][oi];
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  HarmonicRank r;
  const auto& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    r.eigenvalues.push_back(ev[i]);
    if (ev[i] > tol * top) ++r.rank;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) r.gram.push_back(gram(i, j));
  }
  return r;
}

}  // namespace netpot
