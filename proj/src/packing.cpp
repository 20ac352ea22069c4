#include "netpot/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/io.hpp"

namespace netpot {

CirclePacking CirclePacking::make(std::vector<Disc> discs, double overlap_factor) {
  if (discs.empty()) throw Error(ErrorKind::invalid_argument, "packing has no discs");
  std::sort(discs.begin(), discs.end(), [](const Disc& a, const Disc& b) { return a.id < b.id; });
  CirclePacking p;
  p.min_r_ = std::numeric_limits<double>::infinity();
  p.box_ = {INFINITY, INFINITY, -INFINITY, -INFINITY};
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const auto& d = discs[i];
    if (i > 0 && discs[i - 1].id == d.id) throw Error(ErrorKind::parse, "duplicate disc id " + std::to_string(d.id));
    if (!(d.r > 0.0) || !std::isfinite(d.r) || !std::isfinite(d.x) || !std::isfinite(d.y)) {
      throw Error(ErrorKind::invalid_argument, "disc " + std::to_string(d.id) + " needs a finite center and r > 0");
    }
    p.min_r_ = std::min(p.min_r_, d.r);
    p.max_r_ = std::max(p.max_r_, d.r);
    p.box_ = {std::min(p.box_[0], d.x - d.r), std::min(p.box_[1], d.y - d.r), std::max(p.box_[2], d.x + d.r),
              std::max(p.box_[3], d.y + d.r)};
  }
  const double tol = overlap_factor * p.min_r_;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const double dist = std::hypot(discs[i].x - discs[j].x, discs[i].y - discs[j].y);
      if (dist < discs[i].r + discs[j].r - tol) {
        throw Error(ErrorKind::overlap, "discs " + std::to_string(discs[i].id) + " and " +
                                            std::to_string(discs[j].id) + " overlap");
      }
    }
  }
  p.discs_ = std::move(discs);
  return p;
}

CirclePacking parse_packing(std::string_view text) {
  std::vector<Disc> discs;
  std::size_t pos = 0;
  std::size_t line = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    auto f = split_fields(text.substr(pos, end - pos));
    pos = end + 1;
    if (f.empty()) continue;
    if (f.size() != 4) throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": expected id x y r");
    discs.push_back({parse_vertex(f[0]), parse_real(f[1]), parse_real(f[2]), parse_real(f[3])});
  }
  return CirclePacking::make(std::move(discs));
}

std::string format_packing(const CirclePacking& p) {
  std::string out;
  for (const auto& d : p.discs()) {
    out += std::to_string(d.id) + '\t' + format_double(d.x) + '\t' + format_double(d.y) + '\t' + format_double(d.r) +
           '\n';
  }
  return out;
}

CirclePacking hex_packing(double rho) {
  if (!(rho > 0.0) || !(rho < 0.5)) throw Error(ErrorKind::invalid_argument, "hex packing needs 0 < rho < 1/2");
  const double h = 2.0 * rho;
  const double lim = (1.0 - rho) * (1.0 - rho) + 1e-12;
  const int jmax = static_cast<int>(std::ceil(1.0 / (h * std::sqrt(3.0) / 2.0))) + 1;
  const int imax = static_cast<int>(std::ceil(1.0 / h)) + jmax + 1;
  std::vector<Disc> discs;
  VertexId id = 0;
  for (int j = -jmax; j <= jmax; ++j) {
    for (int i = -imax; i <= imax; ++i) {
      const double x = h * (i + 0.5 * j);
      const double y = h * (std::sqrt(3.0) / 2.0) * j;
      if (x * x + y * y <= lim) discs.push_back({id++, x, y, rho});
    }
  }
  return CirclePacking::make(std::move(discs));
}

std::vector<std::pair<Index, Index>> contact_pairs(const CirclePacking& p, std::optional<double> tol) {
  const double t = tol ? *tol : 1e-9 * p.min_radius();
  const auto& d = p.discs();
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < d.size(); ++i) {
    for (Index j = i + 1; j < d.size(); ++j) {
      const double gap = std::hypot(d[i].x - d[j].x, d[i].y - d[j].y) - (d[i].r + d[j].r);
      if (std::abs(gap) <= t) {
        out.emplace_back(i, j);
      } else if (gap > t && gap <= 1e3 * t) {
        throw Error(ErrorKind::contract, "discs " + std::to_string(d[i].id) + " and " + std::to_string(d[j].id) +
                                             " are nearly tangent (gap " + format_double(gap) +
                                             "); refusing to guess the contact");
      }
    }
  }
  return out;
}

Graph contact_graph(const CirclePacking& p, std::optional<double> tol, const ContactWeight& w) {
  const auto& d = p.discs();
  std::vector<VertexId> ids;
  for (const auto& disc : d) ids.push_back(disc.id);
  std::vector<WeightedEdge> edges;
  for (auto [i, j] : contact_pairs(p, tol)) edges.push_back({d[i].id, d[j].id, w ? w(d[i], d[j]) : 1.0});
  return Graph::from_edges(std::move(ids), edges);
}

CirclePacking invert_packing(const CirclePacking& p, double cx, double cy, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "inversion radius must be positive");
  std::vector<Disc> out;
  const double r2 = radius * radius;
  for (const auto& d : p.discs()) {
    const double dx = d.x - cx, dy = d.y - cy;
    const double den = dx * dx + dy * dy - d.r * d.r;
    if (!(den > 0.0)) {
      throw Error(ErrorKind::contract, "disc " + std::to_string(d.id) + " meets the inversion center");
    }
    out.push_back({d.id, cx + r2 * dx / den, cy + r2 * dy / den, r2 * d.r / den});
  }
  auto image = CirclePacking::make(std::move(out));
  if (contact_pairs(p) != contact_pairs(image)) {
    throw Error(ErrorKind::contract, "inversion changed the contact structure beyond tolerance");
  }
  return image;
}

PackingMetric packing_metric_measure(const CirclePacking& p, const Graph& g) {
  const auto& d = p.discs();
  const Index n = g.size();
  if (n != d.size()) throw Error(ErrorKind::invalid_argument, "graph and packing have different vertex counts");
  std::vector<Index> disc_of(n);
  for (Index i = 0; i < n; ++i) {
    auto it = std::lower_bound(d.begin(), d.end(), g.id(i), [](const Disc& a, VertexId id) { return a.id < id; });
    if (it == d.end() || it->id != g.id(i)) throw Error(ErrorKind::unknown_vertex, "graph vertex without a disc");
    disc_of[i] = static_cast<Index>(it - d.begin());
  }
  const double tol = 1e-9 * p.min_radius();
  for (const auto& e : g.edges()) {
    const auto& a = d[disc_of[e.u]];
    const auto& b = d[disc_of[e.v]];
    if (std::hypot(a.x - b.x, a.y - b.y) > a.r + b.r + tol) {
      throw Error(ErrorKind::contract, "edge " + std::to_string(a.id) + "-" + std::to_string(b.id) +
                                           " joins discs that do not touch");
    }
  }
  std::vector<double> mat(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto& a = d[disc_of[i]];
      const auto& b = d[disc_of[j]];
      mat[i * n + j] = i == j ? 0.0 : std::hypot(a.x - b.x, a.y - b.y);
    }
  }
  PackingMetric pm;
  pm.sigma = MetricObject::explicit_matrix(std::move(mat), n);
  auto on_edges = edge_restriction(g, pm.sigma);
  pm.m = tilde_energy(g, on_edges).local;
  pm.intrinsic = is_intrinsic_edges(g, on_edges, pm.m);
  pm.omega = g.max_degree();
  pm.mass = pm.intrinsic.total;
  auto box = p.bounding_box();
  pm.bounding_center = {(box[0] + box[2]) / 2, (box[1] + box[3]) / 2};
  for (const auto& disc : d) {
    pm.bounding_radius = std::max(pm.bounding_radius, std::hypot(disc.x - pm.bounding_center[0],
                                                                 disc.y - pm.bounding_center[1]) + disc.r);
  }
  pm.mass_bound = 2.0 * pm.omega / std::numbers::pi * std::numbers::pi * pm.bounding_radius * pm.bounding_radius;
  return pm;
}

void check_anchor(const CirclePacking& p, double wx, double wy) {
  for (const auto& d : p.discs()) {
    if (std::hypot(d.x - wx, d.y - wy) < d.r) {
      throw Error(ErrorKind::invalid_argument, "anchor lies inside disc " + std::to_string(d.id));
    }
  }
}

namespace {

const Disc& disc_for(const CirclePacking& p, VertexId id) {
  const auto& d = p.discs();
  auto it = std::lower_bound(d.begin(), d.end(), id, [](const Disc& a, VertexId v) { return a.id < v; });
  if (it == d.end() || it->id != id) throw Error(ErrorKind::unknown_vertex, "no disc with id " + std::to_string(id));
  return *it;
}

std::vector<double> center_distances(const CirclePacking& p, const Graph& g, double wx, double wy) {
  std::vector<double> out(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    const auto& d = disc_for(p, g.id(i));
    out[i] = std::hypot(d.x - wx, d.y - wy);
  }
  return out;
}

}  // namespace

Potential bump(const CirclePacking& p, const Graph& g, double wx, double wy, double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::invalid_argument, "bump scale must be positive");
  auto dist = center_distances(p, g, wx, wy);
  Potential f(g.size());
  for (Index i = 0; i < g.size(); ++i) f[i] = std::min(std::max(2.0 - dist[i] / r, 0.0), 1.0);
  return f;
}

std::vector<double> make_scales(ScaleSchedule kind, double r1, double r_last, std::size_t n) {
  if (!(r1 > 0.0) || n == 0) throw Error(ErrorKind::invalid_argument, "scales need r1 > 0 and n >= 1");
  std::vector<double> s;
  if (kind == ScaleSchedule::halving) {
    for (std::size_t k = 0; k < n; ++k) s.push_back(std::ldexp(r1, -static_cast<int>(k)));
    return s;
  }
  if (!(r_last > 0.0) || !(r_last < r1)) throw Error(ErrorKind::invalid_argument, "span scales need 0 < r_last < r1");
  if (n == 1) return {r1};
  const double q = std::pow(r_last / r1, 1.0 / static_cast<double>(n - 1));
  for (std::size_t k = 0; k < n; ++k) s.push_back(k + 1 == n ? r_last : r1 * std::pow(q, static_cast<double>(k)));
  return s;
}

double nearest_center_distance(const CirclePacking& p, double wx, double wy) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& d : p.discs()) best = std::min(best, std::hypot(d.x - wx, d.y - wy));
  return best;
}

CesaroResult cesaro_boundary_capacity(const CirclePacking& p, const Graph& g, const PackingMetric& pm, double wx,
                                      double wy, std::span<const double> scales) {
  check_anchor(p, wx, wy);
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] > 0.0) || (k > 0 && !(scales[k] < scales[k - 1]))) {
      throw Error(ErrorKind::invalid_argument, "scales must be positive and strictly decreasing");
    }
  }
  Measure m(pm.m);
  auto dist = center_distances(p, g, wx, wy);
  CesaroResult res;
  res.wx = wx;
  res.wy = wy;
  std::vector<Potential> fs;
  std::vector<double> norms;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const double r = scales[k];
    bool populated = std::any_of(dist.begin(), dist.end(), [&](double d) { return d <= r; });
    if (!populated) {
      res.truncated_at = k;
      break;
    }
    res.scales.push_back(r);
    auto f = bump(p, g, wx, wy, r);
    const double q = energy_value(g, f);
    const double mf = mass_norm_sq(m, f);
    res.q_f.push_back(q);
    res.m_f.push_back(mf);
    norms.push_back(std::sqrt(q + mf));
    fs.push_back(std::move(f));
  }
  const std::size_t used = fs.size();
  res.cross.assign(used * used, 0.0);
  for (std::size_t i = 0; i < used; ++i) {
    for (std::size_t j = i; j < used; ++j) {
      const double v = energy_bilinear(g, fs[i], fs[j]);
      res.cross[i * used + j] = v;
      res.cross[j * used + i] = v;
    }
  }
  Potential sum(g.size(), 0.0);
  double norm_sum = 0.0;
  for (std::size_t n = 1; n <= used; ++n) {
    for (Index i = 0; i < g.size(); ++i) sum[i] += fs[n - 1][i];
    norm_sum += norms[n - 1];
    const double r = res.scales[n - 1];
    Potential gn(g.size());
    for (Index i = 0; i < g.size(); ++i) gn[i] = sum[i] / static_cast<double>(n);
    double lo = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < g.size(); ++i) {
      if (dist[i] <= r) lo = std::min(lo, gn[i]);
    }
    const double factor = 1.0 / lo;
    for (double& v : gn) v *= factor;
    res.rescale.push_back(factor);
    res.low_confidence.push_back(lo < 0.5);
    const double val = energy_value(g, gn) + mass_norm_sq(m, gn);
    res.cesaro.push_back(val);
    const double bound = factor * factor * norm_sum * norm_sum / static_cast<double>(n * n);
    res.triangle_bound.push_back(bound);
    if (val > bound * (1.0 + 1e-12)) res.triangle_ok = false;
  }
  return res;
}

std::vector<std::array<double, 2>> circle_anchors(std::size_t n) {
  std::vector<std::array<double, 2>> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back({std::cos(t), std::sin(t)});
  }
  return out;
}

ResolvabilityReport resolvability_report(const CirclePacking& p, const Graph& g, const PackingMetric& pm,
                                         const std::vector<std::array<double, 2>>& anchors,
                                         const ResolvabilityConfig& cfg) {
  ResolvabilityReport rep;
  rep.note = "evidence on sampled boundary anchors; a finite packing cannot prove strong resolvability";
  bool all = !anchors.empty();
  for (const auto& a : anchors) {
    AnchorVerdict av;
    try {
      const double near = nearest_center_distance(p, a[0], a[1]);
      std::vector<double> scales;
      if (cfg.schedule == ScaleSchedule::span && near < cfg.r1) {
        scales = make_scales(ScaleSchedule::span, cfg.r1, near, cfg.depth);
      } else {
        scales = make_scales(ScaleSchedule::halving, cfg.r1, 0.0, cfg.depth);
      }
      av.cesaro = cesaro_boundary_capacity(p, g, pm, a[0], a[1], scales);
      const auto& c = av.cesaro.cesaro;
      if (c.size() >= 2) {
        // Trend test: least-squares slope against n is negative and the
        // final bound sits below the first.
        const double n = static_cast<double>(c.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
          sx += k;
          sy += c[k];
          sxx += double(k) * k;
          sxy += double(k) * c[k];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        av.decaying = slope < 0.0 && c.back() < c.front();
      }
    } catch (const Error& e) {
      av.error = e.what();
    }
    all = all && av.decaying;
    rep.anchors.push_back(std::move(av));
  }
  rep.consistent = all;
  return rep;
}

PackingLevels packing_levels(const CirclePacking& p, const Graph& g, double band, std::size_t count) {
  auto box = p.bounding_box();
  const double cx = (box[0] + box[2]) / 2, cy = (box[1] + box[3]) / 2;
  std::vector<double> reach(g.size());
  double r_out = 0.0;
  for (Index i = 0; i < g.size(); ++i) {
    const auto& d = disc_for(p, g.id(i));
    reach[i] = std::hypot(d.x - cx, d.y - cy) + d.r;
    r_out = std::max(r_out, reach[i]);
  }
  const double inner = r_out - band;
  PackingLevels out;
  for (Index i = 0; i < g.size(); ++i) {
    if (reach[i] >= inner) out.layer.push_back(i);
  }
  std::size_t prev_size = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    const double radius = inner * (1.0 - std::ldexp(1.0, -static_cast<int>(n)));
    std::vector<Index> interior;
    for (Index i = 0; i < g.size(); ++i) {
      if (reach[i] <= radius) interior.push_back(i);
    }
    if (interior.empty() || interior.size() == prev_size || interior.size() + out.layer.size() >= g.size()) continue;
    prev_size = interior.size();
    out.levels.push_back(induced_truncation(g, interior));
  }
  out.levels.push_back(boundary_layer_truncation(g, out.layer));
  const double wr = 0.25 * inner;
  for (Index i = 0; i < g.size(); ++i) {
    if (reach[i] <= wr) out.window.push_back(g.id(i));
  }
  return out;
}

std::vector<Index> anchor_region(const CirclePacking& p, const Graph& g, double wx, double wy, double radius) {
  auto dist = center_distances(p, g, wx, wy);
  std::vector<Index> out;
  for (Index i = 0; i < g.size(); ++i) {
    if (dist[i] <= radius) out.push_back(i);
  }
  return out;
}

}  // namespace netpot
