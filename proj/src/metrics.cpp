#include "netpot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/io.hpp"

namespace netpot {

MetricObject MetricObject::explicit_matrix(std::vector<double> data, Index n) {
  if (n > kExplicitMetricCap) {
    throw Error(ErrorKind::invalid_argument, "explicit metrics are limited to " + std::to_string(kExplicitMetricCap) +
                                                 " vertices; use a path metric");
  }
  if (data.size() != n * n) throw Error(ErrorKind::invalid_argument, "metric matrix is not square");
  MetricObject s;
  s.n_ = n;
  s.dense_ = std::move(data);
  return s;
}

MetricObject MetricObject::path(const Graph& g, EdgeFunction w) {
  if (w.size() != g.edge_count()) throw Error(ErrorKind::invalid_argument, "edge function size does not match graph");
  for (double x : w) {
    if (!(x >= 0.0)) throw Error(ErrorKind::invalid_argument, "path metric needs w >= 0");
  }
  MetricObject s;
  s.n_ = g.size();
  s.graph_ = std::make_shared<const Graph>(g);
  s.w_ = std::make_shared<const EdgeFunction>(std::move(w));
  s.cache_ = std::make_shared<Cache>();
  return s;
}

std::vector<double> MetricObject::row(Index x) const {
  if (!graph_) return {dense_.begin() + x * n_, dense_.begin() + (x + 1) * n_};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->rows.find(x); it != cache_->rows.end()) return it->second;
  }
  auto r = path_metric_from(*graph_, *w_, x);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->rows.emplace(x, r);
  return r;
}

double MetricObject::operator()(Index x, Index y) const {
  if (!graph_) return dense_[x * n_ + y];
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->rows.find(x); it != cache_->rows.end()) return it->second[y];
    if (auto it = cache_->rows.find(y); it != cache_->rows.end()) return it->second[x];
  }
  return row(x)[y];
}

bool MetricObject::is_metric() const {
  for (Index x = 0; x < n_; ++x) {
    auto r = row(x);
    for (Index y = 0; y < n_; ++y) {
      if (y != x && !(r[y] > 0.0)) return false;
    }
  }
  return true;
}

PseudometricCheck is_pseudometric(const MetricObject& s, double slack, std::size_t samples, std::uint64_t seed) {
  PseudometricCheck out;
  const Index n = s.size();
  std::vector<std::vector<double>> rows(n);
  for (Index x = 0; x < n; ++x) rows[x] = s.row(x);
  for (Index x = 0; x < n; ++x) {
    if (rows[x][x] != 0.0) {
      out.ok = false;
      out.reason = "diagonal";
      out.triple = std::array<Index, 3>{x, x, x};
      return out;
    }
    for (Index y = 0; y < n; ++y) {
      if (!(rows[x][y] >= 0.0)) {
        out.ok = false;
        out.reason = "negative";
        out.triple = std::array<Index, 3>{x, y, y};
        return out;
      }
      if (std::abs(rows[x][y] - rows[y][x]) > slack * std::max(rows[x][y], rows[y][x])) {
        out.ok = false;
        out.reason = "symmetry";
        out.triple = std::array<Index, 3>{x, y, x};
        return out;
      }
    }
  }
  auto violates = [&](Index a, Index b, Index c) {
    return rows[a][c] > (rows[a][b] + rows[b][c]) * (1.0 + slack);
  };
  auto fail = [&](Index a, Index b, Index c) {
    out.ok = false;
    out.reason = "triangle";
    out.triple = std::array<Index, 3>{a, b, c};
  };
  if (n <= kExhaustiveTriangleCap) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index c = a + 1; c < n; ++c) {
          if (violates(a, b, c)) {
            fail(a, b, c);
            return out;
          }
        }
      }
    }
    return out;
  }
  out.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (violates(a, b, c)) {
      fail(a, b, c);
      return out;
    }
  }
  return out;
}

EdgeFunction edge_restriction(const Graph& g, const MetricObject& s) {
  if (s.size() != g.size()) throw Error(ErrorKind::invalid_argument, "metric size does not match graph");
  EdgeFunction w(g.edge_count());
  for (Index k = 0; k < g.edge_count(); ++k) w[k] = s(g.edges()[k].u, g.edges()[k].v);
  return w;
}

IntrinsicReport is_intrinsic_edges(const Graph& g, std::span<const double> sigma_on_edges, std::span<const double> m) {
  if (m.size() != g.size()) throw Error(ErrorKind::invalid_argument, "measure size does not match graph");
  auto t = tilde_energy(g, sigma_on_edges);
  IntrinsicReport r;
  r.load = std::move(t.local);
  r.total = t.value;
  r.slack.resize(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    r.slack[i] = m[i] - r.load[i];
    if (r.slack[i] < 0.0) r.intrinsic = false;
  }
  return r;
}

IntrinsicReport is_intrinsic(const Graph& g, const MetricObject& s, std::span<const double> m) {
  return is_intrinsic_edges(g, edge_restriction(g, s), m);
}

SigmaFromPotential sigma_from_potential(const Graph& g, std::span<const double> f) {
  const Index n = g.size();
  if (f.size() != n) throw Error(ErrorKind::invalid_argument, "potential size does not match graph");
  if (n > kExplicitMetricCap) {
    throw Error(ErrorKind::invalid_argument, "sigma_f is explicit and limited to " +
                                                 std::to_string(kExplicitMetricCap) + " vertices");
  }
  std::vector<double> d(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) d[x * n + y] = std::abs(f[x] - f[y]);
  }
  SigmaFromPotential out;
  out.sigma = MetricObject::explicit_matrix(std::move(d), n);
  out.m_f = energy(g, f).local;
  return out;
}

std::vector<double> path_metric_from(const Graph& g, std::span<const double> w, Index source) {
  if (w.size() != g.edge_count()) throw Error(ErrorKind::invalid_argument, "edge function size does not match graph");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    auto nb = g.neighbors(v);
    auto ids = g.edge_ids(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const double nd = d + w[ids[k]];
      if (nd < dist[nb[k]]) {
        dist[nb[k]] = nd;
        pq.push({nd, nb[k]});
      }
    }
  }
  for (double d : dist) {
    if (d == inf) throw Error(ErrorKind::contract, "unreachable vertex in a connected graph");
  }
  return dist;
}

std::vector<double> path_metric_all(const Graph& g, std::span<const double> w) {
  const Index n = g.size();
  std::vector<double> out(n * n);
  for (Index x = 0; x < n; ++x) {
    auto r = path_metric_from(g, w, x);
    std::copy(r.begin(), r.end(), out.begin() + x * n);
  }
  return out;
}

IdempotenceReport idempotence_check(const Graph& g, std::span<const double> w, double tol) {
  const Index n = g.size();
  auto d = path_metric_all(g, w);
  EdgeFunction w2(g.edge_count());
  for (Index k = 0; k < g.edge_count(); ++k) w2[k] = d[g.edges()[k].u * n + g.edges()[k].v];
  auto d2 = path_metric_all(g, w2);
  IdempotenceReport r;
  for (Index i = 0; i < n * n; ++i) {
    const double dev = std::abs(d[i] - d2[i]);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > tol * std::max(1.0, std::abs(d[i]))) r.ok = false;
  }
  return r;
}

DiscTopMetric disc_top_metric(const Graph& g, std::span<const Index> order) {
  const Index n = g.size();
  if (order.size() != n) throw Error(ErrorKind::invalid_argument, "enumeration must cover every vertex");
  std::vector<char> seen(n, 0);
  DiscTopMetric out;
  out.f.assign(n, 0.0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Index x = order[k];
    if (x >= n || seen[x]) throw Error(ErrorKind::invalid_argument, "enumeration is not a permutation");
    seen[x] = 1;
    const double deg = g.degree(x) > 0.0 ? g.degree(x) : 1.0;
    // 2^{-n/2} via exp2 so the scale does not underflow before ~2100 vertices.
    out.f[x] = std::exp2(-0.5 * static_cast<double>(k + 1)) / std::sqrt(deg);
  }
  if (n > kExplicitMetricCap) throw Error(ErrorKind::invalid_argument, "graph too large for an explicit metric");
  std::vector<double> d(n * n, 0.0);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x != y) d[x * n + y] = std::max(out.f[x], out.f[y]);
    }
    if (!(out.f[x] > 0.0)) out.positive = false;
  }
  out.sigma = MetricObject::explicit_matrix(std::move(d), n);
  double bound = 0.0;
  for (Index x = 0; x < n; ++x) bound += 2.0 * g.degree(x) * out.f[x] * out.f[x];
  out.load_bound = bound;
  out.total_load = tilde_energy(g, edge_restriction(g, out.sigma)).value;
  return out;
}

Potential perturb_injective(const Graph& g, std::span<const double> f, double eps, std::uint64_t seed,
                            std::optional<double> sup_eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::invalid_argument, "perturbation needs eps > 0");
  const double sup = sup_eps ? *sup_eps : eps;
  if (!(sup > 0.0)) throw Error(ErrorKind::invalid_argument, "perturbation needs a positive sup bound");
  const Index n = g.size();
  if (f.size() != n) throw Error(ErrorKind::invalid_argument, "potential size does not match graph");
  // Budgets s_x with sum_x s_x sqrt(deg x) <= sqrt(eps)/2, so that
  // sqrt(Q(offset)) <= sum |offset_x| sqrt(Q(1_x)) < sqrt(eps)/2.
  std::vector<double> budget(n);
  for (Index x = 0; x < n; ++x) {
    const double sd = std::sqrt(g.degree(x));
    double s = sup / 2.0;
    if (sd > 0.0) s = std::min(s, std::sqrt(eps) / (2.0 * static_cast<double>(n) * sd));
    budget[x] = s;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Potential out(n);
    for (Index x = 0; x < n; ++x) {
      double u = 0.0;
      while (u == 0.0) u = unit(rng);
      out[x] = f[x] + u * budget[x];
    }
    std::vector<double> sorted(out);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return out;
  }
  throw Error(ErrorKind::contract, "could not separate potential values at this perturbation size");
}

Potential dist_to_set(const MetricObject& s, std::span<const Index> set) {
  if (set.empty()) throw Error(ErrorKind::invalid_argument, "distance to an empty set");
  Potential out(s.size(), std::numeric_limits<double>::infinity());
  for (Index u : set) {
    auto r = s.row(u);
    for (Index x = 0; x < s.size(); ++x) out[x] = std::min(out[x], r[x]);
  }
  for (Index u : set) out[u] = 0.0;
  return out;
}

DistBoundCheck dist_bound_check(const Graph& g, std::span<const double> sigma_u, std::span<const double> m,
                                std::span<const Index> set, double rel_slack) {
  std::vector<char> in(g.size(), 0);
  for (Index u : set) in[u] = 1;
  double total = 0.0, outside = 0.0;
  for (Index x = 0; x < g.size(); ++x) {
    total += m[x];
    if (!in[x]) outside += m[x];
  }
  DistBoundCheck c;
  c.energy = energy_value(g, sigma_u);
  c.bound = std::min(total, 2.0 * outside);
  c.holds = c.energy <= c.bound * (1.0 + rel_slack);
  return c;
}

std::vector<Index> ball(const MetricObject& s, Index x, double r) {
  auto row = s.row(x);
  std::vector<Index> out;
  for (Index y = 0; y < s.size(); ++y) {
    if (row[y] <= r) out.push_back(y);
  }
  return out;
}

double diameter(const MetricObject& s) {
  double d = 0.0;
  for (Index x = 0; x < s.size(); ++x) {
    auto row = s.row(x);
    d = std::max(d, *std::max_element(row.begin(), row.end()));
  }
  return d;
}

std::size_t greedy_net_size(const MetricObject& s, double eps) {
  std::vector<std::vector<double>> centers;
  for (Index x = 0; x < s.size(); ++x) {
    bool covered = false;
    for (const auto& c : centers) {
      if (c[x] <= eps) {
        covered = true;
        break;
      }
    }
    if (!covered) centers.push_back(s.row(x));
  }
  return centers.size();
}

MetricObject parse_metric_matrix(std::string_view text, const Graph& g) {
  const Index n = g.size();
  if (n > kExplicitMetricCap) throw Error(ErrorKind::invalid_argument, "graph too large for an explicit metric");
  std::vector<double> d(n * n, -1.0);
  for (Index i = 0; i < n; ++i) d[i * n + i] = 0.0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto f = split_fields(text.substr(pos, end - pos));
    pos = end + 1;
    if (f.empty()) continue;
    if (f.size() != 3) throw Error(ErrorKind::parse, "metric lines need three fields");
    Index u = g.index(parse_vertex(f[0]));
    Index v = g.index(parse_vertex(f[1]));
    double x = parse_real(f[2]);
    d[u * n + v] = x;
    if (u != v && d[v * n + u] < 0.0) d[v * n + u] = x;
  }
  for (double x : d) {
    if (x < 0.0) throw Error(ErrorKind::parse, "metric file misses a pair or has a negative distance");
  }
  return MetricObject::explicit_matrix(std::move(d), n);
}

}  // namespace netpot
