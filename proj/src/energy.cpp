#include "netpot/energy.hpp"

#include <algorithm>
#include <cmath>

#include "netpot/error.hpp"
#include "netpot/metrics.hpp"
#include "netpot/summation.hpp"

namespace netpot {

namespace {

void check_size(const Graph& g, std::span<const double> f) {
  if (f.size() != g.size()) throw Error(ErrorKind::invalid_argument, "potential size does not match graph");
}

}  // namespace

EnergyReport energy(const Graph& g, std::span<const double> f) {
  check_size(g, f);
  EnergyReport r;
  r.local.assign(g.size(), 0.0);
  std::vector<CompensatedSum> acc(g.size());
  CompensatedSum total;
  for (const auto& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    const double q = e.b * d * d;
    acc[e.u].add(0.5 * q);
    acc[e.v].add(0.5 * q);
    total.add(q);
  }
  for (Index i = 0; i < g.size(); ++i) r.local[i] = acc[i].value();
  r.value = total.value();
  if (!(r.value <= kEnergyOverflowGuard)) {
    r.value = INFINITY;
    r.overflow = true;
  }
  return r;
}

double energy_value(const Graph& g, std::span<const double> f) {
  check_size(g, f);
  CompensatedSum total;
  for (const auto& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    total.add(e.b * d * d);
  }
  return total.value();
}

double energy_bilinear(const Graph& g, std::span<const double> f, std::span<const double> h) {
  check_size(g, f);
  check_size(g, h);
  CompensatedSum total;
  for (const auto& e : g.edges()) total.add(e.b * (f[e.u] - f[e.v]) * (h[e.u] - h[e.v]));
  return total.value();
}

TildeEnergy tilde_energy(const Graph& g, std::span<const double> w) {
  if (w.size() != g.edge_count()) throw Error(ErrorKind::invalid_argument, "edge function size does not match graph");
  TildeEnergy t;
  std::vector<CompensatedSum> acc(g.size());
  CompensatedSum total;
  for (Index k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    const double q = e.b * w[k] * w[k];
    acc[e.u].add(0.5 * q);
    acc[e.v].add(0.5 * q);
    total.add(q);
  }
  t.local.resize(g.size());
  for (Index i = 0; i < g.size(); ++i) t.local[i] = acc[i].value();
  t.value = total.value();
  return t;
}

EdgeFunction gradient_magnitude(const Graph& g, std::span<const double> f) {
  check_size(g, f);
  EdgeFunction w(g.edge_count());
  for (Index k = 0; k < g.edge_count(); ++k) w[k] = std::abs(f[g.edges()[k].u] - f[g.edges()[k].v]);
  return w;
}

Contraction Contraction::clamp(double a, double b) {
  if (!(a <= b)) throw Error(ErrorKind::invalid_argument, "clamp requires a <= b");
  Contraction c;
  c.kind_ = Kind::clamp;
  c.a_ = a;
  c.b_ = b;
  return c;
}

Contraction Contraction::slice(double c) {
  Contraction s;
  s.kind_ = Kind::slice;
  s.a_ = c;
  return s;
}

Contraction Contraction::absolute() { return Contraction(); }

Contraction Contraction::table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.empty() || xs.size() != ys.size()) throw Error(ErrorKind::invalid_argument, "table needs matching breakpoints");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw Error(ErrorKind::invalid_argument, "table breakpoints must increase");
    if (std::abs(ys[i] - ys[i - 1]) > xs[i] - xs[i - 1]) {
      throw Error(ErrorKind::invalid_argument, "table is not 1-Lipschitz between breakpoints " +
                                                   std::to_string(i - 1) + " and " + std::to_string(i));
    }
  }
  Contraction c;
  c.kind_ = Kind::table;
  c.xs_ = std::move(xs);
  c.ys_ = std::move(ys);
  return c;
}

double Contraction::operator()(double x) const {
  switch (kind_) {
    case Kind::clamp:
      return std::max(std::min(x, b_), a_);
    case Kind::slice:
      return std::min(std::max(x - a_, 0.0), 1.0);
    case Kind::abs:
      return std::abs(x);
    case Kind::table: {
      if (x <= xs_.front()) return ys_.front();
      if (x >= xs_.back()) return ys_.back();
      auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t i = static_cast<std::size_t>(it - xs_.begin());
      const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
      return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
    }
  }
  return x;
}

Potential contraction_apply(std::span<const double> f, const Contraction& c) {
  Potential out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = c(f[i]);
  return out;
}

double mass_norm_sq(const Measure& m, std::span<const double> f) {
  if (f.size() != m.size()) throw Error(ErrorKind::invalid_argument, "potential size does not match measure");
  CompensatedSum s;
  for (std::size_t i = 0; i < f.size(); ++i) s.add(m[i] * f[i] * f[i]);
  return s.value();
}

Norms norms(const Graph& g, std::span<const double> f, VertexId o, const Measure* m) {
  const Index oi = g.index(o);
  const double q = energy_value(g, f);
  Norms n;
  n.at_root = std::sqrt(q + f[oi] * f[oi]);
  if (m) {
    const double l2 = mass_norm_sq(*m, f);
    n.l2 = std::sqrt(l2);
    n.energy_l2 = std::sqrt(q + l2);
  }
  return n;
}

double norm_equivalence_constant(const Graph& g, VertexId o1, VertexId o2) {
  EdgeFunction resistance(g.edge_count());
  for (Index k = 0; k < g.edge_count(); ++k) resistance[k] = 1.0 / g.edges()[k].b;
  const double r = path_metric_from(g, resistance, g.index(o1))[g.index(o2)];
  return std::sqrt(std::max(2.0, 1.0 + 2.0 * r));
}

}  // namespace netpot
