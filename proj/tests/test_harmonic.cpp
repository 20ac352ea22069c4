#include <cmath>
#include <random>

#include "doctest.h"
#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/harmonic.hpp"
#include "oracles.hpp"

using namespace netpot;

namespace {

// Random truncation: interior = a random connected piece grown by BFS, ring
// = its outer boundary.
Truncation random_truncation(std::mt19937_64& rng, Index n) {
  auto g = oracle::random_graph(rng, n, 3.0 / n, false);
  std::uniform_int_distribution<Index> pick(0, g.size() - 1);
  auto dist = hop_distances(g, pick(rng));
  int far = 0;
  for (int d : dist) far = std::max(far, d);
  std::vector<Index> set;
  for (Index i = 0; i < g.size(); ++i) {
    if (dist[i] <= std::max(0, far - 2)) set.push_back(i);
  }
  return induced_truncation(g, set);
}

}  // namespace

TEST_CASE("Laplacian sign convention") {
  auto g = generate({Family::path, 4, 0});
  std::vector<double> lin{0, 1, 2, 3, 4};
  auto d = laplacian_apply(g, lin);
  for (Index i = 1; i < 4; ++i) CHECK(d[i] == 0.0);
  std::vector<double> peak{0, 0, 1, 0, 0};
  CHECK(laplacian_apply(g, peak)[2] == 1.0);
  Measure m(std::vector<double>{1, 2, 2, 2, 1});
  CHECK(laplacian_apply(g, peak, &m)[2] == 1.0);
}

TEST_CASE("harmonicity classes on trees") {
  auto g = generate({Family::tree, 2, 5});
  auto rt = hop_distances(g, 0);
  std::vector<Index> interior;
  for (Index i = 0; i < g.size(); ++i) {
    if (rt[i] < 5) interior.push_back(i);
  }
  Potential sup(g.size()), neither(g.size()), harm(g.size(), 2.5);
  for (Index i = 0; i < g.size(); ++i) {
    sup[i] = std::min(std::ldexp(2.0, -rt[i]), 1.0);
    neither[i] = std::min(rt[i], 3);
  }
  CHECK(harmonicity_check(g, harm, interior, 1e-12).cls == HarmonicClass::harmonic);
  CHECK(harmonicity_check(g, sup, interior, 1e-12).cls == HarmonicClass::superharmonic);
  CHECK(harmonicity_check(g, neither, interior, 1e-12).cls == HarmonicClass::neither);
}

TEST_CASE("harmonic extension agrees with dense elimination") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 30; ++t) {
    auto tr = random_truncation(rng, 10 + t * 3);
    if (tr.ring.empty()) continue;
    const auto& g = tr.graph;
    auto data = oracle::random_potential(rng, tr.ring.size());
    auto h = harmonic_extension(g, tr.ring, data).h;
    std::vector<char> fixed(g.size(), 0);
    std::vector<double> vals(g.size(), 0.0);
    for (std::size_t k = 0; k < tr.ring.size(); ++k) fixed[tr.ring[k]] = 1, vals[tr.ring[k]] = data[k];
    auto ref = oracle::dirichlet(g, {}, fixed, vals);
    for (Index i = 0; i < g.size(); ++i) CHECK(h[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("property: Royden split is orthogonal and minimal") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 40; ++t) {
    auto tr = random_truncation(rng, 20 + t * 4);
    auto f = oracle::random_potential(rng, tr.graph.size());
    auto s = royden_split(tr, f);
    if (s.empty_ring) continue;
    CHECK(std::abs(s.q - s.q0 - s.qh) <= 1e-10 * s.q);
    CHECK(std::abs(s.cross) <= 1e-10 * s.q);
    CHECK(s.harmonic_residual <= 1e-10);
    for (int k = 0; k < 10; ++k) {
      auto gvals = oracle::random_potential(rng, tr.graph.size());
      Potential fg(f);
      for (Index i : tr.interior) fg[i] -= gvals[i];
      CHECK(s.qh <= energy_value(tr.graph, fg) * (1 + 1e-12));
    }
  }
}

TEST_CASE("Royden limit on the line drifts to constants") {
  auto g = generate({Family::lattice, 1, 65});
  const int radii[] = {4, 8, 16, 32, 64};
  auto ex = make_exhaustion(g, 0, radii);
  std::vector<Truncation> levels;
  for (const auto& s : ex.sets) levels.push_back(induced_truncation(g, s));
  PotentialRule rule = [](const Graph& t) {
    Potential f(t.size());
    for (Index i = 0; i < t.size(); ++i) f[i] = std::clamp(double(lattice_coords(t.id(i), 1)[0]), -2.0, 2.0);
    return f;
  };
  std::vector<VertexId> window;
  for (int x = -1; x <= 1; ++x) window.push_back(lattice_id(std::vector<int>{x}));
  auto rep = royden_limit(levels, rule, window, 1e-6);
  // Ring values are +-2, so f_h is linear with slope 2/(r+1) and Q(f_h) = 8/(r+1).
  for (std::size_t n = 0; n < rep.levels.size(); ++n) {
    CHECK(rep.levels[n].qh == doctest::Approx(8.0 / (radii[n] + 1)).epsilon(1e-10));
  }
  for (std::size_t n = 2; n < rep.levels.size(); ++n) CHECK(*rep.levels[n].sup_diff < *rep.levels[n - 1].sup_diff);
  CHECK_FALSE(rep.stabilized);
}

TEST_CASE("Royden limit stabilizes on a finite graph by exhaustion") {
  auto g = generate({Family::path, 6, 0});
  std::vector<Truncation> levels;
  for (Index k : {2, 4, 6}) {
    std::vector<Index> set;
    for (Index i = 0; i <= k; ++i) set.push_back(g.index(i));
    levels.push_back(k == 6 ? boundary_layer_truncation(g, std::vector<Index>{g.index(0), g.index(6)})
                            : induced_truncation(g, set));
  }
  PotentialRule rule = [](const Graph& t) {
    Potential f(t.size());
    for (Index i = 0; i < t.size(); ++i) f[i] = t.id(i) == 6 ? 1.0 : 0.0;
    return f;
  };
  const VertexId window[] = {1, 2};
  auto rep = royden_limit(levels, rule, window);
  CHECK(rep.stabilized);
  CHECK(rep.stabilized_by == "exhaustion");
  CHECK(rep.window_values[0] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("harmonic rank") {
  auto g = generate({Family::path, 6, 0});
  Potential one(g.size(), 1.0), lin(g.size()), twice(g.size(), 2.0);
  for (Index i = 0; i < g.size(); ++i) lin[i] = double(g.id(i)) / 6.0;
  CHECK(harmonic_rank(g, {one, lin}, 0).rank == 2);
  CHECK(harmonic_rank(g, {one, twice}, 0).rank == 1);
  auto r = harmonic_rank(g, {one, lin}, 0);
  // Gram matrix: [[1, 0], [0, Q(lin)]] with Q(lin) = 6 / 36.
  CHECK(r.gram[0] == 1.0);
  CHECK(r.gram[1] == 0.0);
  CHECK(r.gram[3] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("phi pipeline on a small path graph") {
  // Vertices 0..8 on a line with sigma = |i - j|; anchors {0} -> 0 and {8} -> 1.
  auto g = generate({Family::path, 8, 0});
  std::vector<double> mat(81);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) mat[i * 9 + j] = std::abs(i - j);
  }
  auto sigma = MetricObject::explicit_matrix(mat, 9);
  auto load = is_intrinsic(g, sigma, std::vector<double>(9, 1.0)).load;
  std::vector<BoundaryAnchorData> anchors{{{g.index(0)}, 0.0, "left"}, {{g.index(8)}, 1.0, "right"}};
  const double lip = minimal_lipschitz(sigma, anchors);
  CHECK(lip == 0.125);
  std::vector<Truncation> levels{boundary_layer_truncation(g, std::vector<Index>{g.index(0), g.index(8)})};
  const VertexId window[] = {4};
  auto phi = phi_boundary_to_harmonic(g, sigma, load, anchors, lip, levels, window);
  CHECK(phi.ok);
  CHECK(phi.certificate_ok);
  CHECK(phi.fh[g.index(4)] == doctest::Approx(0.5));
  CHECK(phi.energy <= phi.certificate_bound);
}
