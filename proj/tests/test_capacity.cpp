#include <cmath>
#include <random>

#include "doctest.h"
#include "netpot/capacity.hpp"
#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "oracles.hpp"

using namespace netpot;

TEST_CASE("two-vertex capacity by one-variable calculus") {
  // min_t b (1 - t)^2 + 1 + m t^2 is attained at t = b / (b + m).
  for (double b : {0.5, 1.0, 3.0}) {
    for (double m1 : {0.25, 1.0, 2.0}) {
      auto g = Graph::from_edges({}, {{0, 1, b}});
      Measure m(std::vector<double>{1.0, m1});
      const Index set[] = {0};
      auto r = cap_finite(g, m, set);
      const double t = b / (b + m1);
      const double expected = b * (1 - t) * (1 - t) + 1.0 + m1 * t * t;
      CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
      CHECK(r.optimizer[1] == doctest::Approx(t).epsilon(1e-13));
    }
  }
}

TEST_CASE("effective capacity matches series-parallel reduction") {
  for (int n : {2, 4, 8}) {
    auto lv = materialize_level(LevelSource::from_generator({Family::lattice, 1, 1}), n);
    const Index s[] = {lv.source};
    CHECK(effective_cap(lv.graph, s, lv.grounded).value ==
          doctest::Approx(oracle::line_conductance(n)).epsilon(1e-12));
    auto tv = materialize_level(LevelSource::from_generator({Family::tree, 3, 1}), n);
    const Index ts[] = {tv.source};
    CHECK(effective_cap(tv.graph, ts, tv.grounded).value ==
          doctest::Approx(oracle::tree_conductance(3, n)).epsilon(1e-12));
  }
}

TEST_CASE("effective capacity agrees with dense elimination on random graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_graph(rng, 4 + t % 25, 0.2, false);
    const Index set[] = {0};
    const Index ground[] = {g.size() - 1};
    auto r = effective_cap(g, set, ground);
    std::vector<char> fixed(g.size(), 0);
    std::vector<double> vals(g.size(), 0.0);
    fixed[0] = fixed[g.size() - 1] = 1;
    vals[0] = 1.0;
    auto f = oracle::dirichlet(g, {}, fixed, vals);
    CHECK(r.value == doctest::Approx(oracle::energy(g, f)).epsilon(1e-10));
    CHECK(r.flux_value == doctest::Approx(r.value).epsilon(1e-10));
  }
}

TEST_CASE("cap_finite agrees with dense elimination and stays in the box") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 20, 0.25, false);
    std::vector<double> mv(g.size());
    for (auto& v : mv) v = u(rng);
    Measure m(mv);
    std::vector<Index> set{0, g.size() / 2};
    auto r = cap_finite(g, m, set);
    std::vector<char> fixed(g.size(), 0);
    std::vector<double> vals(g.size(), 0.0);
    for (Index i : set) fixed[i] = 1, vals[i] = 1.0;
    auto f = oracle::dirichlet(g, mv, fixed, vals);
    double ref = oracle::energy(g, f);
    for (Index i = 0; i < g.size(); ++i) ref += mv[i] * f[i] * f[i];
    CHECK(r.value == doctest::Approx(ref).epsilon(1e-10));
    for (double v : r.optimizer) {
      CHECK(v >= -1e-8);
      CHECK(v <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("property: capacity is monotone in the set") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_graph(rng, 6 + t % 20, 0.2, false);
    Measure m = Measure::unit(g.size());
    std::vector<Index> a{0}, b{0, 1, 2};
    CHECK(cap_finite(g, m, a).value <= cap_finite(g, m, b).value * (1 + 1e-12));
  }
}

TEST_CASE("Thomson bound from a radial flow does not exceed the capacity") {
  for (auto spec : {GeneratorSpec{Family::lattice, 2, 1}, GeneratorSpec{Family::lattice, 3, 1},
                    GeneratorSpec{Family::tree, 2, 1}}) {
    auto lv = materialize_level(LevelSource::from_generator(spec), 6);
    const Index s[] = {lv.source};
    auto cap = effective_cap(lv.graph, s, lv.grounded);
    auto flow = radial_flow(lv.graph, lv.source, lv.grounded);
    auto fb = flow_lower_bound(lv.graph, s, lv.grounded, flow);
    CHECK(fb.value <= cap.value * (1 + 1e-10));
    CHECK(fb.value > 0.5 * cap.value);
    auto hf = flow_lower_bound(lv.graph, s, lv.grounded, harmonic_flow(lv.graph, cap.optimizer));
    CHECK(hf.value == doctest::Approx(cap.value).epsilon(1e-8));
  }
}

TEST_CASE("flow conservation is enforced") {
  auto g = generate({Family::path, 3, 0});
  const Index s[] = {0};
  const Index r[] = {3};
  std::vector<double> broken{1.0, 0.5, 1.0};
  CHECK_THROWS_AS(flow_lower_bound(g, s, r, broken), Error);
}

TEST_CASE("tail sequence on the line") {
  const int radii[] = {5, 10, 20};
  auto seq = cap_tail_sequence(LevelSource::from_generator({Family::lattice, 1, 1}), radii, MeasureRule::unit);
  REQUIRE(seq.entries.size() == 3);
  for (const auto& e : seq.entries) CHECK(e.effective == doctest::Approx(2.0 / e.radius).epsilon(1e-12));
  CHECK(seq.entries[0].tail_cap > seq.entries[1].tail_cap);
  CHECK(seq.entries[1].tail_cap > seq.entries[2].tail_cap);
}

TEST_CASE("slice certificate is superadditive") {
  auto g = generate({Family::path, 12, 0});
  Potential f(g.size());
  for (Index i = 0; i < g.size(); ++i) f[i] = 0.5 * static_cast<double>(g.id(i));
  auto c = zero_cap_certificate(g, Measure::unit(g.size()), f, 10);
  CHECK(c.superadditive);
  for (std::size_t n = 0; n < c.partial_sums.size(); ++n) CHECK(c.partial_sums[n] <= c.clamp_energies[n] + 1e-12);
}

TEST_CASE("boundary capacities over a shrinking Euclidean basis") {
  auto g = generate({Family::path, 10, 0});
  std::vector<double> xs(g.size()), ys(g.size(), 0.0);
  for (Index i = 0; i < g.size(); ++i) xs[i] = static_cast<double>(g.id(i));
  const double rhos[] = {4.5, 2.5, 0.5, 0.1};
  auto basis = euclidean_basis(xs, ys, 10.0, 0.0, rhos);
  auto e = boundary_cap_upper(g, Measure::unit(g.size()), basis);
  CHECK(e[0].value >= e[1].value);
  CHECK(e[1].value >= e[2].value);
  CHECK(e[2].size == 1);
  CHECK(e[3].skipped == false);
}

TEST_CASE("classifier verdicts on small schedules") {
  const int r1[] = {8, 16, 32, 64};
  auto v1 = recurrence_classifier(LevelSource::from_generator({Family::lattice, 1, 1}), r1);
  CHECK(v1.classification == Classification::recurrent);
  const int rt[] = {4, 8, 12, 16};
  auto vt = recurrence_classifier(LevelSource::from_generator({Family::tree, 2, 1}), rt);
  CHECK(vt.classification == Classification::transient);
  REQUIRE(vt.flow_bound);
  auto two = LevelSource::from_graph(Graph::from_edges({}, {{0, 1, 1.0}}), 0);
  const int r2[] = {1, 2};
  auto v2 = recurrence_classifier(two, r2);
  CHECK(v2.classification == Classification::inconclusive);
  CHECK(v2.reason.find("exhausts") != std::string::npos);
}

TEST_CASE("decay fits recover exact power laws") {
  const int radii[] = {4, 8, 16, 32};
  std::vector<double> caps;
  for (int r : radii) caps.push_back(3.0 * std::pow(r, -1.5));
  auto fits = fit_decay(radii, caps);
  bool found = false;
  for (const auto& f : fits) {
    if (f.model == "power") {
      found = true;
      CHECK(f.exponent == doctest::Approx(1.5));
      CHECK(std::exp(f.log_c) == doctest::Approx(3.0));
      CHECK(f.rms < 1e-12);
    }
  }
  CHECK(found);
}
