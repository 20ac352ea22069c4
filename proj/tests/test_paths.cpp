#include <cmath>
#include <random>

#include "doctest.h"
#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/io.hpp"
#include "netpot/paths.hpp"
#include "oracles.hpp"

using namespace netpot;

TEST_CASE("paths must follow edges") {
  auto g = generate({Family::path, 4, 0});
  CHECK_THROWS_AS(make_path(g, {0, 2}), Error);
  auto p = make_path(g, {0, 1, 2, 1});
  CHECK(path_length(g, std::vector<double>{1, 2, 4, 8}, p) == 5.0);
}

TEST_CASE("null witness is positive on edges and within the energy budget") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 25, 0.2, false);
    std::vector<double> f(g.size(), 0.0);
    for (Index i = 0; i < g.size(); i += 3) f[i] = 1.0;  // many ties, many flat edges
    auto nw = null_witness_from_potential(g, f, 7 + t);
    for (double w : nw.w) CHECK(w > 0.0);
    CHECK(nw.total <= 2.0 * energy_value(g, f) + nw.epsilon);
    double ordered = 0.0;
    for (std::size_t k = 0; k < g.edge_count(); ++k) ordered += 2.0 * g.edges()[k].b * nw.w[k] * nw.w[k];
    CHECK(nw.total == doctest::Approx(ordered).epsilon(1e-12));
  }
}

TEST_CASE("witness lengths on lattice rays") {
  auto g = generate({Family::lattice, 2, 12});
  Potential f(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    auto c = lattice_coords(g.id(i), 2);
    f[i] = std::log1p(std::abs(c[0]) + std::abs(c[1]));
  }
  auto nw = null_witness_from_potential(g, f, 3);
  std::vector<PathSample> rays;
  for (int axis = 0; axis < 2; ++axis) {
    for (int sign : {-1, 1}) rays.push_back(lattice_ray(g, 2, axis, sign, 12));
  }
  auto rep = verify_null_witness(g, nw, rays, std::log(13.0) - 1e-6);
  CHECK(rep.meeting == 4);
  CHECK(rep.note.find("evidence") != std::string::npos);
}

TEST_CASE("tree potential reproduces dyadic weights exactly") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_tree(rng, 2 + t % 40);
    std::vector<double> w(g.edge_count());
    std::uniform_int_distribution<int> k(1, 64);
    for (auto& x : w) x = k(rng) / 16.0;
    auto tp = tree_boundary_potential(g, w, g.id(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      CHECK(std::abs(tp.f[edge.u] - tp.f[edge.v]) == w[e]);
    }
    CHECK(tp.max_edge_deviation == 0.0);
  }
}

TEST_CASE("tree checks") {
  CHECK_THROWS_AS(tree_boundary_potential(generate({Family::cycle, 5, 0}), std::vector<double>(5, 1.0), 0), Error);
  auto t = generate({Family::tree, 2, 3});
  auto rt = root_tree(t, 0);
  CHECK(greatest_common_ancestor(rt, t.index(7), t.index(10)) == t.index(1));
  CHECK(greatest_common_ancestor(rt, t.index(7), t.index(14)) == t.index(0));
  CHECK(greatest_common_ancestor(rt, t.index(7), t.index(8)) == t.index(3));
  CHECK(greatest_common_ancestor(rt, t.index(7), t.index(3)) == t.index(3));
}

TEST_CASE("Yamasaki witness on the line") {
  auto src = LevelSource::from_generator({Family::lattice, 1, 1});
  const int radii[] = {8, 16, 32, 64};
  auto v = recurrence_classifier(src, radii);
  REQUIRE(v.classification == Classification::recurrent);
  auto y = yamasaki_witness(src, v);
  CHECK(energy_value(y.graph, y.f) <= y.energy_bound * (1 + 1e-12));
  CHECK(y.ball_radii == std::vector<double>{1.0, 2.0, 4.0});
  for (std::size_t k = 1; k < y.ball_sizes.size(); ++k) CHECK(y.ball_sizes[k] >= y.ball_sizes[k - 1]);
  CHECK(y.ball_sizes.front() < y.graph.size());
}

TEST_CASE("Yamasaki witness refuses a non-recurrent verdict") {
  auto src = LevelSource::from_generator({Family::tree, 2, 1});
  const int radii[] = {4, 8, 12};
  auto v = recurrence_classifier(src, radii);
  CHECK_THROWS_AS(yamasaki_witness(src, v), Error);
}

TEST_CASE("random self-avoiding walks are reproducible") {
  auto g = generate({Family::lattice, 2, 6});
  auto a = random_self_avoiding_walks(g, 0, 10, 5, 99);
  auto b = random_self_avoiding_walks(g, 0, 10, 5, 99);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].vertices == b[i].vertices);
    CHECK_NOTHROW(make_path(g, a[i].vertices));
  }
}
