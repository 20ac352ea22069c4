#include <random>

#include "doctest.h"
#include "netpot/error.hpp"
#include "netpot/graph.hpp"
#include "netpot/io.hpp"
#include "oracles.hpp"

using namespace netpot;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::io;
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK(kind_of([] { Graph::from_edges({}, {{0, 0, 1.0}}); }) == ErrorKind::self_loop);
  CHECK(kind_of([] { Graph::from_edges({}, {{0, 1, 0.0}}); }) == ErrorKind::non_positive_weight);
  CHECK(kind_of([] { Graph::from_edges({}, {{0, 1, -2.0}}); }) == ErrorKind::non_positive_weight);
  CHECK(kind_of([] { Graph::from_edges({}, {{0, 1, 1.0}, {1, 0, 2.0}}); }) == ErrorKind::asymmetric_weight);
  CHECK(kind_of([] { Graph::from_edges({5}, {{0, 1, 1.0}}); }) == ErrorKind::disconnected);
  CHECK(kind_of([] { parse_edge_list("0 1 1\n1 0 3\n"); }) == ErrorKind::asymmetric_weight);
  CHECK(kind_of([] { parse_edge_list("0 1\n"); }) == ErrorKind::parse);
}

TEST_CASE("repeated symmetric entries collapse to one edge") {
  auto g = parse_edge_list("# comment\n0 1 2.5\n1 0 2.5\n1 2 1\n");
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(g.index(1)) == 3.5);
  CHECK(g.max_degree() == 3.5);
  CHECK(g.weight(g.index(0), g.index(2)) == 0.0);
}

TEST_CASE("generator sizes match closed forms") {
  // |B_r| in Z^2 is 2r^2 + 2r + 1; in Z^3 it is (2r+1)(2r^2+2r+3)/3.
  for (int r : {1, 3, 8}) {
    CHECK(generate({Family::lattice, 2, r}).size() == std::size_t(2 * r * r + 2 * r + 1));
    CHECK(generate({Family::lattice, 3, r}).size() == std::size_t((2 * r + 1) * (2 * r * r + 2 * r + 3) / 3));
    CHECK(predicted_vertex_count({Family::lattice, 3, r}) == generate({Family::lattice, 3, r}).size());
  }
  auto t = generate({Family::tree, 3, 4});
  CHECK(t.size() == 1 + 3 + 9 + 27 + 81);
  CHECK(t.edge_count() + 1 == t.size());
  auto z2 = generate({Family::lattice, 2, 5});
  CHECK(z2.max_degree() == 4.0);
  CHECK(generate({Family::cycle, 7, 0}).edge_count() == 7);
  CHECK(kind_of([] { generate({Family::tree, 2, 40}); }) == ErrorKind::vertex_cap);
}

TEST_CASE("lattice ids are stable across radii") {
  std::vector<int> c{3, -2};
  auto id = lattice_id(c);
  CHECK(lattice_coords(id, 2) == c);
  auto small = generate({Family::lattice, 2, 5});
  auto big = generate({Family::lattice, 2, 9});
  for (VertexId v : small.ids()) CHECK(big.find(v).has_value());
}

TEST_CASE("exhaustion sets are hop balls with their outer rings") {
  auto g = generate({Family::lattice, 2, 6});
  const int radii[] = {1, 2, 4};
  auto ex = make_exhaustion(g, lattice_id(std::vector<int>{0, 0}), radii);
  CHECK(ex.sets[0].size() == 5);
  CHECK(ex.rings[0].size() == 8);
  CHECK(ex.sets[2].size() == 41);
  auto t = induced_truncation(g, ex.sets[1]);
  CHECK(t.interior.size() == 13);
  CHECK(t.ring.size() == 12);
  CHECK_FALSE(t.exact);
}

TEST_CASE("property: edge-list round trip preserves the graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(rng, 3 + trial % 20, 0.2, false);
    auto h = parse_edge_list(format_edge_list(g));
    REQUIRE(h.size() == g.size());
    REQUIRE(h.edge_count() == g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      CHECK(h.edges()[k].u == g.edges()[k].u);
      CHECK(h.edges()[k].v == g.edges()[k].v);
      CHECK(h.edges()[k].b == g.edges()[k].b);
    }
    auto d = validate_graph(g);
    CHECK(d.connected);
    CHECK(d.symmetric);
  }
}

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456789.125}) CHECK(parse_real(format_double(x)) == x);
}
