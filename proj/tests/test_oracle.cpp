#include <doctest.h>

#include "monomatch/errors.hpp"
#include "monomatch/extremal.hpp"
#include "monomatch/json_io.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("Rng is the documented algorithm") {
  // std::mt19937_64 with the default seed: the 10000th output is fixed by the standard.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  CHECK(x == 9981545732273789042ULL);
  // SplitMix64 reference output for state 0.
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);

  Rng a = Rng::substream(7, 3);
  Rng b = Rng::substream(7, 3);
  Rng c = Rng::substream(7, 4);
  const std::uint64_t first = a.next();
  CHECK(first == b.next());
  CHECK(first != c.next());

  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const int u = r.uniform(-3, 3);
    CHECK(u >= -3);
    CHECK(u <= 3);
  }
  CHECK_THROWS_AS(r.below(0), InvalidArgument);
}

TEST_CASE("brute_max_matching examples") {
  CHECK(brute_max_matching(cycle(5)).size() == 2);
  CHECK(brute_max_matching(petersen()).size() == 5);
  CHECK(brute_max_matching(Graph(5)).size() == 0);
  CHECK(brute_max_matching(Graph(0)).size() == 0);
  // Memo on the vertex mask applies for N <= 24; the N > 24 path must agree.
  Graph wide(30);
  for (int v = 0; v + 1 < 30; v += 3) wide.add_edge(v, v + 1);
  for (int v = 1; v + 2 < 30; v += 3) wide.add_edge(v, v + 2);
  CHECK(brute_max_matching(wide).size() == max_matching(wide).size());
  CHECK_THROWS_AS(brute_max_matching(Graph::complete(10)), InvalidArgument);
}

TEST_CASE("brute_missable_vertices") {
  CHECK(brute_missable_vertices(complete_bipartite(1, 5)) == range(1, 6));
  CHECK(brute_missable_vertices(cycle(4)).empty());
  CHECK(brute_missable_vertices(cycle(5)) == range(0, 5));
}

TEST_CASE("random_b_dense_graph") {
  CHECK(random_b_dense_graph(9, 1, 123) == Graph::complete(9));
  const Graph g = random_b_dense_graph(40, 5, 7);
  CHECK(density_deficit(g) < 5);
  CHECK(g == random_b_dense_graph(40, 5, 7));
  CHECK(g != random_b_dense_graph(40, 5, 8));
  CHECK_THROWS_AS(random_b_dense_graph(5, 6, 1), InvalidArgument);
  CHECK_THROWS_AS(random_b_dense_graph(5, 0, 1), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(2, 60);
    const int b = rng.uniform(1, n);
    const Graph h = random_b_dense_graph(n, b, seed);
    CHECK(is_b_dense_in(h, Graph::complete(n), b));
  }
}

TEST_CASE("random_b_dense_subgraph stays inside the host") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Graph host = complete_bipartite(rng.uniform(1, 10), rng.uniform(1, 10));
    const int b = rng.uniform(1, 6);
    const Graph g = random_b_dense_subgraph(host, b, rng);
    CHECK(g.is_subgraph_of(host));
    CHECK(is_b_dense_in(g, host, b));
  }
}

TEST_CASE("random and adversarial colorings") {
  const Graph g = random_b_dense_graph(24, 4, 3);
  const ColoredGraph r = random_coloring(g, 99);
  CHECK(r == random_coloring(g, 99));
  CHECK(r.graph() == g);
  CHECK(adversarial_coloring(g, 12, 0, 99) == r);

  const ColoredGraph adv = adversarial_coloring(g, 12, 200, 99);
  CHECK(adv == adversarial_coloring(g, 12, 200, 99));
  CHECK(adv.graph() == g);
  CHECK(matching_objective(adv) <= matching_objective(r));
  CHECK_THROWS_AS(adversarial_coloring(g, 12, -1, 99), InvalidArgument);

  // Recorded, not asserted: how close the adversary gets to the extremal coloring's objective.
  const ExtremalGraph ex = build_extremal(2);
  const ColoredGraph found = adversarial_coloring(ex.graph.graph(), 8, 400, 1);
  MESSAGE("extremal objective " << matching_objective(ex.graph) << ", adversary objective " << matching_objective(found));
}

TEST_CASE("matching objectives") {
  const ColoredGraph k6(Graph::complete(6), 1);
  CHECK(color_objective(k6, 1) == 6);
  CHECK(color_objective(k6, 2) == 0);
  CHECK(matching_objective(k6) == 6);
  // The blue component through a has 15 vertices and a near-perfect matching.
  CHECK(matching_objective(build_extremal(2).graph) == 14);
}

TEST_CASE("exhaustive_small_check examples") {
  const ExhaustiveTable t3 = exhaustive_small_check(3);
  REQUIRE(t3.rows.size() == 1);
  CHECK(t3.rows[0].n == 2);
  CHECK(t3.rows[0].holds);
  CHECK(t3.colorings_examined == 27);

  const ExhaustiveTable t4 = exhaustive_small_check(4);
  REQUIRE(t4.rows.size() == 2);
  CHECK(t4.rows[0].holds);
  CHECK_FALSE(t4.rows[1].holds);
  REQUIRE(t4.rows[1].witness.has_value());
  CHECK(matching_objective(*t4.rows[1].witness) < 4);

  // Three perfect matchings of K_4, one per color: every component is a single edge.
  const ColoredGraph pms = ColoredGraph::from_colored_edges(
      4, std::vector<ColoredGraph::ColoredEdge>{{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
  CHECK(matching_objective(pms) == 2);
  for (const auto& mc : mono_components(pms)) CHECK(mc.vertices.size() == 2);

  CHECK_THROWS_AS(exhaustive_small_check(7), InvalidArgument);
  CHECK_THROWS_AS(exhaustive_small_check(0), InvalidArgument);
}

TEST_CASE("exhaustive_small_check: pruning agrees with the full run at N = 5") {
  const ExhaustiveTable full = exhaustive_small_check(5);
  ExhaustiveOptions opt;
  opt.prune_color_symmetry = true;
  const ExhaustiveTable pruned = exhaustive_small_check(5, opt);
  CHECK(full.colorings_examined == 59049);
  CHECK(pruned.colorings_examined == (59049 - 3) / 6 + 1);
  CHECK(full.min_objective == pruned.min_objective);
  REQUIRE(full.rows.size() == pruned.rows.size());
  for (std::size_t i = 0; i < full.rows.size(); ++i) CHECK(full.rows[i].holds == pruned.rows[i].holds);
}

TEST_CASE("exhaustive_small_check with n = 2 always holds") {
  for (int n = 2; n <= 6; ++n) CHECK(exhaustive_small_check(n).rows.front().holds);
}

TEST_CASE("exhaustive tables match the frozen goldens") {
  for (int n = 3; n <= 6; ++n) {
    const std::string path = source_path("tests/golden/exhaustive_N" + std::to_string(n) + ".json");
    CHECK(dump(to_json(exhaustive_small_check(n))) == read_file(path));
  }
}

TEST_CASE("sampling mode beyond N = 6") {
  ExhaustiveOptions opt;
  opt.samples = 50;
  opt.seed = 4;
  const ExhaustiveTable t = exhaustive_small_check(8, opt);
  CHECK_FALSE(t.exact);
  CHECK(t.colorings_examined == 50);
  CHECK(t.rows.front().holds);
  CHECK(dump(to_json(t)) == dump(to_json(exhaustive_small_check(8, opt))));
}

TEST_CASE("random graph generators are deterministic and sized") {
  Rng a(5);
  Rng b(5);
  const Graph g = random_graph_m(12, 20, a);
  CHECK(g.edge_count() == 20);
  CHECK(g == random_graph_m(12, 20, b));
  Rng c(6);
  CHECK(random_graph_p(10, 1, 1, c) == Graph::complete(10));
  CHECK(random_graph_p(10, 0, 1, c) == Graph(10));
}
