#include <doctest.h>

#include "monomatch/errors.hpp"
#include "monomatch/extremal.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("from_edge_list builds, deduplicates and validates") {
  const Graph p = edges_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(p == path(4));

  const Graph single = Graph::from_edge_list(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  CHECK(edges_graph(4, {{0, 1}, {1, 0}}).edge_count() == 1);

  CHECK_THROWS_AS(edges_graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(edges_graph(3, {{-1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(edges_graph(3, {{1, 1}}), InvalidArgument);
}

TEST_CASE("density_deficit") {
  CHECK(density_deficit(Graph::complete(5)) == 0);
  CHECK(density_deficit(cycle(5)) == 2);
  CHECK(density_deficit(build_extremal(2).graph.graph()) == 3);

  Graph g = path(6);
  int last = density_deficit(g);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) {
      if (g.has_edge(u, v)) continue;
      g.add_edge(u, v);
      CHECK(density_deficit(g) <= last);
      last = density_deficit(g);
    }
  CHECK(last == 0);
}

TEST_CASE("is_b_dense_in") {
  const Graph k6 = Graph::complete(6);
  CHECK(is_b_dense_in(k6, k6, 1));
  CHECK_FALSE(is_b_dense_in(cycle(6), k6, 3));
  CHECK(is_b_dense_in(cycle(6), k6, 4));
  CHECK_THROWS_AS(is_b_dense_in(k6, cycle(6), 1), InvalidArgument);
}

TEST_CASE("color_subgraph") {
  const ColoredGraph mono(Graph::complete(4), 1);
  CHECK(color_subgraph(mono, 1) == Graph::complete(4));
  CHECK(color_subgraph(mono, 2) == Graph(4));
  CHECK_THROWS_AS(color_subgraph(mono, 0), InvalidArgument);
  CHECK_THROWS_AS(color_subgraph(mono, 4), InvalidArgument);

  const ExtremalGraph ex = build_extremal(2);
  CHECK(color_subgraph(ex.graph, kBlue).degree(ex.spec.a) == 14);
}

TEST_CASE("components are sorted by size then smallest vertex") {
  const auto tri = components(two_triangles());
  REQUIRE(tri.size() == 2);
  CHECK(tri[0] == VertexSet{0, 1, 2});
  CHECK(tri[1] == VertexSet{3, 4, 5});

  CHECK(components(petersen()).size() == 1);
  CHECK(components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});

  // Equal sizes: the component with the smaller vertex comes first, whatever the labels.
  const auto mixed = components(edges_graph(5, {{3, 4}, {0, 2}}));
  CHECK(mixed == std::vector<VertexSet>{{0, 2}, {3, 4}, {1}});
}

TEST_CASE("mono_components") {
  const ColoredGraph k2 = ColoredGraph::from_colored_edges(2, std::vector<ColoredGraph::ColoredEdge>{{0, 1, 1}});
  const auto one = mono_components(k2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].color == 1);
  CHECK(one[0].vertices == VertexSet{0, 1});

  const ExtremalGraph ex = build_extremal(2);
  const auto all = mono_components(ex.graph);
  std::size_t red = 0;
  for (const auto& c : all)
    if (c.color == kRed) red = std::max(red, c.vertices.size());
  CHECK(red == 7);

  // K_4: red perfect matching {01, 23}, blue elsewhere.
  ColoredGraph k4(Graph::complete(4), 2);
  k4.set_color(0, 1, 1);
  k4.set_color(2, 3, 1);
  const auto comps = mono_components(k4);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].color == 2);
  CHECK(comps[0].vertices.size() == 4);
  CHECK(comps[1].color == 1);
  CHECK(comps[1].vertices == VertexSet{0, 1});
  CHECK(comps[2].vertices == VertexSet{2, 3});
}

TEST_CASE("induced_subgraph") {
  const auto k3 = induced_subgraph(Graph::complete(5), VertexSet{0, 1, 2});
  CHECK(k3.graph == Graph::complete(3));
  CHECK(k3.to_parent == VertexSet{0, 1, 2});

  const auto empty = induced_subgraph(petersen(), VertexSet{});
  CHECK(empty.graph.vertex_count() == 0);

  const auto p = induced_subgraph(cycle(6), VertexSet{0, 1, 2});
  CHECK(p.graph == path(3));

  const auto shifted = induced_subgraph(cycle(6), VertexSet{2, 3, 5});
  CHECK(shifted.graph.edge_count() == 1);
  CHECK(shifted.to_parent == VertexSet{2, 3, 5});
  CHECK_THROWS_AS(induced_subgraph(cycle(6), VertexSet{0, 6}), InvalidArgument);
}

TEST_CASE("colored-graph text format") {
  const ColoredGraph k2 = parse_colored_graph("2 1\n0 1 3\n");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.color(0, 1) == 3);

  const ColoredGraph ex = build_extremal(2).graph;
  CHECK(parse_colored_graph(serialize_colored_graph(ex)) == ex);

  CHECK(parse_colored_graph("# comment\n3 1\n# another\n0 2 1\n").color(0, 2) == 1);
  CHECK(serialize_colored_graph(parse_colored_graph("3 2\n1 2 2\n0 1 1\n")) == "3 2\n0 1 1\n1 2 2\n");

  CHECK_THROWS_AS(parse_colored_graph("2 1\n0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("2\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph(""), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 2\n0 1 1\n1 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 2\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 1\n1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 1\n0 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colored_graph("3 1\n0 1 1\n1 2 1\n"), ParseError);
}

TEST_CASE("property: colors partition edges, components partition vertices, round trip") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int n = rng.uniform(1, 20);
    const Graph g = random_graph_p(n, rng.uniform(0, 10), 10, rng);
    const ColoredGraph cg = random_coloring(g, rng);

    std::size_t total = 0;
    for (Color c : kColors) {
      const Graph sub = color_subgraph(cg, c);
      CHECK(sub.is_subgraph_of(g));
      total += sub.edge_count();
      for (Color d : kColors)
        if (d > c)
          for (const Edge& e : sub.edges()) CHECK_FALSE(color_subgraph(cg, d).has_edge(e.u, e.v));

      // Components equal the BFS oracle; mono components plus isolated vertices cover V.
      CHECK(components(sub) == bfs_components(sub));
      VertexSet covered;
      for (const auto& mc : mono_components(cg))
        if (mc.color == c) covered = set_union(covered, mc.vertices);
      for (int v = 0; v < n; ++v)
        if (sub.degree(v) == 0) covered = set_union(covered, {v});
      CHECK(covered == range(0, n));
    }
    CHECK(total == g.edge_count());

    for (int b = 1; b <= n; ++b) CHECK((density_deficit(g) < b) == is_b_dense_in(g, Graph::complete(n), b));
    CHECK(parse_colored_graph(serialize_colored_graph(cg)) == cg);
  }
}
