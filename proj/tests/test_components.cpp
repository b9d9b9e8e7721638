#include <doctest.h>

#include "monomatch/components.hpp"
#include "monomatch/extremal.hpp"
#include "monomatch/json_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

/// K_{2h}: red clique on the first half, blue clique on the second, green in between.
ColoredGraph split_halves(int h) {
  ColoredGraph cg(Graph::complete(2 * h), 3);
  for (int u = 0; u < 2 * h; ++u)
    for (int v = u + 1; v < 2 * h; ++v) {
      if (v < h) cg.set_color(u, v, 1);
      if (u >= h) cg.set_color(u, v, 2);
    }
  return cg;
}

ColoredGraph red_perfect_matching(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; v += 2) g.add_edge(v, v + 1);
  return ColoredGraph(g, 1);
}

/// Vertex set of the color-c component through v, by BFS.
VertexSet bfs_component(const ColoredGraph& cg, Color c, Vertex v) {
  for (const VertexSet& comp : bfs_components(color_subgraph(cg, c)))
    if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
  return {};
}

}  // namespace

TEST_CASE("largest_mono_component examples") {
  const auto k6 = largest_mono_component(ColoredGraph(Graph::complete(6), 1));
  REQUIRE(k6.has_value());
  CHECK(k6->color == 1);
  CHECK(k6->vertices == range(0, 6));

  const auto k8 = largest_mono_component(split_halves(4));
  REQUIRE(k8.has_value());
  CHECK(k8->color == 3);
  CHECK(k8->vertices.size() == 8);

  // The blue component through a misses b, which has no blue edge: 8l - 1 vertices.
  const ExtremalGraph ex = build_extremal(2);
  const auto big = largest_mono_component(ex.graph);
  REQUIRE(big.has_value());
  CHECK(big->color == kBlue);
  CHECK(big->vertices.size() == 15);
  CHECK(2 * big->vertices.size() >= 16);

  CHECK_FALSE(largest_mono_component(ColoredGraph(Graph(4), 1)).has_value());
}

TEST_CASE("largest_mono_component contradiction path") {
  // A perfect matching is far from N/8-dense; taken on trust, its components are too small.
  const ColoredGraph pm = red_perfect_matching(8);
  CHECK_NOTHROW(largest_mono_component(pm));
  CHECK_THROWS_AS(largest_mono_component(pm, Hypotheses::kAssume), InternalContradiction);
}

TEST_CASE("second_component_check") {
  const auto mono = second_component_check(ColoredGraph(Graph::complete(16), 2));
  CHECK(mono.giant);
  CHECK(mono.first.vertices.size() == 16);
  CHECK_FALSE(mono.second.has_value());

  // The extremal graph has deficit l + 1, so it is never N/8-dense; run on trust.
  const ExtremalGraph ex = build_extremal(4);
  CHECK_THROWS_AS(second_component_check(ex.graph), PreconditionError);
  const auto ex_r = second_component_check(ex.graph, Hypotheses::kAssume);
  CHECK(ex_r.giant);
  CHECK(ex_r.first.color == kBlue);
  CHECK(ex_r.first.vertices.size() == 31);

  const ColoredGraph k16(Graph::complete(16), 1);
  CHECK_THROWS_AS(second_component_check(k16, 0), PreconditionError);
  CHECK_THROWS_AS(second_component_check(k16, 3), PreconditionError);
  CHECK(second_component_check(k16, 2).giant);
  Graph sparse = Graph::complete(16);
  sparse.remove_edge(0, 1);
  CHECK_THROWS_AS(second_component_check(ColoredGraph(sparse, 1), 1), PreconditionError);

  CHECK_THROWS_AS(second_component_check(red_perfect_matching(8), Hypotheses::kAssume), InternalContradiction);
}

TEST_CASE("property: second_component_check on random colorings of K_40") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ColoredGraph cg = random_coloring(Graph::complete(40), seed);
    const SecondComponentResult r = second_component_check(cg);
    if (r.giant) {
      CHECK(4 * r.first.vertices.size() >= 120);
    } else {
      REQUIRE(r.second.has_value());
      CHECK(r.first.color != r.second->color);
      CHECK(r.first.vertices.size() >= 20);
      CHECK(r.second->vertices.size() >= 20);
    }
  }
}

TEST_CASE("match2_check outcomes") {
  // A red spanning path and blue everywhere else: both components are all of V.
  ColoredGraph same(Graph::complete(8), 2);
  for (int v = 0; v + 1 < 8; ++v) same.set_color(v, v + 1, 1);
  const Match2Outcome b = match2_check(same, range(0, 8), 1, range(0, 8), 2);
  CHECK_FALSE(b.large_matching);
  CHECK(b.only_first == 0);
  CHECK(b.only_second == 0);

  const ColoredGraph halves = split_halves(20);
  const Match2Outcome a = match2_check(halves, range(0, 20), 1, range(20, 40), 2);
  REQUIRE(a.large_matching);
  CHECK(a.third_color == 3);
  CHECK(a.matching.size() == 20);
  CHECK(a.component == range(0, 40));
  CHECK(a.route == "dense-bipartite");
  const Graph green = color_subgraph(halves, 3);
  CHECK(is_valid_matching(green, a.matching));
  CHECK(brute_nu(induced_subgraph(green, range(18, 22)).graph) == 2);

  CHECK_THROWS_AS(match2_check(halves, range(0, 19), 1, range(20, 40), 2), PreconditionError);
  CHECK_THROWS_AS(match2_check(halves, range(0, 20), 1, range(20, 40), 1), InvalidArgument);
}

TEST_CASE("match2_check contradiction path") {
  // Red clique and blue clique with nothing between them: not dense, and no third-color edge.
  ColoredGraph cg(Graph(20), 1);
  std::vector<ColoredGraph::ColoredEdge> es;
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v)
      if ((u < 10) == (v < 10)) es.push_back({u, v, static_cast<Color>(u < 10 ? 1 : 2)});
  cg = ColoredGraph::from_colored_edges(20, es);
  CHECK_THROWS_AS(match2_check(cg, range(0, 10), 1, range(10, 20), 2), PreconditionError);
  CHECK_THROWS_AS(match2_check(cg, range(0, 10), 1, range(10, 20), 2, Hypotheses::kAssume), InternalContradiction);
}

TEST_CASE("triple_cover on a constructed fixture") {
  const ColoredGraph cg = read_colored_graph_file(source_path("tests/fixtures/triple_cover_n9.txt"));
  CHECK(triple_cover_precondition_failures(cg).empty());
  const TripleCover cover = triple_cover(cg);
  VertexSet all;
  std::vector<int> colors;
  for (const auto& part : cover.parts) {
    CHECK(part.vertices == bfs_component(cg, part.color, part.vertices.front()));
    all = set_union(all, part.vertices);
    colors.push_back(part.color);
  }
  CHECK(all == range(0, 9));
  std::sort(colors.begin(), colors.end());
  CHECK(colors == std::vector<int>{1, 2, 3});
}

TEST_CASE("triple_cover preconditions") {
  const ColoredGraph mono(Graph::complete(12), 1);
  const auto f = triple_cover_precondition_failures(mono);
  CHECK_FALSE(f.empty());
  CHECK(std::any_of(f.begin(), f.end(), [](const std::string& s) { return s.find("matching") != std::string::npos; }));
  CHECK_THROWS_AS(triple_cover(mono), PreconditionError);

  // Extremal: red cliques on 4l - 1 vertices saturate only 4l - 2 < N/2, but blue is giant.
  const ExtremalGraph ex = build_extremal(2);
  const auto ef = triple_cover_precondition_failures(ex.graph);
  CHECK(std::any_of(ef.begin(), ef.end(), [](const std::string& s) { return s.find("3N/4") != std::string::npos; }));
  CHECK(std::none_of(ef.begin(), ef.end(), [](const std::string& s) { return s.rfind("color 1", 0) == 0; }));
  const VertexSet red13 = set_union(ex.spec.part(1), ex.spec.part(3));
  CHECK(red13.size() == 7);
  CHECK(max_matching_within(color_subgraph(ex.graph, kRed), red13).saturation() == 6);

  CHECK_THROWS_AS(triple_cover(mono, Hypotheses::kAssume), InternalContradiction);
}

TEST_CASE("region_decompose examples") {
  const ColoredGraph cg(Graph::complete(5), 1);
  const RegionDecomposition all = region_decompose(cg, range(0, 5), range(0, 5), range(0, 5));
  CHECK(all.A123 == range(0, 5));
  CHECK(all.A12.empty());
  CHECK(all.A[0].empty());
  CHECK(all.outside.empty());

  const RegionDecomposition disjoint = region_decompose(cg, {0, 1}, {2}, {3});
  CHECK(disjoint.A[0] == VertexSet{0, 1});
  CHECK(disjoint.A[1] == VertexSet{2});
  CHECK(disjoint.A[2] == VertexSet{3});
  CHECK(disjoint.A123.empty());
  CHECK(disjoint.outside == VertexSet{4});

  const RegionDecomposition r = region_decompose(cg, {0, 1, 2}, {1, 2, 3}, {2, 3, 4});
  CHECK(r.A123 == VertexSet{2});
  CHECK(r.A12 == VertexSet{1});
  CHECK(r.A23 == VertexSet{3});
  CHECK(r.A13.empty());
  CHECK(r.A[0] == VertexSet{0});
  CHECK(r.A[1].empty());
  CHECK(r.A[2] == VertexSet{4});
  CHECK(&r.pair(2, 1) == &r.A23);
}

TEST_CASE("property: region_decompose set algebra") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng = Rng::substream(31, seed);
    const int n = rng.uniform(1, 16);
    std::array<VertexSet, 3> v;
    for (auto& s : v)
      for (int x = 0; x < n; ++x)
        if (rng.chance(1, 2)) s.push_back(x);
    const RegionDecomposition rd = region_decompose(ColoredGraph(Graph(n), 1), v[0], v[1], v[2]);
    CHECK(rd.A123 == set_intersection(set_intersection(v[0], v[1]), v[2]));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const int k = (i + 2) % 3;
      CHECK(rd.pair(i, j) == set_difference(set_intersection(v[i], v[j]), rd.A123));
      CHECK(rd.A[i] == set_difference(v[i], set_union(v[j], v[k])));
    }
    const std::vector<const VertexSet*> parts{&rd.A[0], &rd.A[1], &rd.A[2], &rd.A12, &rd.A13, &rd.A23, &rd.A123, &rd.outside};
    VertexSet all;
    std::size_t total = 0;
    for (const VertexSet* p : parts) {
      all = set_union(all, *p);
      total += p->size();
    }
    CHECK(all == range(0, n));
    CHECK(total == static_cast<std::size_t>(n));
  }
}

TEST_CASE("zero_claims_report constructed violations") {
  // Everything blue; A1 = {0}, A123 = {1}: the A1-A123 edge should be red.
  const ColoredGraph blue(Graph::complete(4), 2);
  const RegionDecomposition rd = region_decompose(blue, {0, 1}, {1, 2}, {1, 3});
  const ZeroClaimsReport rep = zero_claims_report(blue, rd, 1);
  CHECK_FALSE(rep.items[0].pass);
  CHECK_FALSE(rep.items[0].conditional);
  REQUIRE(rep.items[0].witness_edge.has_value());
  CHECK(*rep.items[0].witness_edge == Edge{0, 1});

  // V1 inside V2 ∪ V3 makes A1 empty: item (iv) flags it, conditionally, with V1 as witness.
  const RegionDecomposition empty_a1 = region_decompose(blue, {0, 1}, {0, 2}, {1, 3});
  const ZeroClaimsReport rep4 = zero_claims_report(blue, empty_a1, 1);
  CHECK_FALSE(rep4.items[3].pass);
  CHECK(rep4.items[3].conditional);
  CHECK(rep4.items[3].witness_set == VertexSet{0, 1});

  // An edge between A1 = {0} and A23 = {3}.
  const RegionDecomposition v5 = region_decompose(blue, {0, 1}, {1, 2, 3}, {1, 3});
  const ZeroClaimsReport rep5 = zero_claims_report(blue, v5, 1);
  CHECK_FALSE(rep5.items[4].pass);
  CHECK_FALSE(rep5.items[4].conditional);
  CHECK(*rep5.items[4].witness_edge == Edge{0, 3});

  const Json j = to_json(rep5);
  CHECK(j["items"]["v"]["pass"] == false);
  CHECK(j["items"]["v"]["witness"] == Json::array({0, 3}));
  CHECK(j["items"]["i"].contains("conditional"));
  CHECK(j["hypotheses"]["hold"] == false);
}

TEST_CASE("property: unconditional claim items hold on real components") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng = Rng::substream(32, seed);
    const int n = rng.uniform(16, 48);
    const Graph g = random_b_dense_subgraph(Graph::complete(n), (n + 7) / 8, rng);
    const ColoredGraph cg = random_coloring(g, rng);
    std::array<VertexSet, 3> v;
    for (int i = 0; i < 3; ++i)
      for (const auto& mc : mono_components(cg))
        if (mc.color == i + 1) {
          v[i] = mc.vertices;
          break;
        }
    const ZeroClaimsReport rep = zero_claims_report(cg, region_decompose(cg, v[0], v[1], v[2]), density_deficit(g) + 1);
    CHECK(rep.dense);
    for (const ClaimItem& item : rep.items)
      if (!item.pass) CHECK_MESSAGE(item.conditional, item.detail);
  }
}
