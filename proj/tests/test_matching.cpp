#include <doctest.h>

#include "monomatch/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

/// Largest independent set by subset enumeration (n <= 16).
int brute_alpha(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if (mask >> u & 1U)
        for (int v = u + 1; v < n && ok; ++v)
          if ((mask >> v & 1U) && g.has_edge(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v && g.has_edge(u, v)) return false;
  return true;
}

/// Random bipartite graph on parts 0..a-1 and a..a+b-1.
Graph random_bipartite(int a, int b, Rng& rng) {
  Graph g(a + b);
  const std::uint64_t p = rng.uniform(1, 9);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      if (rng.chance(p, 10)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("max_matching examples") {
  const Matching p = max_matching(path(4));
  CHECK(p.size() == 2);
  CHECK(is_valid_matching(path(4), p));

  CHECK(max_matching(petersen()).size() == 5);
  CHECK(brute_max_matching(petersen()).size() == 5);
  CHECK(brute_nu(petersen()) == 5);

  CHECK(max_matching(complete_bipartite(1, 5)).size() == 1);
  CHECK(max_matching(Graph(0)).size() == 0);
  CHECK(max_matching(path(4)) == max_matching(path(4)));
}

TEST_CASE("max_matching_bipartite examples") {
  CHECK(max_matching_bipartite(complete_bipartite(3, 3), range(0, 3), range(3, 6)).size() == 3);
  CHECK(max_matching_bipartite(complete_bipartite(2, 5), range(0, 2), range(2, 7)).size() == 2);
  // C_6 with alternate vertices on each side.
  CHECK(max_matching_bipartite(cycle(6), VertexSet{0, 2, 4}, VertexSet{1, 3, 5}).size() == 3);
  CHECK(brute_nu(cycle(6)) == 3);

  CHECK_THROWS_AS(max_matching_bipartite(Graph::complete(3), VertexSet{0}, VertexSet{1, 2}), InvalidArgument);
  CHECK_THROWS_AS(max_matching_bipartite(path(3), VertexSet{0, 1}, VertexSet{1, 2}), InvalidArgument);
}

TEST_CASE("hall_violator examples") {
  CHECK_FALSE(hall_violator(complete_bipartite(3, 3), range(0, 3), range(3, 6)).has_value());

  const Graph shared = edges_graph(3, {{0, 2}, {1, 2}});
  const auto s = hall_violator(shared, VertexSet{0, 1}, VertexSet{2});
  REQUIRE(s.has_value());
  CHECK(*s == VertexSet{0, 1});

  // K_{2,5} with the 5-vertex side as left.
  const Graph k25 = complete_bipartite(2, 5);
  const auto v = hall_violator(k25, range(2, 7), range(0, 2));
  REQUIRE(v.has_value());
  CHECK(v->size() >= 3);
  VertexSet nbrs;
  for (Vertex x : *v)
    for (Vertex y : k25.neighbor_list(x)) nbrs.push_back(y);
  CHECK(normalize(nbrs).size() < v->size());
  CHECK_FALSE(hall_holds(k25, range(2, 7)));
  CHECK_THROWS_AS(hall_violator(Graph::complete(3), VertexSet{0}, VertexSet{1, 2}), InvalidArgument);
}

TEST_CASE("gallai_edmonds examples") {
  const GEDecomposition star = gallai_edmonds(complete_bipartite(1, 5));
  CHECK(star.D == range(1, 6));
  CHECK(star.A == VertexSet{0});
  CHECK(star.C.empty());
  CHECK(star.deficiency == 4);
  CHECK(star.D == brute_missable_vertices(complete_bipartite(1, 5)));

  const GEDecomposition tri = gallai_edmonds(two_triangles());
  CHECK(tri.D == range(0, 6));
  CHECK(tri.A.empty());
  CHECK(tri.C.empty());
  CHECK(tri.deficiency == 2);
  CHECK(tri.D == brute_missable_vertices(two_triangles()));

  const GEDecomposition c4 = gallai_edmonds(cycle(4));
  CHECK(c4.D.empty());
  CHECK(c4.A.empty());
  CHECK(c4.C == range(0, 4));
  CHECK(c4.deficiency == 0);

  // Isolated vertices are always in D.
  CHECK(gallai_edmonds(Graph(3)).D == range(0, 3));
}

TEST_CASE("is_valid_matching examples") {
  const Graph k4 = Graph::complete(4);
  CHECK(is_valid_matching(k4, Matching{{{0, 1}, {2, 3}}}));
  CHECK_FALSE(is_valid_matching(k4, Matching{{{0, 1}, {1, 2}}}));
  CHECK_FALSE(is_valid_matching(cycle(4), Matching{{{0, 2}}}));
}

TEST_CASE("max_matching_within maps back to parent indices") {
  const Graph g = two_triangles();
  const Matching m = max_matching_within(g, VertexSet{3, 4, 5});
  CHECK(m.size() == 1);
  CHECK(is_valid_matching(g, m));
  for (const Edge& e : m.edges) CHECK(e.u >= 3);
}

TEST_CASE("property: oracle equivalence and Tutte-Berge on small graphs") {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    Rng rng = Rng::substream(11, seed);
    const int n = rng.uniform(1, 12);
    const int cap = std::min<int>(kBruteEdgeCap, n * (n - 1) / 2);
    const Graph g = random_graph_m(n, rng.uniform(0, cap), rng);
    const Matching m = max_matching(g);
    const int nu = brute_nu(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == nu);
    CHECK(brute_max_matching(g).size() == nu);
    CHECK(matching_number(g) == nu);
    const GEDecomposition ge = gallai_edmonds(g);
    CHECK(ge.deficiency == n - 2 * nu);
    CHECK(ge.D == brute_missable_vertices(g));
  }
}

TEST_CASE("property: bipartite matching, Hall violators and Konig") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng = Rng::substream(12, seed);
    const int a = rng.uniform(1, 7);
    const int b = rng.uniform(1, 7);
    const Graph g = random_bipartite(a, b, rng);
    const VertexSet left = range(0, a);
    const VertexSet right = range(a, a + b);
    const Matching m = max_matching_bipartite(g, left, right);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == max_matching(g).size());

    const auto violator = hall_violator(g, left, right);
    CHECK(violator.has_value() == (m.size() < a));
    CHECK(violator.has_value() == !hall_holds(g, left));
    if (violator) {
      VertexSet nbrs;
      for (Vertex x : *violator)
        for (Vertex y : g.neighbor_list(x)) nbrs.push_back(y);
      CHECK(normalize(nbrs).size() < violator->size());
    }

    const VertexSet ind = konig_independent_set(g, left, right);
    CHECK(independent(g, ind));
    CHECK(static_cast<int>(ind.size()) == brute_alpha(g));
    CHECK(m.size() + static_cast<int>(ind.size()) == a + b);
  }
}

TEST_CASE("property: edges added at a vertex of degree >= n-1 keep nu below n/2") {
  int applied = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng = Rng::substream(13, seed);
    const int n_vertices = rng.uniform(6, 14);
    Graph g(n_vertices);
    for (int v = 1; v < n_vertices; ++v)
      if (rng.chance(4, 5)) g.add_edge(0, v);
    if (rng.chance(1, 2)) g.add_edge(1, 2);
    const int nu = brute_nu(g);
    const int n = 2 * nu + 2;
    if (g.degree(0) < n - 1) continue;
    ++applied;
    Graph h = g;
    for (int v = 1; v < n_vertices; ++v)
      if (!h.has_edge(0, v)) h.add_edge(0, v);
    CHECK(2 * brute_nu(h) < n);
  }
  CHECK(applied > 100);
}
