#pragma once

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "monomatch/graph.hpp"
#include "monomatch/matching.hpp"
#include "monomatch/oracle.hpp"

namespace testing {

using namespace monomatch;

inline Graph edges_graph(int n, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> es;
  for (auto [u, v] : list) es.push_back({u, v});
  return Graph::from_edge_list(n, es);
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

/// Complete bipartite graph with parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph two_triangles() { return edges_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline VertexSet range(int lo, int hi) {
  VertexSet s;
  for (int v = lo; v < hi; ++v) s.push_back(v);
  return s;
}

/// Components by breadth-first search over adjacency lists, sorted by size then smallest vertex.
inline std::vector<VertexSet> bfs_components(const Graph& g) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  std::vector<int> seen(n, 0);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return out;
}

/// Brute-force matching number by recursion over vertices (independent of both engines).
inline int brute_nu(const std::vector<std::vector<int>>& adj, std::vector<int>& used, int v) {
  const int n = static_cast<int>(adj.size());
  while (v < n && used[v]) ++v;
  if (v >= n) return 0;
  used[v] = 1;
  int best = brute_nu(adj, used, v + 1);
  for (int u : adj[v]) {
    if (used[u]) continue;
    used[u] = 1;
    best = std::max(best, 1 + brute_nu(adj, used, v + 1));
    used[u] = 0;
  }
  used[v] = 0;
  return best;
}

inline int brute_nu(const Graph& g) {
  std::vector<int> used(g.vertex_count(), 0);
  return brute_nu(g.adjacency_lists(), used, 0);
}

/// Hall's condition for `left` by enumerating all of its subsets (|left| <= 20).
inline bool hall_holds(const Graph& g, const VertexSet& left) {
  const std::size_t k = left.size();
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    VertexSet nbrs;
    int count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      ++count;
      for (int u : g.neighbor_list(left[i])) nbrs.push_back(u);
    }
    if (static_cast<int>(normalize(nbrs).size()) < count) return false;
  }
  return true;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string source_path(const std::string& rel) { return std::string(MONOMATCH_SOURCE_DIR) + "/" + rel; }

}  // namespace testing
