#include "monomatch/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "monomatch/errors.hpp"

namespace monomatch {

VertexSet Matching::saturated() const {
  VertexSet out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matching Matching::from_mates(std::span<const Vertex> mates) {
  Matching m;
  for (std::size_t v = 0; v < mates.size(); ++v) {
    const Vertex w = mates[v];
    if (w > static_cast<Vertex>(v)) m.edges.push_back({static_cast<Vertex>(v), w});
  }
  return m;
}

namespace {

/// Compressed adjacency; neighbours in increasing order.
struct Csr {
  int n = 0;
  std::vector<int> offset;
  std::vector<int> target;

  explicit Csr(const Graph& g) : n(g.vertex_count()), offset(n + 1, 0) {
    target.reserve(2 * g.edge_count());
    for (int v = 0; v < n; ++v) {
      g.neighbors(v).for_each([&](int u) { target.push_back(u); });
      offset[v + 1] = static_cast<int>(target.size());
    }
  }
};

void greedy_matching(const Csr& adj, std::vector<int>& mate) {
  for (int v = 0; v < adj.n; ++v) {
    if (mate[v] != -1) continue;
    for (int k = adj.offset[v]; k < adj.offset[v + 1]; ++k) {
      const int u = adj.target[k];
      if (mate[u] == -1) {
        mate[v] = u;
        mate[u] = v;
        break;
      }
    }
  }
}

/// Alternating forest grown simultaneously from every exposed vertex, with blossom
/// shrinking through a base[] array. One call to grow() either augments along the first
/// augmenting path found or leaves the complete forest in place.
class EdmondsForest {
 public:
  EdmondsForest(const Csr& adj, std::vector<int>& mate)
      : adj_(adj),
        mate_(mate),
        parent_(adj.n),
        base_(adj.n),
        root_(adj.n),
        even_(adj.n),
        blossom_mark_(adj.n, 0),
        lca_mark_(adj.n, 0) {
    queue_.reserve(adj.n);
  }

  bool grow() {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(even_.begin(), even_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    for (int v = 0; v < adj_.n; ++v) {
      if (mate_[v] == -1) {
        even_[v] = 1;
        root_[v] = v;
        queue_.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (int k = adj_.offset[v]; k < adj_.offset[v + 1]; ++k) {
        const int u = adj_.target[k];
        if (base_[v] == base_[u] || mate_[v] == u) continue;
        if (even_[u]) {
          if (root_[u] != root_[v]) {
            augment_half(v, u);
            augment_half(u, v);
            return true;
          }
          contract(v, u);
        } else if (parent_[u] == -1) {
          // Unlabelled vertices are always matched: exposed ones are roots.
          parent_[u] = v;
          root_[u] = root_[v];
          const int w = mate_[u];
          even_[w] = 1;
          root_[w] = root_[v];
          queue_.push_back(w);
        }
      }
    }
    return false;
  }

  bool is_even(int v) const { return even_[v] != 0; }
  bool is_odd(int v) const { return !even_[v] && parent_[v] != -1; }

 private:
  int lca(int a, int b) {
    ++lca_stamp_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_mark_[base_[v]] = blossom_stamp_;
      blossom_mark_[base_[mate_[v]]] = blossom_stamp_;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void contract(int v, int u) {
    const int b = lca(v, u);
    ++blossom_stamp_;
    mark_path(v, b, u);
    mark_path(u, b, v);
    for (int i = 0; i < adj_.n; ++i) {
      if (blossom_mark_[base_[i]] != blossom_stamp_) continue;
      base_[i] = b;
      if (!even_[i]) {
        even_[i] = 1;
        root_[i] = root_[v];
        queue_.push_back(i);
      }
    }
  }

  // x is even; pair it with `partner` and flip the alternating path from x to its root.
  void augment_half(int x, int partner) {
    while (true) {
      const int old = mate_[x];
      mate_[x] = partner;
      if (old == -1) return;
      const int next = parent_[old];
      mate_[old] = next;
      partner = old;
      x = next;
    }
  }

  const Csr& adj_;
  std::vector<int>& mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<int> root_;
  std::vector<char> even_;
  std::vector<unsigned> blossom_mark_;
  std::vector<unsigned> lca_mark_;
  unsigned blossom_stamp_ = 0;
  unsigned lca_stamp_ = 0;
  std::vector<int> queue_;
};

std::vector<int> maximum_mates(const Csr& adj) {
  std::vector<int> mate(adj.n, -1);
  greedy_matching(adj, mate);
  EdmondsForest forest(adj, mate);
  while (forest.grow()) {
  }
  return mate;
}

struct Bipartition {
  std::vector<int> side;  // 0 left, 1 right, -1 neither
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

Bipartition check_bipartition(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right) {
  const int n = g.vertex_count();
  Bipartition bp{std::vector<int>(n, -1), normalize({left.begin(), left.end()}),
                 normalize({right.begin(), right.end()})};
  auto assign = [&](const std::vector<Vertex>& part, int s) {
    for (Vertex v : part) {
      if (v < 0 || v >= n) throw InvalidArgument("bipartite side vertex " + std::to_string(v) + " out of range");
      if (bp.side[v] != -1) throw InvalidArgument("left and right overlap at vertex " + std::to_string(v));
      bp.side[v] = s;
    }
  };
  assign(bp.left, 0);
  assign(bp.right, 1);
  for (const Edge& e : g.edges()) {
    if (bp.side[e.u] == -1 || bp.side[e.v] == -1 || bp.side[e.u] == bp.side[e.v])
      throw InvalidArgument("non-bipartite input: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} does not cross the bipartition");
  }
  return bp;
}

/// Hopcroft-Karp over a validated bipartition; returns mate array over V(g).
std::vector<int> hopcroft_karp(const Graph& g, const Bipartition& bp) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  std::vector<int> mate(n, -1);
  std::vector<int> dist(n, 0);
  constexpr int kInf = 1 << 29;

  auto bfs = [&]() {
    std::vector<int> queue;
    bool found = false;
    for (Vertex x : bp.left) {
      if (mate[x] == -1) {
        dist[x] = 0;
        queue.push_back(x);
      } else {
        dist[x] = kInf;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : adj[x]) {
        const Vertex w = mate[y];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  // Iterative DFS along layered edges.
  std::vector<std::size_t> cursor(n, 0);
  auto dfs = [&](Vertex start) {
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      bool advanced = false;
      while (cursor[x] < adj[x].size()) {
        const Vertex y = adj[x][cursor[x]++];
        const Vertex w = mate[y];
        if (w == -1) {
          // Augment along the stack: stack[i] pairs with the right vertex it stepped to.
          Vertex right_v = y;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const Vertex l = *it;
            const Vertex prev = mate[l];
            mate[l] = right_v;
            mate[right_v] = l;
            right_v = prev;
          }
          return true;
        }
        if (dist[w] == dist[x] + 1) {
          stack.push_back(w);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[x] = kInf;
        stack.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (Vertex x : bp.left)
      if (mate[x] == -1) dfs(x);
  }
  return mate;
}

/// Left and right vertices reachable from unsaturated left vertices by alternating paths.
DynamicBitset alternating_reach(const Graph& g, const Bipartition& bp, const std::vector<int>& mate) {
  DynamicBitset seen(g.vertex_count());
  std::vector<Vertex> queue;
  for (Vertex x : bp.left) {
    if (mate[x] == -1) {
      seen.set(x);
      queue.push_back(x);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    g.neighbors(x).for_each([&](int y) {
      if (seen.test(y)) return;
      seen.set(y);
      const Vertex w = mate[y];
      if (w != -1 && !seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    });
  }
  return seen;
}

}  // namespace

Matching max_matching(const Graph& g) { return Matching::from_mates(maximum_mates(Csr(g))); }

int matching_number(const Graph& g) {
  const auto mate = maximum_mates(Csr(g));
  int matched = 0;
  for (int m : mate) matched += (m != -1);
  return matched / 2;
}

GEDecomposition gallai_edmonds(const Graph& g) {
  const Csr adj(g);
  std::vector<int> mate(adj.n, -1);
  greedy_matching(adj, mate);
  EdmondsForest forest(adj, mate);
  while (forest.grow()) {
  }
  GEDecomposition out;
  for (int v = 0; v < adj.n; ++v) {
    if (forest.is_even(v))
      out.D.push_back(v);
    else if (forest.is_odd(v))
      out.A.push_back(v);
    else
      out.C.push_back(v);
  }
  const auto d_parts = components(induced_subgraph(g, out.D).graph);
  out.deficiency = static_cast<int>(d_parts.size()) - static_cast<int>(out.A.size());
  out.matching = Matching::from_mates(mate);
  return out;
}

Matching max_matching_bipartite(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right) {
  const Bipartition bp = check_bipartition(g, left, right);
  return Matching::from_mates(hopcroft_karp(g, bp));
}

std::optional<VertexSet> hall_violator(const Graph& g, std::span<const Vertex> left,
                                       std::span<const Vertex> right) {
  const Bipartition bp = check_bipartition(g, left, right);
  const auto mate = hopcroft_karp(g, bp);
  const bool saturates_left =
      std::all_of(bp.left.begin(), bp.left.end(), [&](Vertex x) { return mate[x] != -1; });
  if (saturates_left) return std::nullopt;
  const DynamicBitset reach = alternating_reach(g, bp, mate);
  VertexSet s;
  for (Vertex x : bp.left)
    if (reach.test(x)) s.push_back(x);
  return s;
}

VertexSet konig_independent_set(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right) {
  const Bipartition bp = check_bipartition(g, left, right);
  const auto mate = hopcroft_karp(g, bp);
  const DynamicBitset reach = alternating_reach(g, bp, mate);
  VertexSet out;
  for (Vertex x : bp.left)
    if (reach.test(x)) out.push_back(x);
  for (Vertex y : bp.right)
    if (!reach.test(y)) out.push_back(y);
  return normalize(std::move(out));
}

Matching max_matching_within(const Graph& g, std::span<const Vertex> s) {
  const InducedSubgraph sub = induced_subgraph(g, s);
  Matching local = max_matching(sub.graph);
  for (Edge& e : local.edges) e = Edge::normalized(sub.to_parent[e.u], sub.to_parent[e.v]);
  std::sort(local.edges.begin(), local.edges.end());
  return local;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  DynamicBitset used(g.vertex_count());
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count() || e.u == e.v) return false;
    if (!g.has_edge(e.u, e.v)) return false;
    if (used.test(e.u) || used.test(e.v)) return false;
    used.set(e.u);
    used.set(e.v);
  }
  return true;
}

}  // namespace monomatch
