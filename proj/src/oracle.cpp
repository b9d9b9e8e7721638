#include "monomatch/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

#include "monomatch/errors.hpp"

namespace monomatch {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below(0)");
  // Rejection sampling on the top of the range keeps draws unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

namespace {

class BruteMatcher {
 public:
  explicit BruteMatcher(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {}

  Matching solve() {
    Matching m;
    std::uint64_t used = 0;
    std::size_t i = 0;
    int remaining = best(0, 0);
    // Replay the optimal decisions.
    while (remaining > 0) {
      while (i < edges_.size() && !free(edges_[i], used)) ++i;
      const Edge e = edges_[i];
      const std::uint64_t with = used | bit(e.u) | bit(e.v);
      if (1 + best(i + 1, with) == remaining) {
        m.edges.push_back(e);
        used = with;
        --remaining;
      }
      ++i;
    }
    return m;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  static bool free(const Edge& e, std::uint64_t used) { return !(used & (bit(e.u) | bit(e.v))); }

  int best(std::size_t i, std::uint64_t used) {
    while (i < edges_.size() && !free(edges_[i], used)) ++i;
    if (i == edges_.size()) return 0;
    const bool memo = n_ <= 24;
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | used;
    if (memo) {
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const Edge e = edges_[i];
    const int include = 1 + best(i + 1, used | bit(e.u) | bit(e.v));
    const int exclude = best(i + 1, used);
    const int value = std::max(include, exclude);
    if (memo) cache_.emplace(key, value);
    return value;
  }

  int n_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> cache_;
};

}  // namespace

Matching brute_max_matching(const Graph& g) {
  if (g.edge_count() > kBruteEdgeCap)
    throw InvalidArgument("brute_max_matching: " + std::to_string(g.edge_count()) + " edges exceeds cap of " +
                          std::to_string(kBruteEdgeCap));
  if (g.vertex_count() > 64) {
    // Relabel onto the non-isolated vertices so the used-vertex mask fits in 64 bits.
    VertexSet active;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 0) active.push_back(v);
    if (active.size() > 64) throw InvalidArgument("brute_max_matching: more than 64 non-isolated vertices");
    const auto sub = induced_subgraph(g, active);
    Matching local = BruteMatcher(sub.graph).solve();
    for (Edge& e : local.edges) e = Edge::normalized(sub.to_parent[e.u], sub.to_parent[e.v]);
    std::sort(local.edges.begin(), local.edges.end());
    return local;
  }
  return BruteMatcher(g).solve();
}

VertexSet brute_missable_vertices(const Graph& g) {
  const int nu = brute_max_matching(g).size();
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Graph without = g;
    for (int u : g.neighbor_list(v)) without.remove_edge(u, v);
    if (brute_max_matching(without).size() == nu) out.push_back(v);
  }
  return out;
}

Graph random_b_dense_subgraph(const Graph& host, int b, Rng& rng) {
  if (b < 1) throw InvalidArgument("random_b_dense_subgraph: b must be positive");
  const int n = host.vertex_count();
  Graph g = host;
  std::vector<int> deficit(n, 0);
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<Vertex> candidates;
  for (Vertex v : order) {
    int quota = (b - 1) - deficit[v];
    if (quota <= 0) continue;
    candidates = g.neighbor_list(v);
    // Partial Fisher-Yates: inspect candidates in random order until the quota is met.
    for (std::size_t i = 0; i < candidates.size() && quota > 0; ++i) {
      const std::size_t j = i + rng.below(candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
      const Vertex u = candidates[i];
      if (deficit[u] >= b - 1) continue;
      g.remove_edge(u, v);
      ++deficit[u];
      ++deficit[v];
      --quota;
    }
  }
  return g;
}

Graph random_b_dense_graph(int n, int b, std::uint64_t seed) {
  if (b < 1 || b > std::max(n, 1)) throw InvalidArgument("random_b_dense_graph: need 1 <= b <= N");
  Rng rng(seed);
  return random_b_dense_subgraph(Graph::complete(n), b, rng);
}

Graph random_graph_m(int n, int m, Rng& rng) {
  std::vector<Edge> all = Graph::complete(n).edges();
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(m, 0)), all.size());
  for (std::size_t i = 0; i < take; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
  all.resize(take);
  return Graph::from_edge_list(n, all);
}

Graph random_graph_p(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

ColoredGraph random_coloring(const Graph& g, Rng& rng) {
  std::vector<ColoredGraph::ColoredEdge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, static_cast<Color>(1 + rng.below(3))});
  return ColoredGraph::from_colored_edges(g.vertex_count(), edges);
}

ColoredGraph random_coloring(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return random_coloring(g, rng);
}

int color_objective(const ColoredGraph& cg, Color c) {
  const Graph sub = color_subgraph(cg, c);
  const Matching m = max_matching(sub);
  // A maximum matching of the whole color class restricts to a maximum matching of each component.
  std::vector<int> comp_of(cg.vertex_count(), -1);
  const auto comps = components(sub);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
  std::vector<int> per(comps.size(), 0);
  int best = 0;
  for (const Edge& e : m.edges) best = std::max(best, 2 * ++per[comp_of[e.u]]);
  return best;
}

int matching_objective(const ColoredGraph& cg) {
  int best = 0;
  for (Color c : kColors) best = std::max(best, color_objective(cg, c));
  return best;
}

ColoredGraph adversarial_coloring(const Graph& g, int n, int budget, std::uint64_t seed) {
  if (budget < 0) throw InvalidArgument("adversarial_coloring: negative budget");
  ColoredGraph current = random_coloring(g, seed);
  if (budget == 0 || g.edge_count() == 0) return current;

  Rng rng = Rng::substream(seed, 1);
  const std::vector<Edge> edges = g.edges();
  const int restart_every = std::max(1, budget / 4);

  std::array<int, kColorCount + 1> value{};
  auto evaluate_all = [&] {
    for (Color c : kColors) value[c] = color_objective(current, c);
  };
  // Lexicographic score: (largest saturation, sum of per-color maxima).
  auto score = [&] {
    return std::pair{std::max({value[1], value[2], value[3]}), value[1] + value[2] + value[3]};
  };
  evaluate_all();
  auto current_score = score();
  ColoredGraph best = current;
  int best_objective = current_score.first;

  for (int step = 0; step < budget && best_objective >= n; ++step) {
    if (step > 0 && step % restart_every == 0) {
      current = random_coloring(g, rng);
      evaluate_all();
      current_score = score();
      if (current_score.first < best_objective) {
        best = current;
        best_objective = current_score.first;
      }
    }
    const Edge e = edges[rng.below(edges.size())];
    const Color old_color = current.color(e.u, e.v);
    Color new_color = static_cast<Color>(1 + rng.below(2));
    if (new_color >= old_color) ++new_color;
    current.set_color(e.u, e.v, new_color);
    const int old_value_a = value[old_color];
    const int old_value_b = value[new_color];
    value[old_color] = color_objective(current, old_color);
    value[new_color] = color_objective(current, new_color);
    const auto proposal = score();
    if (proposal <= current_score) {
      current_score = proposal;
      if (proposal.first < best_objective) {
        best = current;
        best_objective = proposal.first;
      }
    } else {
      current.set_color(e.u, e.v, old_color);
      value[old_color] = old_value_a;
      value[new_color] = old_value_b;
    }
  }
  return best;
}

namespace {

/// Largest 2*nu over the components of the edge subset `mask` of K_N (edges in lex order).
/// Computed by brute force, independent of the matching engine.
std::vector<std::uint8_t> component_saturation_table(int n, const std::vector<Edge>& edges) {
  const std::size_t m = edges.size();
  std::vector<std::uint8_t> table(std::size_t{1} << m, 0);
  auto nu = [&](auto&& self, std::uint32_t emask, std::uint32_t used) -> int {
    int best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(emask >> i & 1U)) continue;
      const std::uint32_t vb = (1U << edges[i].u) | (1U << edges[i].v);
      if (used & vb) continue;
      best = std::max(best, 1 + self(self, emask & ~((2U << i) - 1), used | vb));
    }
    return best;
  };
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    // Union-find over at most 6 vertices.
    std::array<int, 8> parent{};
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) parent[find(edges[i].u)] = find(edges[i].v);
    int best = 0;
    for (int r = 0; r < n; ++r) {
      if (find(r) != r) continue;
      std::uint32_t comp_edges = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i & 1U) && find(edges[i].u) == r) comp_edges |= 1U << i;
      if (comp_edges) best = std::max(best, 2 * nu(nu, comp_edges, 0));
    }
    table[mask] = static_cast<std::uint8_t>(best);
  }
  return table;
}

}  // namespace

ExhaustiveTable exhaustive_small_check(int n_vertices, const ExhaustiveOptions& options) {
  if (n_vertices < 1) throw InvalidArgument("exhaustive_small_check: N must be positive");
  ExhaustiveTable table;
  table.vertex_count = n_vertices;
  table.pruned = options.prune_color_symmetry;
  for (int n = 2; n <= n_vertices; n += 2) table.rows.push_back({n, true, std::nullopt});

  const Graph kn = Graph::complete(n_vertices);
  const std::vector<Edge> edges = kn.edges();
  const std::size_t m = edges.size();

  auto record = [&](int value, auto&& make_coloring) {
    table.min_objective = std::min(table.min_objective, value);
    for (auto& row : table.rows) {
      if (value < row.n && row.holds) {
        row.holds = false;
        row.witness = make_coloring();
      }
    }
  };

  if (options.samples > 0) {
    table.exact = false;
    table.min_objective = n_vertices;
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      Rng rng = Rng::substream(options.seed, s);
      ColoredGraph cg = random_coloring(kn, rng);
      ++table.colorings_examined;
      record(matching_objective(cg), [&] { return cg; });
    }
    return table;
  }
  if (n_vertices > 6) throw InvalidArgument("exhaustive_small_check: N > 6 requires sampling (samples > 0)");

  table.min_objective = n_vertices;
  const auto saturation = component_saturation_table(n_vertices, edges);
  std::vector<Color> digit(m, 1);
  std::array<std::uint32_t, 4> mask{0, m == 0 ? 0U : (1U << m) - 1U, 0, 0};

  auto make_coloring = [&] {
    std::vector<ColoredGraph::ColoredEdge> ce;
    for (std::size_t i = 0; i < m; ++i) ce.push_back({edges[i].u, edges[i].v, digit[i]});
    return ColoredGraph::from_colored_edges(n_vertices, ce);
  };
  auto canonical = [&] {
    if (!options.prune_color_symmetry) return true;
    if (m > 0 && digit[0] != 1) return false;
    for (std::size_t i = 0; i < m; ++i)
      if (digit[i] != 1) return digit[i] == 2;
    return true;
  };

  // Odometer over colorings; digit 0 varies fastest. With pruning, digit 0 stays at 1.
  const std::size_t first_free = options.prune_color_symmetry && m > 0 ? 1 : 0;
  while (true) {
    if (canonical()) {
      ++table.colorings_examined;
      const int value = std::max({saturation[mask[1]], saturation[mask[2]], saturation[mask[3]]});
      record(value, make_coloring);
    }
    std::size_t i = first_free;
    for (; i < m; ++i) {
      const Color c = digit[i];
      const Color next = c == 3 ? 1 : static_cast<Color>(c + 1);
      mask[c] &= ~(1U << i);
      mask[next] |= 1U << i;
      digit[i] = next;
      if (next != 1) break;
    }
    if (i >= m) break;
  }
  return table;
}

}  // namespace monomatch
