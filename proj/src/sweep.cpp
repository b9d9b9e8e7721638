#include "monomatch/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "monomatch/components.hpp"
#include "monomatch/errors.hpp"
#include "monomatch/oracle.hpp"
#include "monomatch/parallel.hpp"
#include "monomatch/solver.hpp"
#include "monomatch/structure.hpp"

namespace monomatch {

namespace {

struct Outcome {
  bool generated = true;
  bool hypothesis = true;
  std::optional<std::string> violation;
  std::optional<std::string> archive;
  Json params = Json::object();
  std::optional<ColoredGraph> instance;
  std::map<std::string, std::int64_t> stats;
};

struct Context {
  const SweepConfig& cfg;
  int n_min;
  int n_max;
};

using Runner = std::function<void(const Context&, std::uint64_t index, Rng& rng, Outcome&)>;

struct LemmaInfo {
  std::string id;
  int default_min;
  int default_max;
  std::string deficit_rule;
  Runner run;
};

ColoredGraph uncolored(const Graph& g) { return ColoredGraph(g, 1); }

int pairs(int n) { return n * (n - 1) / 2; }

/// Conclusion failed: a violation inside the hypotheses, a statistic outside them.
void fail(const Context& ctx, Outcome& out, std::string message, const ColoredGraph& cg) {
  if (out.hypothesis) {
    out.violation = std::move(message);
    out.instance = cg;
  } else {
    (void)ctx;
    ++out.stats["unfiltered_failures"];
  }
}

bool skip(const Context& ctx, const Outcome& out) { return !out.hypothesis && ctx.cfg.hypothesis_filter; }

/// Small graph for the brute-force oracles: at most kBruteEdgeCap edges.
Graph small_random_graph(int n, Rng& rng) {
  const int cap = std::min(static_cast<int>(kBruteEdgeCap), pairs(n));
  return random_graph_m(n, rng.uniform(0, cap), rng);
}

void run_matching(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = small_random_graph(n, rng);
  out.params = {{"N", n}, {"edges", g.edge_count()}};
  const Matching fast = max_matching(g);
  const Matching brute = brute_max_matching(g);
  if (!is_valid_matching(g, fast)) return fail(ctx, out, "max_matching returned an invalid matching", uncolored(g));
  if (!is_valid_matching(g, brute)) return fail(ctx, out, "brute oracle returned an invalid matching", uncolored(g));
  if (fast.size() != brute.size())
    return fail(ctx, out,
                "max_matching size " + std::to_string(fast.size()) + " != brute " + std::to_string(brute.size()),
                uncolored(g));
  if (matching_number(g) != fast.size()) return fail(ctx, out, "matching_number disagrees with max_matching", uncolored(g));
  if (2 * fast.size() == n) ++out.stats["perfect"];
}

/// Gallai-Edmonds checks against brute force; empty string when all hold.
std::string ge_problem(const Graph& g) {
  const int n = g.vertex_count();
  const GEDecomposition ge = gallai_edmonds(g);
  const int nu = brute_max_matching(g).size();
  if (ge.D != brute_missable_vertices(g)) return "D differs from the brute-force set of missable vertices";
  if (ge.deficiency != n - 2 * nu) return "deficiency != N - 2 nu";
  if (ge.matching.size() != nu || !is_valid_matching(g, ge.matching)) return "decomposition matching is not maximum";
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  if (set_union(set_union(ge.D, ge.A), ge.C) != all ||
      ge.D.size() + ge.A.size() + ge.C.size() != static_cast<std::size_t>(n))
    return "D, A, C do not partition V";
  VertexSet nbrs;
  for (Vertex v : ge.D)
    for (Vertex u : g.neighbor_list(v)) nbrs.push_back(u);
  if (set_difference(normalize(nbrs), ge.D) != ge.A) return "A is not the neighbourhood of D";
  for (Vertex c : ge.C)
    for (Vertex d : ge.D)
      if (g.has_edge(c, d)) return "edge between C and D";
  const InducedSubgraph d = induced_subgraph(g, ge.D);
  const auto comps = components(d.graph);
  if (static_cast<int>(comps.size()) - static_cast<int>(ge.A.size()) != ge.deficiency)
    return "deficiency != components(D) - |A|";
  for (const VertexSet& comp : comps) {
    for (Vertex v : comp) {
      VertexSet rest = comp;
      rest.erase(std::find(rest.begin(), rest.end(), v));
      if (2 * max_matching_within(d.graph, rest).size() != static_cast<int>(rest.size()))
        return "a component of G[D] is not factor-critical";
    }
  }
  return {};
}

void run_ge(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = small_random_graph(n, rng);
  out.params = {{"N", n}, {"edges", g.edge_count()}};
  if (const std::string p = ge_problem(g); !p.empty()) return fail(ctx, out, p, uncolored(g));
  if (!gallai_edmonds(g).D.empty()) ++out.stats["D_nonempty"];
}

void run_ind(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  Graph g(n);
  const int centers = rng.uniform(1, 3);
  for (int v = centers; v < n; ++v)
    if (rng.chance(3, 4)) g.add_edge(v, static_cast<int>(rng.below(centers)));
  for (int extra = rng.uniform(0, 2); extra > 0; --extra) {
    const int u = rng.uniform(0, n - 1);
    const int w = rng.uniform(0, n - 1);
    if (u != w) g.add_edge(u, w);
  }
  const int nu = matching_number(g);
  Vertex v = 0;
  for (Vertex x = 1; x < n; ++x)
    if (g.degree(x) > g.degree(v)) v = x;
  const int hi = (g.degree(v) + 1) / 2 * 2;  // largest even value <= deg(v) + 1
  out.hypothesis = hi >= 2 * nu + 2;
  out.params = {{"N", n}, {"nu", nu}, {"v", v}, {"deg", g.degree(v)}};
  if (!out.hypothesis) return;
  const int target = 2 * rng.uniform(nu + 1, hi / 2);
  Graph h = g;
  for (Vertex u = 0; u < n; ++u)
    if (u != v && !h.has_edge(u, v) && rng.chance(1, 2)) h.add_edge(u, v);
  out.params["n"] = target;
  if (2 * matching_number(h) >= target)
    fail(ctx, out, "adding edges at a vertex of degree >= n-1 created a matching saturating n", uncolored(h));
}

Graph tutte_instance(int n, Rng& rng, Json& params) {
  const int family = rng.uniform(0, 3);
  params["family"] = family;
  switch (family) {
    case 0: {  // sparse G(N, p) with average degree below 3
      return random_graph_p(n, rng.uniform(1, 6), 2 * static_cast<std::uint64_t>(n), rng);
    }
    case 1: {  // star forest
      Graph g(n);
      const int centers = rng.uniform(1, std::max(1, n / 4));
      for (int v = centers; v < n; ++v)
        if (rng.chance(7, 8)) g.add_edge(v, static_cast<int>(rng.below(centers)));
      return g;
    }
    case 2: {  // disjoint cliques of random sizes
      Graph g(n);
      int v = 0;
      while (v < n) {
        const int size = std::min(n - v, rng.uniform(1, 2 + static_cast<int>(isqrt(n))));
        for (int a = v; a < v + size; ++a)
          for (int b = a + 1; b < v + size; ++b) g.add_edge(a, b);
        v += size;
      }
      return g;
    }
    default: {  // a small hub set joined to many small odd components
      Graph g(n);
      const int hubs = rng.uniform(1, std::max(1, n / 10));
      int v = hubs;
      while (v < n) {
        const int size = std::min(n - v, 2 * rng.uniform(0, 2) + 1);
        for (int a = v; a < v + size; ++a) {
          for (int b = a + 1; b < v + size; ++b) g.add_edge(a, b);
          if (rng.chance(1, 2)) g.add_edge(a, static_cast<int>(rng.below(hubs)));
        }
        v += size;
      }
      return g;
    }
  }
}

void run_tutte(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n_vertices = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = tutte_instance(n_vertices, rng, out.params);
  const int nu = matching_number(g);
  const int lo = 2 * nu + 2;
  const int hi = std::max(lo, n_vertices / 2 * 2);
  const int n = 2 * rng.uniform(lo / 2, hi / 2);
  out.params["N"] = n_vertices;
  out.params["nu"] = nu;
  out.params["n"] = n;
  const TuttePartition p = tutte_partition(g, n);
  const TutteCheck c = check_tutte_partition(g, p);
  if (p.truncated) ++out.stats["truncated"];
  if (p.fallback) ++out.stats["fallback"];
  if (!c.ok()) fail(ctx, out, "partition invariant failed: " + c.detail, uncolored(g));
}

/// Uniformly random colors, a random block structure plus noise, or the four-block pattern.
ColoredGraph structured_coloring(const Graph& g, Rng& rng, Outcome& out) {
  const int mode = rng.uniform(0, 2);
  if (mode == 0) {
    ++out.stats["coloring_random"];
    return random_coloring(g, rng);
  }
  const int n = g.vertex_count();
  const int k = mode == 1 ? rng.uniform(2, 4) : 4;
  std::vector<int> block(n);
  for (int v = 0; v < n; ++v) block[v] = static_cast<int>(rng.below(k));
  std::array<std::array<Color, 4>, 4> table{};
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) table[i][j] = table[j][i] = static_cast<Color>(1 + rng.below(3));
  if (mode == 2) {
    // Four blocks; each color joins two complementary block pairs, so no color spans
    // more than about half of V.
    ++out.stats["coloring_quad"];
    table[0][1] = table[1][0] = table[2][3] = table[3][2] = 1;
    table[0][2] = table[2][0] = table[1][3] = table[3][1] = 2;
    table[0][3] = table[3][0] = table[1][2] = table[2][1] = 3;
  } else {
    ++out.stats["coloring_blocks"];
  }
  std::vector<ColoredGraph::ColoredEdge> edges;
  for (const Edge& e : g.edges()) {
    Color c = table[block[e.u]][block[e.v]];
    if (mode == 1 && rng.chance(1, 16)) c = static_cast<Color>(1 + rng.below(3));
    edges.push_back({e.u, e.v, c});
  }
  return ColoredGraph::from_colored_edges(n, edges);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Random graph with deficit < ceil(N/8) (always N/8-dense); wider when the filter is off.
Graph eighth_dense_graph(const Context& ctx, int n, Rng& rng) {
  int b = ceil_div(n, 8);
  if (!ctx.cfg.hypothesis_filter) b = rng.uniform(b, ceil_div(n, 4));
  return random_b_dense_subgraph(Graph::complete(n), b, rng);
}

void run_comp11(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = eighth_dense_graph(ctx, n, rng);
  const ColoredGraph cg = structured_coloring(g, rng, out);
  out.hypothesis = is_eighth_dense(g);
  out.params = {{"N", n}, {"deficit", density_deficit(g)}};
  if (skip(ctx, out)) return;
  const auto comps = mono_components(cg);
  const std::size_t largest = comps.empty() ? 0 : comps.front().vertices.size();
  out.params["largest"] = largest;
  if (2 * static_cast<int>(largest) < n) return fail(ctx, out, "largest monochromatic component below N/2", cg);
  if (out.hypothesis) largest_mono_component(cg);
}

void run_comp(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = eighth_dense_graph(ctx, n, rng);
  const ColoredGraph cg = structured_coloring(g, rng, out);
  out.hypothesis = is_eighth_dense(g);
  out.params = {{"N", n}, {"deficit", density_deficit(g)}};
  if (!out.hypothesis) return;
  try {
    const SecondComponentResult r = second_component_check(cg);
    ++out.stats[r.giant ? "giant" : "two_large"];
    if (triple_cover_precondition_failures(cg).empty()) {
      const TripleCover cover = triple_cover(cg);
      VertexSet all;
      for (const auto& part : cover.parts) all = set_union(all, part.vertices);
      if (static_cast<int>(all.size()) != n) return fail(ctx, out, "triple cover misses a vertex", cg);
      ++out.stats["triple_cover"];
    }
  } catch (const InternalContradiction& e) {
    fail(ctx, out, e.what(), cg);
  }
}

Graph complete_bipartite(int n1, int n2) {
  const int n = n1 + n2;
  std::vector<DynamicBitset> rows(n, DynamicBitset(n));
  for (int u = 0; u < n1; ++u)
    for (int v = n1; v < n; ++v) {
      rows[u].set(v);
      rows[v].set(u);
    }
  return Graph::from_rows(std::move(rows));
}

void run_match1(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(std::max(2, ctx.n_min), ctx.n_max);
  const int n1 = rng.uniform(1, n / 2);
  const int n2 = n - n1;
  const int b = rng.uniform(1, std::max(1, n1));
  const Graph g = random_b_dense_subgraph(complete_bipartite(n1, n2), b, rng);
  VertexSet v1(n1);
  VertexSet v2(n2);
  for (int i = 0; i < n1; ++i) v1[i] = i;
  for (int i = 0; i < n2; ++i) v2[i] = n1 + i;
  out.params = {{"N", n}, {"n1", n1}, {"n2", n2}, {"b", b}};
  try {
    const DenseBipartiteReport r = dense_bipartite_witness(g, v1, v2, b);
    if (r.large_component) ++out.stats["item_i"];
    if (r.covering_component) ++out.stats["item_ii"];
    if (r.saturating_matching) ++out.stats["item_iii"];
  } catch (const InternalContradiction& e) {
    fail(ctx, out, e.what(), uncolored(g));
  }
}

/// Two or three vertex blocks, each colored internally by its own color, third color across.
ColoredGraph split_coloring(const Graph& g, Rng& rng, Color c1, Color c2) {
  const int n = g.vertex_count();
  const Color c3 = static_cast<Color>(6 - c1 - c2);
  std::vector<int> side(n);
  const auto cut = static_cast<std::uint64_t>(rng.uniform(n / 4, (3 * n) / 4));
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  for (int i = 0; i < n; ++i) side[order[i]] = static_cast<std::uint64_t>(i) < cut ? 0 : 1;
  const std::uint64_t noise = rng.uniform(0, 3);
  std::vector<ColoredGraph::ColoredEdge> edges;
  for (const Edge& e : g.edges()) {
    Color c = side[e.u] != side[e.v] ? c3 : (side[e.u] == 0 ? c1 : c2);
    if (rng.chance(noise, 64)) c = static_cast<Color>(1 + rng.below(3));
    edges.push_back({e.u, e.v, c});
  }
  return ColoredGraph::from_colored_edges(n, edges);
}

void run_match2(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = eighth_dense_graph(ctx, n, rng);
  const Color c1 = static_cast<Color>(1 + rng.below(3));
  Color c2 = static_cast<Color>(1 + rng.below(2));
  if (c2 >= c1) ++c2;
  const ColoredGraph cg = rng.chance(2, 3) ? split_coloring(g, rng, c1, c2) : random_coloring(g, rng);
  out.params = {{"N", n}, {"colors", {c1, c2}}};
  auto largest_of = [&](Color c) -> std::optional<VertexSet> {
    for (VertexSet& comp : components(color_subgraph(cg, c)))
      if (comp.size() >= 2) return comp;
    return std::nullopt;
  };
  const auto f1 = largest_of(c1);
  const auto f2 = largest_of(c2);
  out.hypothesis = is_eighth_dense(g) && f1 && f2;
  if (!out.hypothesis) return;
  try {
    const Match2Outcome r = match2_check(cg, *f1, c1, *f2, c2);
    ++out.stats[r.large_matching ? "outcome_a" : "outcome_b"];
    if (r.large_matching) ++out.stats["route_" + r.route];
  } catch (const InternalContradiction& e) {
    fail(ctx, out, e.what(), cg);
  }
}

void run_m2(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int m_hat = rng.uniform(ctx.n_min, ctx.n_max);
  const int b0 = static_cast<int>(ceil_k_sqrt(6, m_hat));
  const int b = rng.uniform(b0, 2 * b0);
  const int cap = 2 * b + static_cast<int>(isqrt(4 * static_cast<std::int64_t>(m_hat)));
  std::array<int, 4> m{};
  for (int attempt = 0;; ++attempt) {
    for (int i = 1; i <= 3; ++i) m[i] = rng.uniform(0, std::min(cap, m_hat));
    m[0] = m_hat - m[1] - m[2] - m[3];
    if (m[0] >= 0) break;
    if (attempt == 16) {
      m[3] = std::max(0, m_hat - m[1] - m[2]);
      m[0] = m_hat - m[1] - m[2] - m[3];
      if (m[0] >= 0) break;
    }
  }
  std::vector<Vertex> order(m_hat);
  for (int v = 0; v < m_hat; ++v) order[v] = v;
  rng.shuffle(order);
  HatHSpec spec;
  int next = 0;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < m[i]; ++k) spec.Z[i].push_back(order[next++]);
    std::sort(spec.Z[i].begin(), spec.Z[i].end());
  }
  out.params = {{"m_hat", m_hat}, {"m", {m[0], m[1], m[2], m[3]}}, {"b", b}};
  const Graph g = random_b_dense_subgraph(hat_h_graph(spec), b, rng);
  out.hypothesis = hat_h_precondition_failures(g, spec, b).empty();
  if (!out.hypothesis) return;
  try {
    const HatHMatchingResult r = hat_h_matching(g, spec, b);
    if (r.connectivity_clause) ++out.stats["connectivity_clause"];
    if (m[0] == 0) ++out.stats["m0_zero"];
  } catch (const InternalContradiction& e) {
    out.params["Z"] = {spec.Z[0], spec.Z[1], spec.Z[2], spec.Z[3]};
    fail(ctx, out, e.what(), uncolored(g));
  }
}

void run_small(const Context& ctx, std::uint64_t, Rng& rng, Outcome& out) {
  const int n = rng.uniform(ctx.n_min, ctx.n_max);
  const Graph g = eighth_dense_graph(ctx, n, rng);
  const ColoredGraph cg = structured_coloring(g, rng, out);
  out.params = {{"N", n}};
  std::array<VertexSet, 3> v;
  std::array<Color, 3> colors{1, 2, 3};
  if (is_eighth_dense(g) && triple_cover_precondition_failures(cg).empty()) {
    const TripleCover cover = triple_cover(cg);
    for (int i = 0; i < 3; ++i) {
      v[i] = cover.parts[i].vertices;
      colors[i] = cover.parts[i].color;
    }
    ++out.stats["from_triple_cover"];
  } else {
    for (int i = 0; i < 3; ++i)
      for (VertexSet& comp : components(color_subgraph(cg, colors[i])))
        if (comp.size() >= 2) {
          v[i] = std::move(comp);
          break;
        }
  }
  const RegionDecomposition rd = region_decompose(cg, v[0], v[1], v[2], colors);
  const ZeroClaimsReport rep = zero_claims_report(cg, rd, density_deficit(g) + 1);
  out.hypothesis = rep.hypotheses_hold();
  for (int i = 0; i < 7; ++i)
    if (!rep.items[i].pass && !rep.items[i].conditional)
      return fail(ctx, out, "unconditional claim item " + std::to_string(i + 1) + " failed: " + rep.items[i].detail, cg);
  if (out.hypothesis && !rep.all_pass()) return fail(ctx, out, "claim item failed under the hypotheses", cg);
  if (!rep.all_pass()) ++out.stats["conditional_items_failed_outside_hypotheses"];
}

void run_theorem(const Context& ctx, std::uint64_t index, Rng& rng, Outcome& out) {
  const SweepConfig& cfg = ctx.cfg;
  const std::uint64_t per_n = cfg.trials + cfg.adversarial;
  const int n = cfg.theorem_n[index / per_n];
  const bool adversarial = index % per_n >= cfg.trials;
  const ThresholdPair th = theorem_thresholds(n, cfg.eta);
  const int b = th.N - th.min_degree;
  if (b < 1) throw InvalidArgument("theorem sweep: degree threshold reaches N (vacuous eta)");
  const Graph g = random_b_dense_subgraph(Graph::complete(th.N), b, rng);
  const ColoredGraph cg =
      adversarial ? adversarial_coloring(g, n, cfg.adversarial_budget, rng.next()) : random_coloring(g, rng);
  out.params = {{"n", n}, {"N", th.N}, {"min_degree", g.min_degree()}, {"adversarial", adversarial}};
  out.hypothesis = check_hypotheses(cg, n, cfg.eta).holds();
  const std::string key = "n" + std::to_string(n) + (adversarial ? "_adversarial" : "_random");
  const SolveResult r = solve(cg, n, cfg.eta);
  if (r.certificate) {
    ++out.stats[key + "_success"];
    if (const std::string p = certificate_problem(cg, *r.certificate); !p.empty())
      return fail(ctx, out, "certificate rejected: " + p, cg);
  } else {
    ++out.stats[key + "_failure"];
    int best = 0;
    for (const auto& row : r.table) best = std::max(best, 2 * row.matching_size);
    out.archive = "no monochromatic component saturates n; best saturation " + std::to_string(best);
    out.params["matching_objective"] = best;
    out.instance = cg;
  }
}

const std::vector<LemmaInfo>& lemma_table() {
  static const std::vector<LemmaInfo> table{
      {"matching", 1, 8, "random edge count <= 40", run_matching},
      {"ge", 1, 12, "random edge count <= 40", run_ge},
      {"l:ind", 6, 30, "star forest plus noise", run_ind},
      {"tutte", 20, 120, "sparse / star forest / clique union / hub families", run_tutte},
      {"l:comp11", 40, 120, "deficit <= ceil(N/8)-1", run_comp11},
      {"l:comp", 40, 120, "deficit <= ceil(N/8)-1", run_comp},
      {"l:match1", 20, 120, "b-dense in K_{V1,V2}, b random in [1, |V1|]", run_match1},
      {"l:match2", 40, 120, "deficit <= ceil(N/8)-1", run_match2},
      {"l:m2", 1500, 3000, "b-dense in the template graph, 6 sqrt(m_hat) <= b <= 12 sqrt(m_hat)", run_m2},
      {"l:small", 40, 120, "deficit <= ceil(N/8)-1", run_small},
      {"theorem", 0, 0, "deficit < N - ceil((7/4 + 4 eta) n)", run_theorem},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& sweep_lemmas() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& info : lemma_table()) out.push_back(info.id);
    return out;
  }();
  return ids;
}

SweepReport lemma_sweep(const SweepConfig& cfg) {
  const LemmaInfo* info = nullptr;
  for (const auto& l : lemma_table())
    if (l.id == cfg.lemma) info = &l;
  if (!info) throw InvalidArgument("unknown lemma id \"" + cfg.lemma + "\"");

  SweepReport report;
  report.config = cfg;
  report.n_min = cfg.n_min > 0 ? cfg.n_min : info->default_min;
  report.n_max = cfg.n_max > 0 ? cfg.n_max : info->default_max;
  report.deficit_rule = info->deficit_rule;
  if (report.n_min > report.n_max) throw InvalidArgument("sweep: nmin > nmax");
  std::uint64_t total = cfg.trials;
  if (cfg.lemma == "theorem") {
    if (cfg.theorem_n.empty()) throw InvalidArgument("theorem sweep needs at least one n");
    for (int n : cfg.theorem_n)
      if (n < 2 || n % 2 != 0) throw InvalidArgument("theorem sweep: n must be even and >= 2");
    if (cfg.eta.num <= 0) throw InvalidArgument("theorem sweep: eta must be positive");
    total = (cfg.trials + cfg.adversarial) * cfg.theorem_n.size();
  } else if (report.n_min < 1) {
    throw InvalidArgument("sweep: nmin must be positive");
  }

  const auto start = std::chrono::steady_clock::now();
  const Context ctx{cfg, report.n_min, report.n_max};
  std::vector<Outcome> outcomes(total);
  parallel_for(
      total,
      [&](std::size_t i) {
        Rng rng = Rng::substream(cfg.seed, i);
        Outcome& out = outcomes[i];
        try {
          info->run(ctx, i, rng, out);
        } catch (const std::exception& e) {
          out.violation = std::string("unexpected error: ") + e.what();
        }
      },
      cfg.threads > 0 ? cfg.threads : thread_count());
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Outcome& out = outcomes[i];
    if (!out.generated) continue;
    ++report.instances;
    if (out.hypothesis) ++report.hypothesis_satisfying;
    for (const auto& [k, v] : out.stats) report.stats[k] += v;
    auto record = [&](std::string message) {
      return SweepRecord{i, std::move(message), out.params,
                         out.instance ? serialize_colored_graph(*out.instance) : std::string()};
    };
    if (out.violation) report.violations.push_back(record(*out.violation));
    if (out.archive) report.archived.push_back(record(*out.archive));
  }
  return report;
}

Json to_json(const SweepReport& r, bool timing) {
  auto records = [](const std::vector<SweepRecord>& list) {
    Json arr = Json::array();
    for (const SweepRecord& rec : list)
      arr.push_back({{"index", rec.index}, {"message", rec.message}, {"params", rec.params}, {"instance", rec.instance}});
    return arr;
  };
  Json j;
  j["lemma"] = r.config.lemma;
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  if (r.config.lemma == "theorem") {
    j["n_values"] = r.config.theorem_n;
    j["eta"] = r.config.eta.str();
    j["adversarial"] = r.config.adversarial;
    j["adversarial_budget"] = r.config.adversarial_budget;
  } else {
    j["n_range"] = {r.n_min, r.n_max};
  }
  j["deficit_rule"] = r.deficit_rule;
  j["hypothesis_filter"] = r.config.hypothesis_filter;
  j["instances"] = r.instances;
  j["hypothesis_satisfying"] = r.hypothesis_satisfying;
  j["violations"] = records(r.violations);
  j["archived"] = records(r.archived);
  Json stats = Json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  if (timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace monomatch
