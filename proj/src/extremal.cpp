#include "monomatch/extremal.hpp"

#include <algorithm>
#include <string>

#include "monomatch/errors.hpp"

namespace monomatch {

ExtremalSpec ExtremalSpec::make(int ell) {
  if (ell < 2) throw InvalidArgument("extremal construction needs ell >= 2, got " + std::to_string(ell));
  ExtremalSpec s;
  s.ell = ell;
  const std::array<int, 8> sizes{ell - 1, ell - 1, ell, ell + 1, ell, ell + 1, ell - 1, ell - 1};
  Vertex next = 2;
  for (int h = 0; h < 8; ++h)
    for (int i = 0; i < sizes[h]; ++i) s.halves[h].push_back(next++);
  return s;
}

VertexSet ExtremalSpec::part(int i) const { return set_union(half(i, 1), half(i, 2)); }

ExtremalGraph build_extremal(int ell) {
  ExtremalSpec spec = ExtremalSpec::make(ell);
  const int n = spec.vertex_count();
  std::vector<ColoredGraph::ColoredEdge> edges;
  auto within = [&](const VertexSet& s, Color c) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.push_back({s[i], s[j], c});
  };
  auto between = [&](const VertexSet& s, const VertexSet& t, Color c) {
    for (Vertex u : s)
      for (Vertex v : t) edges.push_back({std::min(u, v), std::max(u, v), c});
  };
  const VertexSet a1 = spec.part(1);
  const VertexSet a2 = spec.part(2);
  const VertexSet a3 = spec.part(3);
  const VertexSet a4 = spec.part(4);
  const VertexSet all_a = set_union(set_union(a1, a2), set_union(a3, a4));

  within(set_union(a1, a3), kRed);
  within(set_union(a2, a4), kRed);
  edges.push_back({spec.a, spec.b, kRed});

  between({spec.a}, all_a, kBlue);
  between(a1, a2, kBlue);
  between(a3, a4, kBlue);

  between({spec.b}, all_a, kGreen);
  between(spec.half(1, 1), spec.half(4, 2), kGreen);
  between(spec.half(1, 2), spec.half(4, 1), kGreen);
  between(spec.half(2, 1), spec.half(3, 1), kGreen);
  between(spec.half(2, 2), spec.half(3, 2), kGreen);

  return {ColoredGraph::from_colored_edges(n, edges), std::move(spec)};
}

bool StructuralCertificate::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const StructuralCheck& c) { return c.pass; });
}

const StructuralCheck* StructuralCertificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string sizes_text(const std::vector<int>& sizes) {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "}";
}

/// Components with at least one edge, largest first.
std::vector<VertexSet> edge_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet& c : components(g))
    if (c.size() >= 2) out.push_back(std::move(c));
  return out;
}

std::vector<int> sizes_of(const std::vector<VertexSet>& comps) {
  std::vector<int> s;
  for (const auto& c : comps) s.push_back(static_cast<int>(c.size()));
  return s;
}

Graph without_vertex(Graph g, Vertex v) {
  for (Vertex u : g.neighbor_list(v)) g.remove_edge(u, v);
  return g;
}

StructuralCheck named_check(std::string name, bool pass = false, std::string detail = {}) {
  StructuralCheck c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

StructuralCertificate verify_extremal(const ColoredGraph& cg, const ExtremalSpec& spec) {
  StructuralCertificate cert;
  cert.ell = spec.ell;
  const int ell = spec.ell;
  const int n = cg.vertex_count();

  StructuralCheck order = named_check("order", n == spec.vertex_count(), "N = " + std::to_string(n) + ", expected 8l = " +
                                                               std::to_string(spec.vertex_count()));
  cert.checks.push_back(order);
  if (!order.pass) return cert;

  {
    StructuralCheck r1 = named_check("r1");
    const auto comps = edge_components(color_subgraph(cg, kRed));
    const auto sizes = sizes_of(comps);
    r1.pass = sizes == std::vector<int>{4 * ell - 1, 4 * ell - 1, 2};
    r1.detail = "red component sizes " + sizes_text(sizes);
    if (!r1.pass) {
      if (!comps.empty() && static_cast<int>(comps.front().size()) >= 4 * ell) r1.witness_set = comps.front();
      // A red edge joining two of the intended red classes A1∪A3, A2∪A4, {a,b}.
      std::vector<int> cls(n, -1);
      for (int i : {1, 3})
        for (Vertex v : spec.part(i)) cls[v] = 0;
      for (int i : {2, 4})
        for (Vertex v : spec.part(i)) cls[v] = 1;
      cls[spec.a] = cls[spec.b] = 2;
      for (const auto& e : cg.colored_edges()) {
        if (e.color == kRed && cls[e.u] != cls[e.v]) {
          r1.witness_edge = Edge{e.u, e.v};
          break;
        }
      }
    }
    cert.checks.push_back(std::move(r1));
  }

  const Graph blue_minus_a = without_vertex(color_subgraph(cg, kBlue), spec.a);
  const auto blue_comps = edge_components(blue_minus_a);
  {
    StructuralCheck b1 = named_check("b1");
    const auto sizes = sizes_of(blue_comps);
    b1.pass = sizes == std::vector<int>{4 * ell - 1, 4 * ell - 1};
    b1.detail = "blue components without a: " + sizes_text(sizes);
    if (!b1.pass && !blue_comps.empty()) b1.witness_set = blue_comps.front();
    cert.checks.push_back(std::move(b1));
  }
  {
    StructuralCheck b2 = named_check("b2", !blue_comps.empty());
    const Graph blue = color_subgraph(cg, kBlue);
    for (const VertexSet& comp : blue_comps) {
      const VertexSet block = set_union(comp, VertexSet{spec.a});
      bool found = false;
      for (int i : {2, 3}) {
        const VertexSet cand = spec.part(i);
        if (!std::includes(block.begin(), block.end(), cand.begin(), cand.end())) continue;
        bool independent = true;
        for (std::size_t x = 0; x < cand.size() && independent; ++x)
          for (std::size_t y = x + 1; y < cand.size() && independent; ++y)
            if (blue.has_edge(cand[x], cand[y])) {
              independent = false;
              b2.witness_edge = Edge{cand[x], cand[y]};
            }
        if (independent && static_cast<int>(cand.size()) == 2 * ell + 1) found = true;
      }
      if (static_cast<int>(block.size()) != 4 * ell || !found) {
        b2.pass = false;
        b2.witness_set = block;
        b2.detail = "blue block of " + std::to_string(block.size()) + " vertices" +
                    (found ? "" : " without an independent set of size 2l+1");
        break;
      }
    }
    if (b2.pass) b2.detail = "every blue block has 4l vertices and independence number > 2l";
    cert.checks.push_back(std::move(b2));
  }
  {
    StructuralCheck g1 = named_check("g1");
    const auto comps = edge_components(without_vertex(color_subgraph(cg, kGreen), spec.b));
    const auto sizes = sizes_of(comps);
    g1.pass = sizes == std::vector<int>{2 * ell + 2, 2 * ell, 2 * ell - 2, 2 * ell - 2};
    g1.detail = "green components without b: " + sizes_text(sizes);
    if (!g1.pass && !comps.empty()) g1.witness_set = comps.front();
    cert.checks.push_back(std::move(g1));
  }
  {
    StructuralCheck delta = named_check("delta");
    const int d = cg.graph().min_degree();
    delta.pass = d == 7 * ell - 2;
    delta.detail = "minimum degree " + std::to_string(d) + ", expected " + std::to_string(7 * ell - 2);
    if (!delta.pass)
      for (Vertex v = 0; v < n; ++v)
        if (cg.graph().degree(v) == d) {
          delta.witness_set = {v};
          break;
        }
    cert.checks.push_back(std::move(delta));
  }
  return cert;
}

const char* to_string(CycleVerdict v) {
  switch (v) {
    case CycleVerdict::kNoneFound:
      return "none found";
    case CycleVerdict::kFound:
      return "found";
    case CycleVerdict::kBudgetExceeded:
      return "budget exceeded";
  }
  return "?";
}

namespace {

/// Vertices of the 2-core (no vertex of degree < 2 can lie on a cycle).
DynamicBitset two_core(const Graph& g) {
  const int n = g.vertex_count();
  DynamicBitset alive(n);
  alive.fill();
  std::vector<int> deg(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < 2) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!alive.test(v)) continue;
    alive.reset(v);
    g.neighbors(v).for_each([&](int u) {
      if (alive.test(u) && --deg[u] < 2) queue.push_back(u);
    });
  }
  return alive;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {}

  CycleVerdict run(std::uint64_t& nodes, std::vector<Vertex>& cycle) {
    const DynamicBitset core = two_core(g_);
    for (Vertex s = core.first(); s != -1; s = core.next(s + 1)) {
      allowed_ = core;
      for (Vertex v = 0; v <= s; ++v) allowed_.reset(v);
      allowed_.set(s);
      // Component of s among vertices >= s must hold k vertices.
      DynamicBitset reach(g_.vertex_count());
      std::vector<Vertex> stack{s};
      reach.set(s);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        DynamicBitset fresh = g_.neighbors(x);
        fresh &= allowed_;
        fresh -= reach;
        fresh.for_each([&](int y) {
          reach.set(y);
          stack.push_back(y);
        });
      }
      if (reach.count() < k_) continue;
      allowed_ = reach;
      path_.assign(1, s);
      on_path_ = DynamicBitset(g_.vertex_count());
      on_path_.set(s);
      const int r = extend(nodes);
      if (r == 1) {
        cycle = path_;
        return CycleVerdict::kFound;
      }
      if (r == -1) return CycleVerdict::kBudgetExceeded;
    }
    return CycleVerdict::kNoneFound;
  }

 private:
  /// 1: cycle found in path_, 0: exhausted, -1: budget hit.
  int extend(std::uint64_t& nodes) {
    if (++nodes > budget_) return -1;
    const Vertex last = path_.back();
    const Vertex s = path_.front();
    if (static_cast<int>(path_.size()) == k_) return g_.has_edge(last, s) && path_[1] < last ? 1 : 0;
    DynamicBitset next = g_.neighbors(last);
    next &= allowed_;
    next -= on_path_;
    for (Vertex v = next.first(); v != -1; v = next.next(v + 1)) {
      path_.push_back(v);
      on_path_.set(v);
      const int r = extend(nodes);
      if (r != 0) return r;
      on_path_.reset(v);
      path_.pop_back();
    }
    return 0;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  DynamicBitset allowed_;
  DynamicBitset on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

CycleSearchResult find_cycle_in_color(const ColoredGraph& cg, Color c, int k, std::uint64_t budget) {
  if (k < 3) throw InvalidArgument("cycle length must be >= 3");
  if (!is_valid_color(c)) throw InvalidArgument("invalid color " + std::to_string(c));
  CycleSearchResult r;
  r.color = c;
  const Graph g = color_subgraph(cg, c);
  CycleSearch search(g, k, budget);
  r.verdict = search.run(r.nodes, r.cycle);
  if (r.verdict != CycleVerdict::kFound) r.cycle.clear();
  return r;
}

CycleSearchResult exhaustive_no_mono_cycle(const ColoredGraph& cg, int k, std::uint64_t budget) {
  CycleSearchResult total;
  for (Color c : kColors) {
    CycleSearchResult r = find_cycle_in_color(cg, c, k, budget - std::min(budget, total.nodes));
    total.nodes += r.nodes;
    if (r.verdict != CycleVerdict::kNoneFound) {
      r.nodes = total.nodes;
      return r;
    }
  }
  return total;
}

}  // namespace monomatch
