#include "monomatch/components.hpp"

#include <algorithm>
#include <string>

#include "monomatch/errors.hpp"
#include "monomatch/exact.hpp"
#include "monomatch/structure.hpp"

namespace monomatch {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

VertexSet all_vertices(int n) {
  VertexSet v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

/// f is exactly the vertex set of a color-c component with at least one edge.
bool is_color_component(const ColoredGraph& cg, const VertexSet& f, Color c) {
  if (f.size() < 2 || !std::is_sorted(f.begin(), f.end()) ||
      std::adjacent_find(f.begin(), f.end()) != f.end())
    return false;
  if (f.front() < 0 || f.back() >= cg.vertex_count()) return false;
  return component_of(color_subgraph(cg, c), f.front()).to_vector() == f;
}

void require_eighth_dense(const ColoredGraph& cg, const char* where) {
  if (!is_eighth_dense(cg.graph()))
    throw PreconditionError(std::string(where) + ": graph is not N/8-dense (deficit " +
                            std::to_string(density_deficit(cg.graph())) + ", N = " +
                            std::to_string(cg.vertex_count()) + ")");
}

}  // namespace

bool is_eighth_dense(const Graph& g) {
  return 8 * static_cast<std::int64_t>(density_deficit(g)) < g.vertex_count();
}

std::optional<MonoComponent> largest_mono_component(const ColoredGraph& cg, Hypotheses h) {
  auto comps = mono_components(cg);
  if (comps.empty()) return std::nullopt;
  MonoComponent best = std::move(comps.front());
  const auto size = static_cast<std::int64_t>(best.vertices.size());
  const bool dense = h == Hypotheses::kAssume || is_eighth_dense(cg.graph());
  if (dense && 2 * size < cg.vertex_count())
    throw InternalContradiction("largest monochromatic component has " + std::to_string(size) +
                                " < N/2 vertices on an N/8-dense graph");
  return best;
}

SecondComponentResult second_component_check(const ColoredGraph& cg, int b) {
  const int n = cg.vertex_count();
  if (b < 1 || 8 * static_cast<std::int64_t>(b) > n)
    throw PreconditionError("second_component_check: need 1 <= b <= N/8");
  if (density_deficit(cg.graph()) >= b) throw PreconditionError("second_component_check: graph is not b-dense");
  return second_component_check(cg);
}

SecondComponentResult second_component_check(const ColoredGraph& cg, Hypotheses h) {
  if (h == Hypotheses::kCheck) require_eighth_dense(cg, "second_component_check");
  const int n = cg.vertex_count();
  const auto comps = mono_components(cg);
  if (comps.empty()) throw PreconditionError("second_component_check: graph has no edges");
  SecondComponentResult r;
  r.first = comps.front();
  if (4 * static_cast<std::int64_t>(r.first.vertices.size()) >= 3 * static_cast<std::int64_t>(n)) {
    r.giant = true;
    return r;
  }
  for (const MonoComponent& c : comps) {
    if (c.color == r.first.color) continue;
    if (2 * static_cast<std::int64_t>(c.vertices.size()) >= n) r.second = c;
    break;
  }
  if (!r.second)
    throw InternalContradiction("second_component_check: largest component is below 3N/4 but no component of "
                                "another color has N/2 vertices");
  return r;
}

Match2Outcome match2_check(const ColoredGraph& cg, const VertexSet& f1, Color c1, const VertexSet& f2, Color c2,
                           Hypotheses h) {
  if (!is_valid_color(c1) || !is_valid_color(c2) || c1 == c2)
    throw InvalidArgument("match2_check: colors must be two distinct values in 1..3");
  if (h == Hypotheses::kCheck) require_eighth_dense(cg, "match2_check");
  if (!is_color_component(cg, f1, c1)) throw PreconditionError("match2_check: f1 is not a component of its color");
  if (!is_color_component(cg, f2, c2)) throw PreconditionError("match2_check: f2 is not a component of its color");

  const int n = cg.vertex_count();
  const VertexSet x = set_difference(f1, f2);
  const VertexSet y = set_difference(f2, f1);
  Match2Outcome out;
  out.only_first = static_cast<int>(x.size());
  out.only_second = static_cast<int>(y.size());
  if (4 * static_cast<std::int64_t>(std::min(x.size(), y.size())) < n) return out;

  const Color c3 = static_cast<Color>(6 - c1 - c2);
  out.third_color = c3;
  const Graph third = color_subgraph(cg, c3);
  // Cross edges cannot carry c1 or c2 (they would extend f1 or f2), so G[X, Y] is third-colored.
  const VertexSet& small = x.size() <= y.size() ? x : y;
  const VertexSet& large = x.size() <= y.size() ? y : x;
  const auto s = static_cast<int>(small.size());
  const auto l = static_cast<int>(large.size());
  Graph cross(s + l);
  VertexSet left(s);
  VertexSet right(l);
  for (int i = 0; i < s; ++i) left[i] = i;
  for (int j = 0; j < l; ++j) right[j] = s + j;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < l; ++j) {
      const Color c = cg.color(small[i], large[j]);
      if (c == 0) continue;
      if (c != c3)
        throw InternalContradiction("match2_check: edge " + std::to_string(small[i]) + "-" + std::to_string(large[j]) +
                                    " between f1 \\ f2 and f2 \\ f1 is not of the third color");
      cross.add_edge(i, s + j);
    }
  }
  int deficit = 0;
  for (int v = 0; v < s + l; ++v) deficit = std::max(deficit, (v < s ? l : s) - cross.degree(v));
  auto parent = [&](int v) { return v < s ? small[v] : large[v - s]; };

  Matching local;
  const int b = deficit + 1;
  if (s > b && l > 2 * b) {
    local = *dense_bipartite_witness(cross, left, right, b).saturating_matching;
    out.route = "dense-bipartite";
  } else {
    // Exact form of the same argument: deficit < N/8 and both sides >= N/4 suffice.
    if (!is_connected(cross))
      throw InternalContradiction("match2_check: third-color graph between f1 \\ f2 and f2 \\ f1 is disconnected");
    local = max_matching_bipartite(cross, left, right);
    if (local.size() != s)
      throw InternalContradiction("match2_check: no third-color matching saturates the smaller difference");
    out.route = "direct";
  }
  for (const Edge& e : local.edges) out.matching.edges.push_back(Edge::normalized(parent(e.u), parent(e.v)));
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  out.component = component_of(third, small.front()).to_vector();
  if (4 * static_cast<std::int64_t>(out.matching.size()) < n)
    throw InternalContradiction("match2_check: matching saturates fewer than N/2 vertices");
  out.large_matching = true;
  return out;
}

std::vector<std::string> triple_cover_precondition_failures(const ColoredGraph& cg) {
  std::vector<std::string> failures;
  const auto n = static_cast<std::int64_t>(cg.vertex_count());
  if (!is_eighth_dense(cg.graph())) failures.emplace_back("graph is not N/8-dense");
  const auto comps = mono_components(cg);
  if (comps.empty()) failures.emplace_back("graph has no edges");
  for (const MonoComponent& c : comps) {
    if (4 * static_cast<std::int64_t>(c.vertices.size()) >= 3 * n) {
      failures.emplace_back("color " + std::to_string(c.color) + " component has " +
                            std::to_string(c.vertices.size()) + " >= 3N/4 vertices");
      break;
    }
  }
  for (Color c : kColors) {
    const Graph sub = color_subgraph(cg, c);
    for (const VertexSet& comp : components(sub)) {
      if (comp.size() < 2 || 2 * static_cast<std::int64_t>(comp.size()) < n) continue;
      const int nu = max_matching_within(sub, comp).size();
      if (4 * static_cast<std::int64_t>(nu) >= n) {
        failures.emplace_back("color " + std::to_string(c) + " component has a matching saturating " +
                              std::to_string(2 * nu) + " >= N/2 vertices");
        return failures;
      }
    }
  }
  return failures;
}

TripleCover triple_cover(const ColoredGraph& cg, Hypotheses h) {
  if (h == Hypotheses::kCheck) {
    if (const auto failures = triple_cover_precondition_failures(cg); !failures.empty())
      throw PreconditionError("triple_cover: " + join(failures));
  }
  const SecondComponentResult two = second_component_check(cg, h);
  if (two.giant) throw InternalContradiction("triple_cover: giant component despite the 3N/4 precondition");
  TripleCover cover;
  cover.parts[0] = two.first;
  cover.parts[1] = *two.second;
  const Color c3 = static_cast<Color>(6 - two.first.color - two.second->color);
  const VertexSet rest =
      set_difference(all_vertices(cg.vertex_count()), set_union(two.first.vertices, two.second->vertices));
  MonoComponent third{c3, {}};
  const Graph sub = color_subgraph(cg, c3);
  if (rest.empty()) {
    for (const VertexSet& comp : components(sub)) {
      if (comp.size() >= 2) third.vertices = comp;
      break;
    }
    if (third.vertices.empty()) throw InternalContradiction("triple_cover: third color has no edges");
  } else {
    third.vertices = component_of(sub, rest.front()).to_vector();
    if (third.vertices.size() < 2 || !std::includes(third.vertices.begin(), third.vertices.end(), rest.begin(), rest.end()))
      throw InternalContradiction("triple_cover: V \\ (V1 ∪ V2) is not inside one third-color component");
  }
  cover.parts[2] = std::move(third);
  return cover;
}

const VertexSet& RegionDecomposition::pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return A12;
  if (i == 0 && j == 2) return A13;
  if (i == 1 && j == 2) return A23;
  throw InvalidArgument("RegionDecomposition::pair: need distinct indices in 0..2");
}

RegionDecomposition region_decompose(const ColoredGraph& cg, const VertexSet& v1, const VertexSet& v2,
                                     const VertexSet& v3, std::array<Color, 3> colors) {
  RegionDecomposition rd;
  rd.colors = colors;
  rd.V = {normalize(v1), normalize(v2), normalize(v3)};
  for (const VertexSet& s : rd.V)
    if (!s.empty() && (s.front() < 0 || s.back() >= cg.vertex_count()))
      throw InvalidArgument("region_decompose: vertex out of range");
  const auto& [p, q, r] = rd.V;
  rd.A123 = set_intersection(set_intersection(p, q), r);
  rd.A12 = set_difference(set_intersection(p, q), rd.A123);
  rd.A13 = set_difference(set_intersection(p, r), rd.A123);
  rd.A23 = set_difference(set_intersection(q, r), rd.A123);
  rd.A[0] = set_difference(p, set_union(q, r));
  rd.A[1] = set_difference(q, set_union(p, r));
  rd.A[2] = set_difference(r, set_union(p, q));
  rd.outside = set_difference(all_vertices(cg.vertex_count()), set_union(set_union(p, q), r));
  return rd;
}

bool ZeroClaimsReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ClaimItem& c) { return c.pass; });
}

namespace {

/// First edge between a and b whose color differs from `want` (0: any edge at all).
std::optional<Edge> find_edge(const ColoredGraph& cg, const VertexSet& a, const VertexSet& b, Color want) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u != v && cg.graph().has_edge(u, v) && (want == 0 || cg.color(u, v) != want))
        return Edge::normalized(u, v);
  return std::nullopt;
}

std::string name(int i) { return "A" + std::to_string(i + 1); }
std::string name(int i, int j) {
  if (i > j) std::swap(i, j);
  return "A" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

ZeroClaimsReport zero_claims_report(const ColoredGraph& cg, const RegionDecomposition& rd, int b_prime) {
  ZeroClaimsReport rep;
  rep.b_prime = b_prime;
  const auto n = static_cast<std::int64_t>(cg.vertex_count());

  rep.dense = density_deficit(cg.graph()) < b_prime;
  rep.covers = rd.outside.empty();
  rep.components_small = true;
  rep.no_large_matching = true;
  for (Color c : kColors) {
    const Graph sub = color_subgraph(cg, c);
    for (const VertexSet& comp : components(sub)) {
      if (comp.size() < 2) continue;
      if (4 * static_cast<std::int64_t>(comp.size()) >= 3 * n) rep.components_small = false;
      // 2 nu < N/2 - 4 sqrt(N)  <=>  N - 4 nu > 8 sqrt(N).
      const std::int64_t nu = max_matching_within(sub, comp).size();
      if (le_sqrt(n - 4 * nu, 64 * n)) rep.no_large_matching = false;
    }
  }

  auto& [c1, c2, c3, c4, c5, c6, c7] = rep.items;
  for (int i = 0; i < 3; ++i) {
    if (!c1.pass) break;
    if (auto e = find_edge(cg, rd.A[i], rd.A123, rd.colors[i])) {
      c1.pass = false;
      c1.witness_edge = e;
      c1.detail = "edge between " + name(i) + " and A123 not of color " + std::to_string(rd.colors[i]);
    }
  }
  for (int i = 0; i < 3 && c2.pass; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (auto e = find_edge(cg, rd.pair(i, j), rd.pair(i, k), rd.colors[i])) {
      c2.pass = false;
      c2.witness_edge = e;
      c2.detail = "edge between " + name(i, j) + " and " + name(i, k) + " not of color " + std::to_string(rd.colors[i]);
    }
  }
  c3.conditional = true;
  for (int i = 0; i < 3 && c3.pass; ++i) {
    if (4 * (n - static_cast<std::int64_t>(rd.V[i].size())) <= n) {
      c3.pass = false;
      c3.witness_set = rd.V[i];
      c3.detail = "|V| - |V" + std::to_string(i + 1) + "| <= N/4";
    }
  }
  c4.conditional = true;
  for (int i = 0; i < 3 && c4.pass; ++i) {
    if (rd.A[i].empty()) {
      c4.pass = false;
      c4.witness_set = rd.V[i];  // every vertex of V_i lies in another V_j
      c4.detail = name(i) + " is empty";
    }
  }
  // (v): the edge part is unconditional; the size bound |A_jk| <= b' needs the hypotheses.
  for (int i = 0; i < 3 && c5.pass; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (auto e = find_edge(cg, rd.A[i], rd.pair(j, k), 0)) {
      c5.pass = false;
      c5.witness_edge = e;
      c5.detail = "edge between " + name(i) + " and " + name(j, k);
    } else if (static_cast<int>(rd.pair(j, k).size()) > b_prime) {
      c5.pass = false;
      c5.conditional = true;
      c5.witness_set = rd.pair(j, k);
      c5.detail = "|" + name(j, k) + "| > b'";
    }
  }
  c6.conditional = true;
  for (int i = 0; i < 3 && c6.pass; ++i) {
    for (int k = 0; k < 3; ++k) {
      if (k == i) continue;
      const int j = 3 - i - k;
      if (rd.pair(i, k).empty() && !rd.pair(i, j).empty() && !rd.pair(j, k).empty()) {
        c6.pass = false;
        c6.witness_set = set_union(rd.pair(i, j), rd.pair(j, k));
        c6.detail = name(i, k) + " is empty but " + name(i, j) + " and " + name(j, k) + " are not";
        break;
      }
    }
  }
  c7.conditional = true;
  int large = 0;
  VertexSet large_parts;
  for (int i = 0; i < 3; ++i) {
    if (4 * static_cast<std::int64_t>(rd.A[i].size()) > n) {
      ++large;
      large_parts = set_union(large_parts, rd.A[i]);
    }
  }
  if (large > 1) {
    c7.pass = false;
    c7.witness_set = std::move(large_parts);
    c7.detail = std::to_string(large) + " of A1, A2, A3 exceed N/4";
  }
  return rep;
}

}  // namespace monomatch
