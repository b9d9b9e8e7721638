#include "monomatch/structure.hpp"

#include <algorithm>
#include <string>

#include "monomatch/errors.hpp"
#include "monomatch/exact.hpp"

namespace monomatch {

namespace {

/// |U| + 2|S| < n + sqrt(N).
bool size_bound_holds(std::int64_t u, std::int64_t s, std::int64_t n, std::int64_t big_n) {
  return lt_sqrt(u + 2 * s - n, big_n);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

TuttePartition tutte_partition(const Graph& f, int n) {
  const int big_n = f.vertex_count();
  if (n < 2 || n % 2 != 0) throw InvalidArgument("tutte_partition: n must be even and >= 2, got " + std::to_string(n));
  if (n > 2 * big_n) throw InvalidArgument("tutte_partition: n exceeds 2N");
  if (2 * matching_number(f) >= n)
    throw PreconditionError("tutte_partition: graph has a matching saturating " + std::to_string(n) + " vertices");

  const GEDecomposition ge = gallai_edmonds(f);
  TuttePartition p;
  p.n = n;
  p.N = big_n;
  p.S = ge.A;
  const auto small_limit = static_cast<std::size_t>(isqrt(big_n));
  const auto d_graph = induced_subgraph(f, ge.D);
  for (const VertexSet& local : components(d_graph.graph)) {
    VertexSet& target = local.size() <= small_limit ? p.T : p.U;
    for (Vertex v : local) target.push_back(d_graph.to_parent[v]);
  }
  p.U.insert(p.U.end(), ge.C.begin(), ge.C.end());
  std::sort(p.T.begin(), p.T.end());
  std::sort(p.U.begin(), p.U.end());

  const auto keep = static_cast<std::size_t>(big_n - n / 2);
  if (p.T.size() > keep) {
    p.truncated = true;
    p.S.insert(p.S.end(), p.T.begin() + static_cast<std::ptrdiff_t>(keep), p.T.end());
    p.T.resize(keep);
    std::sort(p.S.begin(), p.S.end());
    if (!size_bound_holds(static_cast<std::int64_t>(p.U.size()), static_cast<std::int64_t>(p.S.size()), n, big_n)) {
      p.fallback = true;
      p.U.clear();
      VertexSet all(big_n);
      for (int v = 0; v < big_n; ++v) all[v] = v;
      p.S = set_difference(all, p.T);
    }
  }
  return p;
}

TutteCheck check_tutte_partition(const Graph& f, const TuttePartition& p) {
  TutteCheck c;
  const int big_n = f.vertex_count();
  std::vector<int> part(big_n, -1);
  c.partition = p.N == big_n;
  auto place = [&](const VertexSet& set, int id) {
    for (Vertex v : set) {
      if (v < 0 || v >= big_n || part[v] != -1) {
        c.partition = false;
        continue;
      }
      part[v] = id;
    }
  };
  place(p.S, 0);
  place(p.T, 1);
  place(p.U, 2);
  if (std::count(part.begin(), part.end(), -1) != 0) c.partition = false;
  if (!c.partition) {
    c.detail = "S, T, U do not partition V";
    return c;
  }

  c.low_degree = true;
  c.no_t_u_edges = true;
  for (Vertex v : p.T) {
    int internal = 0;
    f.neighbors(v).for_each([&](int u) {
      if (part[u] == 1) ++internal;
      if (part[u] == 2) c.no_t_u_edges = false;
    });
    if (!le_sqrt(internal + 1, big_n)) c.low_degree = false;
  }
  const auto s = static_cast<std::int64_t>(p.S.size());
  const auto t = static_cast<std::int64_t>(p.T.size());
  const auto u = static_cast<std::int64_t>(p.U.size());
  c.size_bound = size_bound_holds(u, s, p.n, big_n);
  c.t_bound = 2 * t <= 2 * static_cast<std::int64_t>(big_n) - p.n;
  c.identity = u + 2 * s == s + big_n - t;
  if (!c.ok()) {
    std::vector<std::string> bad;
    if (!c.low_degree) bad.emplace_back("(i) T-internal degree too large");
    if (!c.no_t_u_edges) bad.emplace_back("(ii) edge between T and U");
    if (!c.size_bound) bad.emplace_back("(iii) |U|+2|S| >= n+sqrt(N)");
    if (!c.t_bound) bad.emplace_back("(iv) |T| > N-n/2");
    if (!c.identity) bad.emplace_back("identity |U|+2|S| = |S|+N-|T| broken");
    c.detail = join(bad);
  }
  return c;
}

DenseBipartiteReport dense_bipartite_witness(const Graph& g, std::span<const Vertex> v1_in,
                                             std::span<const Vertex> v2_in, int b, Hypotheses h) {
  if (b < 1) throw InvalidArgument("dense_bipartite_witness: b must be positive");
  const VertexSet v1 = normalize({v1_in.begin(), v1_in.end()});
  const VertexSet v2 = normalize({v2_in.begin(), v2_in.end()});
  const int big_n = g.vertex_count();
  std::vector<int> side(big_n, -1);
  for (Vertex v : v1) {
    if (v < 0 || v >= big_n) throw InvalidArgument("dense_bipartite_witness: vertex out of range");
    side[v] = 0;
  }
  for (Vertex v : v2) {
    if (v < 0 || v >= big_n) throw InvalidArgument("dense_bipartite_witness: vertex out of range");
    if (side[v] != -1) throw InvalidArgument("dense_bipartite_witness: V1 and V2 overlap");
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0)
    throw InvalidArgument("dense_bipartite_witness: V1 and V2 must cover V(g)");
  if (v1.size() > v2.size()) throw PreconditionError("dense_bipartite_witness: requires |V1| <= |V2|");

  const auto n1 = static_cast<std::int64_t>(v1.size());
  const auto n2 = static_cast<std::int64_t>(v2.size());
  for (int v = 0; v < big_n; ++v) {
    int cross = 0;
    bool inside = false;
    g.neighbors(v).for_each([&](int u) {
      if (side[u] == side[v])
        inside = true;
      else
        ++cross;
    });
    if (inside) throw PreconditionError("dense_bipartite_witness: edge inside one side");
    const std::int64_t host = side[v] == 0 ? n2 : n1;
    if (h == Hypotheses::kCheck && host - cross >= b)
      throw PreconditionError("dense_bipartite_witness: vertex " + std::to_string(v) + " misses " +
                              std::to_string(host - cross) + " >= b cross neighbours");
  }

  DenseBipartiteReport report;
  const auto comps = components(g);
  if (n2 > b && n1 > 0) {
    const VertexSet& largest = comps.front();
    if (static_cast<std::int64_t>(largest.size()) < n1 + n2 - 2 * b)
      throw InternalContradiction("dense bipartite (i): largest component has " + std::to_string(largest.size()) +
                                  " < |V1|+|V2|-2b vertices");
    report.large_component = largest;
  }
  if (n2 > 2 * static_cast<std::int64_t>(b) && n1 > 0) {
    const VertexSet comp = component_of(g, v1.front()).to_vector();
    const bool covers_v1 = std::includes(comp.begin(), comp.end(), v1.begin(), v1.end());
    const auto in_v2 = static_cast<std::int64_t>(set_intersection(comp, v2).size());
    if (!covers_v1 || in_v2 < n2 - b)
      throw InternalContradiction("dense bipartite (ii): component of V1 misses part of V1 or too much of V2");
    report.covering_component = comp;
  }
  if (n1 > b && n2 > 2 * static_cast<std::int64_t>(b)) {
    if (comps.size() != 1) throw InternalContradiction("dense bipartite (iii): graph is not connected");
    Matching m = max_matching_bipartite(g, v1, v2);
    if (m.size() != n1) {
      const auto violator = hall_violator(g, v1, v2);
      throw InternalContradiction("dense bipartite (iii): no matching saturates V1 (Hall violator of size " +
                                  std::to_string(violator ? violator->size() : 0) + ")");
    }
    report.saturating_matching = std::move(m);
  }
  return report;
}

namespace {

/// Class index per vertex; throws unless Z0..Z3 partition 0..n-1.
std::vector<int> class_of(const HatHSpec& spec, int n) {
  std::vector<int> cls(n, -1);
  for (int i = 0; i < 4; ++i) {
    for (Vertex v : spec.Z[i]) {
      if (v < 0 || v >= n) throw InvalidArgument("HatHSpec: vertex " + std::to_string(v) + " out of range");
      if (cls[v] != -1) throw InvalidArgument("HatHSpec: classes overlap at vertex " + std::to_string(v));
      cls[v] = i;
    }
  }
  if (std::count(cls.begin(), cls.end(), -1) != 0) throw InvalidArgument("HatHSpec: classes do not cover V");
  return cls;
}

}  // namespace

Graph hat_h_graph(const HatHSpec& spec) {
  const auto n = static_cast<int>(spec.m_hat());
  class_of(spec, n);
  std::array<DynamicBitset, 4> members;
  for (int i = 0; i < 4; ++i) members[i] = to_bitset(n, spec.Z[i]);
  std::vector<DynamicBitset> rows(n, DynamicBitset(n));
  for (int i = 0; i < 4; ++i) {
    DynamicBitset row(n);
    row.fill();
    if (i != 0) row -= members[i];
    for (Vertex v : spec.Z[i]) {
      rows[v] = row;
      rows[v].reset(v);
    }
  }
  return Graph::from_rows(std::move(rows));
}

bool hat_h_check(const Graph& g, const HatHSpec& spec) {
  const auto cls = class_of(spec, g.vertex_count());
  for (const Edge& e : g.edges())
    if (cls[e.u] == cls[e.v] && cls[e.u] != 0) return false;
  return true;
}

std::vector<std::string> hat_h_precondition_failures(const Graph& g, const HatHSpec& spec, int b) {
  std::vector<std::string> failures;
  const std::int64_t m_hat = spec.m_hat();
  if (m_hat != g.vertex_count()) {
    failures.emplace_back("classes do not cover V(g)");
    return failures;
  }
  class_of(spec, g.vertex_count());
  if (b < 1) failures.emplace_back("b must be positive");
  const Graph host = hat_h_graph(spec);
  if (!g.is_subgraph_of(host)) {
    failures.emplace_back("g has an edge inside Z1, Z2 or Z3");
  } else if (!is_b_dense_in(g, host, b)) {
    failures.emplace_back("g is not b-dense in the template graph");
  }
  for (int i = 1; i <= 3; ++i) {
    if (!le_sqrt(spec.size(i) - 2 * static_cast<std::int64_t>(b), 4 * m_hat))
      failures.emplace_back("m" + std::to_string(i) + " > 2b + 2 sqrt(m_hat)");
  }
  if (!ge_sqrt(b, 36 * m_hat)) failures.emplace_back("b < 6 sqrt(m_hat)");
  return failures;
}

HatHMatchingResult hat_h_matching(const Graph& g, const HatHSpec& spec, int b, Hypotheses h) {
  if (h == Hypotheses::kCheck) {
    if (const auto failures = hat_h_precondition_failures(g, spec, b); !failures.empty())
      throw PreconditionError("hat_h_matching: " + join(failures));
  } else {
    if (spec.m_hat() != g.vertex_count()) throw InvalidArgument("hat_h_matching: classes do not cover V(g)");
    class_of(spec, g.vertex_count());
  }

  const std::int64_t m_hat = spec.m_hat();
  HatHMatchingResult r;
  r.matching = max_matching(g);
  r.connected = is_connected(g);
  r.l_bound = std::min(m_hat, spec.size(0) + m_hat - 2 * static_cast<std::int64_t>(b));
  r.connectivity_clause = spec.size(0) > 0 && ge_sqrt(r.l_bound - 2 * static_cast<std::int64_t>(b), 9 * m_hat);

  if (!le_sqrt(r.l_bound - r.matching.saturation(), 25 * m_hat))
    throw InternalContradiction("hat_h_matching: matching saturates " + std::to_string(r.matching.saturation()) +
                                " < L - 5 sqrt(m_hat) with L >= " + std::to_string(r.l_bound));
  if (r.connectivity_clause && !r.connected)
    throw InternalContradiction("hat_h_matching: connectivity clause applies but g is disconnected");
  return r;
}

}  // namespace monomatch
