#include "monomatch/solver.hpp"

#include <algorithm>
#include <string>

#include "monomatch/errors.hpp"
#include "monomatch/parallel.hpp"

namespace monomatch {

HypothesisReport check_hypotheses(const ColoredGraph& cg, int n, Rational eta) {
  if (eta.num <= 0) throw InvalidArgument("check_hypotheses: eta must be positive");
  HypothesisReport r;
  r.N = cg.vertex_count();
  r.n = n;
  r.eta = eta;
  r.min_degree = cg.graph().min_degree();
  const std::int64_t p = eta.num;
  const std::int64_t q = eta.den;
  r.size_ok = static_cast<std::int64_t>(r.N) * q >= (2 * q + p) * n;
  r.degree_ok = 4 * q * static_cast<std::int64_t>(r.min_degree) >= (7 * q + 16 * p) * n;
  r.vacuous = 12 * p >= q;
  return r;
}

ThresholdPair theorem_thresholds(int n, Rational eta) {
  if (eta.num <= 0) throw InvalidArgument("theorem_thresholds: eta must be positive");
  const std::int64_t p = eta.num;
  const std::int64_t q = eta.den;
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  return {static_cast<int>(ceil_div((2 * q + p) * n, q)), static_cast<int>(ceil_div((7 * q + 16 * p) * n, 4 * q))};
}

SolveResult solve(const ColoredGraph& cg, int n, std::optional<Rational> eta) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("solve: n must be even and >= 2, got " + std::to_string(n));
  struct Job {
    Color color;
    const Graph* sub;
    VertexSet comp;
  };
  std::array<Graph, 3> subs;
  std::vector<Job> jobs;
  for (Color c : kColors) {
    subs[c - 1] = color_subgraph(cg, c);
    for (VertexSet& comp : components(subs[c - 1]))
      if (comp.size() >= 2) jobs.push_back({c, &subs[c - 1], std::move(comp)});
  }
  std::vector<Matching> matchings(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { matchings[i] = max_matching_within(*jobs[i].sub, jobs[i].comp); });

  SolveResult result;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    result.table.push_back({job.color, static_cast<int>(job.comp.size()), job.comp.front(), matchings[i].size()});
    if (!result.certificate && matchings[i].saturation() >= n) {
      Certificate cert;
      cert.color = job.color;
      cert.component = job.comp;
      cert.matching = std::move(matchings[i]);
      cert.n = n;
      if (eta) cert.hypotheses = check_hypotheses(cg, n, *eta);
      result.certificate = std::move(cert);
    }
  }
  return result;
}

std::string certificate_problem(const ColoredGraph& cg, const Certificate& cert) {
  const int big_n = cg.vertex_count();
  if (!is_valid_color(cert.color)) return "invalid color";
  if (cert.n < 2 || cert.n % 2 != 0) return "n must be even and >= 2";
  const VertexSet& comp = cert.component;
  if (comp.size() < 2) return "component has fewer than two vertices";
  if (!std::is_sorted(comp.begin(), comp.end()) || std::adjacent_find(comp.begin(), comp.end()) != comp.end())
    return "component is not a sorted vertex set";
  if (comp.front() < 0 || comp.back() >= big_n) return "component vertex out of range";
  if (component_of(color_subgraph(cg, cert.color), comp.front()).to_vector() != comp)
    return "component is not a connected component of its color";
  std::vector<char> used(big_n, 0);
  for (const Edge& e : cert.matching.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= big_n || e.v >= big_n || e.u == e.v) return "matching edge out of range";
    if (cg.color(e.u, e.v) != cert.color)
      return "matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is missing or has another color";
    if (!std::binary_search(comp.begin(), comp.end(), e.u) || !std::binary_search(comp.begin(), comp.end(), e.v))
      return "matching edge leaves the component";
    if (used[e.u] || used[e.v]) return "matching edges share a vertex";
    used[e.u] = used[e.v] = 1;
  }
  if (cert.matching.saturation() < cert.n) return "matching saturates fewer than n vertices";
  if (cert.hypotheses) {
    const HypothesisReport& h = *cert.hypotheses;
    if (h.n != cert.n || h.eta.num <= 0 || check_hypotheses(cg, h.n, h.eta) != h) return "hypothesis report does not match the graph";
  }
  return {};
}

bool verify_certificate(const ColoredGraph& cg, const Certificate& cert) { return certificate_problem(cg, cert).empty(); }

GiantTrace giant_trace(const ColoredGraph& cg, int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("giant_trace: n must be even and >= 2");
  const int big_n = cg.vertex_count();
  const auto comps = mono_components(cg);
  if (comps.empty() || 4 * static_cast<std::int64_t>(comps.front().vertices.size()) < 3 * static_cast<std::int64_t>(big_n))
    throw PreconditionError("giant_trace: no monochromatic component has 3N/4 vertices");

  GiantTrace t;
  t.f1 = comps.front();
  const Graph f1_color = color_subgraph(cg, t.f1.color);
  const InducedSubgraph f1 = induced_subgraph(f1_color, t.f1.vertices);
  t.f1_matching = matching_number(f1.graph);
  if (2 * t.f1_matching >= n)
    throw PreconditionError("giant_trace: the giant component already has a matching saturating n vertices");

  t.partition_n = std::min(n, 2 * f1.graph.vertex_count());
  TuttePartition local = tutte_partition(f1.graph, t.partition_n);
  auto lift = [&](VertexSet& s) {
    for (Vertex& v : s) v = f1.to_parent[v];
    std::sort(s.begin(), s.end());
  };
  lift(local.S);
  lift(local.T);
  lift(local.U);
  t.partition = std::move(local);

  VertexSet all(big_n);
  for (int v = 0; v < big_n; ++v) all[v] = v;
  const VertexSet outside = set_difference(all, t.f1.vertices);
  t.W = set_union(set_union(t.partition.T, t.partition.U), outside);
  t.m0 = static_cast<int>(t.partition.T.size());
  t.m1 = static_cast<int>(t.partition.U.size());
  t.m2 = static_cast<int>(outside.size());

  const std::int64_t N = big_n;
  const std::int64_t m0 = t.m0;
  const std::int64_t m1 = t.m1;
  const std::int64_t m2 = t.m2;
  t.hyp_i = m0 + m1 + m2 <= N;
  t.hyp_ii = 4 * m0 + 2 * m1 + 4 * m2 >= 3 * N;
  t.hyp_iii = 4 * m2 <= N;
  t.hyp_iv = 2 * m0 > N - 2 * m2 && 2 * N - 4 * m2 >= N;

  for (Color c : kColors) {
    if (c == t.f1.color) continue;
    const InducedSubgraph j = induced_subgraph(color_subgraph(cg, c), t.W);
    for (const VertexSet& comp : components(j.graph)) {
      if (comp.size() < 2 || static_cast<int>(comp.size()) <= t.best_saturation) continue;
      const int sat = max_matching_within(j.graph, comp).saturation();
      if (sat > t.best_saturation) {
        t.best_saturation = sat;
        t.best_color = c;
        t.best_component.clear();
        for (Vertex v : comp) t.best_component.push_back(j.to_parent[v]);
      }
    }
  }
  t.claim_met = le_sqrt(N - t.best_saturation, 9 * N);
  return t;
}

}  // namespace monomatch
