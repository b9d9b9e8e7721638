#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monomatch/errors.hpp"
#include "monomatch/graph.hpp"
#include "monomatch/matching.hpp"

namespace monomatch {

/// Partition V = S ∪ T ∪ U of a graph with no matching saturating n vertices.
struct TuttePartition {
  VertexSet S;
  VertexSet T;
  VertexSet U;
  int n = 0;
  int N = 0;
  /// T exceeded N - n/2 and was cut down to exactly that size.
  bool truncated = false;
  /// The local truncation broke (iii) and S' = V \ T', U' = ∅ was used instead.
  bool fallback = false;
};

struct TutteCheck {
  bool partition = false;
  bool low_degree = false;       // (i)   (deg_T(v) + 1)^2 <= N for v in T
  bool no_t_u_edges = false;     // (ii)
  bool size_bound = false;       // (iii) |U| + 2|S| < n + sqrt(N)
  bool t_bound = false;          // (iv)  |T| <= N - n/2
  bool identity = false;         // |U| + 2|S| == |S| + N - |T|
  std::string detail;

  bool ok() const { return partition && low_degree && no_t_u_edges && size_bound && t_bound && identity; }
};

/// Built from the Gallai-Edmonds decomposition: S = A, D-components of size <= floor(sqrt N)
/// go to T, everything else to U; T is truncated to N - n/2 (surplus, largest indices first,
/// moves to S) when it is too large.
/// Throws InvalidArgument for odd n, n < 2 or n > 2N; PreconditionError when f has a
/// matching saturating n vertices.
TuttePartition tutte_partition(const Graph& f, int n);

/// Direct check of the partition invariants, independent of how p was built.
TutteCheck check_tutte_partition(const Graph& f, const TuttePartition& p);

/// Certified items for a b-dense subgraph of the complete bipartite graph on (V1, V2).
struct DenseBipartiteReport {
  /// (i) |V2| > b: a component with >= |V1| + |V2| - 2b vertices.
  std::optional<VertexSet> large_component;
  /// (ii) |V2| > 2b: a component containing V1 and >= |V2| - b vertices of V2.
  std::optional<VertexSet> covering_component;
  /// (iii) |V1| > b and |V2| > 2b: g is connected and this matching saturates V1.
  std::optional<Matching> saturating_matching;

  bool empty() const { return !large_component && !covering_component && !saturating_matching; }
};

/// v1 and v2 must partition V(g) with |v1| <= |v2|, g must be a b-dense subgraph of
/// K_{v1,v2} (PreconditionError otherwise). Items (i) and (ii) need a non-empty v1, since
/// they start from an edge at a V1 vertex. A failed item raises InternalContradiction.
/// kAssume skips the per-vertex density test.
DenseBipartiteReport dense_bipartite_witness(const Graph& g, std::span<const Vertex> v1,
                                             std::span<const Vertex> v2, int b,
                                             Hypotheses h = Hypotheses::kCheck);

/// Four disjoint vertex classes Z0..Z3 of the template graph: all edges between distinct
/// classes plus all edges inside Z0.
struct HatHSpec {
  std::array<VertexSet, 4> Z;

  std::int64_t size(int i) const { return static_cast<std::int64_t>(Z[i].size()); }
  std::int64_t m_hat() const { return size(0) + size(1) + size(2) + size(3); }
};

/// The template graph itself on sum |Z_i| vertices. Throws unless Z0..Z3 partition 0..m_hat-1.
Graph hat_h_graph(const HatHSpec& spec);

/// No edge inside Z1, Z2 or Z3. Throws InvalidArgument unless spec partitions V(g).
bool hat_h_check(const Graph& g, const HatHSpec& spec);

/// Every precondition of hat_h_matching that fails, one message each.
std::vector<std::string> hat_h_precondition_failures(const Graph& g, const HatHSpec& spec, int b);

struct HatHMatchingResult {
  Matching matching;
  bool connected = false;
  /// min{m_hat, m0 + m_hat - 2b}, the lower bound used for L.
  std::int64_t l_bound = 0;
  /// m0 > 0 and l_bound >= 2b + 3 sqrt(m_hat).
  bool connectivity_clause = false;
};

/// Maximum matching of g checked against: 2|M| >= l_bound - 5 sqrt(m_hat), and connectivity
/// whenever the connectivity clause applies. PreconditionError lists every failed
/// precondition; a failed check raises InternalContradiction. kAssume keeps only the test
/// that Z0..Z3 partition V(g).
HatHMatchingResult hat_h_matching(const Graph& g, const HatHSpec& spec, int b, Hypotheses h = Hypotheses::kCheck);

}  // namespace monomatch
