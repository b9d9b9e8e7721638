#pragma once

#include <optional>
#include <span>
#include <vector>

#include "monomatch/graph.hpp"

namespace monomatch {

/// A set of pairwise vertex-disjoint edges, kept sorted (u < v per edge).
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  /// Number of saturated vertices, i.e. 2 * size().
  int saturation() const { return 2 * size(); }
  VertexSet saturated() const;

  /// Builds from a mate array (mate[v] == -1 for exposed vertices).
  static Matching from_mates(std::span<const Vertex> mates);

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Gallai-Edmonds decomposition. D: vertices missed by some maximum matching,
/// A: neighbours of D outside D, C: the rest.
struct GEDecomposition {
  VertexSet D;
  VertexSet A;
  VertexSet C;
  /// Number of components of G[D] minus |A|; equals N - 2*nu(G).
  int deficiency = 0;
  /// The maximum matching the decomposition was read from.
  Matching matching;
};

/// Maximum cardinality matching (Edmonds blossom algorithm), deterministic for a fixed graph.
Matching max_matching(const Graph& g);

/// Maximum matching size without materializing the edge list.
int matching_number(const Graph& g);

GEDecomposition gallai_edmonds(const Graph& g);

/// Hopcroft-Karp. Throws InvalidArgument if left/right overlap, are out of range,
/// or some edge does not cross the bipartition.
Matching max_matching_bipartite(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right);

/// Left vertices reachable by alternating paths from an unsaturated left vertex under a
/// maximum matching; nullopt iff some matching saturates all of `left`.
std::optional<VertexSet> hall_violator(const Graph& g, std::span<const Vertex> left,
                                       std::span<const Vertex> right);

/// Maximum independent set of a bipartite graph from the same alternating reachability
/// (Konig): (left ∩ Z) ∪ (right \ Z).
VertexSet konig_independent_set(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right);

/// Maximum matching of the subgraph induced on s, in parent vertex indices.
Matching max_matching_within(const Graph& g, std::span<const Vertex> s);

bool is_valid_matching(const Graph& g, const Matching& m);

}  // namespace monomatch
