#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monomatch/errors.hpp"
#include "monomatch/graph.hpp"
#include "monomatch/matching.hpp"

namespace monomatch {

/// 8 * density_deficit(g) < N, i.e. the graph is N/8-dense in K_N.
bool is_eighth_dense(const Graph& g);

/// Largest entry of mono_components, nullopt for an edgeless graph. On an N/8-dense input
/// the result has at least N/2 vertices, otherwise InternalContradiction. kAssume treats
/// every input as N/8-dense.
std::optional<MonoComponent> largest_mono_component(const ColoredGraph& cg, Hypotheses h = Hypotheses::kCheck);

struct SecondComponentResult {
  /// The largest component has >= 3N/4 vertices; `second` is empty.
  bool giant = false;
  MonoComponent first;
  /// A component of another color with >= N/2 vertices (only when !giant).
  std::optional<MonoComponent> second;
};

/// b is the density parameter: requires deficit < b and 8b <= N (PreconditionError).
SecondComponentResult second_component_check(const ColoredGraph& cg, int b);
/// Same, with the N/8-dense precondition tested directly.
SecondComponentResult second_component_check(const ColoredGraph& cg, Hypotheses h = Hypotheses::kCheck);

struct Match2Outcome {
  /// (a): a third-color component holding a matching that saturates >= N/2 vertices.
  bool large_matching = false;
  Color third_color = 0;
  VertexSet component;
  Matching matching;
  /// "dense-bipartite" when certified through dense_bipartite_witness, "direct" when its
  /// size preconditions were missed at the boundary and Hall's condition was checked directly.
  std::string route;

  /// |f1 \ f2| and |f2 \ f1|; outcome (b) is 4 * min < N.
  int only_first = 0;
  int only_second = 0;
};

/// f1 must be a component of color c1, f2 one of color c2 != c1, and cg N/8-dense
/// (PreconditionError otherwise). InternalContradiction if neither outcome holds. kAssume
/// skips only the density test.
Match2Outcome match2_check(const ColoredGraph& cg, const VertexSet& f1, Color c1, const VertexSet& f2, Color c2,
                           Hypotheses h = Hypotheses::kCheck);

struct TripleCover {
  std::array<MonoComponent, 3> parts;
};

/// Every failed precondition of triple_cover, one message each.
std::vector<std::string> triple_cover_precondition_failures(const ColoredGraph& cg);

/// Three components of distinct colors covering V; parts[0], parts[1] come from
/// second_component_check and parts[2] holds V \ (parts[0] ∪ parts[1]) (the largest
/// third-color component when that set is empty).
TripleCover triple_cover(const ColoredGraph& cg, Hypotheses h = Hypotheses::kCheck);

struct RegionDecomposition {
  std::array<VertexSet, 3> V;
  std::array<Color, 3> colors{1, 2, 3};
  std::array<VertexSet, 3> A;  // A[i] = V_i \ (V_j ∪ V_k)
  VertexSet A12;
  VertexSet A13;
  VertexSet A23;
  VertexSet A123;
  VertexSet outside;  // V \ (V_1 ∪ V_2 ∪ V_3)

  /// A_{ij} for 0-based i != j.
  const VertexSet& pair(int i, int j) const;
};

RegionDecomposition region_decompose(const ColoredGraph& cg, const VertexSet& v1, const VertexSet& v2,
                                     const VertexSet& v3, std::array<Color, 3> colors = {1, 2, 3});

struct ClaimItem {
  bool pass = true;
  /// Holds as a theorem only under the hypotheses recorded in the report.
  bool conditional = false;
  std::optional<Edge> witness_edge;
  VertexSet witness_set;
  std::string detail;
};

struct ZeroClaimsReport {
  std::array<ClaimItem, 7> items;  // claims (i)..(vii)
  int b_prime = 0;
  bool dense = false;                // deficit < b'
  bool components_small = false;     // every monochromatic component < 3N/4
  bool no_large_matching = false;    // every component has 2*nu < N/2 - 4 sqrt(N)
  bool covers = false;               // V = V_1 ∪ V_2 ∪ V_3
  bool hypotheses_hold() const { return dense && components_small && no_large_matching && covers; }
  bool all_pass() const;
};

ZeroClaimsReport zero_claims_report(const ColoredGraph& cg, const RegionDecomposition& rd, int b_prime);

}  // namespace monomatch
