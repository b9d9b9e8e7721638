#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monomatch/exact.hpp"
#include "monomatch/graph.hpp"
#include "monomatch/matching.hpp"
#include "monomatch/structure.hpp"

namespace monomatch {

/// Exact evaluation of the theorem's size and degree thresholds for a given eta.
struct HypothesisReport {
  int N = 0;
  int n = 0;
  Rational eta;
  int min_degree = 0;
  bool size_ok = false;    // N >= (2 + eta) n
  bool degree_ok = false;  // delta >= (7/4 + 4 eta) n
  /// eta >= 1/12: the degree threshold reaches N, so no graph qualifies.
  bool vacuous = false;

  bool holds() const { return size_ok && degree_ok; }
  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

/// Throws InvalidArgument unless eta > 0.
HypothesisReport check_hypotheses(const ColoredGraph& cg, int n, Rational eta);

/// Smallest N and delta meeting the thresholds for (n, eta).
struct ThresholdPair {
  int N = 0;
  int min_degree = 0;
};
ThresholdPair theorem_thresholds(int n, Rational eta);

struct Certificate {
  Color color = 1;
  VertexSet component;
  Matching matching;
  int n = 0;
  std::optional<HypothesisReport> hypotheses;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// One row per monochromatic component examined by solve.
struct ComponentRow {
  Color color = 1;
  int size = 0;
  Vertex smallest = 0;
  int matching_size = 0;

  friend bool operator==(const ComponentRow&, const ComponentRow&) = default;
};

struct SolveResult {
  std::optional<Certificate> certificate;
  /// Every monochromatic component in search order with its maximum matching size.
  std::vector<ComponentRow> table;

  bool success() const { return certificate.has_value(); }
};

/// Searches colors 1, 2, 3 and, within a color, components by decreasing size; the first
/// component whose maximum matching saturates >= n vertices wins. Throws InvalidArgument
/// for odd n or n < 2.
SolveResult solve(const ColoredGraph& cg, int n, std::optional<Rational> eta = std::nullopt);

/// Checks every certificate invariant against cg without using solve.
bool verify_certificate(const ColoredGraph& cg, const Certificate& cert);
/// Same check, returning the first failed invariant (empty when valid).
std::string certificate_problem(const ColoredGraph& cg, const Certificate& cert);

/// Diagnostic for the branch with a component F1 on >= 3N/4 vertices lacking the matching.
struct GiantTrace {
  MonoComponent f1;
  int f1_matching = 0;
  /// n passed to tutte_partition on F1 (n clipped to 2|V1| when larger).
  int partition_n = 0;
  TuttePartition partition;  // S1, T1, U1 in global vertex indices
  VertexSet W;               // T1 ∪ U1 ∪ (V \ V1)
  int m0 = 0;
  int m1 = 0;
  int m2 = 0;
  bool hyp_i = false;    // m0 + m1 + m2 <= N
  bool hyp_ii = false;   // m0 + m1/2 + m2 >= 3N/4
  bool hyp_iii = false;  // m2 <= N/4
  bool hyp_iv = false;   // m0 > N/2 - m2 >= N/4
  /// Best component matching of J (the two other colors restricted to W).
  Color best_color = 0;
  VertexSet best_component;
  int best_saturation = 0;
  /// best_saturation >= N - 3 sqrt(N); reported, never asserted.
  bool claim_met = false;
};

/// PreconditionError when no component has >= 3N/4 vertices or the largest one already
/// contains a matching saturating n vertices.
GiantTrace giant_trace(const ColoredGraph& cg, int n);

}  // namespace monomatch
