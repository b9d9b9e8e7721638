#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monomatch/graph.hpp"

namespace monomatch {

inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;
inline constexpr Color kGreen = 3;

/// Vertex layout of the 8l-vertex extremal coloring: a = 0, b = 1, then the eight half
/// blocks A11, A12, A21, A22, A31, A32, A41, A42 as consecutive index ranges.
struct ExtremalSpec {
  int ell = 2;
  Vertex a = 0;
  Vertex b = 1;
  std::array<VertexSet, 8> halves;  // halves[2*(i-1) + (h-1)] = A_ih

  static ExtremalSpec make(int ell);

  int vertex_count() const { return 8 * ell; }
  const VertexSet& half(int i, int h) const { return halves[2 * (i - 1) + (h - 1)]; }
  /// A_i = A_i1 ∪ A_i2.
  VertexSet part(int i) const;
};

struct ExtremalGraph {
  ColoredGraph graph;
  ExtremalSpec spec;
};

/// Throws InvalidArgument for ell < 2.
ExtremalGraph build_extremal(int ell);

struct StructuralCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<Edge> witness_edge;
  VertexSet witness_set;
};

/// r1: red components have sizes {4l-1, 4l-1, 2}, all below 4l.
/// b1: the blue graph minus a has exactly two components with edges, 4l-1 vertices each.
/// b2: each blue block (component + a) has 4l vertices and a blue-independent set of size 2l+1.
/// g1: the green graph minus b has exactly four components with edges, sizes {2l-2, 2l-2, 2l, 2l+2}.
/// delta: minimum degree is exactly 7l-2.
struct StructuralCertificate {
  int ell = 0;
  std::vector<StructuralCheck> checks;

  bool all_pass() const;
  const StructuralCheck* find(const std::string& name) const;
};

StructuralCertificate verify_extremal(const ColoredGraph& cg, const ExtremalSpec& spec);

enum class CycleVerdict { kNoneFound, kFound, kBudgetExceeded };

struct CycleSearchResult {
  CycleVerdict verdict = CycleVerdict::kNoneFound;
  Color color = 0;
  std::vector<Vertex> cycle;
  std::uint64_t nodes = 0;
};

/// DFS per color class for a cycle on exactly k vertices; the cycle's smallest vertex is the
/// start and the direction is fixed by cycle[1] < cycle[k-1]. Only components with >= k
/// vertices are searched. `budget` caps the total number of DFS nodes across all colors.
CycleSearchResult exhaustive_no_mono_cycle(const ColoredGraph& cg, int k, std::uint64_t budget);
/// The same search restricted to one color.
CycleSearchResult find_cycle_in_color(const ColoredGraph& cg, Color c, int k, std::uint64_t budget);

const char* to_string(CycleVerdict v);

}  // namespace monomatch
