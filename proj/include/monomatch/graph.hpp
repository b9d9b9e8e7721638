#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monomatch/bitset.hpp"

namespace monomatch {

using Vertex = int;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Orders endpoints so that u < v.
  static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Color index in {1, 2, 3}; 0 marks "no edge" inside ColoredGraph storage.
using Color = std::uint8_t;
inline constexpr int kColorCount = 3;
inline constexpr Color kColors[kColorCount] = {1, 2, 3};

inline bool is_valid_color(int c) { return c >= 1 && c <= kColorCount; }

/// Simple undirected graph on vertices 0..N-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws InvalidArgument on out-of-range endpoints or self-loops; duplicates collapse.
  static Graph from_edge_list(int vertex_count, std::span<const Edge> edges);
  static Graph complete(int vertex_count);
  /// Adjacency rows given directly; throws unless symmetric, loop-free and N bits wide.
  static Graph from_rows(std::vector<DynamicBitset> rows);

  int vertex_count() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  const DynamicBitset& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].count(); }
  std::vector<Vertex> neighbor_list(Vertex v) const { return rows_[v].to_vector(); }
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;

  /// Every edge of *this is also an edge of `other` (same vertex count).
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<DynamicBitset> rows_;
  std::size_t edge_count_ = 0;
};

/// Graph together with a total 3-coloring of its edge set.
class ColoredGraph {
 public:
  struct ColoredEdge {
    Vertex u;
    Vertex v;
    Color color;
    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
  };

  ColoredGraph() = default;
  /// Every edge of `graph` starts with `initial` (which must be a valid color).
  ColoredGraph(Graph graph, Color initial);
  /// Throws InvalidArgument on bad endpoints, self-loops, invalid colors or conflicting duplicates.
  static ColoredGraph from_colored_edges(int vertex_count, std::span<const ColoredEdge> edges);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }

  /// 0 when {u, v} is not an edge.
  Color color(Vertex u, Vertex v) const { return colors_[index(u, v)]; }
  /// Recolors an existing edge.
  void set_color(Vertex u, Vertex v, Color c);

  std::vector<ColoredEdge> colored_edges() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(graph_.vertex_count()) + v;
  }

  Graph graph_;
  std::vector<Color> colors_;  // N*N, symmetric
};

/// Maximum over v of (N - 1 - deg(v)); 0 for the empty vertex set.
int density_deficit(const Graph& g);

/// g is b-dense in h: deg_h(v) - deg_g(v) < b for every v. Throws unless g is a subgraph of h.
bool is_b_dense_in(const Graph& g, const Graph& h, int b);

/// Spanning subgraph formed by the edges of color `c`.
Graph color_subgraph(const ColoredGraph& cg, int c);

/// Connected components, largest first, ties broken by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Component containing v, as a bitset over V(g).
DynamicBitset component_of(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

struct MonoComponent {
  Color color = 1;
  VertexSet vertices;
  friend bool operator==(const MonoComponent&, const MonoComponent&) = default;
};

/// Components of the three color subgraphs that contain at least one edge, largest first
/// (ties: lower color, then smallest vertex).
std::vector<MonoComponent> mono_components(const ColoredGraph& cg);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local index -> parent vertex
};

/// Subgraph induced on `s` (need not be sorted; local order follows sorted s).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

ColoredGraph parse_colored_graph(std::string_view text);
std::string serialize_colored_graph(const ColoredGraph& cg);

ColoredGraph read_colored_graph_file(const std::string& path);
void write_colored_graph_file(const std::string& path, const ColoredGraph& cg);

// Set helpers over sorted VertexSets.
VertexSet normalize(VertexSet s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
DynamicBitset to_bitset(int n, std::span<const Vertex> s);

}  // namespace monomatch
