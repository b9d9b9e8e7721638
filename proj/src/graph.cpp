#include "monomatch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "monomatch/errors.hpp"

namespace monomatch {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  rows_.assign(vertex_count, DynamicBitset(vertex_count));
}

Graph Graph::from_edge_list(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int vertex_count) {
  Graph g(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    g.rows_[v].fill();
    g.rows_[v].reset(v);
  }
  g.edge_count_ = static_cast<std::size_t>(vertex_count) * (vertex_count > 0 ? vertex_count - 1 : 0) / 2;
  return g;
}

Graph Graph::from_rows(std::vector<DynamicBitset> rows) {
  const int n = static_cast<int>(rows.size());
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v].size() != n) throw InvalidArgument("adjacency row width mismatch");
    if (rows[v].test(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
    rows[v].for_each([&](int u) {
      if (!rows[u].test(v)) throw InvalidArgument("asymmetric adjacency rows");
    });
    degree_sum += rows[v].count();
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(vertex_count()) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --edge_count_;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) adj[v] = rows_[v].to_vector();
  return adj;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) out.push_back({u, v});
  }
  return out;
}

int Graph::min_degree() const {
  int best = vertex_count() == 0 ? 0 : vertex_count();
  for (int v = 0; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (other.vertex_count() != vertex_count()) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (!rows_[v].is_subset_of(other.rows_[v])) return false;
  return true;
}

ColoredGraph::ColoredGraph(Graph graph, Color initial) : graph_(std::move(graph)) {
  if (!is_valid_color(initial)) throw InvalidArgument("invalid color " + std::to_string(initial));
  const auto n = static_cast<std::size_t>(graph_.vertex_count());
  colors_.assign(n * n, 0);
  for (const Edge& e : graph_.edges()) {
    colors_[index(e.u, e.v)] = initial;
    colors_[index(e.v, e.u)] = initial;
  }
}

ColoredGraph ColoredGraph::from_colored_edges(int vertex_count, std::span<const ColoredEdge> edges) {
  ColoredGraph cg;
  cg.graph_ = Graph(vertex_count);
  const auto n = static_cast<std::size_t>(vertex_count);
  cg.colors_.assign(n * n, 0);
  for (const ColoredEdge& e : edges) {
    if (!is_valid_color(e.color)) throw InvalidArgument("invalid color " + std::to_string(e.color));
    cg.graph_.add_edge(e.u, e.v);
    Color& slot = cg.colors_[cg.index(e.u, e.v)];
    if (slot != 0 && slot != e.color)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} given two colors");
    slot = e.color;
    cg.colors_[cg.index(e.v, e.u)] = e.color;
  }
  return cg;
}

void ColoredGraph::set_color(Vertex u, Vertex v, Color c) {
  if (!is_valid_color(c)) throw InvalidArgument("invalid color " + std::to_string(c));
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || !graph_.has_edge(u, v))
    throw InvalidArgument("set_color on a non-edge");
  colors_[index(u, v)] = c;
  colors_[index(v, u)] = c;
}

std::vector<ColoredGraph::ColoredEdge> ColoredGraph::colored_edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(graph_.edge_count());
  for (const Edge& e : graph_.edges()) out.push_back({e.u, e.v, color(e.u, e.v)});
  return out;
}

int density_deficit(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  return n - 1 - g.min_degree();
}

bool is_b_dense_in(const Graph& g, const Graph& h, int b) {
  if (!g.is_subgraph_of(h)) throw InvalidArgument("is_b_dense_in: g is not a subgraph of h");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (h.degree(v) - g.degree(v) >= b) return false;
  return true;
}

Graph color_subgraph(const ColoredGraph& cg, int c) {
  if (!is_valid_color(c)) throw InvalidArgument("invalid color index " + std::to_string(c));
  Graph out(cg.vertex_count());
  for (const Edge& e : cg.graph().edges())
    if (cg.color(e.u, e.v) == c) out.add_edge(e.u, e.v);
  return out;
}

DynamicBitset component_of(const Graph& g, Vertex v) {
  DynamicBitset seen(g.vertex_count());
  std::vector<Vertex> stack{v};
  seen.set(v);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    DynamicBitset fresh = g.neighbors(x);
    fresh -= seen;
    fresh.for_each([&](int y) {
      seen.set(y);
      stack.push_back(y);
    });
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  DynamicBitset assigned(n);
  for (int v = 0; v < n; ++v) {
    if (assigned.test(v)) continue;
    DynamicBitset comp = component_of(g, v);
    assigned |= comp;
    out.push_back(comp.to_vector());
  }
  // Discovery order is by smallest vertex, so a stable sort keeps that tie-break.
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return component_of(g, 0).count() == g.vertex_count();
}

std::vector<MonoComponent> mono_components(const ColoredGraph& cg) {
  std::vector<MonoComponent> out;
  for (Color c : kColors) {
    const Graph sub = color_subgraph(cg, c);
    for (VertexSet& comp : components(sub)) {
      if (comp.size() < 2) continue;
      out.push_back({c, std::move(comp)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MonoComponent& a, const MonoComponent& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    if (a.color != b.color) return a.color < b.color;
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("induced_subgraph: repeated vertex");
  for (Vertex v : sorted)
    if (v < 0 || v >= g.vertex_count())
      throw InvalidArgument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  InducedSubgraph out{Graph(static_cast<int>(sorted.size())), sorted};
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace {

bool next_data_line(std::istringstream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::vector<long long> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t'))
      throw ParseError("line " + std::to_string(line_no) + ": expected integers");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

ColoredGraph parse_colored_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw ParseError("missing header line");
  const auto header = parse_ints(line, line_no);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError("malformed header: expected \"N M\"");
  const long long n = header[0];
  const long long m = header[1];
  if (m > n * (n - 1) / 2) throw ParseError("malformed header: more edges than vertex pairs");

  std::vector<ColoredGraph::ColoredEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<Edge> seen;
  seen.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    const auto f = parse_ints(line, line_no);
    if (f.size() == 2) throw ParseError("line " + std::to_string(line_no) + ": missing color");
    if (f.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected \"u v c\"");
    if (f[0] < 0 || f[1] < 0 || f[0] >= n || f[1] >= n || f[0] == f[1])
      throw ParseError("line " + std::to_string(line_no) + ": bad endpoints");
    if (!is_valid_color(static_cast<int>(f[2])) || f[2] != static_cast<int>(f[2]))
      throw ParseError("line " + std::to_string(line_no) + ": invalid color " + std::to_string(f[2]));
    edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), static_cast<Color>(f[2])});
    seen.push_back(Edge::normalized(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])));
  }
  if (next_data_line(in, line, line_no))
    throw ParseError("line " + std::to_string(line_no) + ": trailing data after " +
                     std::to_string(m) + " edges");
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ParseError("duplicate edge");
  return ColoredGraph::from_colored_edges(static_cast<int>(n), edges);
}

std::string serialize_colored_graph(const ColoredGraph& cg) {
  std::string out;
  out += std::to_string(cg.vertex_count()) + " " + std::to_string(cg.graph().edge_count()) + "\n";
  for (const auto& e : cg.colored_edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.color) + "\n";
  }
  return out;
}

ColoredGraph read_colored_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_colored_graph(buf.str());
}

void write_colored_graph_file(const std::string& path, const ColoredGraph& cg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << serialize_colored_graph(cg);
}

VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DynamicBitset to_bitset(int n, std::span<const Vertex> s) {
  DynamicBitset out(n);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    out.set(v);
  }
  return out;
}

}  // namespace monomatch
