#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "monomatch/graph.hpp"
#include "monomatch/matching.hpp"

namespace monomatch {

/// Seeded random stream. The engine is std::mt19937_64, whose output sequence is fixed by
/// the standard; bounded draws and shuffles are implemented here (the std distributions are
/// not portable across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for instance `index` of a run seeded with `seed` (SplitMix64 mixing).
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Exhaustive maximum matching: branch on the lowest-index remaining edge (include/exclude),
/// memoized on the used-vertex mask when N <= 24. Throws InvalidArgument above 40 edges.
Matching brute_max_matching(const Graph& g);
inline constexpr std::size_t kBruteEdgeCap = 40;

/// Vertices missed by at least one maximum matching, via nu(G - v) == nu(G) with the brute oracle.
VertexSet brute_missable_vertices(const Graph& g);

/// Random b-dense subgraph of `host`: visits vertices in random order and deletes random
/// incident edges while every deficit stays below b. Deficits end up concentrated near b-1.
Graph random_b_dense_subgraph(const Graph& host, int b, Rng& rng);
Graph random_b_dense_graph(int n, int b, std::uint64_t seed);

/// Exactly m distinct edges chosen uniformly from K_N (m clipped to N(N-1)/2).
Graph random_graph_m(int n, int m, Rng& rng);
/// Each pair independently with probability num/den.
Graph random_graph_p(int n, std::uint64_t num, std::uint64_t den, Rng& rng);

/// Uniform random color per edge, edges taken in lexicographic order.
ColoredGraph random_coloring(const Graph& g, Rng& rng);
ColoredGraph random_coloring(const Graph& g, std::uint64_t seed);

/// Largest saturation 2*nu(F) over the components F of color c.
int color_objective(const ColoredGraph& cg, Color c);
/// Largest saturation over all monochromatic components.
int matching_objective(const ColoredGraph& cg);

/// Single-edge recolor hill climbing that tries to push matching_objective below n.
/// Starts from random_coloring(g, seed); restarts from fresh random colorings every
/// budget/4 proposals; returns the best coloring seen (never worse than the start).
ColoredGraph adversarial_coloring(const Graph& g, int n, int budget, std::uint64_t seed);

struct ExhaustiveRow {
  int n = 0;
  /// Every examined coloring has a monochromatic component with a matching saturating >= n.
  bool holds = true;
  /// First examined coloring that fails, in enumeration order.
  std::optional<ColoredGraph> witness;
};

struct ExhaustiveTable {
  int vertex_count = 0;
  bool exact = true;     // false in sampling mode
  bool pruned = false;
  std::uint64_t colorings_examined = 0;
  /// Smallest matching_objective over examined colorings.
  int min_objective = 0;
  std::vector<ExhaustiveRow> rows;  // n = 2, 4, ..., <= N
};

struct ExhaustiveOptions {
  /// Color-permutation pruning: only colorings whose first edge is color 1 and whose first
  /// non-1 edge is color 2.
  bool prune_color_symmetry = false;
  /// Required for N > 6: number of random colorings of K_N to examine instead.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Every 3-coloring of K_N (N <= 6), or a random sample of them when options.samples > 0.
ExhaustiveTable exhaustive_small_check(int n_vertices, const ExhaustiveOptions& options = {});

}  // namespace monomatch
