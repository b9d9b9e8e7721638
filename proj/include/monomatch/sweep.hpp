#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monomatch/exact.hpp"
#include "monomatch/json_io.hpp"

namespace monomatch {

struct SweepConfig {
  /// One of sweep_lemmas().
  std::string lemma;
  std::uint64_t trials = 1000;
  /// Vertex-count range (m_hat range for l:m2); 0 selects the lemma's default.
  int n_min = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  /// Check conclusions only on instances meeting the lemma's hypotheses. When off, failures
  /// on hypothesis-violating instances are counted in stats instead of being skipped.
  bool hypothesis_filter = true;
  /// 0: thread_count().
  int threads = 0;

  // theorem sweep only
  std::vector<int> theorem_n{24, 32, 48};
  Rational eta{1, 24};
  /// Adversarial colorings per n, on top of `trials` random colorings per n.
  std::uint64_t adversarial = 100;
  int adversarial_budget = 300;
};

struct SweepRecord {
  std::uint64_t index = 0;
  std::string message;
  Json params;
  /// Colored-graph text; uncolored instances carry color 1 on every edge.
  std::string instance;
};

struct SweepReport {
  SweepConfig config;
  int n_min = 0;
  int n_max = 0;
  std::string deficit_rule;
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_satisfying = 0;
  std::vector<SweepRecord> violations;  // sorted by index
  /// Non-violation artifacts kept for inspection (theorem sweep Failures).
  std::vector<SweepRecord> archived;
  std::map<std::string, std::int64_t> stats;
  double runtime_ms = 0;
};

const std::vector<std::string>& sweep_lemmas();

/// Throws InvalidArgument for an unknown lemma id or an invalid range.
SweepReport lemma_sweep(const SweepConfig& cfg);

/// Runtime is included only when `timing` is set, so equal seeds give equal bytes.
Json to_json(const SweepReport& r, bool timing = false);

}  // namespace monomatch
