// Command-line entry point. Exit codes: 0 success, 1 verified negative, 2 usage or parse
// error, 3 internal contradiction.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "monomatch/components.hpp"
#include "monomatch/errors.hpp"
#include "monomatch/extremal.hpp"
#include "monomatch/json_io.hpp"
#include "monomatch/oracle.hpp"
#include "monomatch/solver.hpp"
#include "monomatch/sweep.hpp"

namespace mm = monomatch;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kContradiction = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mm::InvalidArgument("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mm::InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw mm::InvalidArgument("--n must be an even integer >= 2, got " + std::to_string(n));
}

mm::Rational parse_eta(const std::string& text) {
  const mm::Rational eta = mm::Rational::parse(text);
  if (eta.num <= 0) throw mm::InvalidArgument("eta must be a positive rational, got " + text);
  return eta;
}

struct Options {
  std::string input;
  std::string second_input;
  std::string out;
  int n = 0;
  int ell = 0;
  std::string eta;
  std::optional<std::uint64_t> seed;
  int budget = 0;
  int b = 1;
  bool timing = false;

  // verify-extremal
  bool cycles = false;
  std::uint64_t cycle_budget = 50'000'000;

  // sweep
  std::string lemma;
  std::uint64_t trials = 1000;
  int nmin = 0;
  int nmax = 0;
  bool no_filter = false;
  int threads = 0;
  std::vector<int> n_values;
  std::uint64_t adversarial = 100;

  // oracle-check
  int exhaustive = 0;
  bool prune = false;
  std::uint64_t samples = 0;
};

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) throw mm::InvalidArgument("--seed is required for randomized subcommands");
  return *o.seed;
}

int cmd_gen_extremal(const Options& o) {
  const mm::ExtremalGraph g = mm::build_extremal(o.ell);
  write_text(o.out, mm::serialize_colored_graph(g.graph));
  std::cerr << "extremal coloring: l = " << o.ell << ", N = " << g.spec.vertex_count()
            << ", min degree = " << g.graph.graph().min_degree() << "\n";
  return kOk;
}

int cmd_verify_extremal(const Options& o) {
  const mm::ColoredGraph cg = mm::read_colored_graph_file(o.input);
  const int ell = o.ell > 0 ? o.ell : cg.vertex_count() / 8;
  if (ell < 2) throw mm::InvalidArgument("graph too small for an extremal coloring (need N = 8l, l >= 2)");
  const mm::StructuralCertificate cert = mm::verify_extremal(cg, mm::ExtremalSpec::make(ell));
  mm::Json j = mm::to_json(cert);
  bool pass = cert.all_pass();
  if (o.cycles) {
    const mm::CycleSearchResult r = mm::exhaustive_no_mono_cycle(cg, 4 * ell, o.cycle_budget);
    j["cycle_search"] = mm::to_json(r);
    j["cycle_search"]["length"] = 4 * ell;
    pass = pass && r.verdict == mm::CycleVerdict::kNoneFound;
    std::cerr << "monochromatic C_" << 4 * ell << " search: " << mm::to_string(r.verdict) << "\n";
  }
  write_text(o.out, mm::dump(j));
  for (const auto& c : cert.checks) std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return pass ? kOk : kNegative;
}

int cmd_solve(const Options& o) {
  require_even(o.n);
  std::optional<mm::Rational> eta;
  if (!o.eta.empty()) eta = parse_eta(o.eta);
  const mm::ColoredGraph cg = mm::read_colored_graph_file(o.input);
  const mm::SolveResult r = mm::solve(cg, o.n, eta);
  write_text(o.out, mm::dump(mm::to_json(r)));
  if (r.certificate) {
    std::cerr << "certificate: color " << int(r.certificate->color) << ", component of "
              << r.certificate->component.size() << " vertices, matching of " << r.certificate->matching.size()
              << " edges\n";
    return kOk;
  }
  int best = 0;
  for (const auto& row : r.table) best = std::max(best, 2 * row.matching_size);
  std::cerr << "failure: best monochromatic component saturates " << best << " < " << o.n << " vertices\n";
  return kNegative;
}

int cmd_verify_cert(const Options& o) {
  const mm::ColoredGraph cg = mm::read_colored_graph_file(o.input);
  mm::Json j;
  try {
    j = mm::Json::parse(read_text(o.second_input));
  } catch (const nlohmann::json::parse_error& e) {
    throw mm::ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  // Accept either a bare certificate or a solve report wrapping one.
  if (j.contains("certificate")) {
    if (j["certificate"].is_null()) throw mm::ParseError("solve report carries no certificate");
    j = j["certificate"];
  }
  const mm::Certificate cert = mm::certificate_from_json(j);
  const std::string problem = mm::certificate_problem(cg, cert);
  mm::Json out;
  out["valid"] = problem.empty();
  out["problem"] = problem.empty() ? mm::Json(nullptr) : mm::Json(problem);
  write_text(o.out, mm::dump(out));
  std::cerr << (problem.empty() ? "certificate valid\n" : "certificate rejected: " + problem + "\n");
  return problem.empty() ? kOk : kNegative;
}

int cmd_giant_trace(const Options& o) {
  require_even(o.n);
  const mm::ColoredGraph cg = mm::read_colored_graph_file(o.input);
  const mm::GiantTrace t = mm::giant_trace(cg, o.n);
  write_text(o.out, mm::dump(mm::to_json(t)));
  std::cerr << "giant component color " << int(t.f1.color) << " on " << t.f1.vertices.size()
            << " vertices; best saturation in J = " << t.best_saturation
            << (t.claim_met ? " (meets N - 3 sqrt(N))\n" : " (below N - 3 sqrt(N))\n");
  return kOk;
}

int cmd_sweep(const Options& o) {
  mm::SweepConfig cfg;
  cfg.lemma = o.lemma;
  cfg.trials = o.trials;
  cfg.n_min = o.nmin;
  cfg.n_max = o.nmax;
  cfg.seed = need_seed(o);
  cfg.hypothesis_filter = !o.no_filter;
  cfg.threads = o.threads;
  if (!o.n_values.empty()) cfg.theorem_n = o.n_values;
  if (!o.eta.empty()) cfg.eta = parse_eta(o.eta);
  cfg.adversarial = o.adversarial;
  if (o.budget > 0) cfg.adversarial_budget = o.budget;
  const mm::SweepReport r = mm::lemma_sweep(cfg);
  write_text(o.out, mm::dump(mm::to_json(r, o.timing)));

  if (!o.out.empty() && o.out != "-") {
    const std::filesystem::path report(o.out);
    const std::string stem = report.stem().string();
    auto artifact = [&](const std::string& kind, const mm::SweepRecord& rec) {
      if (rec.instance.empty()) return;
      const auto path = report.parent_path() / (stem + "." + kind + "-" + std::to_string(rec.index) + ".txt");
      write_text(path.string(), rec.instance);
    };
    for (const auto& rec : r.violations) artifact("violation", rec);
    for (const auto& rec : r.archived) artifact("failure", rec);
  }
  std::cerr << "sweep " << cfg.lemma << ": " << r.instances << " instances, " << r.hypothesis_satisfying
            << " hypothesis-satisfying, " << r.violations.size() << " violations, " << r.archived.size()
            << " archived\n";
  for (const auto& rec : r.violations) std::cerr << "  violation at instance " << rec.index << ": " << rec.message << "\n";
  return r.violations.empty() ? kOk : kContradiction;
}

int cmd_oracle_check(const Options& o) {
  if (o.exhaustive > 0) {
    mm::ExhaustiveOptions opt;
    opt.prune_color_symmetry = o.prune;
    opt.samples = o.samples;
    if (o.samples > 0) opt.seed = need_seed(o);
    const mm::ExhaustiveTable t = mm::exhaustive_small_check(o.exhaustive, opt);
    write_text(o.out, mm::dump(mm::to_json(t)));
    for (const auto& row : t.rows) std::cerr << "N = " << t.vertex_count << ", n = " << row.n << ": " << (row.holds ? "true" : "false") << "\n";
    return kOk;
  }
  if (o.input.empty()) throw mm::InvalidArgument("oracle-check needs a graph file or --exhaustive N");
  // Matching engine against the brute-force oracle on every color class small enough for it.
  const mm::ColoredGraph cg = mm::read_colored_graph_file(o.input);
  mm::Json rows = mm::Json::array();
  bool agree = true;
  for (mm::Color c : mm::kColors) {
    const mm::Graph g = mm::color_subgraph(cg, c);
    mm::Json row;
    row["color"] = c;
    row["edges"] = g.edge_count();
    row["max_matching"] = mm::max_matching(g).size();
    if (g.edge_count() <= mm::kBruteEdgeCap) {
      const int brute = mm::brute_max_matching(g).size();
      const bool same = brute == row["max_matching"].get<int>() &&
                        mm::gallai_edmonds(g).D == mm::brute_missable_vertices(g);
      row["brute"] = brute;
      row["agree"] = same;
      agree = agree && same;
    } else {
      row["brute"] = nullptr;
      row["agree"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  mm::Json j;
  j["agree"] = agree;
  j["colors"] = std::move(rows);
  write_text(o.out, mm::dump(j));
  std::cerr << (agree ? "matching engine agrees with the brute-force oracle\n" : "ORACLE DISAGREEMENT\n");
  return agree ? kOk : kContradiction;
}

int cmd_gen_random(const Options& o) {
  const std::uint64_t seed = need_seed(o);
  if (o.n < 1) throw mm::InvalidArgument("--vertices must be positive");
  if (o.b < 1 || o.b > o.n) throw mm::InvalidArgument("--b must lie in [1, N]");
  const mm::Graph g = mm::random_b_dense_graph(o.n, o.b, seed);
  const std::uint64_t coloring_seed = mm::splitmix64(seed);
  const mm::ColoredGraph cg = o.budget > 0 ? mm::adversarial_coloring(g, 2 * (o.n / 4), o.budget, coloring_seed)
                                           : mm::random_coloring(g, coloring_seed);
  write_text(o.out, mm::serialize_colored_graph(cg));
  std::cerr << "random graph: N = " << o.n << ", min degree = " << g.min_degree()
            << ", objective = " << mm::matching_objective(cg) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic matchings in dense 3-edge-colored graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen-extremal", "Write the 8l-vertex extremal coloring");
  gen->add_option("--ell", o.ell, "Parameter l >= 2")->required();
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify-extremal", "Check the structural properties of an extremal coloring");
  ver->add_option("graph", o.input, "Colored-graph file")->required();
  ver->add_option("--ell", o.ell, "Parameter l (default N/8)");
  ver->add_flag("--cycles", o.cycles, "Also search every color for a cycle of length 4l");
  ver->add_option("--cycle-budget", o.cycle_budget, "DFS node budget for --cycles");
  ver->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Find a monochromatic component with a matching saturating n vertices");
  sol->add_option("graph", o.input, "Colored-graph file")->required();
  sol->add_option("--n", o.n, "Even target n")->required();
  sol->add_option("--eta", o.eta, "Attach a hypothesis report for this eta (\"p/q\")");
  sol->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* vc = app.add_subcommand("verify-cert", "Check a certificate against a colored graph");
  vc->add_option("graph", o.input, "Colored-graph file")->required();
  vc->add_option("certificate", o.second_input, "Certificate JSON (or a solve report)")->required();
  vc->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* gt = app.add_subcommand("giant-trace", "Diagnostic trace around a giant monochromatic component");
  gt->add_option("graph", o.input, "Colored-graph file")->required();
  gt->add_option("--n", o.n, "Even target n")->required();
  gt->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* sw = app.add_subcommand("sweep", "Randomized property sweep for one lemma");
  sw->add_option("--lemma", o.lemma, "Lemma id")->required()->check(CLI::IsMember(mm::sweep_lemmas()));
  sw->add_option("--trials", o.trials, "Instances (per n for the theorem sweep)");
  sw->add_option("--nmin", o.nmin, "Smallest vertex count (0: lemma default)");
  sw->add_option("--nmax", o.nmax, "Largest vertex count (0: lemma default)");
  sw->add_option("--seed", o.seed, "Base seed")->required();
  sw->add_option("--out", o.out, "Report file; artifacts are written next to it");
  sw->add_flag("--no-filter", o.no_filter, "Also evaluate instances outside the hypotheses");
  sw->add_option("--threads", o.threads, "Worker threads (default MONOMATCH_THREADS or all cores)");
  sw->add_option("--n-values", o.n_values, "Theorem sweep: values of n")->delimiter(',');
  sw->add_option("--eta", o.eta, "Theorem sweep: eta as \"p/q\"");
  sw->add_option("--adversarial", o.adversarial, "Theorem sweep: adversarial colorings per n");
  sw->add_option("--budget", o.budget, "Theorem sweep: adversary proposals per coloring");
  sw->add_flag("--timing", o.timing, "Include runtime in the report");

  auto* oc = app.add_subcommand("oracle-check", "Compare the matching engine with brute force, or run the exhaustive table");
  oc->add_option("graph", o.input, "Colored-graph file");
  oc->add_option("--exhaustive", o.exhaustive, "Enumerate all 3-colorings of K_N");
  oc->add_flag("--prune", o.prune, "Color-permutation pruning for --exhaustive");
  oc->add_option("--samples", o.samples, "Sample this many colorings instead (N > 6)");
  oc->add_option("--seed", o.seed, "Seed for --samples");
  oc->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* gr = app.add_subcommand("gen-random", "Random b-dense graph of K_N with a random or adversarial coloring");
  gr->add_option("--vertices", o.n, "N")->required();
  gr->add_option("--b", o.b, "Density parameter: deficit < b");
  gr->add_option("--seed", o.seed, "Seed")->required();
  gr->add_option("--budget", o.budget, "Adversary proposals (0: random coloring)");
  gr->add_option("--out", o.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen_extremal(o);
    if (*ver) return cmd_verify_extremal(o);
    if (*sol) return cmd_solve(o);
    if (*vc) return cmd_verify_cert(o);
    if (*gt) return cmd_giant_trace(o);
    if (*sw) return cmd_sweep(o);
    if (*oc) return cmd_oracle_check(o);
    if (*gr) return cmd_gen_random(o);
  } catch (const mm::InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const mm::PreconditionError& e) {
    std::cerr << "precondition not met: " << e.what() << "\n";
    return kNegative;
  } catch (const mm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
