#ifndef MENGER_HARNESS_HPP
#define MENGER_HARNESS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "menger/connectivity.hpp"
#include "menger/edge_list.hpp"
#include "menger/graph.hpp"

namespace menger {

// ---------------------------------------------------------------------------
// Graph sources
// ---------------------------------------------------------------------------

/// SplitMix64 (Steele, Lea and Flood; constants as published by Vigna).
/// The output sequence for a given seed is fixed and platform independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

inline constexpr std::size_t kExhaustiveVertexCap = 7;

struct GraphSource {
  enum class Kind { kExhaustive, kRandom };

  Kind kind = Kind::kExhaustive;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// Terminal pairs sampled per graph; 0 means every non-adjacent pair.
  std::size_t pairs_per_graph = 0;

  /// Every labelled graph on vertices 0..n-1. n <= kExhaustiveVertexCap.
  static GraphSource exhaustive(std::size_t n);
  /// `count` Erdos-Renyi graphs G(n, p) drawn from SplitMix64(seed).
  static GraphSource random(std::size_t n, double p, std::size_t count,
                            std::uint64_t seed, std::size_t pairs = 0);

  std::string describe() const;
};

/// Deterministic graph stream. Exhaustive sources walk edge masks 0..2^m-1
/// over the pairs (i, j), i < j, in lexicographic order, mask bit t selecting
/// pair t. Random sources draw one next_unit() per pair in the same order and
/// keep the edge when it falls below p.
class GraphStream {
 public:
  explicit GraphStream(const GraphSource& source);

  std::optional<Graph> next();

 private:
  GraphSource source_;
  std::vector<Edge> slots_;
  std::uint64_t emitted_ = 0;
  std::uint64_t total_ = 0;
  SplitMix64 rng_;
};

std::vector<Graph> generate(const GraphSource& source);

/// Non-adjacent pairs (u < v) to check on one graph of a source. For sampled
/// sources the pick uses its own SplitMix64 stream keyed by seed and graph
/// index, so the graph stream itself is unaffected.
std::vector<TerminalPair> terminal_pairs(const Graph& g,
                                         const GraphSource& source,
                                         std::size_t graph_index);

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

enum class CheckKind { kLemma1, kTheorem1, kContraction, kMenger };

inline constexpr CheckKind kAllChecks[] = {
    CheckKind::kLemma1, CheckKind::kTheorem1, CheckKind::kContraction,
    CheckKind::kMenger};

std::string_view check_name(CheckKind check);
std::optional<CheckKind> parse_check(std::string_view name);

enum class Verdict { kPass, kFail, kNotApplicable };

std::string_view verdict_name(Verdict verdict);

struct CheckReport {
  CheckKind check = CheckKind::kMenger;
  Graph graph;
  TerminalPair pair;
  std::size_t source_index = 0;
  std::size_t graph_index = 0;
  /// Deleted element or contraction pair that decided the verdict.
  std::string element;
  Verdict verdict = Verdict::kPass;
  /// Observed versus expected values, or why the check did not apply.
  std::string detail;
  std::chrono::microseconds elapsed{0};
};

struct HarnessOptions {
  /// Replaces the connectivity engine by a shadow copy that reports k + 1
  /// for every k >= 1. Exists only to prove the checks can fail.
  bool inject_bug = false;
  /// Skip the brute-force engines inside check_menger.
  bool flow_only = false;
  /// Largest graph on which check_menger consults brute force.
  std::size_t brute_force_max_vertices = 8;
};

/// Connectivity engine used by every check.
Connectivity harness_kappa(const Graph& g, const TerminalPair& pair,
                           const HarnessOptions& options);

/// Deleting any interior vertex or any edge lowers kappa by at most one and
/// never raises it.
CheckReport check_lemma1(const Graph& g, const TerminalPair& pair,
                         const HarnessOptions& options = {});

/// Deleting an edge inside a minimum separator leaves kappa unchanged.
CheckReport check_theorem1(const Graph& g, const TerminalPair& pair,
                           const HarnessOptions& options = {});

/// In a graph where every interior vertex and every edge is critical,
/// contract_reduce(g, x, y) keeps kappa. Not applicable when the hypothesis
/// fails.
CheckReport check_contraction_lemma(const Graph& g, const TerminalPair& pair,
                                    Vertex x, Vertex y,
                                    const HarnessOptions& options = {});

/// check_contraction_lemma over every interior edge in both orientations.
/// Not applicable when the hypothesis fails or no interior edge exists.
CheckReport check_contraction_all(const Graph& g, const TerminalPair& pair,
                                  const HarnessOptions& options = {});

/// Every engine agrees on kappa = mu and every witness system validates.
CheckReport check_menger(const Graph& g, const TerminalPair& pair,
                         const HarnessOptions& options = {});

CheckReport run_check(CheckKind check, const Graph& g, const TerminalPair& pair,
                      const HarnessOptions& options = {});

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

struct SuiteOptions {
  HarnessOptions harness;
  std::size_t jobs = 1;
  bool keep_passes = false;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
};

struct SuiteSummary {
  std::size_t graphs = 0;
  std::size_t instances = 0;  // (graph, pair) combinations
  std::map<CheckKind, CheckTally> tallies;
  /// Failures, plus passes and not-applicable reports when keep_passes is
  /// set; sorted by (source, graph, pair, check).
  std::vector<CheckReport> reports;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

SuiteSummary run_suite(std::span<const GraphSource> sources,
                       std::span<const CheckKind> checks,
                       const SuiteOptions& options = {});

/// Runs `checks` on one graph for the given terminal pairs (single worker).
SuiteSummary run_checks(const Graph& g, std::span<const TerminalPair> pairs,
                        std::span<const CheckKind> checks,
                        const SuiteOptions& options = {});

// ---------------------------------------------------------------------------
// Counterexamples
// ---------------------------------------------------------------------------

/// Edge-list text for a failed report, led by one comment line naming the
/// check and terminal pair.
std::string counterexample_text(const CheckReport& report);

/// Writes every failing report of `summary` into `dir` (created if needed).
std::vector<std::filesystem::path> write_counterexamples(
    const SuiteSummary& summary, const std::filesystem::path& dir);

struct Counterexample {
  LabeledGraph graph;
  CheckKind check = CheckKind::kMenger;
  TerminalPair pair;
};

/// Parses counterexample_text output. Throws kParse on a missing or
/// malformed header.
Counterexample parse_counterexample(std::string_view text);

/// Re-runs the recorded check on the recorded graph and pair.
CheckReport replay(const Counterexample& cx,
                   const HarnessOptions& options = {});

}  // namespace menger

#endif  // MENGER_HARNESS_HPP
