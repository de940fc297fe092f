#include "menger/harness.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "menger/disjoint_paths.hpp"

namespace menger {

namespace {

using Clock = std::chrono::steady_clock;

std::string edge_text(const Edge& e) {
  return "edge " + std::to_string(e.a) + "-" + std::to_string(e.b);
}

std::string vertex_text(Vertex w) { return "vertex " + std::to_string(w); }

CheckReport make_report(CheckKind check, const Graph& g,
                        const TerminalPair& pair) {
  CheckReport r;
  r.check = check;
  r.graph = g;
  r.pair = pair;
  return r;
}

class Stopwatch {
 public:
  explicit Stopwatch(CheckReport& report)
      : report_(report), start_(Clock::now()) {}
  ~Stopwatch() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        Clock::now() - start_);
  }

 private:
  CheckReport& report_;
  Clock::time_point start_;
};

void fail(CheckReport& r, std::string element, std::string detail) {
  r.verdict = Verdict::kFail;
  r.element = std::move(element);
  r.detail = std::move(detail);
}

bool within_lemma1(std::size_t before, const Connectivity& after) {
  if (!after.is_finite()) {
    return false;
  }
  return after.value() <= before && after.value() + 1 >= before;
}

std::vector<Vertex> interior_vertices(const Graph& g,
                                      const TerminalPair& pair) {
  std::vector<Vertex> out;
  for (Vertex w : g.vertices()) {
    if (w != pair.u && w != pair.v) {
      out.push_back(w);
    }
  }
  return out;
}

// Looks for a deletion target that violates kappa(G - a) = kappa(G) - 1.
// Returns a description of it, or nullopt when the hypothesis holds.
std::optional<std::string> contraction_hypothesis_breaker(
    const Graph& g, const TerminalPair& pair, std::size_t k,
    const HarnessOptions& options) {
  auto drops_by_one = [&](const Graph& h) {
    const Connectivity after = harness_kappa(h, pair, options);
    return k >= 1 && after.is_finite() && after.value() == k - 1;
  };
  for (Vertex w : interior_vertices(g, pair)) {
    if (!drops_by_one(delete_vertex(g, w))) {
      return vertex_text(w);
    }
  }
  for (const Edge& e : g.edges()) {
    if (!drops_by_one(delete_edge(g, e))) {
      return edge_text(e);
    }
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

GraphSource GraphSource::exhaustive(std::size_t n) {
  if (n > kExhaustiveVertexCap) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive enumeration is limited to " +
                    std::to_string(kExhaustiveVertexCap) + " vertices");
  }
  GraphSource s;
  s.kind = Kind::kExhaustive;
  s.n = n;
  return s;
}

GraphSource GraphSource::random(std::size_t n, double p, std::size_t count,
                                std::uint64_t seed, std::size_t pairs) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "edge probability must lie in [0, 1]");
  }
  GraphSource s;
  s.kind = Kind::kRandom;
  s.n = n;
  s.p = p;
  s.count = count;
  s.seed = seed;
  s.pairs_per_graph = pairs;
  return s;
}

std::string GraphSource::describe() const {
  std::ostringstream out;
  if (kind == Kind::kExhaustive) {
    out << "exhaustive n=" << n;
  } else {
    out << "random n=" << n << " p=" << p << " count=" << count
        << " seed=" << seed;
  }
  if (pairs_per_graph > 0) {
    out << " pairs=" << pairs_per_graph;
  }
  return out.str();
}

GraphStream::GraphStream(const GraphSource& source)
    : source_(source), rng_(source.seed) {
  if (source.kind == GraphSource::Kind::kExhaustive &&
      source.n > kExhaustiveVertexCap) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive enumeration is limited to " +
                    std::to_string(kExhaustiveVertexCap) + " vertices");
  }
  for (std::size_t i = 0; i < source.n; ++i) {
    for (std::size_t j = i + 1; j < source.n; ++j) {
      slots_.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  total_ = source.kind == GraphSource::Kind::kExhaustive
               ? (std::uint64_t{1} << slots_.size())
               : source.count;
}

std::optional<Graph> GraphStream::next() {
  if (emitted_ >= total_) {
    return std::nullopt;
  }
  std::vector<Vertex> vertices(source_.n);
  for (std::size_t i = 0; i < source_.n; ++i) {
    vertices[i] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < slots_.size(); ++t) {
    const bool keep = source_.kind == GraphSource::Kind::kExhaustive
                          ? ((emitted_ >> t) & 1) != 0
                          : rng_.next_unit() < source_.p;
    if (keep) {
      edges.push_back(slots_[t]);
    }
  }
  ++emitted_;
  return Graph::from_edges(vertices, edges);
}

std::vector<Graph> generate(const GraphSource& source) {
  std::vector<Graph> out;
  GraphStream stream(source);
  while (auto g = stream.next()) {
    out.push_back(std::move(*g));
  }
  return out;
}

std::vector<TerminalPair> terminal_pairs(const Graph& g,
                                         const GraphSource& source,
                                         std::size_t graph_index) {
  std::vector<TerminalPair> all;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) {
        all.push_back({vs[i], vs[j]});
      }
    }
  }
  const std::size_t want = source.pairs_per_graph;
  if (want == 0 || want >= all.size()) {
    return all;
  }
  SplitMix64 rng(source.seed ^
                 (0x9e3779b97f4a7c15ULL * (graph_index + 1)));
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + rng.next_below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(want);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return all;
}

std::string_view check_name(CheckKind check) {
  switch (check) {
    case CheckKind::kLemma1: return "lemma1";
    case CheckKind::kTheorem1: return "theorem1";
    case CheckKind::kContraction: return "contraction";
    case CheckKind::kMenger: return "menger";
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (CheckKind c : kAllChecks) {
    if (check_name(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

Connectivity harness_kappa(const Graph& g, const TerminalPair& pair,
                           const HarnessOptions& options) {
  Connectivity k = kappa_flow(g, pair);
  if (options.inject_bug && k.is_finite() && k.value() >= 1) {
    return Connectivity::finite(k.value() + 1);
  }
  return k;
}

CheckReport check_lemma1(const Graph& g, const TerminalPair& pair,
                         const HarnessOptions& options) {
  require_non_adjacent(g, pair);
  CheckReport r = make_report(CheckKind::kLemma1, g, pair);
  Stopwatch watch(r);
  const std::size_t k = harness_kappa(g, pair, options).value();
  auto verify = [&](const Graph& h, const std::string& element) {
    const Connectivity after = harness_kappa(h, pair, options);
    if (!within_lemma1(k, after)) {
      fail(r, element,
           "kappa " + std::to_string(k) + " -> " + after.to_string());
      return false;
    }
    return true;
  };
  for (Vertex w : interior_vertices(g, pair)) {
    if (!verify(delete_vertex(g, w), vertex_text(w))) {
      return r;
    }
  }
  for (const Edge& e : g.edges()) {
    if (!verify(delete_edge(g, e), edge_text(e))) {
      return r;
    }
  }
  return r;
}

CheckReport check_theorem1(const Graph& g, const TerminalPair& pair,
                           const HarnessOptions& options) {
  require_non_adjacent(g, pair);
  CheckReport r = make_report(CheckKind::kTheorem1, g, pair);
  Stopwatch watch(r);
  const Connectivity k = harness_kappa(g, pair, options);
  const SeparatorListing listing = enumerate_minimum_separators(g, pair);
  std::size_t edges_checked = 0;
  for (const auto& entry : listing.entries) {
    for (const Edge& e : entry.induced) {
      ++edges_checked;
      const Connectivity after = harness_kappa(delete_edge(g, e), pair, options);
      if (after != k) {
        fail(r, edge_text(e),
             "kappa " + k.to_string() + " -> " + after.to_string());
        return r;
      }
    }
  }
  if (edges_checked == 0) {
    r.detail = "vacuous: every minimum separator is independent";
  }
  if (listing.truncated) {
    r.detail += (r.detail.empty() ? "" : "; ");
    r.detail += "separator listing truncated";
  }
  return r;
}

CheckReport check_contraction_lemma(const Graph& g, const TerminalPair& pair,
                                    Vertex x, Vertex y,
                                    const HarnessOptions& options) {
  require_non_adjacent(g, pair);
  if (!g.has_edge(x, y)) {
    throw Error(ErrorKind::kUnknownEdge, edge_text(Edge(x, y)));
  }
  for (Vertex w : {x, y}) {
    if (w == pair.u || w == pair.v) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "contraction pair must avoid the terminals");
    }
  }
  CheckReport r = make_report(CheckKind::kContraction, g, pair);
  Stopwatch watch(r);
  r.element = "contract " + std::to_string(y) + " into " + std::to_string(x);
  const std::size_t k = harness_kappa(g, pair, options).value();
  if (auto breaker = contraction_hypothesis_breaker(g, pair, k, options)) {
    r.verdict = Verdict::kNotApplicable;
    r.detail = "hypothesis fails at " + *breaker;
    return r;
  }
  const Contraction c = contract_reduce(g, x, y);
  const Connectivity after = harness_kappa(c.graph, pair, options);
  if (after != Connectivity::finite(k)) {
    fail(r, r.element,
         "kappa " + std::to_string(k) + " -> " + after.to_string());
  }
  return r;
}

CheckReport check_contraction_all(const Graph& g, const TerminalPair& pair,
                                  const HarnessOptions& options) {
  require_non_adjacent(g, pair);
  CheckReport r = make_report(CheckKind::kContraction, g, pair);
  Stopwatch watch(r);
  const std::size_t k = harness_kappa(g, pair, options).value();
  if (auto breaker = contraction_hypothesis_breaker(g, pair, k, options)) {
    r.verdict = Verdict::kNotApplicable;
    r.detail = "hypothesis fails at " + *breaker;
    return r;
  }
  std::size_t contracted = 0;
  for (const Edge& e : g.edges()) {
    if (e.has(pair.u) || e.has(pair.v)) {
      continue;
    }
    for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      ++contracted;
      const Contraction c = contract_reduce(g, x, y);
      const Connectivity after = harness_kappa(c.graph, pair, options);
      if (after != Connectivity::finite(k)) {
        fail(r, "contract " + std::to_string(y) + " into " + std::to_string(x),
             "kappa " + std::to_string(k) + " -> " + after.to_string());
        return r;
      }
    }
  }
  if (contracted == 0) {
    r.verdict = Verdict::kNotApplicable;
    r.detail = "no interior edge";
  }
  return r;
}

CheckReport check_menger(const Graph& g, const TerminalPair& pair,
                         const HarnessOptions& options) {
  require_non_adjacent(g, pair);
  CheckReport r = make_report(CheckKind::kMenger, g, pair);
  Stopwatch watch(r);
  const std::size_t k = harness_kappa(g, pair, options).value();

  const PathSystem by_flow = mu_flow(g, pair);
  if (auto problem = validate_path_system(g, by_flow)) {
    fail(r, "mu_flow", *problem);
    return r;
  }
  PathSystem recursive;
  try {
    recursive = menger_paths(g, pair);
  } catch (const Error& err) {
    fail(r, "menger_paths", err.what());
    return r;
  }
  if (auto problem = validate_path_system(g, recursive)) {
    fail(r, "menger_paths", *problem);
    return r;
  }
  if (by_flow.size() != k || recursive.size() != k) {
    fail(r, "cardinality",
         "kappa_flow=" + std::to_string(k) +
             " mu_flow=" + std::to_string(by_flow.size()) +
             " menger_paths=" + std::to_string(recursive.size()));
    return r;
  }
  if (!options.flow_only && g.num_vertices() <= options.brute_force_max_vertices) {
    const std::size_t kb = kappa_bruteforce(g, pair).value();
    const std::size_t mb = mu_bruteforce(g, pair);
    if (kb != k || mb != k) {
      fail(r, "bruteforce",
           "kappa_flow=" + std::to_string(k) +
               " kappa_bruteforce=" + std::to_string(kb) +
               " mu_bruteforce=" + std::to_string(mb));
    }
  }
  return r;
}

CheckReport run_check(CheckKind check, const Graph& g, const TerminalPair& pair,
                      const HarnessOptions& options) {
  switch (check) {
    case CheckKind::kLemma1: return check_lemma1(g, pair, options);
    case CheckKind::kTheorem1: return check_theorem1(g, pair, options);
    case CheckKind::kContraction: return check_contraction_all(g, pair, options);
    case CheckKind::kMenger: return check_menger(g, pair, options);
  }
  throw std::logic_error("unknown check");
}

std::size_t SuiteSummary::failures() const {
  std::size_t total = 0;
  for (const auto& [check, tally] : tallies) {
    total += tally.fail;
  }
  return total;
}

namespace {

// Runs every check for every pair of one graph, tallying into `into`.
void evaluate_graph(const Graph& g, std::span<const TerminalPair> pairs,
                    std::span<const CheckKind> checks,
                    const SuiteOptions& options, std::size_t source_index,
                    std::size_t graph_index, SuiteSummary& into) {
  into.instances += pairs.size();
  for (const TerminalPair& pair : pairs) {
    for (CheckKind c : checks) {
      CheckReport r;
      try {
        r = run_check(c, g, pair, options.harness);
      } catch (const std::exception& err) {
        r = make_report(c, g, pair);
        fail(r, "exception", err.what());
      }
      r.source_index = source_index;
      r.graph_index = graph_index;
      CheckTally& tally = into.tallies[c];
      switch (r.verdict) {
        case Verdict::kPass: ++tally.pass; break;
        case Verdict::kFail: ++tally.fail; break;
        case Verdict::kNotApplicable: ++tally.not_applicable; break;
      }
      if (r.verdict == Verdict::kFail || options.keep_passes) {
        into.reports.push_back(std::move(r));
      }
    }
  }
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) {
              return std::tie(a.source_index, a.graph_index, a.pair.u,
                              a.pair.v, a.check) <
                     std::tie(b.source_index, b.graph_index, b.pair.u,
                              b.pair.v, b.check);
            });
}

}  // namespace

SuiteSummary run_suite(std::span<const GraphSource> sources,
                       std::span<const CheckKind> checks,
                       const SuiteOptions& options) {
  // Graphs are pulled from the streams on demand under a lock, so exhaustive
  // sources never sit in memory all at once.
  std::vector<GraphStream> streams;
  for (const GraphSource& source : sources) {
    streams.emplace_back(source);
  }
  struct Task {
    std::size_t source_index;
    std::size_t graph_index;
    Graph graph;
  };
  std::size_t next_source = 0;
  std::size_t next_index = 0;
  std::mutex feed;
  auto pull = [&]() -> std::optional<Task> {
    std::lock_guard lock(feed);
    while (next_source < streams.size()) {
      if (auto g = streams[next_source].next()) {
        return Task{next_source, next_index++, std::move(*g)};
      }
      ++next_source;
      next_index = 0;
    }
    return std::nullopt;
  };

  SuiteSummary summary;
  for (CheckKind c : checks) {
    summary.tallies[c];
  }
  std::mutex merge;

  auto worker = [&] {
    SuiteSummary local;
    while (auto task = pull()) {
      ++local.graphs;
      const auto pairs = terminal_pairs(task->graph,
                                        sources[task->source_index],
                                        task->graph_index);
      evaluate_graph(task->graph, pairs, checks, options, task->source_index,
                     task->graph_index, local);
    }
    std::lock_guard lock(merge);
    summary.graphs += local.graphs;
    summary.instances += local.instances;
    for (const auto& [c, tally] : local.tallies) {
      CheckTally& into = summary.tallies[c];
      into.pass += tally.pass;
      into.fail += tally.fail;
      into.not_applicable += tally.not_applicable;
    }
    std::move(local.reports.begin(), local.reports.end(),
              std::back_inserter(summary.reports));
  };

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < jobs; ++i) {
      pool.emplace_back(worker);
    }
  }
  sort_reports(summary.reports);
  return summary;
}

SuiteSummary run_checks(const Graph& g, std::span<const TerminalPair> pairs,
                        std::span<const CheckKind> checks,
                        const SuiteOptions& options) {
  SuiteSummary summary;
  summary.graphs = 1;
  for (CheckKind c : checks) {
    summary.tallies[c];
  }
  evaluate_graph(g, pairs, checks, options, 0, 0, summary);
  sort_reports(summary.reports);
  return summary;
}

std::string counterexample_text(const CheckReport& report) {
  std::string header = "counterexample check=" +
                       std::string(check_name(report.check)) +
                       " u=" + std::to_string(report.pair.u) +
                       " v=" + std::to_string(report.pair.v);
  std::string note = report.element;
  if (!report.detail.empty()) {
    note += (note.empty() ? "" : ": ") + report.detail;
  }
  std::replace(note.begin(), note.end(), '\n', ' ');
  if (!note.empty()) {
    header += " | " + note;
  }
  return serialize_edge_list(report.graph, header);
}

std::vector<std::filesystem::path> write_counterexamples(
    const SuiteSummary& summary, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const CheckReport& r : summary.reports) {
    if (r.verdict != Verdict::kFail) {
      continue;
    }
    const auto file =
        dir / (std::string(check_name(r.check)) + "-s" +
               std::to_string(r.source_index) + "-g" +
               std::to_string(r.graph_index) + "-u" + std::to_string(r.pair.u) +
               "-v" + std::to_string(r.pair.v) + ".txt");
    std::ofstream out(file, std::ios::binary);
    out << counterexample_text(r);
    written.push_back(file);
  }
  return written;
}

Counterexample parse_counterexample(std::string_view text) {
  const std::string_view first = text.substr(0, text.find('\n'));
  constexpr std::string_view kPrefix = "# counterexample ";
  if (!first.starts_with(kPrefix)) {
    throw Error(ErrorKind::kParse, "missing counterexample header");
  }
  std::istringstream fields{std::string(first.substr(kPrefix.size()))};
  std::optional<CheckKind> check;
  std::string u_token;
  std::string v_token;
  for (std::string field; fields >> field && field != "|";) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "check") {
      check = parse_check(value);
    } else if (key == "u") {
      u_token = value;
    } else if (key == "v") {
      v_token = value;
    }
  }
  Counterexample cx;
  cx.graph = parse_edge_list(text);
  auto u = cx.graph.find(u_token);
  auto v = cx.graph.find(v_token);
  if (!check || !u || !v) {
    throw Error(ErrorKind::kParse, "malformed counterexample header");
  }
  cx.check = *check;
  cx.pair = {*u, *v};
  return cx;
}

CheckReport replay(const Counterexample& cx, const HarnessOptions& options) {
  return run_check(cx.check, cx.graph.graph, cx.pair, options);
}

}  // namespace menger
