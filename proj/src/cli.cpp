#include "menger/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "menger/connectivity.hpp"
#include "menger/disjoint_paths.hpp"
#include "menger/edge_list.hpp"
#include "menger/harness.hpp"

namespace menger {

namespace {

using Document = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string source;
  std::string target;
  std::string method;
  std::size_t limit = kDefaultSeparatorLimit;
  std::optional<std::size_t> exhaustive_n;
  std::vector<std::string> random;
  std::vector<std::string> checks;
  std::size_t pairs = 0;
  std::size_t jobs = 1;
  std::string out_dir;
  bool json = false;
  bool inject_bug = false;
  bool flow_only = false;
};

// Argument problems that CLI11 cannot see, such as a malformed --random.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const Document& node) {
  if (node.is_string()) {
    return node.get<std::string>();
  }
  return node.dump();
}

// Flattens a document into "key: value" lines. Nested objects join keys with
// '.', arrays of compound values index with [i], and arrays of scalars print
// on one line separated by spaces.
void render_text(const Document& node, const std::string& key,
                 std::string& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      render_text(v, key.empty() ? k : key + "." + k, out);
    }
    return;
  }
  if (node.is_array()) {
    const bool flat = std::all_of(node.begin(), node.end(), [](const auto& e) {
      return e.is_primitive();
    });
    if (flat) {
      out += key + ":";
      for (const auto& e : node) {
        out += " " + scalar_text(e);
      }
      out += "\n";
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      render_text(node[i], key + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += key + ": " + scalar_text(node) + "\n";
}

std::string render(const Document& doc, bool json) {
  if (json) {
    return doc.dump(2) + "\n";
  }
  std::string out;
  render_text(doc, "", out);
  return out;
}

LabeledGraph load(const Options& opts) {
  if (opts.input.empty() || opts.input == "-") {
    return parse_edge_list(std::cin);
  }
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot open " + opts.input);
  }
  return parse_edge_list(in);
}

TerminalPair resolve_pair(const LabeledGraph& g, const Options& opts) {
  auto u = g.find(opts.source);
  if (!u) {
    throw Error(ErrorKind::kUnknownVertex, "'" + opts.source + "'");
  }
  auto v = g.find(opts.target);
  if (!v) {
    throw Error(ErrorKind::kUnknownVertex, "'" + opts.target + "'");
  }
  if (*u == *v) {
    throw UsageError("source and target must differ");
  }
  return {*u, *v};
}

Document tokens_of(const LabeledGraph& g, std::span<const Vertex> vs) {
  Document out = Document::array();
  for (Vertex w : vs) {
    out.push_back(g.token(w));
  }
  return out;
}

Document query_echo(const char* command, const Options& opts) {
  Document doc;
  doc["command"] = command;
  doc["source"] = opts.source;
  doc["target"] = opts.target;
  return doc;
}

Document cmd_kappa(const Options& opts) {
  const LabeledGraph g = load(opts);
  const TerminalPair pair = resolve_pair(g, opts);
  const std::string method = opts.method.empty() ? "flow" : opts.method;
  const Connectivity k = method == "brute" ? kappa_bruteforce(g.graph, pair)
                                           : kappa_flow(g.graph, pair);
  Document doc = query_echo("kappa", opts);
  doc["method"] = method;
  if (k.is_unbounded()) {
    doc["kappa"] = "unbounded";
  } else {
    doc["kappa"] = k.value();
  }
  return doc;
}

Document cmd_mu_paths(const Options& opts, bool with_paths) {
  const LabeledGraph g = load(opts);
  const TerminalPair pair = resolve_pair(g, opts);
  const std::string method = opts.method.empty() ? "recursive" : opts.method;
  const PathSystem system = method == "flow" ? mu_flow(g.graph, pair)
                                             : menger_paths(g.graph, pair);
  Document doc = query_echo(with_paths ? "paths" : "mu", opts);
  doc["method"] = method;
  doc["mu"] = system.size();
  if (with_paths) {
    Document paths = Document::array();
    for (const Path& p : system.paths) {
      paths.push_back(tokens_of(g, p));
    }
    doc["paths"] = std::move(paths);
  }
  return doc;
}

Document cmd_separators(const Options& opts) {
  const LabeledGraph g = load(opts);
  const TerminalPair pair = resolve_pair(g, opts);
  const SeparatorListing listing =
      enumerate_minimum_separators(g.graph, pair, opts.limit);
  Document doc = query_echo("separators", opts);
  doc["kappa"] = listing.kappa;
  doc["count"] = listing.entries.size();
  doc["truncated"] = listing.truncated;
  Document seps = Document::array();
  for (const SeparatorEntry& entry : listing.entries) {
    Document item;
    item["members"] = tokens_of(g, entry.separator.members);
    Document induced = Document::array();
    for (const Edge& e : entry.induced) {
      const Vertex ends[] = {e.a, e.b};
      induced.push_back(tokens_of(g, ends));
    }
    item["induced"] = std::move(induced);
    seps.push_back(std::move(item));
  }
  doc["separators"] = std::move(seps);
  return doc;
}

std::vector<CheckKind> selected_checks(const Options& opts) {
  if (opts.checks.empty()) {
    return {std::begin(kAllChecks), std::end(kAllChecks)};
  }
  std::vector<CheckKind> out;
  for (const std::string& name : opts.checks) {
    auto c = parse_check(name);
    if (!c) {
      throw UsageError("unknown check '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), *c) == out.end()) {
      out.push_back(*c);
    }
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !in.eof()) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

// Returns the document plus whether every check passed.
std::pair<Document, bool> cmd_verify(const Options& opts) {
  const std::vector<CheckKind> checks = selected_checks(opts);
  SuiteOptions suite;
  suite.jobs = opts.jobs;
  suite.harness.inject_bug = opts.inject_bug;
  suite.harness.flow_only = opts.flow_only;

  const int modes = (opts.exhaustive_n ? 1 : 0) + (!opts.random.empty() ? 1 : 0) +
                    (!opts.input.empty() ? 1 : 0);
  if (modes != 1) {
    throw UsageError(
        "verify needs exactly one of --exhaustive-n, --random, --input");
  }

  Document doc;
  doc["command"] = "verify";
  SuiteSummary summary;
  if (!opts.input.empty()) {
    const LabeledGraph g = load(opts);
    std::vector<TerminalPair> pairs;
    if (!opts.source.empty() || !opts.target.empty()) {
      const TerminalPair pair = resolve_pair(g, opts);
      require_non_adjacent(g.graph, pair);
      pairs.push_back(pair);
    } else {
      pairs = terminal_pairs(g.graph, GraphSource{}, 0);
    }
    doc["source"] = "input";
    summary = run_checks(g.graph, pairs, checks, suite);
  } else {
    GraphSource source;
    if (opts.exhaustive_n) {
      source = GraphSource::exhaustive(*opts.exhaustive_n);
    } else {
      source = GraphSource::random(
          parse_number<std::size_t>(opts.random[0], "vertex count"),
          parse_number<double>(opts.random[1], "edge probability"),
          parse_number<std::size_t>(opts.random[2], "graph count"),
          parse_number<std::uint64_t>(opts.random[3], "seed"));
    }
    source.pairs_per_graph = opts.pairs;
    doc["source"] = source.describe();
    const GraphSource sources[] = {source};
    summary = run_suite(sources, checks, suite);
  }

  Document names = Document::array();
  for (CheckKind c : checks) {
    names.push_back(std::string(check_name(c)));
  }
  doc["checks"] = std::move(names);
  doc["graphs"] = summary.graphs;
  doc["instances"] = summary.instances;
  Document results;
  for (CheckKind c : checks) {
    const CheckTally& t = summary.tallies[c];
    Document row;
    row["pass"] = t.pass;
    row["fail"] = t.fail;
    row["not_applicable"] = t.not_applicable;
    results[std::string(check_name(c))] = std::move(row);
  }
  doc["results"] = std::move(results);
  doc["failures"] = summary.failures();
  if (!opts.out_dir.empty()) {
    Document files = Document::array();
    for (const auto& path : write_counterexamples(summary, opts.out_dir)) {
      files.push_back(path.filename().string());
    }
    doc["counterexamples"] = std::move(files);
  }
  return {std::move(doc), summary.ok()};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kSelfLoop:
    case ErrorKind::kCapExceeded:
    case ErrorKind::kPreconditionViolated:
    case ErrorKind::kTooLarge:
      return kExitParse;
    case ErrorKind::kUnknownVertex:
      return kExitUnknownVertex;
    case ErrorKind::kAdjacentTerminals:
      return kExitAdjacentTerminals;
    default:
      return kExitCheckFailed;
  }
}

void add_query_options(CLI::App* cmd, Options& opts) {
  cmd->add_option("--input", opts.input, "Edge-list file (default: stdin)");
  cmd->add_option("--source", opts.source, "Source vertex token")->required();
  cmd->add_option("--target", opts.target, "Target vertex token")->required();
  cmd->add_flag("--json", opts.json, "Emit JSON instead of key: value lines");
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  Options opts;

  CLI::App app{"Vertex connectivity, minimum separators and disjoint paths",
               "menger"};
  app.require_subcommand(1);

  auto* kappa = app.add_subcommand("kappa", "uv-connectivity");
  add_query_options(kappa, opts);
  kappa->add_option("--method", opts.method, "flow or brute")
      ->check(CLI::IsMember({"flow", "brute"}));

  auto* mu = app.add_subcommand("mu", "Maximum number of disjoint uv-paths");
  auto* paths = app.add_subcommand("paths", "Maximum disjoint uv-path system");
  for (auto* cmd : {mu, paths}) {
    add_query_options(cmd, opts);
    cmd->add_option("--method", opts.method, "recursive or flow")
        ->check(CLI::IsMember({"flow", "recursive"}));
  }

  auto* seps = app.add_subcommand("separators", "All minimum uv-separators");
  add_query_options(seps, opts);
  seps->add_option("--limit", opts.limit, "Stop after this many separators");

  auto* verify = app.add_subcommand("verify", "Run theorem checks over graphs");
  verify->add_option("--exhaustive-n", opts.exhaustive_n,
                     "All labelled graphs on N vertices");
  verify->add_option("--random", opts.random, "N P COUNT SEED")->expected(4);
  verify->add_option("--input", opts.input, "Check a single graph file");
  verify->add_option("--source", opts.source, "Restrict --input to one pair");
  verify->add_option("--target", opts.target, "Restrict --input to one pair");
  verify->add_option("--checks", opts.checks,
                     "lemma1, theorem1, contraction, menger (default: all)")
      ->delimiter(',');
  verify->add_option("--pairs", opts.pairs,
                     "Sample this many pairs per graph (default: all)");
  verify->add_option("--jobs", opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", opts.out_dir, "Directory for counterexamples");
  verify->add_flag("--flow-only", opts.flow_only,
                   "Skip brute-force engines in the menger check");
  verify->add_flag("--inject-bug", opts.inject_bug,
                   "Test mode: use an off-by-one connectivity engine");
  verify->add_flag("--json", opts.json, "Emit JSON");

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.output = out.str();
    result.diagnostics = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitParse;
    return result;
  }

  try {
    Document doc;
    if (kappa->parsed()) {
      doc = cmd_kappa(opts);
    } else if (mu->parsed()) {
      doc = cmd_mu_paths(opts, false);
    } else if (paths->parsed()) {
      doc = cmd_mu_paths(opts, true);
    } else if (seps->parsed()) {
      doc = cmd_separators(opts);
    } else {
      auto [verify_doc, ok] = cmd_verify(opts);
      doc = std::move(verify_doc);
      result.exit_code = ok ? kExitOk : kExitCheckFailed;
    }
    result.output = render(doc, opts.json);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.diagnostics = std::string("menger: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    result.exit_code = kExitParse;
    result.diagnostics = std::string("menger: ") + e.what() + "\n";
  }
  return result;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CommandResult result = run_cli(args);
  out << result.output;
  err << result.diagnostics;
  return result.exit_code;
}

}  // namespace menger
