#ifndef MENGER_CONNECTIVITY_HPP
#define MENGER_CONNECTIVITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "menger/graph.hpp"

namespace menger {

/// uv-connectivity: a finite count, or Unbounded when u and v are adjacent.
/// Unbounded carries no integer, so k - 1 style arithmetic cannot touch it.
class Connectivity {
 public:
  static Connectivity finite(std::size_t k) { return Connectivity(k); }
  static Connectivity unbounded() { return Connectivity(); }

  bool is_unbounded() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error on Unbounded.
  std::size_t value() const;

  std::string to_string() const;

  friend bool operator==(const Connectivity&, const Connectivity&) = default;

 private:
  Connectivity() = default;
  explicit Connectivity(std::size_t k) : value_(k) {}

  std::optional<std::size_t> value_;
};

struct Separator {
  VertexSet members;
  TerminalPair pair;

  friend bool operator==(const Separator&, const Separator&) = default;
};

/// Directed network obtained by splitting every non-terminal vertex w into
/// w_in -> w_out with capacity 1. Edge arcs get a capacity no flow can reach.
/// Terminals keep a single node each: the source is u, the sink is v.
class SplitNetwork {
 public:
  struct Arc {
    std::size_t from;
    std::size_t to;
    int capacity;
    int flow;
  };

  SplitNetwork(const Graph& g, const TerminalPair& pair);

  std::size_t num_nodes() const { return node_vertex_.size(); }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Original vertex behind a network node.
  Vertex vertex_of(std::size_t node) const { return node_vertex_[node]; }
  /// Split-node pair for a non-terminal vertex; terminals map to one node.
  std::size_t in_node(Vertex w) const;
  std::size_t out_node(Vertex w) const;

  /// Augments along BFS-shortest residual paths until none remain or the
  /// flow value reaches `limit`. Returns the value reached.
  std::size_t max_flow(std::size_t limit = static_cast<std::size_t>(-1));

  /// Nodes reachable from the source in the residual network.
  std::vector<char> residual_reachable() const;

  /// Decomposes the current flow into vertex sequences of G, one per unit,
  /// following arcs in construction order.
  std::vector<Path> decompose() const;

 private:
  void add_arc(std::size_t from, std::size_t to, int capacity);

  std::size_t index_of(Vertex w) const;

  VertexSet vertices_;
  std::vector<Vertex> node_vertex_;
  std::vector<std::size_t> in_of_;
  std::vector<std::size_t> out_of_;
  std::vector<Arc> arcs_;  // arc 2i is forward, 2i+1 its residual twin
  std::vector<std::vector<std::size_t>> out_arcs_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
  std::size_t flow_value_ = 0;
};

/// Checks u, v membership and u != v. Throws kUnknownVertex or
/// kPreconditionViolated.
void require_pair(const Graph& g, const TerminalPair& pair);

/// Throws kAdjacentTerminals when uv is an edge.
void require_non_adjacent(const Graph& g, const TerminalPair& pair);

bool is_separator(const Graph& g, const TerminalPair& pair,
                  std::span<const Vertex> s);

/// Smallest separator size by enumerating subsets of V - {u, v} ordered by
/// (size, lexicographic). Capped at 30 interior vertices (kTooLarge).
Connectivity kappa_bruteforce(const Graph& g, const TerminalPair& pair);

/// Max flow on the split network.
Connectivity kappa_flow(const Graph& g, const TerminalPair& pair);

/// True iff kappa_flow(g, pair) >= k, stopping the flow at k. Requires a
/// non-adjacent pair.
bool kappa_at_least(const Graph& g, const TerminalPair& pair, std::size_t k);

/// One minimum separator, read off the residual min cut.
Separator min_vertex_cut(const Graph& g, const TerminalPair& pair);

struct SeparatorEntry {
  Separator separator;
  EdgeSet induced;
};

struct SeparatorListing {
  std::size_t kappa = 0;
  std::vector<SeparatorEntry> entries;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultSeparatorLimit = 10000;

/// Every minimum separator in lexicographic order, each with its induced
/// edges, stopping after `limit` entries.
SeparatorListing enumerate_minimum_separators(
    const Graph& g, const TerminalPair& pair,
    std::size_t limit = kDefaultSeparatorLimit);

}  // namespace menger

#endif  // MENGER_CONNECTIVITY_HPP
