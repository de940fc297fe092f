#ifndef MENGER_GRAPH_HPP
#define MENGER_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "menger/error.hpp"

namespace menger {

/// Opaque vertex identifier. Ordering on ids drives every tie-break.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Vertex sequence of a simple path.
using Path = std::vector<Vertex>;

/// Undirected edge, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool has(Vertex w) const { return a == w || b == w; }
  Vertex other(Vertex w) const { return w == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

struct TerminalPair {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// Finite simple undirected graph. Values are immutable once built; the
/// structural operations below return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from vertex pairs plus isolated vertices. Both
  /// orientations and repeated pairs collapse to one edge; a pair with equal
  /// endpoints throws kSelfLoop.
  static Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                              std::span<const Vertex> isolated = {});

  /// Same as from_edge_list, for callers that already hold Edge values.
  static Graph from_edges(std::span<const Vertex> vertices,
                          std::span<const Edge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  const VertexSet& vertices() const { return vertices_; }
  bool has_vertex(Vertex w) const { return index_of(w).has_value(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

  /// Position of w in vertices(), if present.
  std::optional<std::size_t> index_of(Vertex w) const;

  /// Open neighbourhood, sorted. Throws kUnknownVertex.
  const VertexSet& neighbors(Vertex w) const;
  std::size_t degree(Vertex w) const { return neighbors(w).size(); }

  /// Neighbourhood by position in vertices(); no lookup.
  const VertexSet& neighbors_at(std::size_t index) const {
    return adjacency_[index];
  }

  /// All edges in (a, b) lexicographic order.
  EdgeSet edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t require(Vertex w) const;

  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
  std::size_t num_edges_ = 0;
};

Graph delete_vertex(const Graph& g, Vertex w);
Graph delete_vertices(const Graph& g, std::span<const Vertex> ws);
Graph delete_edge(const Graph& g, const Edge& e);

/// Neighbourhood of w as a fresh set.
VertexSet neighbors(const Graph& g, Vertex w);

/// Partition of V(G) into connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff deleting e increases the number of components.
bool is_bridge(const Graph& g, const Edge& e);

/// Edges of g with both ends in s.
EdgeSet induced_edges(const Graph& g, std::span<const Vertex> s);

struct Contraction {
  Graph graph;
  /// Edges of the contracted graph that are absent from the input.
  EdgeSet added;
};

/// Deletes y and joins x to every other neighbour of y. Requires xy to be an
/// edge (kUnknownEdge otherwise). The result stays simple: x never gains a
/// loop and existing x-neighbours are not duplicated.
Contraction contract_reduce(const Graph& g, Vertex x, Vertex y);

/// True when u and v are connected in g with the vertices in `removed`
/// treated as absent. `removed` is indexed by position in g.vertices().
bool connected_avoiding(const Graph& g, std::size_t u_index,
                        std::size_t v_index, const std::vector<char>& removed);

}  // namespace menger

#endif  // MENGER_GRAPH_HPP
