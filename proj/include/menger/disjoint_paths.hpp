#ifndef MENGER_DISJOINT_PATHS_HPP
#define MENGER_DISJOINT_PATHS_HPP

#include <optional>
#include <string>
#include <vector>

#include "menger/connectivity.hpp"
#include "menger/graph.hpp"

namespace menger {

/// Pairwise internally disjoint uv-paths.
struct PathSystem {
  TerminalPair pair;
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }

  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// Re-walks every path in `g` and checks endpoints, adjacency, simplicity and
/// pairwise internal disjointness. Returns a description of the first
/// violation, or nullopt when the system is valid.
std::optional<std::string> validate_path_system(const Graph& g,
                                                const PathSystem& system);

/// Max-flow witness: decomposes a maximum flow on the split network.
PathSystem mu_flow(const Graph& g, const TerminalPair& pair);

inline constexpr std::size_t kMuBruteForceVertexCap = 10;

/// Exact maximum number of internally disjoint uv-paths, by listing every
/// simple uv-path and packing their interiors. Throws kTooLarge above
/// kMuBruteForceVertexCap vertices.
std::size_t mu_bruteforce(const Graph& g, const TerminalPair& pair);

/// Spanning subgraph H with the same uv-connectivity k in which deleting any
/// edge drops it to k - 1. One pass over the edges in (a, b) order.
Graph critical_spanning_subgraph(const Graph& g, const TerminalPair& pair);

/// Base case of the recursion: with no edge between interior vertices every
/// uv-path has length two, so the answer is k common neighbours of u and v.
PathSystem base_case_paths(const Graph& h, const TerminalPair& pair);

/// Pulls a path system of contract_reduce(g, x, y).graph back into g.
///
/// Only a path that uses one of the `added` edges needs work, and at most one
/// path can, since every added edge ends at x. On that path let x_i be the
/// neighbour of x reached over an added edge and w the other neighbour. If w
/// is also a neighbour of y, x is replaced by y (w, y, x_i); otherwise y is
/// spliced in between x and x_i.
PathSystem lift_path_system(const PathSystem& paths_in_contracted, Vertex x,
                            Vertex y, const VertexSet& neighbors_of_y,
                            const EdgeSet& added, const Graph& g);

/// k = kappa(u, v) internally disjoint uv-paths built by induction on the
/// vertex count: reduce to an edge-critical subgraph, contract an interior
/// edge, recurse, then lift the paths back. Recursion depth is bounded by
/// |V(g)|.
PathSystem menger_paths(const Graph& g, const TerminalPair& pair);

}  // namespace menger

#endif  // MENGER_DISJOINT_PATHS_HPP
