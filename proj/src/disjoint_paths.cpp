#include "menger/disjoint_paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace menger {

namespace {

std::string path_text(const Path& p) {
  std::string out;
  for (Vertex w : p) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(w);
  }
  return out;
}

EdgeSet path_edges(const std::vector<Path>& paths) {
  EdgeSet out;
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      out.emplace_back(p[i], p[i + 1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const EdgeSet& edges, const Edge& e) {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool contains(const VertexSet& vs, Vertex w) {
  return std::binary_search(vs.begin(), vs.end(), w);
}

// Largest number of pairwise disjoint masks.
class DisjointPacker {
 public:
  explicit DisjointPacker(std::vector<std::uint64_t> masks)
      : masks_(std::move(masks)) {}

  std::size_t solve() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t from, std::uint64_t used, std::size_t count) {
    best_ = std::max(best_, count);
    // Each further mask needs at least one vertex the remaining ones could
    // still use.
    std::uint64_t available = 0;
    for (std::size_t i = from; i < masks_.size(); ++i) {
      if ((masks_[i] & used) == 0) {
        available |= masks_[i];
      }
    }
    if (count + static_cast<std::size_t>(std::popcount(available)) <= best_) {
      return;
    }
    for (std::size_t i = from; i < masks_.size(); ++i) {
      if ((masks_[i] & used) == 0) {
        search(i + 1, used | masks_[i], count + 1);
      }
    }
  }

  std::vector<std::uint64_t> masks_;
  std::size_t best_ = 0;
};

}  // namespace

std::optional<std::string> validate_path_system(const Graph& g,
                                                const PathSystem& system) {
  const auto [u, v] = system.pair;
  std::set<Vertex> interior_seen;
  for (std::size_t i = 0; i < system.paths.size(); ++i) {
    const Path& p = system.paths[i];
    const std::string where = "path " + std::to_string(i) + " [" +
                              path_text(p) + "]";
    if (p.size() < 2 || p.front() != u || p.back() != v) {
      return where + " does not run from u to v";
    }
    std::set<Vertex> on_path;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!g.has_vertex(p[j])) {
        return where + " uses unknown vertex " + std::to_string(p[j]);
      }
      if (!on_path.insert(p[j]).second) {
        return where + " repeats vertex " + std::to_string(p[j]);
      }
      if (j + 1 < p.size() && !g.has_edge(p[j], p[j + 1])) {
        return where + " uses missing edge " + std::to_string(p[j]) + "-" +
               std::to_string(p[j + 1]);
      }
      if (j > 0 && j + 1 < p.size() && !interior_seen.insert(p[j]).second) {
        return where + " shares interior vertex " + std::to_string(p[j]);
      }
    }
  }
  return std::nullopt;
}

PathSystem mu_flow(const Graph& g, const TerminalPair& pair) {
  require_non_adjacent(g, pair);
  SplitNetwork net(g, pair);
  net.max_flow();
  return {pair, net.decompose()};
}

std::size_t mu_bruteforce(const Graph& g, const TerminalPair& pair) {
  require_non_adjacent(g, pair);
  if (g.num_vertices() > kMuBruteForceVertexCap) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(g.num_vertices()) + " vertices");
  }
  const std::size_t n = g.num_vertices();
  const std::size_t iu = *g.index_of(pair.u);
  const std::size_t iv = *g.index_of(pair.v);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex nb : g.neighbors_at(i)) {
      adj[i].push_back(*g.index_of(nb));
    }
  }

  // Interior vertex sets of all simple uv-paths.
  std::set<std::uint64_t> interiors;
  std::uint64_t on_path = std::uint64_t{1} << iu;
  auto dfs = [&](auto&& self, std::size_t at) -> void {
    for (std::size_t next : adj[at]) {
      const std::uint64_t bit = std::uint64_t{1} << next;
      if (on_path & bit) {
        continue;
      }
      if (next == iv) {
        interiors.insert(on_path & ~(std::uint64_t{1} << iu));
        continue;
      }
      on_path |= bit;
      self(self, next);
      on_path &= ~bit;
    }
  };
  dfs(dfs, iu);

  // A packing never needs a path whose interior strictly contains another's.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t m : interiors) {
    bool dominated = false;
    for (std::uint64_t other : interiors) {
      if (other != m && (other & m) == other) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      minimal.push_back(m);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [](auto a, auto b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return DisjointPacker(std::move(minimal)).solve();
}

Graph critical_spanning_subgraph(const Graph& g, const TerminalPair& pair) {
  require_non_adjacent(g, pair);
  Graph h = g;
  SplitNetwork initial(h, pair);
  const std::size_t k = initial.max_flow();
  // Any edge off the current witness paths can go: the k paths survive its
  // deletion, and connectivity never rises when edges are removed.
  EdgeSet used = path_edges(initial.decompose());
  for (const Edge& e : g.edges()) {
    Graph candidate = delete_edge(h, e);
    if (!contains(used, e)) {
      h = std::move(candidate);
      continue;
    }
    SplitNetwork net(candidate, pair);
    if (net.max_flow(k) >= k) {
      used = path_edges(net.decompose());
      h = std::move(candidate);
    }
  }
  return h;
}

PathSystem base_case_paths(const Graph& h, const TerminalPair& pair) {
  require_non_adjacent(h, pair);
  for (const Edge& e : h.edges()) {
    if (!e.has(pair.u) && !e.has(pair.v)) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "interior edge " + std::to_string(e.a) + "-" +
                      std::to_string(e.b));
    }
  }
  const std::size_t k = kappa_flow(h, pair).value();
  VertexSet common;
  const auto& nu = h.neighbors(pair.u);
  const auto& nv = h.neighbors(pair.v);
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(common));
  if (common.size() < k) {
    throw Error(ErrorKind::kPreconditionViolated,
                "only " + std::to_string(common.size()) +
                    " common neighbours for connectivity " +
                    std::to_string(k));
  }
  PathSystem out{pair, {}};
  for (std::size_t i = 0; i < k; ++i) {
    out.paths.push_back({pair.u, common[i], pair.v});
  }
  return out;
}

PathSystem lift_path_system(const PathSystem& paths_in_contracted, Vertex x,
                            Vertex y, const VertexSet& neighbors_of_y,
                            const EdgeSet& added, const Graph& g) {
  PathSystem out = paths_in_contracted;
  std::vector<std::size_t> through_x;
  std::vector<std::size_t> using_added;
  for (std::size_t j = 0; j < out.paths.size(); ++j) {
    const Path& p = out.paths[j];
    if (std::find(p.begin(), p.end(), x) != p.end()) {
      through_x.push_back(j);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (contains(added, Edge(p[i], p[i + 1]))) {
        using_added.push_back(j);
        break;
      }
    }
  }
  if (through_x.size() > 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                std::to_string(through_x.size()) + " paths pass through " +
                    std::to_string(x));
  }
  if (using_added.empty()) {
    return out;
  }
  if (using_added.size() > 1 || through_x.empty()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "added edges used off the path through " + std::to_string(x));
  }

  Path& p = out.paths[using_added.front()];
  const std::size_t pos =
      static_cast<std::size_t>(std::find(p.begin(), p.end(), x) - p.begin());
  if (pos == 0 || pos + 1 >= p.size()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "contracted vertex " + std::to_string(x) + " is a terminal");
  }
  // Orient so that x_i follows x; `forward` records whether that matches the
  // stored direction of p.
  const bool forward = contains(added, Edge(x, p[pos + 1]));
  const Vertex w = forward ? p[pos - 1] : p[pos + 1];
  if (w != x && contains(neighbors_of_y, w)) {
    p[pos] = y;
  } else {
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(forward ? pos + 1 : pos),
             y);
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "rewired edge " + std::to_string(p[i]) + "-" +
                      std::to_string(p[i + 1]) + " is not in the graph");
    }
  }
  return out;
}

PathSystem menger_paths(const Graph& g, const TerminalPair& pair) {
  require_non_adjacent(g, pair);
  const std::size_t k = kappa_flow(g, pair).value();
  if (k == 0) {
    return {pair, {}};
  }

  Graph h = critical_spanning_subgraph(g, pair);
  VertexSet idle;
  for (Vertex w : h.vertices()) {
    if (w == pair.u || w == pair.v) {
      continue;
    }
    const std::size_t d = h.degree(w);
    if (d == 0) {
      idle.push_back(w);
    } else if (d == 1) {
      throw Error(ErrorKind::kCriticalityBroken,
                  "interior vertex " + std::to_string(w) +
                      " has degree 1 in an edge-critical subgraph");
    }
  }
  if (!idle.empty()) {
    h = delete_vertices(h, idle);
  }

  std::optional<Edge> interior;
  for (const Edge& e : h.edges()) {
    if (!e.has(pair.u) && !e.has(pair.v)) {
      interior = e;
      break;
    }
  }
  if (!interior) {
    return base_case_paths(h, pair);
  }

  const Vertex x = interior->a;
  const Vertex y = interior->b;
  Contraction contracted = contract_reduce(h, x, y);
  const std::size_t k_contracted =
      kappa_flow(contracted.graph, pair).value();
  if (k_contracted != k) {
    throw Error(ErrorKind::kKappaDroppedAfterContraction,
                "contracting " + std::to_string(x) + "-" + std::to_string(y) +
                    " changed connectivity " + std::to_string(k) + " -> " +
                    std::to_string(k_contracted));
  }
  const PathSystem inner = menger_paths(contracted.graph, pair);

  PathSystem lifted;
  try {
    lifted = lift_path_system(inner, x, y, h.neighbors(y), contracted.added, h);
  } catch (const Error& err) {
    throw Error(ErrorKind::kLiftFailed, err.what());
  }
  if (auto problem = validate_path_system(h, lifted)) {
    throw Error(ErrorKind::kLiftFailed, *problem);
  }
  if (lifted.size() != k) {
    throw Error(ErrorKind::kLiftFailed,
                "lifted " + std::to_string(lifted.size()) + " paths, expected " +
                    std::to_string(k));
  }
  return lifted;
}

}  // namespace menger
