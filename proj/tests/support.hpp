// Graph builders and independent oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms: union-find instead of
// DFS, bitmask subset sweeps instead of combination walks, explicit path
// listing instead of flows.
#ifndef MENGER_TESTS_SUPPORT_HPP
#define MENGER_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "menger/graph.hpp"

namespace menger::testing {

inline Graph make(std::initializer_list<std::pair<Vertex, Vertex>> edges,
                  std::initializer_list<Vertex> isolated = {}) {
  std::vector<std::pair<Vertex, Vertex>> pairs(edges);
  std::vector<Vertex> lone(isolated);
  return Graph::from_edge_list(pairs, lone);
}

inline Graph complete(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(pairs);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    pairs.emplace_back(i, i + 5);
  }
  return Graph::from_edge_list(pairs);
}

/// K_{m,n} with sides 0..m-1 and m..m+n-1.
inline Graph complete_bipartite(Vertex m, Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      pairs.emplace_back(i, m + j);
    }
  }
  return Graph::from_edge_list(pairs);
}

/// Cycle 0-1-...-(n-1)-0.
inline Graph cycle(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    pairs.emplace_back(i, (i + 1) % n);
  }
  return Graph::from_edge_list(pairs);
}

/// Labelled graph on 0..n-1 selected by an edge mask over (i, j), i < j, in
/// lexicographic order. Independent of the harness generator.
inline Graph from_mask(Vertex n, std::uint64_t mask) {
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edges(vs, edges);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      x = parent_[x] = parent_[parent_[x]];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Position of w in g.vertices() by linear scan.
inline std::size_t position(const Graph& g, Vertex w) {
  const auto& vs = g.vertices();
  return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), w) -
                                  vs.begin());
}

inline std::size_t oracle_component_count(const Graph& g) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) {
    uf.unite(position(g, e.a), position(g, e.b));
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    roots += uf.find(i) == i ? 1 : 0;
  }
  return roots;
}

/// u and v joined in g - removed, with removed a bitmask over positions.
inline bool oracle_joined(const Graph& g, Vertex u, Vertex v,
                          std::uint64_t removed) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) {
    const auto a = position(g, e.a);
    const auto b = position(g, e.b);
    if (((removed >> a) & 1) == 0 && ((removed >> b) & 1) == 0) {
      uf.unite(a, b);
    }
  }
  return uf.find(position(g, u)) == uf.find(position(g, v));
}

/// Minimum separator size over every subset of interior positions, or -1
/// when u and v are adjacent.
inline int oracle_kappa(const Graph& g, Vertex u, Vertex v) {
  if (g.has_edge(u, v)) {
    return -1;
  }
  const std::size_t n = g.num_vertices();
  const std::uint64_t terminals =
      (std::uint64_t{1} << position(g, u)) | (std::uint64_t{1} << position(g, v));
  int best = static_cast<int>(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask & terminals) {
      continue;
    }
    const int size = std::popcount(mask);
    if (size < best && !oracle_joined(g, u, v, mask)) {
      best = size;
    }
  }
  return best;
}

/// Every simple u-v path, as vertex sequences.
inline std::vector<std::vector<Vertex>> oracle_all_paths(const Graph& g,
                                                         Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current{u};
  std::function<void(Vertex)> walk = [&](Vertex at) {
    if (at == v) {
      out.push_back(current);
      return;
    }
    for (Vertex nb : g.neighbors(at)) {
      if (std::find(current.begin(), current.end(), nb) != current.end()) {
        continue;
      }
      current.push_back(nb);
      walk(nb);
      current.pop_back();
    }
  };
  walk(u);
  return out;
}

/// Maximum number of internally disjoint u-v paths by trying every
/// path family.
inline int oracle_mu(const Graph& g, Vertex u, Vertex v) {
  std::vector<std::uint64_t> interiors;
  for (const auto& p : oracle_all_paths(g, u, v)) {
    std::uint64_t m = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      m |= std::uint64_t{1} << position(g, p[i]);
    }
    interiors.push_back(m);
  }
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> pick =
      [&](std::size_t from, std::uint64_t used, int count) {
        best = std::max(best, count);
        for (std::size_t i = from; i < interiors.size(); ++i) {
          if ((interiors[i] & used) == 0) {
            pick(i + 1, used | interiors[i], count + 1);
          }
        }
      };
  pick(0, 0, 0);
  return best;
}

}  // namespace menger::testing

#endif  // MENGER_TESTS_SUPPORT_HPP
