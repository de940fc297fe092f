#include "menger/graph.hpp"

#include <algorithm>
#include <string>

namespace menger {

namespace {

void sort_unique(std::vector<Vertex>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::string vertex_name(Vertex w) { return "vertex " + std::to_string(w); }

std::string edge_name(const Edge& e) {
  return "edge " + std::to_string(e.a) + "-" + std::to_string(e.b);
}

}  // namespace

Graph Graph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                            std::span<const Vertex> isolated) {
  VertexSet vertices(isolated.begin(), isolated.end());
  EdgeSet edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw Error(ErrorKind::kSelfLoop, vertex_name(a));
    }
    vertices.push_back(a);
    vertices.push_back(b);
    edges.emplace_back(a, b);
  }
  sort_unique(vertices);
  return from_edges(vertices, edges);
}

Graph Graph::from_edges(std::span<const Vertex> vertices,
                        std::span<const Edge> edges) {
  Graph g;
  g.vertices_.assign(vertices.begin(), vertices.end());
  sort_unique(g.vertices_);
  g.adjacency_.resize(g.vertices_.size());
  for (const Edge& e : edges) {
    if (e.a == e.b) {
      throw Error(ErrorKind::kSelfLoop, vertex_name(e.a));
    }
    const std::size_t ia = g.require(e.a);
    const std::size_t ib = g.require(e.b);
    g.adjacency_[ia].push_back(e.b);
    g.adjacency_[ib].push_back(e.a);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    sort_unique(nbrs);
    degree_sum += nbrs.size();
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

std::optional<std::size_t> Graph::index_of(Vertex w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (it == vertices_.end() || *it != w) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::require(Vertex w) const {
  auto idx = index_of(w);
  if (!idx) {
    throw Error(ErrorKind::kUnknownVertex, vertex_name(w));
  }
  return *idx;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  auto ia = index_of(a);
  if (!ia) {
    return false;
  }
  const auto& nbrs = adjacency_[*ia];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

const VertexSet& Graph::neighbors(Vertex w) const {
  return adjacency_[require(w)];
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex a = vertices_[i];
    for (Vertex b : adjacency_[i]) {
      if (a < b) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> ws) {
  VertexSet gone(ws.begin(), ws.end());
  sort_unique(gone);
  for (Vertex w : gone) {
    if (!g.has_vertex(w)) {
      throw Error(ErrorKind::kUnknownVertex, vertex_name(w));
    }
  }
  auto removed = [&](Vertex w) {
    return std::binary_search(gone.begin(), gone.end(), w);
  };
  VertexSet kept;
  kept.reserve(g.num_vertices());
  for (Vertex w : g.vertices()) {
    if (!removed(w)) {
      kept.push_back(w);
    }
  }
  EdgeSet edges;
  for (const Edge& e : g.edges()) {
    if (!removed(e.a) && !removed(e.b)) {
      edges.push_back(e);
    }
  }
  return Graph::from_edges(kept, edges);
}

Graph delete_vertex(const Graph& g, Vertex w) {
  const Vertex ws[] = {w};
  return delete_vertices(g, ws);
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorKind::kUnknownEdge, edge_name(e));
  }
  EdgeSet edges = g.edges();
  edges.erase(std::find(edges.begin(), edges.end(), e));
  return Graph::from_edges(g.vertices(), edges);
}

VertexSet neighbors(const Graph& g, Vertex w) { return g.neighbors(w); }

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<std::size_t> stack;
  // vertices() is sorted, so the first unseen vertex is the smallest member
  // of its component and components come out already ordered.
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    VertexSet block;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      block.push_back(g.vertices()[i]);
      for (Vertex nb : g.neighbors_at(i)) {
        const std::size_t j = *g.index_of(nb);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_bridge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorKind::kUnknownEdge, edge_name(e));
  }
  // e is a bridge iff its endpoints fall apart once e is gone.
  const Graph h = delete_edge(g, e);
  std::vector<char> none(h.num_vertices(), 0);
  return !connected_avoiding(h, *h.index_of(e.a), *h.index_of(e.b), none);
}

EdgeSet induced_edges(const Graph& g, std::span<const Vertex> s) {
  VertexSet members(s.begin(), s.end());
  sort_unique(members);
  for (Vertex w : members) {
    if (!g.has_vertex(w)) {
      throw Error(ErrorKind::kUnknownVertex, vertex_name(w));
    }
  }
  EdgeSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.has_edge(members[i], members[j])) {
        out.emplace_back(members[i], members[j]);
      }
    }
  }
  return out;
}

Contraction contract_reduce(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) {
    throw Error(ErrorKind::kUnknownEdge, edge_name(Edge(x, y)));
  }
  Contraction out;
  for (Vertex xi : g.neighbors(y)) {
    if (xi != x && !g.has_edge(x, xi)) {
      out.added.emplace_back(x, xi);
    }
  }
  std::sort(out.added.begin(), out.added.end());

  VertexSet kept;
  kept.reserve(g.num_vertices() - 1);
  for (Vertex w : g.vertices()) {
    if (w != y) {
      kept.push_back(w);
    }
  }
  EdgeSet edges;
  edges.reserve(g.num_edges() + out.added.size());
  for (const Edge& e : g.edges()) {
    if (!e.has(y)) {
      edges.push_back(e);
    }
  }
  edges.insert(edges.end(), out.added.begin(), out.added.end());
  out.graph = Graph::from_edges(kept, edges);
  return out;
}

bool connected_avoiding(const Graph& g, std::size_t u_index,
                        std::size_t v_index, const std::vector<char>& removed) {
  if (removed[u_index] || removed[v_index]) {
    return false;
  }
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<std::size_t> stack{u_index};
  seen[u_index] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (i == v_index) {
      return true;
    }
    for (Vertex nb : g.neighbors_at(i)) {
      const std::size_t j = *g.index_of(nb);
      if (!seen[j] && !removed[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return false;
}

}  // namespace menger
