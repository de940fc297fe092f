#include "menger/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace menger {

namespace {

constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kBruteForceInteriorCap = 30;

// Advances `combo` (strictly increasing indices below n) to the next
// combination of the same size in lexicographic order.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> interior_indices(const Graph& g,
                                          const TerminalPair& pair) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const Vertex w = g.vertices()[i];
    if (w != pair.u && w != pair.v) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::size_t Connectivity::value() const {
  if (!value_) {
    throw std::logic_error("connectivity is unbounded");
  }
  return *value_;
}

std::string Connectivity::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("unbounded");
}

SplitNetwork::SplitNetwork(const Graph& g, const TerminalPair& pair)
    : vertices_(g.vertices()),
      in_of_(g.num_vertices(), kNoNode),
      out_of_(g.num_vertices(), kNoNode) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const Vertex w = g.vertices()[i];
    if (w == pair.u || w == pair.v) {
      in_of_[i] = out_of_[i] = node_vertex_.size();
      node_vertex_.push_back(w);
    } else {
      in_of_[i] = node_vertex_.size();
      node_vertex_.push_back(w);
      out_of_[i] = node_vertex_.size();
      node_vertex_.push_back(w);
    }
  }
  out_arcs_.resize(node_vertex_.size());
  source_ = in_of_[*g.index_of(pair.u)];
  sink_ = in_of_[*g.index_of(pair.v)];

  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (in_of_[i] != out_of_[i]) {
      add_arc(in_of_[i], out_of_[i], 1);
    }
  }
  // Edge arcs never bind, so every minimum cut consists of split arcs.
  const int edge_capacity = static_cast<int>(g.num_vertices()) + 1;
  for (const Edge& e : g.edges()) {
    const std::size_t ia = *g.index_of(e.a);
    const std::size_t ib = *g.index_of(e.b);
    for (auto [from, to] : {std::pair{ia, ib}, std::pair{ib, ia}}) {
      const std::size_t tail = out_of_[from];
      const std::size_t head = in_of_[to];
      // Arcs into the source or out of the sink never carry flow.
      if (head == source_ || tail == sink_) {
        continue;
      }
      add_arc(tail, head, edge_capacity);
    }
  }
}

void SplitNetwork::add_arc(std::size_t from, std::size_t to, int capacity) {
  out_arcs_[from].push_back(arcs_.size());
  arcs_.push_back({from, to, capacity, 0});
  out_arcs_[to].push_back(arcs_.size());
  arcs_.push_back({to, from, 0, 0});
}

std::size_t SplitNetwork::index_of(Vertex w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (it == vertices_.end() || *it != w) {
    throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(w));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t SplitNetwork::in_node(Vertex w) const {
  return in_of_[index_of(w)];
}

std::size_t SplitNetwork::out_node(Vertex w) const {
  return out_of_[index_of(w)];
}

std::size_t SplitNetwork::max_flow(std::size_t limit) {
  const std::size_t n = num_nodes();
  std::vector<std::size_t> parent_arc(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  while (flow_value_ < limit) {
    std::fill(parent_arc.begin(), parent_arc.end(), kNoNode);
    queue.clear();
    queue.push_back(source_);
    parent_arc[source_] = arcs_.size();  // marks visited
    for (std::size_t head = 0;
         head < queue.size() && parent_arc[sink_] == kNoNode; ++head) {
      const std::size_t node = queue[head];
      for (std::size_t id : out_arcs_[node]) {
        const Arc& arc = arcs_[id];
        if (arc.capacity - arc.flow > 0 && parent_arc[arc.to] == kNoNode) {
          parent_arc[arc.to] = id;
          queue.push_back(arc.to);
        }
      }
    }
    if (parent_arc[sink_] == kNoNode) {
      break;
    }
    for (std::size_t node = sink_; node != source_;) {
      const std::size_t id = parent_arc[node];
      arcs_[id].flow += 1;
      arcs_[id ^ 1].flow -= 1;
      node = arcs_[id].from;
    }
    ++flow_value_;
  }
  return flow_value_;
}

std::vector<char> SplitNetwork::residual_reachable() const {
  std::vector<char> seen(num_nodes(), 0);
  std::vector<std::size_t> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t id : out_arcs_[node]) {
      const Arc& arc = arcs_[id];
      if (arc.capacity - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

std::vector<Path> SplitNetwork::decompose() const {
  std::vector<int> remaining(arcs_.size(), 0);
  for (std::size_t id = 0; id < arcs_.size(); id += 2) {
    remaining[id] = arcs_[id].flow;
  }
  auto take = [&](std::size_t node) -> std::size_t {
    for (std::size_t id : out_arcs_[node]) {
      if (id % 2 == 0 && remaining[id] > 0) {
        remaining[id] -= 1;
        return arcs_[id].to;
      }
    }
    return kNoNode;
  };

  std::vector<Path> paths;
  for (;;) {
    std::size_t node = take(source_);
    if (node == kNoNode) {
      break;
    }
    Path path{node_vertex_[source_]};
    // Vertex capacity 1 keeps every walk simple and cycle-free.
    while (node != kNoNode) {
      if (node_vertex_[node] != path.back()) {
        path.push_back(node_vertex_[node]);
      }
      if (node == sink_) {
        break;
      }
      node = take(node);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

void require_pair(const Graph& g, const TerminalPair& pair) {
  for (Vertex w : {pair.u, pair.v}) {
    if (!g.has_vertex(w)) {
      throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(w));
    }
  }
  if (pair.u == pair.v) {
    throw Error(ErrorKind::kPreconditionViolated,
                "terminals must be distinct");
  }
}

void require_non_adjacent(const Graph& g, const TerminalPair& pair) {
  require_pair(g, pair);
  if (g.has_edge(pair.u, pair.v)) {
    throw Error(ErrorKind::kAdjacentTerminals,
                std::to_string(pair.u) + "-" + std::to_string(pair.v));
  }
}

bool is_separator(const Graph& g, const TerminalPair& pair,
                  std::span<const Vertex> s) {
  require_pair(g, pair);
  std::vector<char> removed(g.num_vertices(), 0);
  for (Vertex w : s) {
    auto idx = g.index_of(w);
    if (!idx) {
      throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(w));
    }
    if (w == pair.u || w == pair.v) {
      throw Error(ErrorKind::kTerminalInSet, "vertex " + std::to_string(w));
    }
    removed[*idx] = 1;
  }
  if (g.has_edge(pair.u, pair.v)) {
    return false;
  }
  return !connected_avoiding(g, *g.index_of(pair.u), *g.index_of(pair.v),
                             removed);
}

Connectivity kappa_bruteforce(const Graph& g, const TerminalPair& pair) {
  require_pair(g, pair);
  if (g.has_edge(pair.u, pair.v)) {
    return Connectivity::unbounded();
  }
  const auto interior = interior_indices(g, pair);
  const std::size_t m = interior.size();
  if (m > kBruteForceInteriorCap) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(m) + " interior vertices");
  }
  const std::size_t iu = *g.index_of(pair.u);
  const std::size_t iv = *g.index_of(pair.v);
  std::vector<char> removed(g.num_vertices(), 0);
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t i = 0; i < size; ++i) {
      combo[i] = i;
    }
    do {
      std::fill(removed.begin(), removed.end(), 0);
      for (std::size_t c : combo) {
        removed[interior[c]] = 1;
      }
      if (!connected_avoiding(g, iu, iv, removed)) {
        return Connectivity::finite(size);
      }
    } while (next_combination(combo, m));
  }
  // Removing every interior vertex always separates a non-adjacent pair.
  throw std::logic_error("kappa_bruteforce: no separator found");
}

Connectivity kappa_flow(const Graph& g, const TerminalPair& pair) {
  require_pair(g, pair);
  if (g.has_edge(pair.u, pair.v)) {
    return Connectivity::unbounded();
  }
  SplitNetwork net(g, pair);
  return Connectivity::finite(net.max_flow());
}

bool kappa_at_least(const Graph& g, const TerminalPair& pair, std::size_t k) {
  require_non_adjacent(g, pair);
  SplitNetwork net(g, pair);
  return net.max_flow(k) >= k;
}

Separator min_vertex_cut(const Graph& g, const TerminalPair& pair) {
  require_non_adjacent(g, pair);
  SplitNetwork net(g, pair);
  net.max_flow();
  const auto reach = net.residual_reachable();
  Separator out{{}, pair};
  for (Vertex w : g.vertices()) {
    if (w == pair.u || w == pair.v) {
      continue;
    }
    if (reach[net.in_node(w)] && !reach[net.out_node(w)]) {
      out.members.push_back(w);
    }
  }
  return out;
}

SeparatorListing enumerate_minimum_separators(const Graph& g,
                                              const TerminalPair& pair,
                                              std::size_t limit) {
  require_non_adjacent(g, pair);
  SeparatorListing out;
  out.kappa = kappa_flow(g, pair).value();
  const auto interior = interior_indices(g, pair);
  const std::size_t m = interior.size();
  const std::size_t k = out.kappa;
  const std::size_t iu = *g.index_of(pair.u);
  const std::size_t iv = *g.index_of(pair.v);

  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) {
    combo[i] = i;
  }
  std::vector<char> removed(g.num_vertices(), 0);
  do {
    std::fill(removed.begin(), removed.end(), 0);
    for (std::size_t c : combo) {
      removed[interior[c]] = 1;
    }
    if (connected_avoiding(g, iu, iv, removed)) {
      continue;
    }
    if (out.entries.size() == limit) {
      out.truncated = true;
      break;
    }
    Separator sep{{}, pair};
    for (std::size_t c : combo) {
      sep.members.push_back(g.vertices()[interior[c]]);
    }
    EdgeSet induced = induced_edges(g, sep.members);
    out.entries.push_back({std::move(sep), std::move(induced)});
  } while (k > 0 && next_combination(combo, m));
  return out;
}

}  // namespace menger
