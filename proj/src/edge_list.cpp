#include "menger/edge_list.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace menger {

std::optional<Vertex> LabeledGraph::find(std::string_view token) const {
  auto it = std::find(tokens.begin(), tokens.end(), token);
  if (it == tokens.end()) {
    return std::nullopt;
  }
  return static_cast<Vertex>(it - tokens.begin());
}

LabeledGraph parse_edge_list(std::istream& in) {
  LabeledGraph out;
  std::map<std::string, Vertex, std::less<>> ids;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] =
        ids.emplace(token, static_cast<Vertex>(out.tokens.size()));
    if (inserted) {
      out.tokens.push_back(token);
    }
    return it->second;
  };

  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) {
      tokens.push_back(std::move(t));
    }
    if (tokens.empty() || tokens.front().front() == '#') {
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    if (tokens.size() > 2) {
      throw Error(ErrorKind::kParse,
                  where + ": expected 1 or 2 tokens, got " +
                      std::to_string(tokens.size()));
    }
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorKind::kParse, where + ": self-loop on " + tokens[0]);
    }
    const Vertex a = intern(tokens[0]);
    const Vertex b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }

  std::vector<Vertex> vertices(out.tokens.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    vertices[i] = static_cast<Vertex>(i);
  }
  out.graph = Graph::from_edges(vertices, edges);
  return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

namespace {

template <typename TokenOf>
std::string write(const Graph& g, std::string_view header, TokenOf token_of) {
  std::string out;
  if (!header.empty()) {
    out += "# ";
    out += header;
    out += '\n';
  }
  for (Vertex w : g.vertices()) {
    out += token_of(w);
    out += '\n';
  }
  for (const Edge& e : g.edges()) {
    out += token_of(e.a);
    out += ' ';
    out += token_of(e.b);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string serialize_edge_list(const LabeledGraph& g,
                                std::string_view header) {
  return write(g.graph, header, [&](Vertex w) { return g.token(w); });
}

std::string serialize_edge_list(const Graph& g, std::string_view header) {
  return write(g, header, [](Vertex w) { return std::to_string(w); });
}

}  // namespace menger
