#ifndef MENGER_EDGE_LIST_HPP
#define MENGER_EDGE_LIST_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "menger/graph.hpp"

namespace menger {

/// A graph whose canonical ids 0..n-1 carry the original vertex tokens, in
/// order of first appearance.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> tokens;

  std::optional<Vertex> find(std::string_view token) const;
  const std::string& token(Vertex w) const { return tokens.at(w); }
};

/// Line-oriented edge list. Blank lines and lines starting with '#' are
/// skipped; one token declares a vertex, two declare an edge. Any other line
/// (and a self-loop) throws kParse with the line number.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(std::string_view text);

/// Writes every vertex on its own line, in id order, then every edge. Parsing
/// the result reproduces the same token order and edge set. `header`, when
/// non-empty, becomes a leading comment line.
std::string serialize_edge_list(const LabeledGraph& g,
                                std::string_view header = {});

/// As above with decimal vertex ids as tokens.
std::string serialize_edge_list(const Graph& g, std::string_view header = {});

}  // namespace menger

#endif  // MENGER_EDGE_LIST_HPP
