#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>
#include <string>

#include "menger/edge_list.hpp"
#include "support.hpp"

using namespace menger;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

// Token-level edge set, independent of the canonical ids.
std::set<std::pair<std::string, std::string>> token_edges(
    const LabeledGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.graph.edges()) {
    auto a = g.token(e.a);
    auto b = g.token(e.b);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("parse_edge_list basics") {
  const LabeledGraph g = parse_edge_list("# square\nu a\n\na v\nv b\nb u\n");
  CHECK(g.graph.num_vertices() == 4);
  CHECK(g.graph.num_edges() == 4);
  CHECK(g.tokens == std::vector<std::string>{"u", "a", "v", "b"});
  CHECK(g.find("v") == Vertex{2});
  CHECK_FALSE(g.find("z").has_value());

  SUBCASE("single token declares an isolated vertex") {
    const LabeledGraph h = parse_edge_list("x\ny z\n");
    CHECK(h.graph.num_vertices() == 3);
    CHECK(h.graph.degree(*h.find("x")) == 0);
  }
  SUBCASE("duplicates and reversed edges collapse") {
    const LabeledGraph h = parse_edge_list("a b\nb a\na b\n");
    CHECK(h.graph.num_edges() == 1);
  }
  SUBCASE("surrounding whitespace and tabs") {
    const LabeledGraph h = parse_edge_list("  a\tb  \n\t\n");
    CHECK(h.graph.num_edges() == 1);
  }
  SUBCASE("empty input") {
    CHECK(parse_edge_list("").graph.num_vertices() == 0);
  }
  SUBCASE("stream overload") {
    std::istringstream in("p q\n");
    CHECK(parse_edge_list(in).graph.num_edges() == 1);
  }
}

TEST_CASE("parse_edge_list errors carry the line number") {
  CHECK(parse_error("a b\na b c\n").find("line 2") != std::string::npos);
  CHECK(parse_error("# c\n\nq q\n").find("line 3") != std::string::npos);
}

TEST_CASE("serialize_edge_list") {
  const LabeledGraph g = parse_edge_list("b c\nlone\nc a\n");
  const std::string text = serialize_edge_list(g, "hello");
  CHECK(text == "# hello\nb\nc\nlone\na\nb c\nc a\n");
  CHECK(serialize_edge_list(menger::testing::make({{0, 2}}, {1})) ==
        "0\n1\n2\n0 2\n");
}

TEST_CASE("round trip keeps tokens, isolated vertices and edges") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::string text;
    std::set<std::pair<std::string, std::string>> expected;
    std::set<std::string> expected_vertices;
    auto name = [&](int i) { return "v" + std::to_string(i * 7 % 31); };
    const int lines = static_cast<int>(rng() % 20);
    for (int line = 0; line < lines; ++line) {
      switch (rng() % 5) {
        case 0:
          text += "# comment " + std::to_string(line) + "\n";
          break;
        case 1: {
          const std::string a = name(static_cast<int>(rng() % n));
          text += a + "\n";
          expected_vertices.insert(a);
          break;
        }
        default: {
          std::string a = name(static_cast<int>(rng() % n));
          std::string b = name(static_cast<int>(rng() % n));
          if (a == b) break;
          text += a + " " + b + "\n";
          if (rng() % 3 == 0) text += b + " " + a + "\n";  // duplicate
          expected_vertices.insert(a);
          expected_vertices.insert(b);
          if (b < a) std::swap(a, b);
          expected.emplace(a, b);
        }
      }
    }
    const LabeledGraph first = parse_edge_list(text);
    CHECK(token_edges(first) == expected);
    CHECK(std::set<std::string>(first.tokens.begin(), first.tokens.end()) ==
          expected_vertices);

    const LabeledGraph second = parse_edge_list(serialize_edge_list(first));
    CHECK(second.tokens == first.tokens);
    CHECK(second.graph == first.graph);
  }
}
