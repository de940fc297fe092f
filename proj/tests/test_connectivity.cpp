#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "menger/connectivity.hpp"
#include "support.hpp"

using namespace menger;
using menger::testing::make;

namespace {

constexpr Vertex kU = 0, kV = 1, kA = 2, kB = 3, kC = 4, kD = 5, kX = 6,
                 kY = 7;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

// K5 on {u, v, a, b, c} without uv.
Graph k5_minus_uv() {
  return delete_edge(menger::testing::complete(5), Edge(0, 1));
}

// K4 on {u, v, x, y} without uv.
Graph k4_minus_uv() {
  return make({{kU, kX}, {kU, kY}, {kV, kX}, {kV, kY}, {kX, kY}});
}

std::vector<Graph> all_graphs(Vertex n) {
  std::vector<Graph> out;
  const int m = static_cast<int>(n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    out.push_back(menger::testing::from_mask(n, mask));
  }
  return out;
}

}  // namespace

TEST_CASE("Connectivity value type") {
  CHECK(Connectivity::finite(2) == Connectivity::finite(2));
  CHECK(Connectivity::finite(2) != Connectivity::unbounded());
  CHECK(Connectivity::unbounded().to_string() == "unbounded");
  CHECK_THROWS(Connectivity::unbounded().value());
}

TEST_CASE("SplitNetwork layout") {
  const Graph g = make({{kU, kA}, {kA, kV}, {kU, kB}});
  const SplitNetwork net(g, {kU, kV});
  // u and v keep one node, a and b are split.
  CHECK(net.num_nodes() == 6);
  CHECK(net.in_node(kU) == net.out_node(kU));
  CHECK(net.in_node(kA) != net.out_node(kA));
  std::size_t split_arcs = 0;
  for (std::size_t id = 0; id < net.arcs().size(); id += 2) {
    const auto& arc = net.arcs()[id];
    if (net.vertex_of(arc.from) == net.vertex_of(arc.to)) {
      CHECK(arc.capacity == 1);
      ++split_arcs;
    } else {
      CHECK(arc.capacity > 1);
    }
    CHECK(arc.to != net.source());
    CHECK(arc.from != net.sink());
  }
  CHECK(split_arcs == 2);
}

TEST_CASE("is_separator") {
  const Graph path = make({{kU, kA}, {kA, kV}});
  const Vertex a[] = {kA};
  CHECK(is_separator(path, {kU, kV}, a));
  CHECK_FALSE(is_separator(path, {kU, kV}, {}));

  const Graph c4 = make({{kU, kA}, {kA, kV}, {kV, kB}, {kB, kU}});
  CHECK_FALSE(is_separator(c4, {kU, kV}, a));

  const Vertex with_terminal[] = {kU};
  CHECK(kind_of([&] { is_separator(path, {kU, kV}, with_terminal); }) ==
        ErrorKind::kTerminalInSet);
  const Vertex unknown[] = {kD};
  CHECK(kind_of([&] { is_separator(path, {kU, kV}, unknown); }) ==
        ErrorKind::kUnknownVertex);
  CHECK_FALSE(is_separator(make({{kU, kV}}), {kU, kV}, {}));
}

TEST_CASE("kappa_bruteforce") {
  CHECK(kappa_bruteforce(make({{kU, kA}, {kA, kV}}), {kU, kV}) ==
        Connectivity::finite(1));
  CHECK(kappa_bruteforce(make({{kU, kA}, {kA, kV}, {kV, kB}, {kB, kU}}),
                         {kU, kV}) == Connectivity::finite(2));

  const Graph k5 = k5_minus_uv();
  REQUIRE(menger::testing::oracle_kappa(k5, 0, 1) == 3);
  CHECK(kappa_bruteforce(k5, {0, 1}) == Connectivity::finite(3));

  CHECK(kappa_bruteforce(make({{kU, kV}}), {kU, kV}).is_unbounded());
  CHECK(kind_of([&] { kappa_bruteforce(make({{kU, kV}}), {kU, kD}); }) ==
        ErrorKind::kUnknownVertex);
}

TEST_CASE("kappa_flow") {
  CHECK(kappa_flow(make({{kU, kA}, {kA, kV}}), {kU, kV}) ==
        Connectivity::finite(1));
  CHECK(kappa_flow(make({{kU, kA}}, {kV}), {kU, kV}) ==
        Connectivity::finite(0));
  CHECK(kappa_flow(make({{kU, kV}}), {kU, kV}).is_unbounded());

  const Graph p = menger::testing::petersen();
  for (Vertex s = 0; s < 10; ++s) {
    for (Vertex t = s + 1; t < 10; ++t) {
      if (p.has_edge(s, t)) {
        continue;
      }
      REQUIRE(menger::testing::oracle_kappa(p, s, t) == 3);
      CHECK(kappa_bruteforce(p, {s, t}) == Connectivity::finite(3));
      CHECK(kappa_flow(p, {s, t}) == Connectivity::finite(3));
    }
  }
}

TEST_CASE("kappa_at_least stops at the limit") {
  const Graph k5 = k5_minus_uv();
  CHECK(kappa_at_least(k5, {0, 1}, 3));
  CHECK_FALSE(kappa_at_least(k5, {0, 1}, 4));
  CHECK(kappa_at_least(k5, {0, 1}, 0));
}

TEST_CASE("min_vertex_cut") {
  const Graph path = make({{kU, kA}, {kA, kV}});
  CHECK(min_vertex_cut(path, {kU, kV}).members == VertexSet{kA});

  const Graph two = make({{kU, kA}, {kA, kV}, {kU, kB}, {kB, kV}});
  CHECK(min_vertex_cut(two, {kU, kV}).members == VertexSet{kA, kB});

  // C6 in the order u, a, b, v, c, d.
  const Graph c6 =
      make({{kU, kA}, {kA, kB}, {kB, kV}, {kV, kC}, {kC, kD}, {kD, kU}});
  const Separator s = min_vertex_cut(c6, {kU, kV});
  REQUIRE(s.members.size() == 2);
  CHECK(is_separator(c6, {kU, kV}, s.members));
  CHECK(kappa_bruteforce(c6, {kU, kV}) == Connectivity::finite(2));
  const bool left = s.members[0] == kA || s.members[0] == kB ||
                    s.members[1] == kA || s.members[1] == kB;
  const bool right = s.members[0] == kC || s.members[0] == kD ||
                     s.members[1] == kC || s.members[1] == kD;
  CHECK(left);
  CHECK(right);

  CHECK(kind_of([&] { min_vertex_cut(make({{kU, kV}}), {kU, kV}); }) ==
        ErrorKind::kAdjacentTerminals);
}

TEST_CASE("enumerate_minimum_separators") {
  const auto one = enumerate_minimum_separators(make({{kU, kA}, {kA, kV}}),
                                                {kU, kV});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].separator.members == VertexSet{kA});

  const auto two = enumerate_minimum_separators(
      make({{kU, kA}, {kA, kB}, {kB, kV}}), {kU, kV});
  REQUIRE(two.entries.size() == 2);
  CHECK(two.entries[0].separator.members == VertexSet{kA});
  CHECK(two.entries[1].separator.members == VertexSet{kB});
  CHECK(two.entries[0].induced.empty());

  // K4 minus uv: brute-force every interior subset to confirm uniqueness.
  const Graph k4 = k4_minus_uv();
  int oracle_count = 0;
  for (std::uint64_t mask = 0; mask < 4; ++mask) {
    std::vector<Vertex> s;
    if (mask & 1) s.push_back(kX);
    if (mask & 2) s.push_back(kY);
    if (s.size() == 2 && is_separator(k4, {kU, kV}, s)) {
      ++oracle_count;
    }
  }
  const auto k4_list = enumerate_minimum_separators(k4, {kU, kV});
  CHECK(oracle_count == 1);
  REQUIRE(k4_list.entries.size() == 1);
  CHECK(k4_list.entries[0].separator.members == VertexSet{kX, kY});
  CHECK(k4_list.entries[0].induced == EdgeSet{Edge(kX, kY)});

  const auto none = enumerate_minimum_separators(make({}, {kU, kV}), {kU, kV});
  CHECK(none.kappa == 0);
  REQUIRE(none.entries.size() == 1);
  CHECK(none.entries[0].separator.members.empty());

  CHECK(kind_of([&] {
          enumerate_minimum_separators(make({{kU, kV}}), {kU, kV});
        }) == ErrorKind::kAdjacentTerminals);
}

TEST_CASE("enumerate_minimum_separators truncates at the limit") {
  // Three parallel 2-edge routes of length 3 give 2^3 minimum separators.
  const Graph g = make({{kU, 10}, {10, 11}, {11, kV}, {kU, 12}, {12, 13},
                        {13, kV}, {kU, 14}, {14, 15}, {15, kV}});
  const auto all = enumerate_minimum_separators(g, {kU, kV});
  CHECK(all.entries.size() == 8);
  CHECK_FALSE(all.truncated);
  const auto some = enumerate_minimum_separators(g, {kU, kV}, 5);
  CHECK(some.entries.size() == 5);
  CHECK(some.truncated);
  const auto exact = enumerate_minimum_separators(g, {kU, kV}, 8);
  CHECK_FALSE(exact.truncated);
  for (std::size_t i = 1; i < all.entries.size(); ++i) {
    CHECK(all.entries[i - 1].separator.members <
          all.entries[i].separator.members);
  }
}

TEST_CASE("engines agree with each other and the oracle on all graphs n <= 6") {
  for (Vertex n = 2; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
          const Connectivity brute = kappa_bruteforce(g, {s, t});
          REQUIRE(brute == kappa_flow(g, {s, t}));
          if (n <= 5) {
            const int oracle = menger::testing::oracle_kappa(g, s, t);
            REQUIRE(brute == (oracle < 0 ? Connectivity::unbounded()
                                         : Connectivity::finite(oracle)));
          }
        }
      }
    }
  }
}

TEST_CASE("engines agree on random graphs with 7 and 8 vertices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4000; ++trial) {
    const Vertex n = 7 + trial % 2;
    const Graph g = menger::testing::from_mask(n, rng());
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        REQUIRE(kappa_bruteforce(g, {s, t}) == kappa_flow(g, {s, t}));
      }
    }
  }
}

TEST_CASE("separator properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const Vertex n = 4 + trial % 5;
    const Graph g = menger::testing::from_mask(n, rng() & rng());
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        const TerminalPair pair{s, t};
        if (g.has_edge(s, t)) {
          continue;
        }
        const std::size_t k = kappa_flow(g, pair).value();

        // Witness validity.
        const Separator cut = min_vertex_cut(g, pair);
        CHECK(cut.members.size() == k);
        CHECK(is_separator(g, pair, cut.members));

        // Every listed separator is minimum; no set of size k - 1 separates.
        const auto listing = enumerate_minimum_separators(g, pair);
        for (const auto& entry : listing.entries) {
          CHECK(entry.separator.members.size() == k);
          CHECK(is_separator(g, pair, entry.separator.members));
        }
        if (k > 0) {
          std::vector<Vertex> interior;
          for (Vertex w : g.vertices()) {
            if (w != s && w != t) interior.push_back(w);
          }
          for (std::uint64_t mask = 0;
               mask < (std::uint64_t{1} << interior.size()); ++mask) {
            if (std::popcount(mask) != static_cast<int>(k - 1)) continue;
            std::vector<Vertex> set;
            for (std::size_t i = 0; i < interior.size(); ++i) {
              if ((mask >> i) & 1) set.push_back(interior[i]);
            }
            CHECK_FALSE(is_separator(g, pair, set));
          }
        }

        // Deleting a vertex or edge moves kappa down by at most one.
        for (Vertex w : g.vertices()) {
          if (w == s || w == t) continue;
          const std::size_t after = kappa_flow(delete_vertex(g, w), pair).value();
          CHECK(after <= k);
          CHECK(after + 1 >= k);
        }
        for (const Edge& e : g.edges()) {
          const std::size_t after = kappa_flow(delete_edge(g, e), pair).value();
          CHECK(after <= k);
          CHECK(after + 1 >= k);
        }
      }
    }
  }
}
