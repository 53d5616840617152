#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "uenergy/enumerate.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/graph.hpp"

using namespace uenergy;

namespace {

oracle::EdgeList edge_list(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

int count_degree(const Graph& g, int d) {
  const auto deg = g.degrees();
  return static_cast<int>(std::count(deg.begin(), deg.end(), d));
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

} // namespace

TEST_CASE("cycles") {
  const Graph c4 = make_cycle(4);
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(count_degree(c4, 2) == 4);
  CHECK(make_cycle(3).size() == 3);
  CHECK_THROWS_AS(make_cycle(2), invalid_order);
}

TEST_CASE("paths") {
  CHECK(make_path(1).size() == 0);
  CHECK(make_path(2).size() == 1);
  CHECK(make_path(5).degrees() == std::vector<int>{1, 2, 2, 2, 1});
  CHECK_THROWS_AS(make_path(0), invalid_order);
}

TEST_CASE("lollipops") {
  const Graph g = make_lollipop(7, 6);
  CHECK(g.order() == 7);
  CHECK(g.size() == 7);
  CHECK(count_degree(g, 3) == 1);
  CHECK(count_degree(g, 1) == 1);

  const Graph p43 = make_lollipop(4, 3);
  CHECK(p43.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(make_lollipop(6, 6) == make_cycle(6));
  CHECK_THROWS_AS(make_lollipop(5, 2), invalid_parameters);
  CHECK_THROWS_AS(make_lollipop(5, 6), invalid_parameters);

  for (int n = 3; n <= 14; ++n)
    for (int l = 3; l <= n; ++l) {
      const Graph h = make_lollipop(n, l);
      CHECK(h.connected());
      CHECK(h.size() == static_cast<std::size_t>(n));
      REQUIRE(unique_cycle(h).has_value());
      CHECK(unique_cycle(h)->size() == static_cast<std::size_t>(l));
    }
}

TEST_CASE("cycle with pendants") {
  const std::vector<int> a{2, 0, 0, 0};
  const Graph g = make_cycle_with_pendants(6, 4, a);
  CHECK(g.order() == 6);
  CHECK(g.size() == 6);
  CHECK(g.degree(0) == 4);

  const std::vector<int> b{1, 0, 0};
  CHECK(make_cycle_with_pendants(4, 3, b) == make_lollipop(4, 3));

  const std::vector<int> bad{1, 1, 0};
  CHECK_THROWS_AS(make_cycle_with_pendants(5, 4, bad), invalid_parameters);
  const std::vector<int> bad_sum{1, 1, 0, 0};
  CHECK_THROWS_AS(make_cycle_with_pendants(5, 4, bad_sum), invalid_parameters);

  // every split of the pendants leaves exactly n - l leaves
  for (int n = 4; n <= 9; ++n)
    for (int l = 3; l < n; ++l) {
      std::vector<int> att(l, 0);
      for (int k = 0; k < n - l; ++k) ++att[(k * 7) % l];
      const Graph h = make_cycle_with_pendants(n, l, att);
      CHECK(count_degree(h, 1) == n - l);
      CHECK(unique_cycle(h)->size() == static_cast<std::size_t>(l));
    }
}

TEST_CASE("graph construction rejects malformed edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), invalid_parameters);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), invalid_parameters);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), invalid_parameters);
}

TEST_CASE("unique cycle") {
  CHECK(unique_cycle(make_lollipop(7, 6))->size() == 6);
  CHECK_FALSE(unique_cycle(make_path(5)).has_value());
  const auto c9 = unique_cycle(make_cycle(9));
  REQUIRE(c9.has_value());
  std::vector<int> sorted = *c9;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  // traversal order: consecutive entries adjacent
  const Graph c9g = make_cycle(9);
  for (std::size_t i = 0; i < c9->size(); ++i) CHECK(c9g.adjacent((*c9)[i], (*c9)[(i + 1) % c9->size()]));
  // two cycles: not unicyclic
  CHECK_FALSE(unique_cycle(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}})).has_value());
}

TEST_CASE("graph6 against the reference encoder") {
  const Graph c5 = make_cycle(5);
  CHECK(format_graph6(c5) == oracle::graph6_encode(5, edge_list(c5)));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 30;
    const Graph g = random_graph(n, 0.3, rng);
    CHECK(format_graph6(g) == oracle::graph6_encode(n, edge_list(g)));
  }
}

TEST_CASE("graph6 round trips") {
  const Graph c4 = make_cycle(4);
  const Graph back = parse_graph6(format_graph6(c4));
  CHECK(back.order() == 4);
  CHECK(count_degree(back, 2) == 4);

  for (int n = 3; n <= 7; ++n)
    for (const auto& [code, g] : unicyclic_graphs(n)) {
      const std::string s = format_graph6(g);
      CHECK(parse_graph6(s) == g);
      CHECK(format_graph6(parse_graph6(s)) == s);
    }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(trial % 62 + 1, 0.2, rng);
    CHECK(parse_graph6(format_graph6(g)) == g);
  }
  CHECK(parse_graph6(">>graph6<<" + format_graph6(c4)) == c4);
}

TEST_CASE("graph6 parse errors carry offsets") {
  auto offset_of = [](const std::string& s) -> long {
    try {
      parse_graph6(s);
    } catch (const parse_error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  const std::string c5 = format_graph6(make_cycle(5));
  CHECK(offset_of(c5 + "?") >= 0);              // too long
  CHECK(offset_of(c5.substr(0, 1)) >= 0);       // too short
  CHECK(offset_of(std::string("~??")) == 0);    // order > 62 is not supported
  std::string bad = c5;
  bad[1] = ' ';
  CHECK(offset_of(bad) == 1);                   // byte outside 63..126
  // C_3 uses 3 of the 6 bits; setting a padding bit is rejected
  std::string pad = format_graph6(make_cycle(3));
  pad[1] = static_cast<char>(pad[1] + 1);
  CHECK(offset_of(pad) == 1);
  CHECK(offset_of("") == 0);
}

TEST_CASE("graph queries") {
  const Graph g = make_lollipop(6, 4);
  CHECK(g.is_unicyclic());
  CHECK_FALSE(make_path(5).is_unicyclic());
  CHECK(make_path(5).is_forest());
  const std::vector<int> removed{0};
  const Graph h = g.without_vertices(removed);
  CHECK(h.order() == 5);
  CHECK(h.is_forest());
  CHECK(h.components().size() == 2);
  CHECK(g.without_edge(0, 1).is_forest());
}
