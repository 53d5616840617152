#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "uenergy/enumerate.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/tree_code.hpp"

using namespace uenergy;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

} // namespace

TEST_CASE("rooted trees against brute force") {
  for (int k = 1; k <= 8; ++k) {
    const auto trees = rooted_trees(k);
    CHECK(trees.size() == oracle::count_rooted_trees_bruteforce(k));
    std::set<LevelSequence> unique(trees.begin(), trees.end());
    CHECK(unique.size() == trees.size());
  }
  CHECK(rooted_trees(9).size() == 286);
  CHECK(rooted_trees(4).front() == LevelSequence{1, 2, 3, 4});
  CHECK(rooted_trees(4).back() == LevelSequence{1, 2, 2, 2});
}

TEST_CASE("level sequences are canonical") {
  // a star rooted at a leaf and at the centre
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_level_sequence(star, 0) == LevelSequence{1, 2, 2, 2});
  CHECK(canonical_level_sequence(star, 1) == LevelSequence{1, 2, 3, 3});
  CHECK(level_sequence_parents({1, 2, 3, 2}) == std::vector<int>{-1, 0, 1, 0});
  CHECK(level_sequence_key({1, 2, 3, 2}) == "1232");
  CHECK(free_tree_code(make_path(5)) == free_tree_code(Graph(5, {{2, 0}, {0, 1}, {1, 3}, {3, 4}})));
}

TEST_CASE("counts against brute force") {
  const long long expected[] = {1, 2, 5, 13, 33, 89};
  for (int n = 3; n <= 8; ++n) {
    CHECK(count_unicyclic(n) == expected[n - 3]);
    CHECK(count_unicyclic(n) == oracle::count_unicyclic_bruteforce(n));
  }
  CHECK(count_unicyclic(9) == 240);
  CHECK(count_unicyclic(10) == 657);
  CHECK_THROWS_AS(count_unicyclic(2), invalid_order);
}

TEST_CASE("enumeration is duplicate free and sound") {
  for (int n = 3; n <= 9; ++n) {
    std::set<UnicyclicCode> codes;
    std::set<std::string> g6;
    UnicyclicCode prev;
    bool first = true;
    for_each_unicyclic(n, [&](const UnicyclicCode& code, const Graph& g) {
      CHECK(g.order() == n);
      CHECK(g.is_unicyclic());
      CHECK(unique_cycle(g)->size() == static_cast<std::size_t>(code.cycle_length));
      CHECK(unicyclic_code(g) == code);
      CHECK(code.order() == n);
      if (!first) CHECK(prev < code);
      prev = code;
      first = false;
      codes.insert(code);
      g6.insert(format_graph6(g));
    });
    CHECK(static_cast<std::int64_t>(codes.size()) == count_unicyclic(n));
    CHECK(g6.size() == codes.size());
  }
}

TEST_CASE("codes are invariant under relabelling") {
  std::mt19937 rng(23);
  for (int n = 4; n <= 9; ++n)
    for (const auto& [code, g] : unicyclic_graphs(n)) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(unicyclic_code(relabel(g, perm)) == code);
    }
  CHECK_THROWS_AS(unicyclic_code(make_path(5)), domain_error);
}

TEST_CASE("codes of named graphs") {
  CHECK(unicyclic_code(make_lollipop(5, 4)).to_string() == "4|1|1|1|12");
  CHECK(code_spec(unicyclic_code(make_cycle(7))) == "C:7");
  CHECK(code_spec(unicyclic_code(make_lollipop(8, 6))) == "L:8:6");
  CHECK(code_spec(unicyclic_code(make_lollipop(4, 3))) == "L:4:3");
  const std::vector<int> two_tails{1, 0, 1, 0};
  const auto spec = code_spec(unicyclic_code(make_cycle_with_pendants(6, 4, two_tails)));
  CHECK(spec.starts_with("CP:6:4:"));
  CHECK(normalize_necklace({{1}, {1, 2}, {1}}) == normalize_necklace({{1, 2}, {1}, {1}}));
  CHECK(unicyclic_code(realize(unicyclic_code(make_lollipop(9, 5)))) == unicyclic_code(make_lollipop(9, 5)));
}

TEST_CASE("maximal energy at small orders") {
  const char* winners[] = {"C:3", "L:4:3", "C:5", "C:6", "C:7", "L:8:6", "C:9", "C:10"};
  for (int n = 3; n <= 10; ++n) {
    const SearchReport r = max_energy_search(n, 3);
    CHECK(r.graphs == count_unicyclic(n));
    REQUIRE_FALSE(r.ranking.empty());
    CHECK(code_spec(r.ranking.front().code) == winners[n - 3]);
    CHECK_FALSE(r.ranking.front().tied);
    for (std::size_t i = 1; i < r.ranking.size(); ++i)
      CHECK(r.ranking[i - 1].energy.value >= r.ranking[i].energy.value - 1e-9);
  }
  const SearchReport r4 = max_energy_search(4, 5);
  CHECK(r4.ranking.size() == 2);
  CHECK(code_spec(r4.ranking[1].code) == "C:4");
}

TEST_CASE("search reports do not depend on the worker count") {
  const SearchReport a = max_energy_search(9, 5, default_energy_tol, 1);
  const SearchReport b = max_energy_search(9, 5, default_energy_tol, 3);
  REQUIRE(a.ranking.size() == b.ranking.size());
  for (std::size_t i = 0; i < a.ranking.size(); ++i) {
    CHECK(a.ranking[i].code == b.ranking[i].code);
    CHECK(a.ranking[i].energy.value == b.ranking[i].energy.value);
    CHECK(a.ranking[i].tied == b.ranking[i].tied);
  }
  CHECK(a.ties == b.ties);
}

TEST_CASE("cycle lengths present at order 12") {
  std::set<int> lengths;
  for_each_unicyclic(12, [&](const UnicyclicCode& code, const Graph&) { lengths.insert(code.cycle_length); });
  CHECK(lengths.count(4));
  CHECK(lengths.count(8));
  CHECK(lengths.size() == 10);
}
