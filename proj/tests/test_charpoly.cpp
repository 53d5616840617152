#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "uenergy/charpoly.hpp"
#include "uenergy/enumerate.hpp"
#include "uenergy/errors.hpp"

using namespace uenergy;

namespace {

const IntPolynomial X = IntPolynomial::x();

Graph random_tree(int n, std::mt19937& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, e);
}

} // namespace

TEST_CASE("small characteristic polynomials") {
  CHECK(charpoly(make_cycle(3)) == IntPolynomial{-2, -3, 0, 1});
  CHECK(charpoly(make_lollipop(8, 6)) == IntPolynomial{4, 0, -16, 0, 19, 0, -8, 0, 1});
  CHECK(charpoly(make_lollipop(7, 6)) == IntPolynomial{0, -7, 0, 13, 0, -7, 0, 1});
  CHECK(charpoly(make_lollipop(4, 3)) == IntPolynomial{1, -2, -4, 0, 1});
  CHECK(charpoly_general_reference(make_cycle(4)) == IntPolynomial{0, 0, -4, 0, 1});
  CHECK(charpoly(Graph(0, {})) == IntPolynomial{1});
  CHECK(charpoly(Graph(3, {})) == IntPolynomial{0, 0, 0, 1});
}

TEST_CASE("recurrences agree with the reference on cycles and lollipops") {
  for (int n = 3; n <= 12; ++n) CHECK(charpoly(make_cycle(n)) == charpoly_general_reference(make_cycle(n)));
  for (int n = 3; n <= 16; ++n)
    for (int l = 3; l <= n; ++l)
      CHECK(charpoly(make_lollipop(n, l)) == charpoly_general_reference(make_lollipop(n, l)));
}

TEST_CASE("recurrences agree with the reference on every unicyclic graph up to order 8") {
  CharpolyEngine engine;
  for (int n = 3; n <= 8; ++n)
    for (const auto& [code, g] : unicyclic_graphs(n)) CHECK(engine(g) == charpoly_general_reference(g));
}

TEST_CASE("general graphs fall back to the reference") {
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    const Graph g(n, e);
    CHECK(charpoly(g) == charpoly_general_reference(g));
  }
  CHECK_THROWS_AS(charpoly_general_reference(make_path(65)), unsupported_size);
}

TEST_CASE("matching counts") {
  CHECK(matching_count(make_path(4), 1) == 3);
  CHECK(matching_count(make_path(4), 2) == 1);
  CHECK(matching_count(make_path(5), 2) == 3);
  CHECK(matching_count(make_path(5), 0) == 1);
  CHECK(matching_count(make_path(5), 3) == 0);
  CHECK_THROWS_AS(matching_count(make_cycle(5), 1), domain_error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph t = random_tree(3 + trial % 10, rng);
    const oracle::EdgeList el(t.edges().begin(), t.edges().end());
    const IntPolynomial phi = charpoly(t);
    for (int k = 0; 2 * k <= t.order(); ++k) {
      const BigInt m = matching_count(t, k);
      CHECK(m == BigInt(std::to_string(oracle::count_matchings_bruteforce(el, k))));
      // phi(T, x) = sum (-1)^k m(T, k) x^(n - 2k)
      CHECK(phi.coeff(t.order() - 2 * k) == (k % 2 ? -m : m));
    }
  }
}

TEST_CASE("three-term recurrence for lollipops") {
  for (int n = 5; n <= 30; ++n)
    for (int t = 3; t <= n - 2; ++t)
      CHECK(charpoly(make_lollipop(n, t)) ==
            X * charpoly(make_lollipop(n - 1, t)) - charpoly(make_lollipop(n - 2, t)));
}

TEST_CASE("moment identities") {
  for (int n = 3; n <= 30; ++n)
    for (int l = 3; l <= n; ++l) {
      const Graph g = make_lollipop(n, l);
      const IntPolynomial phi = charpoly(g);
      CHECK(phi.degree() == n);
      CHECK(phi.leading() == 1);
      CHECK(phi.coeff(n - 1) == 0);
      CHECK(phi.coeff(n - 2) == -static_cast<long>(g.size()));
    }
}

TEST_CASE("bipartite coefficient structure") {
  std::mt19937 rng(9);
  for (int n = 2; n <= 20; ++n) {
    CHECK_NOTHROW(bipartite_coefficients(charpoly(make_path(n))));
    CHECK_NOTHROW(bipartite_coefficients(charpoly(random_tree(n, rng))));
  }
  for (int n = 4; n <= 20; n += 2) CHECK_NOTHROW(bipartite_coefficients(charpoly(make_cycle(n))));
  for (int n = 4; n <= 20; ++n)
    for (int l = 4; l <= n; l += 2) CHECK_NOTHROW(bipartite_coefficients(charpoly(make_lollipop(n, l))));
  CHECK_THROWS_AS(bipartite_coefficients(charpoly(make_cycle(5))), domain_error);
  const auto b = bipartite_coefficients(charpoly(make_path(4)));
  CHECK(b == std::vector<BigInt>{1, 3, 1});
}

TEST_CASE("lollipop with two tail vertices splits into paths") {
  const IntPolynomial p2 = charpoly(make_path(2));
  for (int t = 3; t <= 20; ++t) {
    const IntPolynomial lhs = charpoly(make_lollipop(t + 2, t));
    const IntPolynomial rhs = charpoly(make_path(t + 2)) - charpoly(make_path(t - 2)) * p2 - p2 * BigInt(2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial kernel evaluation") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::uniform_int_distribution<long> point(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> a(1 + trial % 12), b(1 + (trial * 7) % 9);
    for (auto& c : a) c = coef(rng);
    for (auto& c : b) c = coef(rng);
    const IntPolynomial p(a), q(b);
    const BigInt x0 = point(rng);
    // Horner by hand
    auto eval = [&](const std::vector<BigInt>& c) {
      BigInt v = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x0 + *it;
      return v;
    };
    CHECK((p + q).eval(x0) == eval(a) + eval(b));
    CHECK((p * q).eval(x0) == eval(a) * eval(b));
    CHECK((p - q).eval(x0) == eval(a) - eval(b));
  }
}

TEST_CASE("polynomial serialization") {
  const IntPolynomial phi = charpoly(make_lollipop(8, 6));
  const auto s = to_decimal_strings(phi);
  CHECK(s.front() == "4");
  CHECK(s.back() == "1");
  CHECK(from_decimal_strings(s) == phi);
  CHECK_THROWS(from_decimal_strings({"1", "x"}));
  const IntPolynomial big = charpoly(make_path(60));
  CHECK(from_decimal_strings(to_decimal_strings(big)) == big);
}

TEST_CASE("memo table is shared across calls") {
  CharpolyEngine engine;
  engine(make_lollipop(20, 6));
  const auto size = engine.memo_size();
  CHECK(size > 0);
  engine(make_lollipop(20, 6));
  CHECK(engine.memo_size() == size);
}
