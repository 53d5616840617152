#include <cmath>
#include <numbers>

#include "doctest.h"
#include "uenergy/charpoly.hpp"
#include "uenergy/energy.hpp"
#include "uenergy/enumerate.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/quadrature.hpp"
#include "uenergy/sturm.hpp"

using namespace uenergy;

TEST_CASE("root isolation on small polynomials") {
  const auto r = isolate_real_roots(IntPolynomial{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].hi <= 0);
  CHECK(r[1].lo >= 0);
  CHECK(r[0].lo < -Rational(141, 100));
  CHECK(r[0].hi > -Rational(142, 100));

  // (x - 1)^2 (x + 2)
  const auto m = isolate_real_roots(IntPolynomial{2, -3, 0, 1});
  REQUIRE(m.size() == 2);
  CHECK(m[0].multiplicity == 1);
  CHECK(m[1].multiplicity == 2);

  CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());
  CHECK_THROWS_AS(isolate_real_roots(IntPolynomial{}), domain_error);

  // x^3: a single exact root of multiplicity 3
  const auto z = isolate_real_roots(IntPolynomial{0, 0, 0, 1});
  REQUIRE(z.size() == 1);
  CHECK(z[0].multiplicity == 3);
  CHECK(z[0].lo <= 0);
  CHECK(z[0].hi >= 0);
}

TEST_CASE("roots of the P_8^6 polynomial come in +- pairs") {
  RealRoots roots(charpoly(make_lollipop(8, 6)));
  REQUIRE(roots.size() == 8);
  CHECK(roots.real_root_count() == 8);
  const Rational w(1, 1 << 30);
  for (std::size_t i = 0; i < roots.size(); ++i) roots.refine(i, w);
  const auto& e = roots.enclosures();
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(e[i].width() <= w);
    if (i + 1 < e.size()) CHECK(e[i].hi < e[i + 1].lo);
    const double a = e[i].midpoint().get_d();
    const double b = e[e.size() - 1 - i].midpoint().get_d();
    CHECK(a == doctest::Approx(-b).epsilon(1e-8));
  }
}

TEST_CASE("sturm counts") {
  const IntPolynomial p = charpoly(make_cycle(7));
  SturmChain s(p);
  CHECK(is_valid_sturm_chain(s.sequence()));
  // C_7 has distinct eigenvalues 2, 2cos(2pi/7), 2cos(4pi/7), 2cos(6pi/7) (the last three doubled)
  const auto sf = square_free_decomposition(p);
  CHECK(sf.size() == 2);
  const Rational bound = root_bound(p);
  CHECK(bound > 2);
  for (const auto& f : sf) {
    SturmChain c(f.factor);
    CHECK(c.count_roots(-bound, bound) == f.factor.degree());
    CHECK(c.count_real_roots() == f.factor.degree());
  }
  auto broken = s.sequence();
  broken[1] = -broken[1];
  CHECK_FALSE(is_valid_sturm_chain(broken));
}

TEST_CASE("root bound dominates every root") {
  for (int n = 3; n <= 20; ++n) {
    const IntPolynomial p = charpoly(make_lollipop(n, 3));
    const Rational b = root_bound(p);
    SturmChain s(p);
    CHECK(s.count_roots_above(b) == 0);
    CHECK(s.count_roots_below(-b) == 0);
  }
}

TEST_CASE("energies of known graphs") {
  const EnergyValue c4 = energy_of_poly(charpoly(make_cycle(4)), 1e-9);
  CHECK(c4.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(c4.radius <= 1e-9);

  const EnergyValue c7 = energy_of_poly(charpoly(make_cycle(7)));
  CHECK(std::abs(c7.value - cycle_energy_reference(7)) <= 1e-7);
  CHECK(c7.value == doctest::Approx(8.98792).epsilon(1e-6));

  const EnergyValue p76 = energy_of_poly(charpoly(make_lollipop(7, 6)));
  CHECK(p76.value == doctest::Approx(8.72057).epsilon(1e-6));

  CHECK(energy_of_poly(charpoly(make_cycle(10))).value == doctest::Approx(12.94427).epsilon(1e-6));
  CHECK_THROWS_AS(energy_of_poly(IntPolynomial{1, 0, 1}), domain_error);
}

TEST_CASE("eigensolver matches the cosine formula on cycles") {
  for (int n = 3; n <= 30; ++n) {
    const EnergyValue e = energy_eigensolver_oracle(make_cycle(n));
    CHECK(std::abs(e.value - cycle_energy_reference(n)) <= 1e-9);
  }
}

TEST_CASE("three routes agree on every unicyclic graph up to order 8") {
  double worst = 0;
  CharpolyEngine engine;
  for (int n = 3; n <= 8; ++n)
    for (const auto& [code, g] : unicyclic_graphs(n)) {
      const IntPolynomial phi = engine(g);
      const double exact = energy_of_poly(phi).value;
      const double eig = energy_eigensolver_oracle(g).value;
      const double coul = energy_coulson_of_poly(phi).value;
      worst = std::max({worst, std::abs(exact - eig), std::abs(exact - coul)});
    }
  CHECK(worst <= 1e-6);
}

TEST_CASE("coulson integral on lollipops") {
  for (int n = 5; n <= 20; n += 3)
    for (int l = 3; l <= n; l += 2) {
      const Graph g = make_lollipop(n, l);
      const EnergyValue c = energy_coulson(g);
      CHECK(std::abs(c.value - energy_of_poly(charpoly(g)).value) <= 1e-6);
    }
}

TEST_CASE("coulson differences against exact differences") {
  const int pairs[][2] = {{17, 3}, {17, 5}, {19, 7}, {21, 9}, {14, 4}, {16, 8}};
  for (const auto& [n, t] : pairs) {
    const IntPolynomial a = charpoly(make_lollipop(n, t));
    const IntPolynomial b = charpoly(make_lollipop(n, 6));
    const double exact = energy_of_poly(a).value - energy_of_poly(b).value;
    CHECK(std::abs(energy_diff_coulson_of_polys(a, b) - exact) <= 1e-6);
  }
  CHECK(energy_diff_coulson(make_lollipop(17, 3), make_lollipop(17, 6)) == doctest::Approx(-0.05339).epsilon(1e-4));
  CHECK_THROWS(energy_diff_coulson(make_cycle(5), make_cycle(6)));
}

TEST_CASE("unreachable tolerances raise convergence errors") {
  CHECK_THROWS_AS(energy_coulson(make_lollipop(9, 4), 1e-200), convergence_error);
  try {
    integrate_adaptive([](double x) { return 1 / std::sqrt(x); }, 0, 1, 1e-300, 50);
    FAIL("expected convergence_error");
  } catch (const convergence_error& e) {
    CHECK(e.estimate() > 1.5);
    CHECK(e.achieved_error() > 0);
  }
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, 1e-12);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1)) <= 1e-12);
  const auto s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, 1e-10);
  CHECK(std::abs(s.value - 2.0 / 3) <= 1e-10);
  const auto p = integrate_adaptive([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-12);
  CHECK(p.value == doctest::Approx(2.0).epsilon(1e-12));
}
