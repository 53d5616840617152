#include "uenergy/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "uenergy/charpoly.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/quadrature.hpp"
#include "uenergy/sturm.hpp"

namespace uenergy {

EnergyValue energy_of_poly(const IntPolynomial& p, double tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  RealRoots roots(p);
  if (roots.real_root_count() != p.degree()) throw domain_error("polynomial has non-real roots");

  const Rational budget = Rational(tol) / (p.degree() + 1);
  // below this width the request is beyond any sensible double result
  const Rational floor_width = Rational(1, BigInt(1) << 400);
  Rational value = 0, radius = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int mult = roots.enclosures()[i].multiplicity;
    const Rational width = 2 * budget / mult;
    if (width < floor_width) throw convergence_error("root refinement exceeded its iteration cap", 0, tol);
    roots.refine(i, width);
    const auto& r = roots.enclosures()[i];
    value += mult * abs(r.midpoint());
    radius += mult * r.width() / 2;
  }
  const double v = value.get_d();
  // conversion of the exact sum to double adds at most one ulp
  const double rad = radius.get_d() + std::fabs(v) * std::numeric_limits<double>::epsilon();
  return {v, rad};
}

EnergyValue energy_eigensolver_oracle(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) throw domain_error("eigensolver oracle needs at least one vertex");
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
  const double norm = std::sqrt(2.0 * static_cast<double>(g.size()));

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  constexpr int max_sweeps = 100;
  constexpr double off_target = 1e-12;
  double off = off_norm();
  int sweep = 0;
  for (; off >= off_target && sweep < max_sweeps; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
      }
    off = off_norm();
  }
  double energy = 0;
  for (int i = 0; i < n; ++i) energy += std::fabs(a[i][i]);
  const double radius = std::sqrt(static_cast<double>(n)) * off +
                        64.0 * n * (sweep + 1) * std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);
  if (off >= off_target || radius > tol)
    throw convergence_error("Jacobi sweeps did not converge", energy, radius);
  return {energy, radius};
}

namespace {

// Pieces of |phi(iy)|^2 = y^(2m) T(y) and its reversal S(x) = x^(2n) |phi(i/x)|^2.
struct CoulsonPieces {
  int n = 0;
  int zero_mult = 0;     // m
  IntPolynomial tail;    // T
  IntPolynomial s_minus; // (S(x) - 1) / x^2
};

CoulsonPieces coulson_pieces(const IntPolynomial& phi) {
  if (phi.is_zero() || phi.leading() != 1) throw domain_error("expected a monic characteristic polynomial");
  CoulsonPieces pc;
  pc.n = phi.degree();
  const IntPolynomial on_axis = modulus_squared_on_imaginary_axis(phi);
  pc.zero_mult = phi.zero_order();
  pc.tail = on_axis.shifted_down(2 * pc.zero_mult);
  const IntPolynomial s = on_axis.reversed(2 * pc.n);
  pc.s_minus = (s - IntPolynomial::constant(1)).shifted_down(2);
  return pc;
}

// log S(x) / x^2, finite at x = 0
double log_s_over_x2(const CoulsonPieces& pc, double x) {
  const double q = pc.s_minus.eval(x);
  const double u = x * x * q;
  if (u == 0) return q;
  return q * (std::log1p(u) / u);
}

double log_tail(const CoulsonPieces& pc, double y) { return std::log(pc.tail.eval(y)); }

} // namespace

EnergyValue energy_coulson_of_poly(const IntPolynomial& phi, double tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  const CoulsonPieces pc = coulson_pieces(phi);
  const double part_tol = tol * std::numbers::pi / 4;
  QuadratureResult outer, inner;
  try {
    outer = integrate_adaptive([&](double x) { return log_s_over_x2(pc, x); }, 0.0, 1.0, part_tol);
    inner = integrate_adaptive([&](double y) { return log_tail(pc, y); }, 0.0, 1.0, part_tol);
  } catch (const convergence_error& e) {
    throw convergence_error("Coulson quadrature did not reach tolerance", e.estimate() / std::numbers::pi,
                            e.achieved_error() / std::numbers::pi);
  }
  const double value = (outer.value + inner.value + 2.0 * (pc.n - pc.zero_mult)) / std::numbers::pi;
  return {value, (outer.error + inner.error) / std::numbers::pi};
}

EnergyValue energy_coulson(const Graph& g, double tol) {
  if (g.order() < 1) throw domain_error("Coulson integral needs at least one vertex");
  return energy_coulson_of_poly(charpoly(g), tol);
}

double energy_diff_coulson_of_polys(const IntPolynomial& phi1, const IntPolynomial& phi2, double tol) {
  if (phi1.degree() != phi2.degree()) throw domain_error("energy difference needs graphs of equal order");
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  const CoulsonPieces p1 = coulson_pieces(phi1), p2 = coulson_pieces(phi2);
  const double part_tol = tol * std::numbers::pi / 4;
  QuadratureResult outer, inner;
  try {
    outer = integrate_adaptive([&](double x) { return log_s_over_x2(p1, x) - log_s_over_x2(p2, x); }, 0.0, 1.0,
                               part_tol);
    inner = integrate_adaptive([&](double y) { return log_tail(p1, y) - log_tail(p2, y); }, 0.0, 1.0, part_tol);
  } catch (const convergence_error& e) {
    throw convergence_error("energy-difference quadrature did not reach tolerance", e.estimate() / std::numbers::pi,
                            e.achieved_error() / std::numbers::pi);
  }
  return (outer.value + inner.value - 2.0 * (p1.zero_mult - p2.zero_mult)) / std::numbers::pi;
}

double energy_diff_coulson(const Graph& g1, const Graph& g2, double tol) {
  if (g1.order() != g2.order()) throw domain_error("energy difference needs graphs of equal order");
  return energy_diff_coulson_of_polys(charpoly(g1), charpoly(g2), tol);
}

double cycle_energy_reference(int n) {
  if (n < 3) throw invalid_order("cycle needs n >= 3");
  double e = 0;
  for (int j = 0; j < n; ++j) e += std::fabs(2.0 * std::cos(2.0 * std::numbers::pi * j / n));
  return e;
}

} // namespace uenergy
