#pragma once

#include "uenergy/graph.hpp"
#include "uenergy/polynomial.hpp"

namespace uenergy {

// Energy estimate: the true value lies in [value - radius, value + radius].
struct EnergyValue {
  double value = 0;
  double radius = 0;

  double lo() const { return value - radius; }
  double hi() const { return value + radius; }
  bool overlaps(const EnergyValue& o) const { return lo() <= o.hi() && o.lo() <= hi(); }
};

inline constexpr double default_energy_tol = 1e-7;

// Sum of |root| times multiplicity, roots isolated exactly and bisected until
// the accumulated radius is at most tol. Each root gets tol / (degree + 1).
// domain_error if p has non-real roots; convergence_error if refinement stalls.
EnergyValue energy_of_poly(const IntPolynomial& p, double tol = default_energy_tol);

// Cyclic Jacobi rotations on the dense adjacency matrix until the
// off-diagonal Frobenius norm is below 1e-12 (at most 100 sweeps).
// The radius bounds sum |lambda_i - d_i| by sqrt(n) * off-norm plus rounding.
EnergyValue energy_eigensolver_oracle(const Graph& g, double tol = default_energy_tol);

// Coulson integral of the even/odd coefficient split, folded onto [0, 1]:
//
//   E = (1/pi) [ int_0^1 log S(x) / x^2 dx + int_0^1 log T(y) dy + 2n - 2m ]
//
// with S(x) = |x^n phi(i/x)|^2 (S(0) = 1), |phi(iy)|^2 = y^(2m) T(y), and m the
// multiplicity of the eigenvalue 0. The radius is the quadrature error estimate.
EnergyValue energy_coulson(const Graph& g, double tol = default_energy_tol);
EnergyValue energy_coulson_of_poly(const IntPolynomial& phi, double tol = default_energy_tol);

// E(G1) - E(G2) = (1/pi) int log |phi(G1, ix) / phi(G2, ix)| dx, evaluated on the
// same folded form with the two integrands subtracted pointwise. Graphs must
// have the same order.
double energy_diff_coulson(const Graph& g1, const Graph& g2, double tol = default_energy_tol);
double energy_diff_coulson_of_polys(const IntPolynomial& phi1, const IntPolynomial& phi2,
                                    double tol = default_energy_tol);

// sum_j |2 cos(2 pi j / n)| in floating point
double cycle_energy_reference(int n);

} // namespace uenergy
