#pragma once

#include <array>
#include <utility>
#include <vector>

#include "uenergy/polynomial.hpp"

namespace uenergy {

// Closed-form quantities for the lollipop families P_n^6 and P_n^t (t odd),
// all evaluated at the imaginary argument ix and expressed through the real
// functions Z1(x) = (x + sqrt(x^2+4)) / 2 and Z2(x) = (x - sqrt(x^2+4)) / 2.
struct ClosedFormSample {
  double x = 0;
  int t = 3;
  int n = 0;

  double z1 = 0, z2 = 0;
  double a1 = 0, a2 = 0; // A1(ix), A2(ix): coefficients of the P_n^6 closed form
  double b11 = 0, b12 = 0, b21 = 0, b22 = 0;
  double g1 = 0, g2 = 0, m1 = 0, m2 = 0, h = 0;

  double alpha = 0, beta = 0, gamma = 0;
  std::array<double, 5> alpha_parts{}; // alpha_0 .. alpha_4
  std::array<double, 4> beta_parts{};  // beta_0, beta_1, beta_2, beta_4
  std::array<double, 4> gamma_parts{}; // gamma_0 .. gamma_3

  std::array<double, 5> d{}; // f(t, x) = d0 + d1 Z1^2t + d2 Z2^2t + d3 Z1^4t + d4 Z2^4t
  double dbar0 = 0;          // beta_0 - alpha_1 Z2^4
  double dtilde0 = 0;        // alpha_2 Z1^4 - gamma_0

  double k_val = 0;     // K(n, t, x) from the alpha/beta/gamma expansion
  double f_val = 0;     // f(t, x) from alpha/beta/gamma
  double f_from_d = 0;  // f(t, x) from d0..d4
  double df_dt = 0;     // d f / d t from the d-form
};

// domain_error unless t is odd and >= 3.
ClosedFormSample eval_sample(double x, int t, int n);

// |phi(P_n^6, ix)|^2 from A1, A2 (n >= 7).
double modulus_sq_P6(int n, double x);
// |phi(P_n^t, ix)|^2 from the B coefficients (t odd, 3 <= t <= n).
double modulus_sq_Pt(int n, int t, double x);

// (p_i(x), q_i(x)) for i = 0..4, q_i including its sqrt(x^2+4) factor.
std::pair<double, double> eval_pq(int index, double x);

// Integer polynomial parts: p_i and r_i with q_i = r_i sqrt(x^2+4).
IntPolynomial p_poly(int index);
IntPolynomial r_poly(int index);

// Factored right-hand sides: f(5, x) for t = 5 and the K(n, 3, x) bound for t = 3.
double eval_f_factored(int t, double x);
IntPolynomial f_factored_poly(int t);
// The factors after the leading -x^2: (x^2+1)^2, x^4+3x^2+1 and the degree-12
// factor for t = 5; (x^2+1)^3, x^2+5 and the degree-12 factor for t = 3.
std::vector<IntPolynomial> f_factored_factors(int t);

// f8(x) = phi(P_8^6, ix) and f7(x) = i phi(P_7^6, ix) as integer polynomials.
IntPolynomial f8_poly();
IntPolynomial f7_poly();

// |phi(ix)|^2 evaluated exactly at the binary rational x, rounded once.
double exact_modulus_sq(const IntPolynomial& phi, double x);

// K(n, t, x) from its definition with exact characteristic polynomials.
double k_exact(int n, int t, double x);

struct ModulusReport {
  int n = 0;
  std::vector<int> t_values;
  int points = 0;
  double max_rel_dev_p6 = 0;
  double max_rel_dev_pt = 0;
  int failures = 0; // grid points beyond the tolerance
  double tolerance = 1e-9;
};

// Compares the closed forms with |phi(., ix)|^2 from exact characteristic
// polynomials. t = 0 checks every odd t in [3, n]. Relative deviations use
// max(|exact|, 1) as the scale.
ModulusReport check_modulus_identity(int n, const std::vector<double>& grid, int t = 0);

// 50 points evenly spread over [-10, 10], avoiding 0 and +-2.
std::vector<double> standard_grid();

} // namespace uenergy
