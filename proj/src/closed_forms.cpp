#include "uenergy/closed_forms.hpp"

#include <cmath>
#include <map>

#include "uenergy/charpoly.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/graph.hpp"

namespace uenergy {

namespace {

using real = long double;

IntPolynomial from_terms(std::initializer_list<std::pair<int, long>> terms) {
  int top = 0;
  for (auto [k, c] : terms) top = std::max(top, k);
  std::vector<BigInt> c(top + 1, 0);
  for (auto [k, v] : terms) c[k] = v;
  return IntPolynomial(std::move(c));
}

real ipow(real base, int e) {
  if (e < 0) return 1 / ipow(base, -e);
  real r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void require_odd_t(int t) {
  if (t < 3 || t % 2 == 0) throw domain_error("t must be odd and at least 3, got " + std::to_string(t));
}

} // namespace

IntPolynomial f8_poly() { return from_terms({{8, 1}, {6, 8}, {4, 19}, {2, 16}, {0, 4}}); }
IntPolynomial f7_poly() { return from_terms({{7, 1}, {5, 7}, {3, 13}, {1, 7}}); }

IntPolynomial p_poly(int index) {
  switch (index) {
  case 0: return from_terms({{14, 1}, {12, 19}, {10, 146}, {8, 584}, {6, 1300}, {4, 1582}, {2, 928}, {0, 160}});
  case 1: return from_terms({{3, 1}, {1, 6}});
  case 2: return from_terms({{7, 1}, {5, 9}, {3, 24}, {1, 18}});
  case 3: return from_terms({{13, 1}, {11, 15}, {9, 89}, {7, 264}, {5, 405}, {3, 288}, {1, 56}});
  case 4:
    return from_terms(
        {{16, 1}, {14, 14}, {12, 83}, {10, 274}, {8, 551}, {6, 686}, {4, 507}, {2, 190}, {0, 22}});
  }
  throw domain_error("p/q index must be in 0..4, got " + std::to_string(index));
}

IntPolynomial r_poly(int index) {
  switch (index) {
  case 0: return from_terms({{13, 1}, {11, 17}, {9, 116}, {7, 404}, {5, 756}, {3, 722}, {1, 272}});
  case 1: return from_terms({{2, 3}, {0, 4}});
  case 2: return from_terms({{6, 1}, {4, 7}, {2, 12}, {0, 4}});
  case 3: return from_terms({{12, 1}, {10, 15}, {8, 85}, {6, 234}, {4, 331}, {2, 220}, {0, 48}});
  case 4: return from_terms({{15, 1}, {13, 12}, {11, 61}, {9, 172}, {7, 291}, {5, 296}, {3, 167}, {1, 40}});
  }
  throw domain_error("p/q index must be in 0..4, got " + std::to_string(index));
}

std::pair<double, double> eval_pq(int index, double x) {
  const IntPolynomial p = p_poly(index), r = r_poly(index);
  const real s = std::sqrt(static_cast<real>(x) * x + 4);
  return {static_cast<double>(p.eval_long(x)), static_cast<double>(r.eval_long(x) * s)};
}

std::vector<IntPolynomial> f_factored_factors(int t) {
  const IntPolynomial x2p1 = from_terms({{2, 1}, {0, 1}});
  if (t == 5)
    return {x2p1.pow(2), from_terms({{4, 1}, {2, 3}, {0, 1}}),
            from_terms({{12, 2}, {10, 31}, {8, 189}, {6, 574}, {4, 899}, {2, 661}, {0, 160}})};
  if (t == 3)
    return {x2p1.pow(3), from_terms({{2, 1}, {0, 5}}),
            from_terms({{12, 2}, {10, 23}, {8, 104}, {6, 238}, {4, 290}, {2, 171}, {0, 32}})};
  throw domain_error("factored form exists only for t = 3 and t = 5");
}

IntPolynomial f_factored_poly(int t) {
  IntPolynomial p = IntPolynomial::monomial(-1, 2);
  for (const auto& f : f_factored_factors(t)) p *= f;
  return p;
}

double eval_f_factored(int t, double x) {
  real v = -static_cast<real>(x) * x;
  for (const auto& f : f_factored_factors(t)) v *= f.eval_long(x);
  return static_cast<double>(v);
}

ClosedFormSample eval_sample(double xd, int t, int n) {
  require_odd_t(t);
  ClosedFormSample out;
  out.x = xd;
  out.t = t;
  out.n = n;

  const real x = xd;
  const real s = std::sqrt(x * x + 4);
  // take the root without cancellation, recover the other from Z1 Z2 = -1
  real z1, z2;
  if (x >= 0) {
    z1 = (x + s) / 2;
    z2 = -1 / z1;
  } else {
    z2 = (x - s) / 2;
    z1 = -1 / z2;
  }
  const real f8 = f8_poly().eval_long(x), f7 = f7_poly().eval_long(x);
  // (Z1 f8 + f7)(Z2 f8 + f7) = -(x^2+1)^2 (x^6 + 8x^4 + 19x^2 + 16)
  const real x2 = x * x;
  const real prod = -(x2 + 1) * (x2 + 1) * (((x2 + 8) * x2 + 19) * x2 + 16);
  real n1, n2;
  if (x >= 0) {
    n1 = z1 * f8 + f7;
    n2 = prod / n1;
  } else {
    n2 = z2 * f8 + f7;
    n1 = prod / n2;
  }
  const real zz1 = z1 * z1, zz2 = z2 * z2;
  const real a1 = -n1 / (zz1 + 1) * ipow(z2, 7);
  const real a2 = -n2 / (zz2 + 1) * ipow(z1, 7);

  const real h = 1 / (x2 + 4);
  const real g1 = zz1 * (zz1 + 2) / ((zz1 + 1) * (zz1 + 1));
  const real g2 = zz2 * (zz2 + 2) / ((zz2 + 1) * (zz2 + 1));
  const real m1 = -2 / (zz1 + 1), m2 = -2 / (zz2 + 1);

  const real b11 = g1 - ipow(z2, 2 * t - 2) * h;
  const real b12 = m1 * ipow(z2, t - 2);
  const real b21 = g2 - ipow(z1, 2 * t - 2) * h;
  const real b22 = m2 * ipow(z1, t - 2);

  const real s1 = b11 * b11 + b12 * b12, s2 = b21 * b21 + b22 * b22, c = b11 * b21 + b12 * b22;
  const real alpha = a2 * a2 * s1 - a1 * a1 * s2;
  const real beta = 2 * a1 * a1 * c - 2 * a1 * a2 * s1;
  const real gamma = 2 * a1 * a2 * s2 - 2 * a2 * a2 * c;

  const real w = 2 * (x2 + 3) / ((x2 + 4) * (x2 + 4));
  const real al0 = a2 * a2 * g1 * g1 - a1 * a1 * g2 * g2;
  const real al1 = 2 * a1 * a1 * g2 * h * zz1 - a1 * a1 * m2 * m2;
  const real al2 = a2 * a2 * m1 * m1 - 2 * a2 * a2 * g1 * h * zz2;
  const real al3 = -a1 * a1 * h * h;
  const real al4 = a2 * a2 * h * h;
  const real be0 = -2 * a1 * (w * a1 + a2 * g1 * g1);
  const real be1 = -2 * a1 * a1 * g1 * h;
  const real be2 = 2 * a1 * (2 * a2 * g1 * h - a1 * g2 * h - a2 * m1 * m1 * zz1);
  const real be4 = -2 * a1 * a2 * h * h;
  const real ga0 = 2 * a2 * (a1 * g2 * g2 + w * a2);
  const real ga1 = 2 * a2 * (a1 * m2 * m2 * zz2 + a2 * g1 * h - 2 * a1 * g2 * h);
  const real ga2 = 2 * a2 * a2 * g2 * h;
  const real ga3 = 2 * a1 * a2 * h * h;

  const real z1p4 = zz1 * zz1, z2p4 = zz2 * zz2, z1p8 = z1p4 * z1p4, z2p8 = z2p4 * z2p4;
  const real d0 = al0 * (z1p4 - z2p4) + be2 * (z1p4 - 1) * zz1 + ga1 * (1 - z2p4) * zz2;
  const real d1 = al1 * (1 - z2p8) + be0 * (z1p4 - 1) + ga3 * (z2p4 - z2p8);
  const real d2 = al2 * (z1p8 - 1) + ga0 * (1 - z2p4) + be4 * (z1p8 - z1p4);
  const real d3 = al3 * (1 - z2p8) + be1 * (zz1 - zz2);
  const real d4 = al4 * (z1p8 - 1) + ga2 * (zz1 - zz2);

  auto expansion = [&](int power) {
    return alpha * (z1p4 - z2p4) + beta * ipow(z1, 2 * power) * (z1p4 - 1) + gamma * ipow(z2, 2 * power) * (1 - z2p4);
  };
  const real u1 = ipow(zz1, t), u2 = ipow(zz2, t);

  out.z1 = z1;
  out.z2 = z2;
  out.a1 = a1;
  out.a2 = a2;
  out.b11 = b11;
  out.b12 = b12;
  out.b21 = b21;
  out.b22 = b22;
  out.g1 = g1;
  out.g2 = g2;
  out.m1 = m1;
  out.m2 = m2;
  out.h = h;
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  out.alpha_parts = {double(al0), double(al1), double(al2), double(al3), double(al4)};
  out.beta_parts = {double(be0), double(be1), double(be2), double(be4)};
  out.gamma_parts = {double(ga0), double(ga1), double(ga2), double(ga3)};
  out.d = {double(d0), double(d1), double(d2), double(d3), double(d4)};
  out.dbar0 = be0 - al1 * z2p4;
  out.dtilde0 = al2 * z1p4 - ga0;
  out.k_val = expansion(n);
  out.f_val = expansion(t);
  out.f_from_d = d0 + d1 * u1 + d2 * u2 + d3 * u1 * u1 + d4 * u2 * u2;
  // Z2^2t = (Z1^2)^-t, so the d-form is a function of Z1^2 alone
  out.df_dt = (d1 * u1 - d2 * u2 + 2 * d3 * u1 * u1 - 2 * d4 * u2 * u2) * std::log(zz1);
  return out;
}

double modulus_sq_P6(int n, double x) {
  if (n < 7) throw domain_error("P_n^6 closed form needs n >= 7");
  const ClosedFormSample s = eval_sample(x, 3, n);
  const real a1 = s.a1, a2 = s.a2;
  const real v = a1 * a1 * ipow(s.z1, 2 * n) + a2 * a2 * ipow(s.z2, 2 * n) + (n % 2 == 0 ? 2 : -2) * a1 * a2;
  return static_cast<double>(v);
}

double modulus_sq_Pt(int n, int t, double x) {
  require_odd_t(t);
  if (t > n) throw domain_error("P_n^t closed form needs t <= n");
  const ClosedFormSample s = eval_sample(x, t, n);
  const real b11 = s.b11, b12 = s.b12, b21 = s.b21, b22 = s.b22;
  const real v = (b11 * b11 + b12 * b12) * ipow(s.z1, 2 * n) + (b21 * b21 + b22 * b22) * ipow(s.z2, 2 * n) +
                 (n % 2 == 0 ? 2 : -2) * (b11 * b21 + b12 * b22);
  return static_cast<double>(v);
}

double exact_modulus_sq(const IntPolynomial& phi, double x) {
  return modulus_squared_on_imaginary_axis(phi).eval(Rational(x)).get_d();
}

namespace {

Rational exact_modulus_sq_rational(const IntPolynomial& phi, const Rational& x) {
  return modulus_squared_on_imaginary_axis(phi).eval(x);
}

} // namespace

double k_exact(int n, int t, double x) {
  const Rational xr(x);
  CharpolyEngine cp;
  const Rational big_t = exact_modulus_sq_rational(cp(make_lollipop(n + 2, t)), xr);
  const Rational small_6 = exact_modulus_sq_rational(cp(make_lollipop(n, 6)), xr);
  const Rational big_6 = exact_modulus_sq_rational(cp(make_lollipop(n + 2, 6)), xr);
  const Rational small_t = exact_modulus_sq_rational(cp(make_lollipop(n, t)), xr);
  const Rational k = big_t * small_6 - big_6 * small_t;
  return k.get_d();
}

ModulusReport check_modulus_identity(int n, const std::vector<double>& grid, int t) {
  if (n < 7) throw domain_error("closed forms need n >= 7");
  ModulusReport report;
  report.n = n;
  if (t == 0) {
    for (int u = 3; u <= n; u += 2) report.t_values.push_back(u);
  } else {
    require_odd_t(t);
    if (t > n) throw domain_error("t must not exceed n");
    report.t_values.push_back(t);
  }
  CharpolyEngine cp;
  const IntPolynomial m6 = modulus_squared_on_imaginary_axis(cp(make_lollipop(n, 6)));
  std::map<int, IntPolynomial> mt;
  for (int u : report.t_values) mt[u] = modulus_squared_on_imaginary_axis(cp(make_lollipop(n, u)));

  auto rel = [](double closed, double exact) { return std::fabs(closed - exact) / std::max(std::fabs(exact), 1.0); };
  for (double x : grid) {
    if (std::fabs(std::fabs(x) - 2.0) == 0.0) continue;
    const double e6 = m6.eval(Rational(x)).get_d();
    const double d6 = rel(modulus_sq_P6(n, x), e6);
    report.max_rel_dev_p6 = std::max(report.max_rel_dev_p6, d6);
    bool bad = d6 > report.tolerance;
    for (int u : report.t_values) {
      const double et = mt[u].eval(Rational(x)).get_d();
      const double dt = rel(modulus_sq_Pt(n, u, x), et);
      report.max_rel_dev_pt = std::max(report.max_rel_dev_pt, dt);
      bad = bad || dt > report.tolerance;
    }
    ++report.points;
    if (bad) ++report.failures;
  }
  return report;
}

std::vector<double> standard_grid() {
  std::vector<double> g;
  for (int k = 0; k < 50; ++k) g.push_back(-10.0 + (k + 0.5) * 0.4);
  return g;
}

} // namespace uenergy
