#include "uenergy/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "uenergy/errors.hpp"

namespace uenergy {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed(int n) const {
  if (n < degree()) throw domain_error("reversal length below degree");
  std::vector<BigInt> r(n + 1);
  for (int k = 0; k <= degree(); ++k) r[n - k] = c_[k];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted_down(int k) const {
  if (k == 0) return *this;
  if (zero_order() < k && !is_zero()) throw domain_error("polynomial not divisible by x^k");
  if (is_zero()) return {};
  return IntPolynomial(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

int IntPolynomial::zero_order() const {
  if (is_zero()) return 0;
  int k = 0;
  while (sgn(c_[k]) == 0) ++k;
  return k;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) mpz_divexact(r[k].get_mpz_t(), c_[k].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  // homogenized Horner: sum c_k num^k den^(d-k), then one division
  if (is_zero()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0, den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc == den^d * p(x) with den_pow == den^(d+1)
  Rational r(acc, den_pow / den);
  r.canonicalize();
  return r;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0, den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc); // den > 0
}

double IntPolynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

long double IntPolynomial::eval_long(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& v = c_[k];
    if (sgn(v) == 0) continue;
    BigInt mag = abs(v);
    if (out.empty())
      out += sgn(v) < 0 ? "-" : "";
    else
      out += sgn(v) < 0 ? " - " : " + ";
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt lc = b.leading();
  const BigInt mag = abs(lc);
  const int db = b.degree();
  std::vector<BigInt> r = a.coefficients();
  // Each reduction step multiplies by |lc|; when lc < 0 the subtracted multiple
  // of b absorbs the sign, so the remainder is |lc|^steps * a mod b.
  for (int k = a.degree(); k >= db; --k) {
    BigInt top = r[k];
    for (auto& v : r) v *= mag;
    if (sgn(top) != 0) {
      // r -= (top * sign(lc)) x^(k-db) b, which zeroes r[k] since mag*top - top*sign*lc = 0
      BigInt q = sgn(lc) < 0 ? BigInt(-top) : top;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= q * b.coeff(j);
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t()))
      throw domain_error("inexact polynomial division");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.leading().get_mpz_t());
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeff(j);
  }
  for (int k = 0; k < db; ++k)
    if (sgn(r[k]) != 0) throw domain_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.degree() == 0 || a.is_zero()) return true;
  return signed_pseudo_remainder(a, b).is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = signed_pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive_part();
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw domain_error("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  IntPolynomial a = p.primitive_part();
  IntPolynomial b = a.derivative();
  IntPolynomial c = gcd(a, b);
  // Gauss's lemma keeps every division below exact over the integers
  IntPolynomial w = exact_quotient(a, c);
  IntPolynomial y = exact_quotient(b, c);
  IntPolynomial z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    IntPolynomial g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  return out;
}

IntPolynomial modulus_squared_on_imaginary_axis(const IntPolynomial& p) {
  // p(ix) = sum c_k i^k x^k; even k feed the real part, odd k the imaginary part
  std::vector<BigInt> re(p.degree() + 1), im(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeff(k);
    const bool negate = (k / 2) % 2 == 1;
    (k % 2 == 0 ? re : im)[k] = negate ? BigInt(-c) : c;
  }
  IntPolynomial r(std::move(re)), i(std::move(im));
  return r * r + i * i;
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPolynomial from_decimal_strings(const std::vector<std::string>& coefficients) {
  std::vector<BigInt> c;
  c.reserve(coefficients.size());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    BigInt v;
    if (coefficients[k].empty() || v.set_str(coefficients[k], 10) != 0)
      throw parse_error("invalid decimal coefficient '" + coefficients[k] + "'", k);
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

} // namespace uenergy
