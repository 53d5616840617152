#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace uenergy {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeff(k) is the coefficient of x^k. Trailing zeros are never stored, so the
// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int k);
  static IntPolynomial x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  BigInt coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  IntPolynomial derivative() const;

  // x^n p(1/x) for n >= degree()
  IntPolynomial reversed(int n) const;

  // p(x) / x^k; throws domain_error if the low k coefficients are not zero
  IntPolynomial shifted_down(int k) const;

  // multiplicity of the root x = 0
  int zero_order() const;

  BigInt content() const;
  // Divided by its content, sign chosen so the leading coefficient is positive.
  IntPolynomial primitive_part() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  long double eval_long(long double x) const;
  // sign of p(x) computed exactly; cheaper than eval(Rational) for sign tests
  int sign_at(const Rational& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(int e) const;

  // Human-readable form, highest power first: "x^4 - 4*x^2 - 2*x + 1".
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> c_;
};

// Pseudo-remainder of a by b with a positive multiplier: |lc(b)|^(deg a - deg b + 1) * a mod b.
IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b over the integers; throws domain_error if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

// true when b divides a over the rationals
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquareFreeFactor {
  IntPolynomial factor; // primitive, square-free, positive leading coefficient
  int multiplicity;
};

// Yun's decomposition of the primitive part of p: p ~ prod factor^multiplicity.
// Constant factors are omitted.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

// |p(ix)|^2 as an exact integer polynomial in real x: the squared real part plus
// the squared imaginary part of p evaluated on the imaginary axis.
IntPolynomial modulus_squared_on_imaginary_axis(const IntPolynomial& p);

// JSON-friendly form: decimal coefficient strings, constant term first.
std::vector<std::string> to_decimal_strings(const IntPolynomial& p);
IntPolynomial from_decimal_strings(const std::vector<std::string>& coefficients);

} // namespace uenergy
