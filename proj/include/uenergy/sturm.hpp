#pragma once

#include <vector>

#include "uenergy/polynomial.hpp"

namespace uenergy {

// Sturm sequence p0 = p, p1 = p', p_{k+1} = -prem(p_{k-1}, p_k), every member
// reduced to its primitive part (positive scaling keeps the sign pattern).
class SturmChain {
public:
  explicit SturmChain(const IntPolynomial& p);

  // Wraps a stored sequence without rebuilding it (certificate replay).
  static SturmChain from_sequence(std::vector<IntPolynomial> sequence);

  const std::vector<IntPolynomial>& sequence() const noexcept { return seq_; }

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  // Distinct roots of p0 in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  int count_roots_above(const Rational& a) const; // (a, +inf)
  int count_roots_below(const Rational& b) const; // (-inf, b]
  int count_real_roots() const;

private:
  SturmChain() = default;
  std::vector<IntPolynomial> seq_;
};

// Checks that a stored sequence has the shape SturmChain produces: p1 is a positive
// multiple of p0', each link satisfies p_{k+1} ~ -prem(p_{k-1}, p_k) with a
// positive factor, and the last member divides its predecessor.
bool is_valid_sturm_chain(const std::vector<IntPolynomial>& sequence);

// A power of two strictly larger than the modulus of every complex root.
Rational root_bound(const IntPolynomial& p);

struct RootEnclosure {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Real roots of a nonzero integer polynomial, isolated by Sturm counting on
// each square-free factor and refinable by exact bisection. Enclosures are
// sorted and pairwise disjoint.
class RealRoots {
public:
  explicit RealRoots(const IntPolynomial& p);

  const std::vector<RootEnclosure>& enclosures() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }

  // total multiplicity of the real roots
  int real_root_count() const;

  // Bisect enclosure i until its width is at most max_width.
  void refine(std::size_t i, const Rational& max_width);

private:
  struct Slot {
    std::size_t factor;
    int sign_lo; // sign of the factor at lo; 0 for exact enclosures
  };

  void isolate_factor(std::size_t f);
  void separate();
  void halve(std::size_t i);

  std::vector<SquareFreeFactor> factors_;
  std::vector<RootEnclosure> roots_;
  std::vector<Slot> slots_;
};

std::vector<RootEnclosure> isolate_real_roots(const IntPolynomial& p);

} // namespace uenergy
