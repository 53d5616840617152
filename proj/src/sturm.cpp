#include "uenergy/sturm.hpp"

#include <algorithm>
#include <numeric>

#include "uenergy/errors.hpp"

namespace uenergy {

namespace {

int sign_at_pos_inf(const IntPolynomial& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

int sign_at_neg_inf(const IntPolynomial& p) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return p.degree() % 2 == 0 ? s : -s;
}

template <typename SignOf>
int count_variations(const std::vector<IntPolynomial>& seq, SignOf sign_of) {
  int variations = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

} // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw domain_error("Sturm chain of the zero polynomial");
  seq_.push_back(p.primitive_part());
  IntPolynomial d = seq_[0].derivative();
  if (d.is_zero()) return;
  seq_.push_back(d.primitive_part());
  while (true) {
    const auto& a = seq_[seq_.size() - 2];
    const auto& b = seq_.back();
    IntPolynomial r = signed_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // primitive, but keeping the sign of -r
    IntPolynomial prim = r.primitive_part();
    seq_.push_back(sgn(r.leading()) > 0 ? -prim : prim);
  }
}

SturmChain SturmChain::from_sequence(std::vector<IntPolynomial> sequence) {
  SturmChain c;
  c.seq_ = std::move(sequence);
  return c;
}

int SturmChain::variations_at(const Rational& x) const {
  return count_variations(seq_, [&](const IntPolynomial& q) { return q.sign_at(x); });
}

int SturmChain::variations_at_neg_inf() const { return count_variations(seq_, sign_at_neg_inf); }
int SturmChain::variations_at_pos_inf() const { return count_variations(seq_, sign_at_pos_inf); }

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_above(const Rational& a) const { return variations_at(a) - variations_at_pos_inf(); }
int SturmChain::count_roots_below(const Rational& b) const { return variations_at_neg_inf() - variations_at(b); }
int SturmChain::count_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

bool is_valid_sturm_chain(const std::vector<IntPolynomial>& seq) {
  if (seq.empty() || seq[0].is_zero()) return false;
  if (seq.size() == 1) return seq[0].degree() == 0;
  if (seq[1].primitive_part() != seq[0].derivative().primitive_part()) return false;
  if (sgn(seq[1].leading()) != sgn(seq[0].derivative().leading())) return false;
  for (std::size_t k = 2; k < seq.size(); ++k) {
    if (seq[k].is_zero()) return false;
    IntPolynomial r = -signed_pseudo_remainder(seq[k - 2], seq[k - 1]);
    if (r.is_zero()) return false;
    // r must be a positive multiple of seq[k]
    if (r.primitive_part() != seq[k].primitive_part() || sgn(r.leading()) != sgn(seq[k].leading())) return false;
  }
  return signed_pseudo_remainder(seq[seq.size() - 2], seq.back()).is_zero();
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw domain_error("root bound of the zero polynomial");
  // Cauchy: |z| <= 1 + max |a_k / a_n|
  const BigInt lead = abs(p.leading());
  BigInt top = 0;
  for (int k = 0; k < p.degree(); ++k) top = std::max(top, BigInt(abs(p.coeff(k))));
  BigInt ceil_ratio = (top + lead - 1) / lead;
  BigInt bound = 1 + ceil_ratio;
  BigInt pow2 = 1;
  while (pow2 <= bound) pow2 *= 2;
  return Rational(pow2);
}

RealRoots::RealRoots(const IntPolynomial& p) {
  if (p.is_zero()) throw domain_error("root isolation of the zero polynomial");
  factors_ = square_free_decomposition(p);
  for (std::size_t f = 0; f < factors_.size(); ++f) isolate_factor(f);
  separate();
}

int RealRoots::real_root_count() const {
  return std::accumulate(roots_.begin(), roots_.end(), 0,
                         [](int acc, const RootEnclosure& r) { return acc + r.multiplicity; });
}

void RealRoots::isolate_factor(std::size_t f) {
  const IntPolynomial& poly = factors_[f].factor;
  const int mult = factors_[f].multiplicity;
  const SturmChain chain(poly);
  const Rational bound = root_bound(poly);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, chain.count_roots(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      if (poly.sign_at(cur.hi) == 0) {
        roots_.push_back({cur.hi, cur.hi, mult});
        slots_.push_back({f, 0});
        continue;
      }
      // lo may itself be a root owned by the neighbouring interval; move off it
      while (poly.sign_at(cur.lo) == 0) {
        Rational mid = (cur.lo + cur.hi) / 2;
        if (chain.count_roots(cur.lo, mid) == 1) {
          if (poly.sign_at(mid) == 0) break;
          cur.hi = mid;
        } else {
          cur.lo = mid;
        }
      }
      if (poly.sign_at(cur.hi) == 0) {
        roots_.push_back({cur.hi, cur.hi, mult});
        slots_.push_back({f, 0});
        continue;
      }
      Rational mid = (cur.lo + cur.hi) / 2;
      if (poly.sign_at(cur.lo) == 0 && poly.sign_at(mid) == 0) {
        roots_.push_back({mid, mid, mult});
        slots_.push_back({f, 0});
        continue;
      }
      roots_.push_back({cur.lo, cur.hi, mult});
      slots_.push_back({f, poly.sign_at(cur.lo)});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const int left = chain.count_roots(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
}

void RealRoots::halve(std::size_t i) {
  RootEnclosure& r = roots_[i];
  Slot& s = slots_[i];
  if (r.is_exact()) return;
  const IntPolynomial& poly = factors_[s.factor].factor;
  Rational mid = r.midpoint();
  const int sm = poly.sign_at(mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    s.sign_lo = 0;
  } else if (sm == s.sign_lo) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

void RealRoots::refine(std::size_t i, const Rational& max_width) {
  if (sgn(max_width) <= 0) throw domain_error("refinement width must be positive");
  while (roots_.at(i).width() > max_width) halve(i);
}

void RealRoots::separate() {
  // order by lower end; roots of different factors are distinct, so halving
  // overlapping neighbours terminates
  std::vector<std::size_t> order(roots_.size());
  std::iota(order.begin(), order.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return roots_[a].lo < roots_[b].lo || (roots_[a].lo == roots_[b].lo && roots_[a].hi < roots_[b].hi);
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const std::size_t a = order[k], b = order[k + 1];
      if (roots_[a].hi >= roots_[b].lo) {
        halve(a);
        halve(b);
        changed = true;
      }
    }
  }
  std::vector<RootEnclosure> r;
  std::vector<Slot> s;
  for (std::size_t k : order) {
    r.push_back(roots_[k]);
    s.push_back(slots_[k]);
  }
  roots_ = std::move(r);
  slots_ = std::move(s);
}

std::vector<RootEnclosure> isolate_real_roots(const IntPolynomial& p) { return RealRoots(p).enclosures(); }

} // namespace uenergy
