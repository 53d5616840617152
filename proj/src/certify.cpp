#include "uenergy/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "uenergy/closed_forms.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/sturm.hpp"

namespace uenergy {

std::string to_string(Domain d) {
  switch (d) {
  case Domain::reals: return "R";
  case Domain::reals_except_zero: return "R\\{0}";
  case Domain::positive: return "(0,inf)";
  case Domain::negative: return "(-inf,0)";
  }
  return "?";
}

std::string to_string(Sign s) {
  switch (s) {
  case Sign::positive: return "positive";
  case Sign::negative: return "negative";
  case Sign::nonnegative: return "nonnegative";
  case Sign::nonpositive: return "nonpositive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::certified: return "certified";
  case Verdict::refuted: return "refuted";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(EvidenceLevel e) { return e == EvidenceLevel::exact ? "exact" : "grid"; }

IntPolynomial radicand() { return IntPolynomial{4, 0, 1}; }

namespace {

bool strict(Sign s) { return s == Sign::positive || s == Sign::negative; }

// +1 for positive / nonnegative claims, -1 otherwise
int direction(Sign s) { return s == Sign::positive || s == Sign::nonnegative ? 1 : -1; }

bool sign_ok(int v, Sign s) {
  switch (s) {
  case Sign::positive: return v > 0;
  case Sign::negative: return v < 0;
  case Sign::nonnegative: return v >= 0;
  case Sign::nonpositive: return v <= 0;
  }
  return false;
}

bool in_domain(const Rational& x, Domain d) {
  switch (d) {
  case Domain::reals: return true;
  case Domain::reals_except_zero: return sgn(x) != 0;
  case Domain::positive: return sgn(x) > 0;
  case Domain::negative: return sgn(x) < 0;
  }
  return false;
}

// one sample per connected component of the domain
std::vector<Rational> component_samples(Domain d) {
  switch (d) {
  case Domain::reals: return {Rational(0)};
  case Domain::reals_except_zero: return {Rational(-1), Rational(1)};
  case Domain::positive: return {Rational(1)};
  case Domain::negative: return {Rational(-1)};
  }
  return {};
}

int component_of(const Rational& x, Domain d) { return d == Domain::reals_except_zero && sgn(x) > 0 ? 1 : 0; }

int roots_in_domain(const SignCertificate& c) {
  switch (c.domain) {
  case Domain::reals: return c.roots_negative + c.roots_zero + c.roots_positive;
  case Domain::reals_except_zero: return c.roots_negative + c.roots_positive;
  case Domain::positive: return c.roots_positive;
  case Domain::negative: return c.roots_negative;
  }
  return 0;
}

void count_roots(SignCertificate& c, const SturmChain& chain) {
  c.roots_zero = c.witness.sign_at(Rational(0)) == 0 ? 1 : 0;
  c.roots_positive = chain.count_roots_above(Rational(0));
  c.roots_negative = chain.count_roots_below(Rational(0)) - c.roots_zero;
}

// sign of a(x) + b(x) sqrt(x^2 + 4), exact at rational x
int radical_sign_at(const IntPolynomial& a, const IntPolynomial& b, const Rational& x) {
  const Rational av = a.eval(x), bv = b.eval(x);
  const int sa = sgn(av), sb = sgn(bv);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational g = av * av - (x * x + 4) * bv * bv;
  return sgn(g) * sa;
}

// closest root of w to zero inside the domain, positive side first on ties
std::pair<Rational, Rational> root_witness(const IntPolynomial& w, Domain d) {
  RealRoots roots(w);
  std::optional<std::size_t> best;
  Rational best_abs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& e = roots.enclosures()[i];
    const Rational m = e.midpoint();
    const bool inside = e.is_exact() ? in_domain(m, d) : (in_domain(e.lo, d) || in_domain(e.hi, d));
    if (!inside) continue;
    const Rational am = abs(m);
    if (!best || am < best_abs || (am == best_abs && sgn(m) > 0)) {
      best = i;
      best_abs = am;
    }
  }
  if (!best) throw error("no root of the witness lies in the domain");
  roots.refine(*best, Rational(1, BigInt(1) << 30));
  const auto& e = roots.enclosures()[*best];
  return {e.lo, e.hi};
}

long double eval_with_bound(const IntPolynomial& p, long double x, long double& bound) {
  long double v = 0, b = 0;
  const long double ax = std::fabs(x);
  for (int k = p.degree(); k >= 0; --k) {
    const long double c = p.coeff(k).get_d();
    v = v * x + c;
    b = b * ax + std::fabs(c);
  }
  bound = b;
  return v;
}

SignCertificate composite(std::string id, std::vector<SignCertificate> parts) {
  SignCertificate c;
  c.claim_id = std::move(id);
  c.rule = "all";
  c.parts = std::move(parts);
  bool all = true, refuted = false;
  for (const auto& p : c.parts) {
    all = all && p.certified();
    if (p.verdict == Verdict::refuted && !refuted) {
      refuted = true;
      c.counterexample = p.counterexample;
      c.note = p.claim_id + " refuted";
    }
  }
  c.verdict = all ? Verdict::certified : refuted ? Verdict::refuted : Verdict::inconclusive;
  return c;
}

} // namespace

SignCertificate certify_poly_sign(const IntPolynomial& p, Domain domain, Sign sign, std::string claim_id) {
  if (p.is_zero()) throw domain_error("cannot certify the sign of the zero polynomial");
  SignCertificate c;
  c.claim_id = std::move(claim_id);
  c.rule = "sturm";
  c.polynomials = {p};
  c.domain = domain;
  c.sign = sign;

  const auto factors = square_free_decomposition(p);
  const BigInt lead_sign = sgn(p.leading());
  IntPolynomial w = IntPolynomial::constant(lead_sign), cof = IntPolynomial::constant(1);
  if (strict(sign)) {
    // witness has the roots of p, each once
    int top = 1;
    for (const auto& f : factors) {
      w *= f.factor;
      top = std::max(top, f.multiplicity);
    }
    c.witness_power = top;
  } else {
    for (const auto& f : factors) {
      if (f.multiplicity % 2 == 1) w *= f.factor;
      cof *= f.factor.pow(f.multiplicity / 2);
    }
  }
  c.witness = w;
  c.cofactor = cof;
  SturmChain chain(w);
  c.chain = chain.sequence();
  count_roots(c, chain);

  // strict claims read the sign of p itself; otherwise the sign of w decides
  const IntPolynomial& sampled = strict(sign) ? p : w;
  for (const auto& x : component_samples(domain)) c.samples.push_back({x, sampled.sign_at(x)});

  if (roots_in_domain(c) > 0) {
    c.verdict = Verdict::refuted;
    c.counterexample = root_witness(w, domain);
    c.note = "root in domain";
    return c;
  }
  for (const auto& s : c.samples)
    if (!sign_ok(s.sign, sign)) {
      c.verdict = Verdict::refuted;
      c.counterexample = std::pair{s.x, s.x};
      c.note = "wrong sign at sample";
      return c;
    }
  c.verdict = Verdict::certified;
  return c;
}

SignCertificate certify_radical_sign(const IntPolynomial& a, const IntPolynomial& b, Domain domain, Sign sign,
                                     std::string claim_id) {
  if (b.is_zero()) throw domain_error("radical coefficient b must be nonzero");
  SignCertificate c;
  c.claim_id = claim_id;
  c.polynomials = {a, b};
  c.domain = domain;
  c.sign = sign;
  const Sign dir = direction(sign) > 0 ? Sign::positive : Sign::negative;
  const IntPolynomial g = a * a - radicand() * b * b;

  struct Attempt {
    const char* rule;
    const IntPolynomial* first;
    Sign gap_sign;
    bool same_sign;
  };
  const Attempt attempts[] = {{"b-dominant", &b, Sign::negative, false},
                              {"a-dominant", &a, Sign::positive, false},
                              {"same-sign", &a, Sign::positive, true}};
  for (const auto& at : attempts) {
    if (at.first->is_zero()) continue;
    SignCertificate lead = certify_poly_sign(*at.first, domain, dir, claim_id + (at.same_sign ? ".a" : ".lead"));
    if (!lead.certified()) continue;
    SignCertificate second = at.same_sign ? certify_poly_sign(b, domain, dir, claim_id + ".b")
                                          : certify_poly_sign(g, domain, at.gap_sign, claim_id + ".gap");
    if (!second.certified()) continue;
    c.rule = at.rule;
    c.parts = {std::move(lead), std::move(second)};
    c.verdict = Verdict::certified;
    return c;
  }

  // No rule applies. The sign is constant between real roots of g, so
  // sampling every gap finds a counterexample if one exists away from them.
  c.rule = "search";
  std::vector<Rational> points;
  RealRoots roots(g);
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& e : roots.enclosures()) {
    cuts.push_back(e.lo);
    cuts.push_back(e.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  points.push_back(cuts.front() - 1);
  points.push_back(cuts.back() + 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i] < cuts[i + 1]) points.push_back((cuts[i] + cuts[i + 1]) / 2);
  for (const auto& x : component_samples(domain)) points.push_back(x);
  std::sort(points.begin(), points.end(), [](const Rational& l, const Rational& r) {
    return abs(l) < abs(r) || (abs(l) == abs(r) && l > r);
  });
  for (const auto& x : points) {
    if (!in_domain(x, domain)) continue;
    const int s = radical_sign_at(a, b, x);
    c.samples.push_back({x, s});
    if (!sign_ok(s, sign)) {
      c.verdict = Verdict::refuted;
      c.counterexample = std::pair{x, x};
      c.note = "wrong sign at sample";
      return c;
    }
  }
  c.verdict = Verdict::inconclusive;
  c.note = "no reduction rule applies";
  return c;
}

SignCertificate certify_identity(const IntPolynomial& lhs, const std::vector<IntPolynomial>& factors,
                                 std::string claim_id) {
  SignCertificate c;
  c.claim_id = std::move(claim_id);
  c.rule = "identity";
  c.polynomials.push_back(lhs);
  IntPolynomial rhs = IntPolynomial::constant(1);
  for (const auto& f : factors) {
    c.polynomials.push_back(f);
    rhs *= f;
  }
  if (lhs == rhs) {
    c.verdict = Verdict::certified;
    return c;
  }
  c.verdict = Verdict::refuted;
  // two distinct polynomials of degree <= d differ somewhere in 0..d+1
  const int d = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= d + 1; ++k)
    if (lhs.eval(BigInt(k)) != rhs.eval(BigInt(k))) {
      c.counterexample = std::pair{Rational(k), Rational(k)};
      break;
    }
  c.note = "sides differ";
  return c;
}

bool replay_certificate(const SignCertificate& c) {
  if (c.rule == "all") {
    Verdict v = Verdict::certified;
    bool refuted = false, all = true;
    for (const auto& p : c.parts) {
      if (!replay_certificate(p)) return false;
      all = all && p.certified();
      refuted = refuted || p.verdict == Verdict::refuted;
    }
    v = all ? Verdict::certified : refuted ? Verdict::refuted : Verdict::inconclusive;
    return v == c.verdict;
  }
  if (c.rule == "grid") return (c.grid_points > 0 && c.grid_contradictions == 0) == c.certified();
  if (c.rule == "identity") {
    if (c.polynomials.empty()) return false;
    IntPolynomial rhs = IntPolynomial::constant(1);
    for (std::size_t i = 1; i < c.polynomials.size(); ++i) rhs *= c.polynomials[i];
    return (c.polynomials[0] == rhs) == c.certified();
  }
  if (c.rule == "sturm") {
    if (c.polynomials.size() != 1 || c.chain.empty()) return false;
    const IntPolynomial& p = c.polynomials[0];
    const IntPolynomial& w = c.witness;
    if (c.chain[0] != w.primitive_part()) return false;
    if (!is_valid_sturm_chain(c.chain)) return false;
    if (strict(c.sign)) {
      // same real roots: w | p and p | w^k
      const int k = c.witness_power;
      if (k < 1 || k > p.degree() + 1) return false;
      if (!divides(w, p) || !divides(p, w.pow(k))) return false;
    } else {
      const IntPolynomial q = exact_quotient(p, w * c.cofactor * c.cofactor);
      if (q.degree() != 0 || sgn(q.coeff(0)) <= 0) return false;
    }
    SignCertificate counts = c;
    count_roots(counts, SturmChain::from_sequence(c.chain));
    if (counts.roots_negative != c.roots_negative || counts.roots_zero != c.roots_zero ||
        counts.roots_positive != c.roots_positive)
      return false;
    // every component carries a sample with the recorded sign
    const IntPolynomial& sampled = strict(c.sign) ? p : w;
    std::vector<bool> covered(c.domain == Domain::reals_except_zero ? 2 : 1, false);
    bool samples_ok = true;
    for (const auto& s : c.samples) {
      if (!in_domain(s.x, c.domain) || sampled.sign_at(s.x) != s.sign) return false;
      covered[component_of(s.x, c.domain)] = true;
      samples_ok = samples_ok && sign_ok(s.sign, c.sign);
    }
    const bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    if (roots_in_domain(counts) > 0) {
      if (c.verdict != Verdict::refuted || !c.counterexample) return false;
      const auto& [lo, hi] = *c.counterexample;
      const SturmChain chain = SturmChain::from_sequence(c.chain);
      const int inside = chain.count_roots(lo, hi) + (w.sign_at(lo) == 0 ? 1 : 0);
      return inside > 0;
    }
    if (!all_covered) return false;
    return samples_ok ? c.certified() : c.verdict == Verdict::refuted;
  }
  if (c.rule == "b-dominant" || c.rule == "a-dominant" || c.rule == "same-sign") {
    if (c.polynomials.size() != 2 || c.parts.size() != 2 || !c.certified()) return false;
    const IntPolynomial& a = c.polynomials[0];
    const IntPolynomial& b = c.polynomials[1];
    const Sign dir = direction(c.sign) > 0 ? Sign::positive : Sign::negative;
    const IntPolynomial g = a * a - radicand() * b * b;
    const SignCertificate& first = c.parts[0];
    const SignCertificate& second = c.parts[1];
    if (first.domain != c.domain || second.domain != c.domain) return false;
    if (!first.certified() || !second.certified() || first.sign != dir) return false;
    if (c.rule == "b-dominant") {
      if (first.polynomials[0] != b || second.polynomials[0] != g || second.sign != Sign::negative) return false;
    } else if (c.rule == "a-dominant") {
      if (first.polynomials[0] != a || second.polynomials[0] != g || second.sign != Sign::positive) return false;
    } else {
      if (first.polynomials[0] != a || second.polynomials[0] != b || second.sign != dir) return false;
    }
    return replay_certificate(first) && replay_certificate(second);
  }
  if (c.rule == "search") {
    if (c.polynomials.size() != 2) return false;
    if (c.verdict == Verdict::refuted) {
      if (!c.counterexample) return false;
      const Rational& x = c.counterexample->first;
      return in_domain(x, c.domain) && !sign_ok(radical_sign_at(c.polynomials[0], c.polynomials[1], x), c.sign);
    }
    return c.verdict == Verdict::inconclusive;
  }
  return false;
}

void corroborate_on_grid(SignCertificate& c, int points) {
  c.grid_points = 0;
  c.grid_contradictions = 0;
  if (c.rule == "all") {
    for (auto& p : c.parts) {
      corroborate_on_grid(p, points);
      c.grid_points += p.grid_points;
      c.grid_contradictions += p.grid_contradictions;
    }
    return;
  }
  if (c.rule == "identity" || c.rule == "grid" || !c.certified()) return;
  const bool radical = c.polynomials.size() == 2;
  constexpr long double eps = 64 * std::numeric_limits<long double>::epsilon();
  for (int k = 0; k < points; ++k) {
    const long double x = -10.0L + 20.0L * (k + 0.5L) / points;
    if (!in_domain(Rational(static_cast<double>(x)), c.domain)) continue;
    long double v, bound;
    if (radical) {
      long double ba, bb;
      const long double s = std::sqrt(x * x + 4);
      const long double av = eval_with_bound(c.polynomials[0], x, ba);
      const long double bv = eval_with_bound(c.polynomials[1], x, bb);
      v = av + bv * s;
      bound = ba + bb * s;
    } else {
      v = eval_with_bound(c.polynomials[0], x, bound);
    }
    ++c.grid_points;
    const int s = std::fabs(v) <= eps * bound ? 0 : (v > 0 ? 1 : -1);
    // a rounding-level value cannot contradict a strict sign
    if (s != 0 && !sign_ok(s, c.sign)) ++c.grid_contradictions;
  }
}

ClaimInputs default_claim_inputs() {
  ClaimInputs in;
  in.f8 = f8_poly();
  in.f7 = f7_poly();
  in.p10 = IntPolynomial{16, 0, 51, 0, 62, 0, 36, 0, 10, 0, 1};
  in.beta_odd = IntPolynomial{0, 74, 0, 93, 0, 47, 0, 11, 0, 1};
  in.beta_even = IntPolynomial{52, 0, 111, 0, 85, 0, 27, 0, 3};
  for (int i = 0; i <= 4; ++i) {
    in.p.push_back(p_poly(i));
    in.r.push_back(r_poly(i));
  }
  in.p4_gap = IntPolynomial{121, 0, 248, 0, 225, 0, 104, 0, 24, 0, 2};
  return in;
}

namespace {

SignCertificate claim_c1(const ClaimInputs& in) {
  const IntPolynomial x = IntPolynomial::x();
  // 2 (Z1 f8 + f7) = (x f8 + 2 f7) + f8 sqrt(x^2+4)
  const IntPolynomial a = x * in.f8 + in.f7 * BigInt(2);
  std::vector<SignCertificate> parts;
  parts.push_back(certify_poly_sign(in.p10, Domain::reals, Sign::positive, "C1.p10"));
  parts.push_back(certify_identity(a * a - radicand() * in.f8 * in.f8, {IntPolynomial::constant(-4), in.p10},
                                   "C1.identity"));
  parts.push_back(certify_radical_sign(a, in.f8, Domain::reals, Sign::positive, "C1.z1f8+f7"));
  parts.push_back(certify_radical_sign(a, -in.f8, Domain::reals, Sign::negative, "C1.z2f8+f7"));
  parts.push_back(certify_radical_sign(x, IntPolynomial::constant(1), Domain::reals, Sign::positive, "C1.z1"));
  parts.push_back(certify_radical_sign(x, IntPolynomial::constant(-1), Domain::reals, Sign::negative, "C1.z2"));
  return composite("C1", std::move(parts));
}

SignCertificate claim_c2(const ClaimInputs& in) {
  const IntPolynomial& u = in.beta_odd;
  const IntPolynomial& v = in.beta_even;
  std::vector<SignCertificate> parts;
  parts.push_back(certify_poly_sign(u * u - radicand() * v * v, Domain::reals, Sign::negative, "C2.gap"));
  parts.push_back(certify_radical_sign(u, v, Domain::reals, Sign::positive, "C2.beta2"));
  parts.push_back(certify_radical_sign(-u, v, Domain::reals, Sign::positive, "C2.gamma1"));
  return composite("C2", std::move(parts));
}

SignCertificate claim_c3(const ClaimInputs& in) {
  std::vector<SignCertificate> parts;
  for (int i = 1; i <= 3; ++i) {
    const std::string id = "C3." + std::to_string(i);
    const IntPolynomial& p = in.p[i];
    const IntPolynomial& r = in.r[i];
    std::vector<SignCertificate> sub;
    sub.push_back(certify_poly_sign(p * p - radicand() * r * r, Domain::reals, Sign::negative, id + ".gap"));
    sub.push_back(certify_radical_sign(p, r, Domain::reals, Sign::positive, id + ".plus"));
    sub.push_back(certify_radical_sign(p, -r, Domain::reals, Sign::negative, id + ".minus"));
    parts.push_back(composite(id, std::move(sub)));
  }
  return composite("C3", std::move(parts));
}

SignCertificate claim_c4(const ClaimInputs& in) {
  const IntPolynomial& p = in.p[4];
  const IntPolynomial& r = in.r[4];
  const IntPolynomial x2p1{1, 0, 1};
  const IntPolynomial rhs = IntPolynomial::constant(4) * x2p1 * x2p1 * in.p4_gap;
  std::vector<SignCertificate> parts;
  parts.push_back(certify_identity(p * p - radicand() * r * r, {IntPolynomial::constant(4), x2p1.pow(2), in.p4_gap},
                                   "C4.identity"));
  parts.push_back(certify_poly_sign(in.p4_gap, Domain::reals, Sign::positive, "C4.factor"));
  parts.push_back(certify_poly_sign(rhs, Domain::reals_except_zero, Sign::positive, "C4.rhs"));
  // p4 - q4 > 0 for x > 0 and p4 + q4 > 0 for x < 0
  parts.push_back(certify_radical_sign(p, -r, Domain::positive, Sign::positive, "C4.minus"));
  parts.push_back(certify_radical_sign(p, r, Domain::negative, Sign::positive, "C4.plus"));
  SignCertificate c = composite("C4", std::move(parts));
  c.note = "value at x = 1: " + rhs.eval(BigInt(1)).get_str();
  return c;
}

SignCertificate claim_factored(const std::string& id, int t) {
  std::vector<SignCertificate> parts;
  int k = 0;
  for (const auto& f : f_factored_factors(t))
    parts.push_back(certify_poly_sign(f, Domain::reals_except_zero, Sign::positive, id + ".factor" + std::to_string(++k)));
  parts.push_back(certify_poly_sign(f_factored_poly(t), Domain::reals_except_zero, Sign::negative, id + ".product"));
  return composite(id, std::move(parts));
}

SignCertificate claim_c7(const ClaimInputs& in) {
  std::vector<SignCertificate> parts;
  parts.push_back(certify_radical_sign(in.p[0], in.r[0], Domain::positive, Sign::positive, "C7.plus"));
  parts.push_back(certify_radical_sign(in.p[0], -in.r[0], Domain::negative, Sign::positive, "C7.minus"));
  return composite("C7", std::move(parts));
}

SignCertificate claim_c8() {
  SignCertificate c;
  c.claim_id = "C8";
  c.rule = "grid";
  c.evidence = EvidenceLevel::grid;
  c.polynomials = {f_factored_poly(5), f_factored_poly(3)};
  c.domain = Domain::reals;
  c.sign = Sign::nonpositive;
  constexpr int points = 1000;
  constexpr double tol = 1e-9;
  double worst = 0;
  for (int k = 0; k < points; ++k) {
    const double x = -10.0 + 20.0 * (k + 0.5) / points;
    const ClosedFormSample s5 = eval_sample(x, 5, 5);
    const ClosedFormSample s3 = eval_sample(x, 3, 5);
    const double f5 = eval_f_factored(5, x), f3 = eval_f_factored(3, x);
    const double d = std::max({std::fabs(s5.f_val - f5) / std::max(std::fabs(f5), 1.0),
                               std::fabs(s5.f_from_d - f5) / std::max(std::fabs(f5), 1.0),
                               std::fabs(s3.k_val - f3) / std::max(std::fabs(f3), 1.0)});
    worst = std::max(worst, d);
    ++c.grid_points;
    if (!(d <= tol)) ++c.grid_contradictions;
  }
  c.verdict = c.grid_contradictions == 0 ? Verdict::certified : Verdict::refuted;
  char buf[64];
  std::snprintf(buf, sizeof buf, "max relative deviation %.3e", worst);
  c.note = buf;
  return c;
}

} // namespace

SignCertificate run_claim(const std::string& id, const ClaimInputs& in) {
  SignCertificate c;
  if (id == "C1") c = claim_c1(in);
  else if (id == "C2") c = claim_c2(in);
  else if (id == "C3") c = claim_c3(in);
  else if (id == "C4") c = claim_c4(in);
  else if (id == "C5") c = claim_factored("C5", 5);
  else if (id == "C6") c = claim_factored("C6", 3);
  else if (id == "C7") c = claim_c7(in);
  else if (id == "C8") return claim_c8();
  else throw domain_error("unknown claim id: " + id);
  corroborate_on_grid(c);
  return c;
}

bool ClaimReport::all_certified() const {
  return std::all_of(claims.begin(), claims.end(), [](const SignCertificate& c) { return c.certified(); });
}

ClaimReport run_claim_suite(const ClaimInputs& inputs) {
  ClaimReport report;
  for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"}) report.claims.push_back(run_claim(id, inputs));
  return report;
}

namespace {

nlohmann::json to_json(const SignCertificate& c) {
  nlohmann::json j;
  j["claim_id"] = c.claim_id;
  j["rule"] = c.rule;
  j["verdict"] = to_string(c.verdict);
  j["evidence"] = to_string(c.evidence);
  if (c.rule != "all") {
    j["domain"] = to_string(c.domain);
    j["sign"] = to_string(c.sign);
  }
  auto polys = nlohmann::json::array();
  for (const auto& p : c.polynomials) polys.push_back(to_decimal_strings(p));
  j["polynomials"] = polys;
  if (c.rule == "sturm") {
    j["roots"] = {{"negative", c.roots_negative}, {"zero", c.roots_zero}, {"positive", c.roots_positive}};
    j["witness"] = to_decimal_strings(c.witness);
  }
  if (!c.samples.empty()) {
    auto s = nlohmann::json::array();
    for (const auto& sp : c.samples) s.push_back({{"x", sp.x.get_str()}, {"sign", sp.sign}});
    j["samples"] = s;
  }
  if (c.counterexample) j["counterexample"] = {c.counterexample->first.get_str(), c.counterexample->second.get_str()};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.grid_points > 0) j["grid"] = {{"points", c.grid_points}, {"contradictions", c.grid_contradictions}};
  if (!c.parts.empty()) {
    auto parts = nlohmann::json::array();
    for (const auto& p : c.parts) parts.push_back(to_json(p));
    j["parts"] = parts;
  }
  return j;
}

} // namespace

std::string certificate_json(const SignCertificate& cert) { return to_json(cert).dump(2); }

std::string report_json(const ClaimReport& report) {
  nlohmann::json j;
  j["all_certified"] = report.all_certified();
  auto claims = nlohmann::json::array();
  for (const auto& c : report.claims) claims.push_back(to_json(c));
  j["claims"] = claims;
  return j.dump(2);
}

} // namespace uenergy
