#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uenergy/polynomial.hpp"

namespace uenergy {

enum class Domain { reals, reals_except_zero, positive, negative };
enum class Sign { positive, negative, nonnegative, nonpositive };
enum class Verdict { certified, refuted, inconclusive };
enum class EvidenceLevel { exact, grid };

std::string to_string(Domain d);
std::string to_string(Sign s);
std::string to_string(Verdict v);
std::string to_string(EvidenceLevel e);

struct SamplePoint {
  Rational x;
  int sign = 0; // sign of p (strict claims) or of the witness at x
};

// Evidence for a global sign claim. Rules:
//   "sturm"       p has a constant sign on each component of the domain
//   "b-dominant"  sign(a + b sqrt(x^2+4)) = sign(b) when a^2 - (x^2+4) b^2 < 0
//   "a-dominant"  sign(a + b sqrt(x^2+4)) = sign(a) when a^2 - (x^2+4) b^2 > 0
//   "same-sign"   a and b strictly share a sign
//   "identity"    polynomials[0] == product of polynomials[1..]
//   "grid"        floating-point comparison only (evidence level grid)
//   "all"         every part certified
struct SignCertificate {
  std::string claim_id;
  std::string rule;
  std::vector<IntPolynomial> polynomials; // p, or (a, b) for radical claims
  Domain domain = Domain::reals;
  Sign sign = Sign::positive;
  Verdict verdict = Verdict::inconclusive;
  EvidenceLevel evidence = EvidenceLevel::exact;

  // Sturm evidence. For strict signs the witness is the square-free part of p
  // (same real roots); otherwise it is the odd-multiplicity part w with
  // p = w * cofactor^2.
  IntPolynomial witness;
  IntPolynomial cofactor; // non-strict claims only
  int witness_power = 1;  // strict claims: p divides witness^witness_power
  std::vector<IntPolynomial> chain;
  int roots_negative = 0, roots_zero = 0, roots_positive = 0; // distinct roots of witness
  std::vector<SamplePoint> samples;

  std::vector<SignCertificate> parts;

  // refutation: a closed interval on which the claim fails
  std::optional<std::pair<Rational, Rational>> counterexample;
  std::string note;

  int grid_points = 0;
  int grid_contradictions = 0;

  bool certified() const { return verdict == Verdict::certified; }
};

SignCertificate certify_poly_sign(const IntPolynomial& p, Domain domain, Sign sign, std::string claim_id = "");

// Sign of a + b sqrt(x^2 + 4) on the domain. Tries the b-dominant, a-dominant
// and same-sign rules in that order; otherwise searches for a counterexample
// between the real roots of a^2 - (x^2+4) b^2, else reports inconclusive.
SignCertificate certify_radical_sign(const IntPolynomial& a, const IntPolynomial& b, Domain domain, Sign sign,
                                     std::string claim_id = "");

// Exact identity lhs == product of factors.
SignCertificate certify_identity(const IntPolynomial& lhs, const std::vector<IntPolynomial>& factors,
                                 std::string claim_id = "");

// Re-derives the verdict from stored evidence only: checks the witness/chain
// against the polynomial, recounts sign variations on the stored chain and
// re-evaluates stored samples. Returns true when it agrees with cert.verdict.
bool replay_certificate(const SignCertificate& cert);

// Dense floating-point check of a certified sign: points evenly spaced over
// [-10, 10] restricted to the domain. Fills grid_points / grid_contradictions.
void corroborate_on_grid(SignCertificate& cert, int points = 1000);

// Polynomial inputs of the suite; tests tamper with them.
struct ClaimInputs {
  IntPolynomial f8, f7;
  IntPolynomial p10;                   // x^10 + 10x^8 + 36x^6 + 62x^4 + 51x^2 + 16
  IntPolynomial beta_odd, beta_even;   // x^9 + ... + 74x and 3x^8 + ... + 52
  std::vector<IntPolynomial> p, r;     // p_i and r_i (q_i = r_i sqrt(x^2+4)), i = 0..4
  IntPolynomial p4_gap;                // 2x^10 + 24x^8 + 104x^6 + 225x^4 + 248x^2 + 121
};

ClaimInputs default_claim_inputs();

struct ClaimReport {
  std::vector<SignCertificate> claims; // ordered by claim id
  bool all_certified() const;
};

ClaimReport run_claim_suite(const ClaimInputs& inputs = default_claim_inputs());

// Single claim by id ("C1" .. "C8"); domain_error for an unknown id.
SignCertificate run_claim(const std::string& id, const ClaimInputs& inputs = default_claim_inputs());

std::string certificate_json(const SignCertificate& cert);
std::string report_json(const ClaimReport& report);

// x^2 + 4, the radicand of every radical claim
IntPolynomial radicand();

} // namespace uenergy
