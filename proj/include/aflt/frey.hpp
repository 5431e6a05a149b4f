#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aflt/ideal.hpp"
#include "aflt/number_field.hpp"

namespace aflt {

// alpha + beta * p for a prime exponent p left symbolic.
struct ValuationForm {
  long alpha = 0;
  long beta = 0;

  mpz_class eval(long p) const;
  // Sign for every p above sign_threshold().
  int sign() const;
  long sign_threshold() const;
  // For p > |alpha|: p | (alpha + beta p) iff alpha == 0.
  bool divisible_by_p() const { return alpha == 0; }
  long divisibility_threshold() const;
  // Both rules hold for every p above this value.
  long threshold() const;
  std::string to_string() const;

  bool operator==(const ValuationForm& o) const { return alpha == o.alpha && beta == o.beta; }
};

enum class FreyFamily { TwoPowerTwist, PPTwo };

const char* family_name(FreyFamily f);

struct FreySpec {
  FreyFamily family = FreyFamily::TwoPowerTwist;
  long r = 1;  // TwoPowerTwist only
  FieldElement a, b, c;
  std::optional<long> p;  // nullopt for symbolic p
};

// Closed forms from the Frey model, evaluated when p is concrete.
struct FreyInvariants {
  std::string delta_expr, c4_expr, j_expr, j_alt_expr, c4_alt_expr;
  std::optional<FieldElement> delta, c4, j;
  // Second published form: j via a^2p + b^2p + a^p b^p for TwoPowerTwist,
  // c4 via 4c^2 - 3a^p for PPTwo. Both need the defining relation.
  std::optional<FieldElement> j_alt, c4_alt;
};

// Weierstrass coefficients [a1, a2, a3, a4, a6] and the standard invariants.
struct WeierstrassModel {
  std::array<FieldElement, 5> a;
  FieldElement b2, b4, b6, b8, c4, c6, delta;
  std::optional<FieldElement> j;
};

WeierstrassModel weierstrass(const std::array<FieldElement, 5>& a);
// Literal model of the Frey curve. Requires concrete p.
WeierstrassModel frey_model(const FreySpec& spec);

// Errors: RelationViolated, InvalidArgument (r < 1, p not prime).
FreyInvariants invariants(const FreySpec& spec);

struct CrossCheck {
  bool delta = false, c4 = false, j = false;
  bool j_alt = false, c4_alt = false;
  bool identity = false;  // c4^3 - c6^2 == 1728 delta
  bool ok() const { return delta && c4 && j && j_alt && c4_alt && identity; }
};

using InvariantMutation = std::function<void(FreyInvariants&)>;

// Compares invariants() with the literal model. The mutation hook edits the
// closed forms before comparison. Errors: RelationViolated.
CrossCheck concrete_cross_check(const FreySpec& spec, const InvariantMutation& mutate = {});

enum class ReductionType { Good, Multiplicative, PotentiallyMultiplicative, PotentiallyGood };

const char* reduction_name(ReductionType t);

// v_P(a), v_P(b), v_P(c) of a hypothetical solution.
struct Divisibility {
  long va = 0, vb = 0, vc = 0;
};

struct ReductionReport {
  PrimeIdeal prime;
  ValuationForm v_delta, v_c4, v_j;
  bool c4_exact = true;  // otherwise v_c4 and v_j are lower bounds
  ReductionType type = ReductionType::Good;
  bool flag_p_in_inertia = false;
  bool flag_3_in_inertia = false;
  long p_threshold = 0;  // conclusions hold for primes p above this
};

// Errors: InconsistentDivisibility, UnsupportedCase, InvalidArgument.
ReductionReport valuation_profile(FreyFamily family, long r, const PrimeIdeal& P,
                                  const Divisibility& d);

struct ConductorTerm {
  std::string prime;
  long lo = 0, hi = 0;  // exponent range
  bool in_level_lowered = true;
  std::string role;  // "S_K", "m", "odd"
};

struct ConductorShape {
  std::vector<ConductorTerm> terms;
  bool symbolic_odd_part = true;  // the formal product over odd q | abc
  std::string conductor, level_lowered;
};

// Odd primes of abc (ab for PPTwo) are taken from the triple when it is
// nonzero; m applies to TwoPowerTwist only.
ConductorShape conductor_shape(const FreySpec& spec, const std::optional<PrimeIdeal>& m);

// Errors: DegenerateLambda (lambda in {0, 1}).
FieldElement legendre_j(const FieldElement& lambda);
std::array<FieldElement, 6> lambda_orbit(const FieldElement& lambda);
// Errors: DegenerateLambda, InvalidArgument (lambda + mu != 1).
FieldElement j_from_lambda_mu(const FieldElement& lambda, const FieldElement& mu);

bool is_trivial_2r(const FieldElement& a, const FieldElement& b, const FieldElement& c);
bool is_trivial_pp2(const FieldElement& a, const FieldElement& b, const FieldElement& c);

}  // namespace aflt
