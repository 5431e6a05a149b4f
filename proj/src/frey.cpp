#include "aflt/frey.hpp"

#include <algorithm>
#include <cstdlib>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"

namespace aflt {

namespace {

FieldElement two_pow(const NumberField& k, long e) {
  mpz_class t = 1;
  t <<= static_cast<unsigned long>(std::labs(e));
  return FieldElement(k, e >= 0 ? mpq_class(t) : mpq_class(1, t));
}

std::string pow2_str(long e) { return "2^" + std::to_string(e); }

void check_spec(const FreySpec& s) {
  const NumberField& k = s.a.field();
  if (s.b.field() != k || s.c.field() != k)
    throw Error(ErrorCode::InvalidArgument, "a, b, c lie in different fields");
  if (s.family == FreyFamily::TwoPowerTwist && s.r < 1)
    throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (!s.p) return;
  if (*s.p < 2 || !intfac::is_prime(static_cast<unsigned long>(*s.p)))
    throw Error(ErrorCode::InvalidArgument, "exponent p must be prime");
  long p = *s.p;
  FieldElement lhs = s.a.pow(p) + s.b.pow(p);
  if (s.family == FreyFamily::TwoPowerTwist) {
    if (lhs != two_pow(k, s.r) * s.c.pow(p))
      throw Error(ErrorCode::RelationViolated,
                  "a^p + b^p != 2^" + std::to_string(s.r) + " c^p for p = " + std::to_string(p));
  } else if (lhs != s.c * s.c) {
    throw Error(ErrorCode::RelationViolated, "a^p + b^p != c^2 for p = " + std::to_string(p));
  }
}

bool opt_equal(const std::optional<FieldElement>& x, const std::optional<FieldElement>& y) {
  if (!x || !y) return !x && !y;
  return *x == *y;
}

}  // namespace

mpz_class ValuationForm::eval(long p) const { return mpz_class(alpha) + mpz_class(beta) * p; }

int ValuationForm::sign() const {
  long s = beta != 0 ? beta : alpha;
  return (s > 0) - (s < 0);
}

long ValuationForm::sign_threshold() const {
  return std::labs(alpha) / std::max(1L, std::labs(beta));
}

long ValuationForm::divisibility_threshold() const { return std::labs(alpha); }

long ValuationForm::threshold() const {
  return std::max(sign_threshold(), divisibility_threshold());
}

std::string ValuationForm::to_string() const {
  if (beta == 0) return std::to_string(alpha);
  std::string s;
  if (alpha != 0) s = std::to_string(alpha) + (beta > 0 ? " + " : " - ");
  else if (beta < 0) s = "-";
  long b = std::labs(beta);
  if (b != 1) s += std::to_string(b);
  return s + "p";
}

const char* family_name(FreyFamily f) {
  return f == FreyFamily::TwoPowerTwist ? "two-power-twist" : "pp2";
}

const char* reduction_name(ReductionType t) {
  switch (t) {
    case ReductionType::Good: return "Good";
    case ReductionType::Multiplicative: return "Multiplicative";
    case ReductionType::PotentiallyMultiplicative: return "PotentiallyMultiplicative";
    case ReductionType::PotentiallyGood: return "PotentiallyGood";
  }
  return "Unknown";
}

WeierstrassModel weierstrass(const std::array<FieldElement, 5>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  const NumberField& k = a1.field();
  auto c = [&](long v) { return FieldElement(k, mpq_class(v)); };
  FieldElement b2 = a1 * a1 + c(4) * a2;
  FieldElement b4 = c(2) * a4 + a1 * a3;
  FieldElement b6 = a3 * a3 + c(4) * a6;
  FieldElement b8 = a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  FieldElement c4 = b2 * b2 - c(24) * b4;
  FieldElement c6 = -(b2 * b2 * b2) + c(36) * b2 * b4 - c(216) * b6;
  FieldElement delta = -(b2 * b2 * b8) - c(8) * b4 * b4 * b4 - c(27) * b6 * b6 + c(9) * b2 * b4 * b6;
  WeierstrassModel m{a, b2, b4, b6, b8, c4, c6, delta, std::nullopt};
  if (!delta.is_zero()) m.j = c4 * c4 * c4 / delta;
  return m;
}

WeierstrassModel frey_model(const FreySpec& spec) {
  check_spec(spec);
  if (!spec.p) throw Error(ErrorCode::InvalidArgument, "Weierstrass model needs a concrete p");
  const NumberField& k = spec.a.field();
  long p = *spec.p;
  FieldElement zero(k), A = spec.a.pow(p), B = spec.b.pow(p);
  if (spec.family == FreyFamily::TwoPowerTwist)
    return weierstrass({zero, B - A, zero, -(A * B), zero});
  FieldElement four(k, mpq_class(4));
  return weierstrass({zero, four * spec.c, zero, four * A, zero});
}

FreyInvariants invariants(const FreySpec& spec) {
  check_spec(spec);
  FreyInvariants out;
  const NumberField& k = spec.a.field();
  if (spec.family == FreyFamily::TwoPowerTwist) {
    long r = spec.r;
    std::string core = "a^(2p) + " + pow2_str(r) + "*b^p*c^p";
    out.delta_expr = pow2_str(4 + 2 * r) + "*(a*b*c)^(2p)";
    out.c4_expr = "2^4*(" + core + ")";
    out.j_expr = pow2_str(8 - 2 * r) + "*(" + core + ")^3/(a*b*c)^(2p)";
    out.j_alt_expr = pow2_str(8 - 2 * r) + "*(a^(2p) + b^(2p) + a^p*b^p)^3/(a*b*c)^(2p)";
    if (!spec.p) return out;
    long p = *spec.p;
    FieldElement A = spec.a.pow(p), B = spec.b.pow(p), C = spec.c.pow(p);
    FieldElement abc2p = A * A * B * B * C * C;
    FieldElement s = A * A + two_pow(k, r) * B * C;
    FieldElement s_alt = A * A + B * B + A * B;
    out.delta = two_pow(k, 4 + 2 * r) * abc2p;
    out.c4 = two_pow(k, 4) * s;
    if (!abc2p.is_zero()) {
      out.j = two_pow(k, 8 - 2 * r) * s * s * s / abc2p;
      out.j_alt = two_pow(k, 8 - 2 * r) * s_alt * s_alt * s_alt / abc2p;
    }
  } else {
    out.delta_expr = "2^12*(a^2*b)^p";
    out.c4_expr = "2^6*(a^p + 4*b^p)";
    out.c4_alt_expr = "2^6*(4*c^2 - 3*a^p)";
    out.j_expr = "2^6*(a^p + 4*b^p)^3/(a^2*b)^p";
    if (!spec.p) return out;
    long p = *spec.p;
    FieldElement A = spec.a.pow(p), B = spec.b.pow(p);
    FieldElement four(k, mpq_class(4)), three(k, mpq_class(3));
    FieldElement a2b = A * A * B;
    FieldElement s = A + four * B;
    out.delta = two_pow(k, 12) * a2b;
    out.c4 = two_pow(k, 6) * s;
    out.c4_alt = two_pow(k, 6) * (four * spec.c * spec.c - three * A);
    if (!a2b.is_zero()) out.j = two_pow(k, 6) * s * s * s / a2b;
  }
  return out;
}

CrossCheck concrete_cross_check(const FreySpec& spec, const InvariantMutation& mutate) {
  FreyInvariants inv = invariants(spec);
  WeierstrassModel m = frey_model(spec);
  if (mutate) mutate(inv);
  CrossCheck cc;
  cc.delta = inv.delta && *inv.delta == m.delta;
  cc.c4 = inv.c4 && *inv.c4 == m.c4;
  cc.j = opt_equal(inv.j, m.j);
  cc.j_alt = !inv.j_alt || opt_equal(inv.j_alt, m.j);
  cc.c4_alt = !inv.c4_alt || *inv.c4_alt == m.c4;
  FieldElement lhs = m.c4 * m.c4 * m.c4 - m.c6 * m.c6;
  cc.identity = lhs == FieldElement(m.delta.field(), mpq_class(1728)) * m.delta;
  return cc;
}

ReductionReport valuation_profile(FreyFamily family, long r, const PrimeIdeal& P,
                                  const Divisibility& d) {
  if (d.va < 0 || d.vb < 0 || d.vc < 0)
    throw Error(ErrorCode::InvalidArgument, "valuations of a, b, c must be non-negative");
  if ((d.va > 0) + (d.vb > 0) + (d.vc > 0) > 1)
    throw Error(ErrorCode::InconsistentDivisibility,
                P.to_string() + " declared to divide more than one of a, b, c");
  if (family == FreyFamily::TwoPowerTwist && r < 1)
    throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  ReductionReport rep{.prime = P, .v_delta = {}, .v_c4 = {}, .v_j = {}};
  const bool even = P.q == 2;
  const long v2 = even ? P.e : 0;
  const long k = d.va + d.vb + d.vc;
  auto set = [&](ValuationForm dl, ValuationForm c4, ValuationForm j, ReductionType t, long thr) {
    rep.v_delta = dl;
    rep.v_c4 = c4;
    rep.v_j = j;
    rep.type = t;
    rep.p_threshold = thr;
  };
  if (family == FreyFamily::TwoPowerTwist) {
    if (!even) {
      if (k == 0) {
        set({0, 0}, {0, 0}, {0, 0}, ReductionType::Good, 0);
        rep.c4_exact = false;
      } else {
        set({0, 2 * k}, {0, 0}, {0, -2 * k}, ReductionType::Multiplicative, 0);
      }
    } else if (k > 0) {
      set({(4 + 2 * r) * v2, 2 * k}, {4 * v2, 0}, {2 * (4 - r) * v2, -2 * k},
          ReductionType::PotentiallyMultiplicative, std::max(std::labs((4 - r) * v2), 5L));
    } else {
      if (r != 2 && r != 3)
        throw Error(ErrorCode::UnsupportedCase,
                    "good-reduction branch at primes above 2 needs r in {2, 3}");
      set({(4 + 2 * r) * v2, 0}, {4 * v2, 0}, {(8 - 2 * r) * v2, 0},
          ReductionType::PotentiallyGood, 2);
    }
  } else {
    if (!even) {
      if (d.va > 0) {
        set({0, 2 * d.va}, {0, 0}, {0, -2 * d.va}, ReductionType::Multiplicative, 0);
      } else if (d.vb > 0) {
        set({0, d.vb}, {0, 0}, {0, -d.vb}, ReductionType::Multiplicative, 0);
      } else {
        set({0, 0}, {0, 0}, {0, 0}, ReductionType::Good, 0);
        // c | a^p + b^p forces c4 = 2^6 * 3b^p mod P
        rep.c4_exact = d.vc > 0 && P.q != 3;
      }
    } else if (d.va > 0) {
      set({12 * v2, 2 * d.va}, {8 * v2, 0}, {12 * v2, -2 * d.va},
          ReductionType::PotentiallyMultiplicative, std::max(6 * v2, 5L));
    } else if (d.vb > 0) {
      set({12 * v2, d.vb}, {6 * v2, 0}, {6 * v2, -d.vb}, ReductionType::PotentiallyMultiplicative,
          std::max(6 * v2, 5L));
    } else {
      set({12 * v2, 0}, {6 * v2, 0}, {6 * v2, 0}, ReductionType::PotentiallyGood, 2);
    }
  }
  rep.flag_p_in_inertia = rep.v_j.sign() < 0 && !rep.v_j.divisible_by_p();
  bool pot_good = rep.type == ReductionType::Good || rep.type == ReductionType::PotentiallyGood;
  rep.flag_3_in_inertia = pot_good && rep.v_delta.beta == 0 && rep.v_delta.alpha % 3 != 0;
  return rep;
}

ConductorShape conductor_shape(const FreySpec& spec, const std::optional<PrimeIdeal>& m) {
  check_spec(spec);
  const NumberField& k = spec.a.field();
  const bool fam_a = spec.family == FreyFamily::TwoPowerTwist;
  ConductorShape out;
  for (const auto& P : s_k(k))
    out.terms.push_back({P.to_string(), 0, 2 + 6L * P.e, true, "S_K"});
  if (fam_a && m) {
    long v3 = m->q == 3 ? m->e : 0;
    out.terms.push_back({m->to_string(), 0, 2 + 3 * v3, true, "m"});
  }
  FieldElement prod = fam_a ? spec.a * spec.b * spec.c : spec.a * spec.b;
  if (!prod.is_zero()) {
    out.symbolic_odd_part = false;
    for (const auto& q : support(prod)) {
      if (q.q == 2 || (fam_a && m && q == *m) || valuation(prod, q) <= 0) continue;
      out.terms.push_back({q.to_string(), 1, 1, false, "odd"});
    }
  }
  auto render = [&](bool lowered) {
    std::string s;
    for (const auto& t : out.terms) {
      if (lowered && !t.in_level_lowered) continue;
      if (!s.empty()) s += "*";
      s += t.prime;
      if (t.lo != 1 || t.hi != 1) s += "^[" + std::to_string(t.lo) + "," + std::to_string(t.hi) + "]";
    }
    if (!lowered && out.symbolic_odd_part) {
      if (!s.empty()) s += "*";
      s += fam_a ? "prod(q | abc, q odd, q != m)" : "prod(q | ab, q odd)";
    }
    return s.empty() ? std::string("(1)") : s;
  };
  out.conductor = render(false);
  out.level_lowered = render(true);
  return out;
}

FieldElement legendre_j(const FieldElement& lambda) {
  const NumberField& k = lambda.field();
  FieldElement one(k, mpq_class(1));
  if (lambda.is_zero() || lambda == one)
    throw Error(ErrorCode::DegenerateLambda, "lambda must avoid 0 and 1");
  FieldElement num = lambda * lambda - lambda + one;
  FieldElement den = lambda * (lambda - one);
  return two_pow(k, 8) * num * num * num / (den * den);
}

std::array<FieldElement, 6> lambda_orbit(const FieldElement& lambda) {
  const NumberField& k = lambda.field();
  FieldElement one(k, mpq_class(1));
  if (lambda.is_zero() || lambda == one)
    throw Error(ErrorCode::DegenerateLambda, "lambda must avoid 0 and 1");
  FieldElement inv = lambda.inverse(), mu = one - lambda;
  return {lambda, inv, mu, mu.inverse(), lambda / (lambda - one), (lambda - one) / lambda};
}

FieldElement j_from_lambda_mu(const FieldElement& lambda, const FieldElement& mu) {
  const NumberField& k = lambda.field();
  FieldElement one(k, mpq_class(1));
  if (lambda.is_zero() || lambda == one)
    throw Error(ErrorCode::DegenerateLambda, "lambda must avoid 0 and 1");
  if (lambda + mu != one) throw Error(ErrorCode::InvalidArgument, "lambda + mu != 1");
  FieldElement lm = lambda * mu;
  FieldElement s = one - lm;
  return two_pow(k, 8) * s * s * s / (lm * lm);
}

bool is_trivial_2r(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return (a * b * c).is_zero() || a == b || a == -b;
}

bool is_trivial_pp2(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const NumberField& k = a.field();
  FieldElement one(k, mpq_class(1));
  return (a * b * c).is_zero() || (a == one && b == one && c * c == FieldElement(k, mpq_class(2)));
}

}  // namespace aflt
