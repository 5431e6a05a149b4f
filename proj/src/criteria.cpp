#include "aflt/criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"
#include "aflt/selmer.hpp"
#include "aflt/sunit.hpp"
#include "aflt/units.hpp"

namespace aflt {

namespace {

struct CriterionInfo {
  Criterion c;
  const char* id;
  const char* alias;
};

constexpr CriterionInfo kCriteria[] = {
    {Criterion::WkBound, "wk-bound", "thm-3-2"},
    {Criterion::UkBound, "uk-bound", "thm-3-3"},
    {Criterion::UkExact, "uk-exact", "cor-3-4"},
    {Criterion::PP2Selmer, "pp2-selmer", "thm-5-2"},
    {Criterion::LocalInertRamified, "local-inert-ramified", "thm-7-1"},
    {Criterion::LocalInertSplit3, "local-inert-split3", "cor-7-2"},
    {Criterion::LocalWkRamified, "local-wk-ramified", "thm-7-3-1"},
    {Criterion::LocalWkSplit3, "local-wk-split3", "thm-7-3-2"},
};

const char* kConclusionWk =
    "for all sufficiently large primes p, x^p + y^p = 2^r z^p has no non-trivial solution in W_K";
const char* kConclusionK =
    "for r in {2, 3} and all sufficiently large primes p, x^p + y^p = 2^r z^p has no "
    "non-trivial solution over K";
const char* kConclusionPP2 =
    "for all sufficiently large primes p, x^p + y^p = z^2 has no non-trivial solution in W'_K";

const char* kDiscrepancyPoly = "x^3 - x^2 + 1";

HypothesisStatus exact(const std::string& name, bool holds, const std::string& note = {}) {
  HypothesisStatus h;
  h.name = name;
  h.holds = holds;
  h.note = note;
  return h;
}

HypothesisStatus undetermined(const std::string& name, const std::string& note) {
  HypothesisStatus h = exact(name, false, note);
  h.caveat = Caveat::Undetermined;
  return h;
}

HypothesisStatus totally_real(const NumberField& k) {
  return exact("K totally real", k.totally_real(),
               "signature (" + std::to_string(k.r1()) + ", " + std::to_string(k.r2()) + ")");
}

HypothesisStatus es_condition(const NumberField& k) {
  if (k.degree() % 2 == 1) return exact("(ES)", true, "[K:Q] odd");
  HypothesisStatus h = exact("(ES)", true, "[K:Q] even; modularity conjecture assumed");
  h.caveat = Caveat::AssumedIfNeeded;
  return h;
}

std::string pattern_string(const std::vector<PrimeIdeal>& ps) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += ", ";
    s += "(" + std::to_string(p.e) + "," + std::to_string(p.f) + ")";
  }
  return "[" + s + "]";
}

HypothesisStatus local_prime(const NumberField& k, std::uint64_t q, const std::string& name,
                             bool (*pred)(const SplittingType&)) {
  auto primes = factor_rational_prime(k, q);
  SplittingType st = classify(k.degree(), primes);
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeIdeal& x, const PrimeIdeal& y) { return x.e > y.e; });
  HypothesisStatus h = exact(name, pred(st), std::string("shape ") + pattern_string(primes));
  h.rational_prime = q;
  h.factorization = std::move(primes);
  return h;
}

bool is_inert(const SplittingType& s) { return s.inert; }
bool is_totally_ramified(const SplittingType& s) { return s.totally_ramified; }
bool is_totally_split(const SplittingType& s) { return s.totally_split; }

void add_l_hypotheses(Verdict& v, const NumberField& k, long l) {
  const int n = k.degree();
  bool l_ok = l > 5 && intfac::is_prime(static_cast<unsigned long>(l));
  v.hypotheses.push_back(exact("l > 5 prime", l_ok, "l = " + std::to_string(l)));
  if (l < 2) return;
  v.hypotheses.push_back(exact("gcd(n, l - 1) = 1", std::gcd(static_cast<long>(n), l - 1) == 1,
                               "n = " + std::to_string(n)));
  if (!intfac::is_prime(static_cast<unsigned long>(l))) return;
  v.hypotheses.push_back(local_prime(k, static_cast<std::uint64_t>(l),
                                     std::to_string(l) + " totally ramified", is_totally_ramified));
}

void attach_discrepancy(Verdict& v, const NumberField& k) {
  if (k.poly_string() != kDiscrepancyPoly) return;
  std::string shape;
  for (const auto& h : v.hypotheses)
    if (h.rational_prime && *h.rational_prime == 23) shape = h.note;
  v.notes.push_back(
      "known discrepancy: x^3 - x^2 + 1 is cited as an example with 2 inert, 23 totally "
      "ramified and K totally real; exact computation gives signature (" +
      std::to_string(k.r1()) + ", " + std::to_string(k.r2()) + ")" +
      (shape.empty() ? std::string() : ", 23 with " + shape) +
      " (f = (x - 16)^2 (x - 15) mod 23)");
}

Verdict base(Criterion c, const NumberField& k, const char* conclusion) {
  Verdict v;
  v.criterion = c;
  v.field_poly = k.poly_string();
  v.conclusion = conclusion;
  return v;
}

Verdict finish(Verdict v) {
  v.applies = aggregate(v.hypotheses);
  return v;
}

std::vector<SUnitPair> pairs_or_injected(const NumberField& k, const std::vector<PrimeIdeal>& S,
                                         long B, const Config& cfg,
                                         const std::vector<SUnitPair>* injected) {
  if (!injected) return sunit_pairs(k, S, B, cfg);
  const FieldElement one(k, mpq_class(1));
  for (const auto& [l, m] : *injected)
    if (l + m != one) throw Error(ErrorCode::InvalidArgument, "injected pair has lambda + mu != 1");
  return *injected;
}

// Verdict skeleton shared by the U_K criteria.
Verdict uk_verdict(Criterion c, const NumberField& k, long B, long r, const Config& cfg,
                   const std::vector<SUnitPair>* injected, const std::string& cond_name,
                   bool (*cond)(const PrimeValuation&)) {
  Verdict v = base(c, k, kConclusionK);
  v.r = r;
  v.hypotheses.push_back(totally_real(k));
  v.hypotheses.push_back(exact("r in {2, 3}", r == 2 || r == 3, "r = " + std::to_string(r)));
  v.hypotheses.push_back(es_condition(k));
  auto U = u_k(k);
  auto sols = pairs_or_injected(k, s_k(k), B, cfg, injected);
  v.hypotheses.push_back(sunit_condition(cond_name, U, sols, cond, B));
  if (U.empty()) v.notes.push_back("U_K is empty");
  return v;
}

}  // namespace

const char* applies_name(Applies a) {
  switch (a) {
    case Applies::Yes: return "Yes";
    case Applies::No: return "No";
    case Applies::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* caveat_name(Caveat c) {
  switch (c) {
    case Caveat::None: return "None";
    case Caveat::BoundedSearch: return "BoundedSearch";
    case Caveat::AssumedIfNeeded: return "AssumedIfNeeded";
    case Caveat::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

const char* criterion_id(Criterion c) {
  for (const auto& i : kCriteria)
    if (i.c == c) return i.id;
  return "unknown";
}

std::optional<Criterion> parse_criterion(const std::string& id) {
  for (const auto& i : kCriteria)
    if (id == i.id || id == i.alias) return i.c;
  return std::nullopt;
}

bool cond_le_4v2(const PrimeValuation& pv) { return pv.t <= 4 * pv.v2; }

bool cond_le_4v2_mod3(const PrimeValuation& pv) {
  long d = (pv.v_lambda_mu - pv.v2) % 3;
  return pv.t <= 4 * pv.v2 && d == 0;
}

bool cond_eq_v2(const PrimeValuation& pv) { return pv.t == pv.v2; }

PrimeValuation prime_valuation(const FieldElement& lambda, const FieldElement& mu,
                               const PrimeIdeal& P) {
  PrimeValuation pv{P};
  pv.v_lambda = valuation(lambda, P);
  pv.v_mu = valuation(mu, P);
  pv.t = std::max(std::labs(pv.v_lambda), std::labs(pv.v_mu));
  pv.v_lambda_mu = pv.v_lambda + pv.v_mu;
  pv.v2 = P.q == 2 ? P.e : 0;
  return pv;
}

HypothesisStatus sunit_condition(const std::string& name, const std::vector<PrimeIdeal>& primes,
                                 const std::vector<SUnitPair>& solutions,
                                 bool (*cond)(const PrimeValuation&), long bound) {
  HypothesisStatus h;
  h.name = name;
  h.caveat = Caveat::BoundedSearch;
  h.bound = bound;
  h.holds = true;
  std::size_t failures = 0;
  for (const auto& [lambda, mu] : solutions) {
    SolutionCheck sc{lambda, mu, {}, std::nullopt, false};
    for (const auto& P : primes) {
      PrimeValuation pv = prime_valuation(lambda, mu, P);
      pv.ok = cond(pv);
      if (pv.ok && !sc.witness) sc.witness = sc.per_prime.size();
      sc.per_prime.push_back(std::move(pv));
    }
    sc.ok = sc.witness.has_value();
    if (!sc.ok) {
      h.holds = false;
      ++failures;
    }
    h.solutions.push_back(std::move(sc));
  }
  h.note = std::to_string(solutions.size()) + " solutions found, " + std::to_string(failures) +
           " without a witness prime";
  return h;
}

std::vector<SUnitPair> sunit_pairs(const NumberField& k, const std::vector<PrimeIdeal>& S, long B,
                                   const Config& cfg) {
  SUnitBasis basis = sunit_basis(k, S, cfg);
  std::vector<SUnitPair> out;
  for (auto& s : solve_sunit(basis, B, cfg).solutions) out.emplace_back(s.lambda, s.mu);
  return out;
}

Applies aggregate(const std::vector<HypothesisStatus>& hyps) {
  bool unknown = false;
  for (const auto& h : hyps) {
    if (!h.holds && h.caveat != Caveat::Undetermined) return Applies::No;
    if (!h.holds || h.caveat != Caveat::None) unknown = true;
  }
  return unknown ? Applies::Unknown : Applies::Yes;
}

Verdict check_wk_bound(const NumberField& k, long B, const Config& cfg,
                       const std::vector<SUnitPair>* injected) {
  Verdict v = base(Criterion::WkBound, k, kConclusionWk);
  v.hypotheses.push_back(totally_real(k));
  auto S = s_k(k);
  auto sols = pairs_or_injected(k, S, B, cfg, injected);
  v.hypotheses.push_back(sunit_condition(
      "every S_K-unit solution has P in S_K with max(|v(lambda)|, |v(mu)|) <= 4 v_P(2)", S, sols,
      cond_le_4v2, B));
  return finish(std::move(v));
}

Verdict check_uk_bound(const NumberField& k, long B, long r, const Config& cfg,
                       const std::vector<SUnitPair>* injected) {
  return finish(uk_verdict(Criterion::UkBound, k, B, r, cfg, injected,
                           "every S_K-unit solution has P in U_K with max(|v(lambda)|, |v(mu)|) "
                           "<= 4 v_P(2) and v(lambda mu) = v_P(2) mod 3",
                           cond_le_4v2_mod3));
}

Verdict check_uk_exact(const NumberField& k, long B, long r, const Config& cfg,
                       const std::vector<SUnitPair>* injected) {
  Verdict v = uk_verdict(Criterion::UkExact, k, B, r, cfg, injected,
                         "every S_K-unit solution has P in U_K with max(|v(lambda)|, |v(mu)|) = "
                         "v_P(2)",
                         cond_eq_v2);
  // Internal derivation: t > 0 forces v(lambda mu) in {-2t, t}, hence = t mod 3.
  HypothesisStatus d;
  d.name = "derivation: t > 0 implies v(lambda mu) in {-2t, t} and v(lambda mu) = t mod 3";
  d.caveat = Caveat::BoundedSearch;
  d.holds = true;
  const auto& cond = v.hypotheses.back();
  d.bound = cond.bound;
  std::size_t violations = 0;
  for (const auto& sc : cond.solutions)
    for (const auto& pv : sc.per_prime) {
      if (pv.t == 0) continue;
      bool shape = pv.v_lambda_mu == -2 * pv.t || pv.v_lambda_mu == pv.t;
      bool mod3 = (pv.v_lambda_mu - pv.t) % 3 == 0;
      if (!shape || !mod3) {
        d.holds = false;
        ++violations;
      }
    }
  d.note = std::to_string(violations) + " violations";
  v.hypotheses.push_back(std::move(d));
  return finish(std::move(v));
}

Verdict check_pp2_selmer(const NumberField& k, long B, const Config& cfg) {
  Verdict v = base(Criterion::PP2Selmer, k, kConclusionPP2);
  v.hypotheses.push_back(totally_real(k));
  UnitGroup units = fundamental_units(k, cfg);
  ClassData cd = class_data(k, units, cfg);
  v.hypotheses.push_back(exact("h+ = 1", cd.h_plus == 1, "h+ = " + std::to_string(cd.h_plus)));
  auto S = s_k(k);
  auto sols = sunit_pairs(k, S, B, cfg);
  v.hypotheses.push_back(sunit_condition(
      "every S_K-unit solution has P in S_K with max(|v(lambda)|, |v(mu)|) <= 4 v_P(2)", S, sols,
      cond_le_4v2, B));
  if (cd.h_plus != 1) {
    v.notes.push_back("S_L conditions skipped: h+ != 1");
    return finish(std::move(v));
  }
  SUnitBasis basis = sunit_basis(k, S, cfg);
  SelmerGroup sel = selmer_group(basis, cd.h);
  for (const auto& c : sel.caveats) v.notes.push_back(c);
  for (std::size_t i = 1; i < sel.representatives.size(); ++i) {
    const FieldElement& a = sel.representatives[i];
    std::string name = "S_L condition for L = K(sqrt(" + a.to_string() + "))";
    try {
      NumberField L = quadratic_extension(a);
      auto SL = s_k(L);
      auto lsols = sunit_pairs(L, SL, B, cfg);
      HypothesisStatus h = sunit_condition(
          name + ": every S_L-unit solution has P' in S_L with max(|v(lambda)|, |v(mu)|) <= "
                 "4 v_P'(2)",
          SL, lsols, cond_le_4v2, B);
      h.field_poly = L.poly_string();
      v.hypotheses.push_back(std::move(h));
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::IndexDivisor:
        case ErrorCode::Unsupported:
        case ErrorCode::BasisUnavailable:
        case ErrorCode::SearchExhausted:
        case ErrorCode::WorkExceeded:
        case ErrorCode::MissingUserClassNumber:
          v.hypotheses.push_back(
              undetermined(name, std::string(error_name(e.code())) + ": " + e.what()));
          break;
        default:
          throw;
      }
    }
  }
  return finish(std::move(v));
}

Verdict check_local_inert_ramified(const NumberField& k, long l) {
  Verdict v = base(Criterion::LocalInertRamified, k, kConclusionK);
  v.hypotheses.push_back(totally_real(k));
  add_l_hypotheses(v, k, l);
  v.hypotheses.push_back(local_prime(k, 2, "2 inert", is_inert));
  attach_discrepancy(v, k);
  return finish(std::move(v));
}

Verdict check_local_inert_split3(const NumberField& k) {
  Verdict v = base(Criterion::LocalInertSplit3, k, kConclusionK);
  const int n = k.degree();
  v.hypotheses.push_back(totally_real(k));
  v.hypotheses.push_back(exact("n odd", n % 2 == 1, "n = " + std::to_string(n)));
  v.hypotheses.push_back(exact("3 does not divide n", n % 3 != 0, "n = " + std::to_string(n)));
  v.hypotheses.push_back(local_prime(k, 2, "2 inert", is_inert));
  v.hypotheses.push_back(local_prime(k, 3, "3 totally split", is_totally_split));
  attach_discrepancy(v, k);
  return finish(std::move(v));
}

Verdict check_local_wk(const NumberField& k, int mode, long l) {
  if (mode != 1 && mode != 2) throw Error(ErrorCode::InvalidArgument, "mode must be 1 or 2");
  Verdict v = base(mode == 1 ? Criterion::LocalWkRamified : Criterion::LocalWkSplit3, k,
                   kConclusionWk);
  v.hypotheses.push_back(totally_real(k));
  if (mode == 1) {
    add_l_hypotheses(v, k, l);
  } else {
    const int n = k.degree();
    v.hypotheses.push_back(exact("n odd", n % 2 == 1, "n = " + std::to_string(n)));
    v.hypotheses.push_back(local_prime(k, 3, "3 totally split", is_totally_split));
  }
  attach_discrepancy(v, k);
  return finish(std::move(v));
}

std::vector<RamifiedCandidate> scan_ramified_l(const NumberField& k, long l_max) {
  std::vector<RamifiedCandidate> out;
  auto fac = intfac::factor(abs(k.poly_disc()));
  for (const auto& [q, e] : fac.factors) {
    if (q <= 5 || q > l_max) continue;
    RamifiedCandidate c;
    c.l = q.get_si();
    c.coprime = std::gcd(static_cast<long>(k.degree()), c.l - 1) == 1;
    try {
      c.totally_ramified = splitting_type(k, static_cast<std::uint64_t>(c.l)).totally_ramified;
    } catch (const IndexDivisorError& err) {
      c.error = err.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace aflt
