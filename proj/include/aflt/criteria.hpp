#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aflt/config.hpp"
#include "aflt/ideal.hpp"
#include "aflt/number_field.hpp"

namespace aflt {

enum class Applies { Yes, No, Unknown };
enum class Caveat { None, BoundedSearch, AssumedIfNeeded, Undetermined };

const char* applies_name(Applies a);
const char* caveat_name(Caveat c);

enum class Criterion {
  WkBound,         // S_K-unit bound at some P in S_K, solutions in W_K
  UkBound,         // U_K bound with the mod 3 congruence
  UkExact,         // U_K with max(|v(lambda)|, |v(mu)|) = v_P(2)
  PP2Selmer,       // x^p + y^p = z^2 via K(S_K, 2) and S_L
  LocalInertRamified,
  LocalInertSplit3,
  LocalWkRamified,
  LocalWkSplit3,
};

const char* criterion_id(Criterion c);
std::optional<Criterion> parse_criterion(const std::string& id);

struct PrimeValuation {
  PrimeIdeal prime;
  long v_lambda = 0, v_mu = 0, t = 0, v_lambda_mu = 0, v2 = 0;
  bool ok = false;
};

struct SolutionCheck {
  FieldElement lambda, mu;
  std::vector<PrimeValuation> per_prime;
  std::optional<std::size_t> witness;  // index into per_prime of a prime that passes
  bool ok = false;
};

struct HypothesisStatus {
  std::string name;
  bool holds = false;
  Caveat caveat = Caveat::None;
  long bound = 0;  // exponent box for BoundedSearch
  std::string note;
  std::string field_poly;  // field the hypothesis was evaluated in, when not K
  std::vector<SolutionCheck> solutions;
  std::optional<std::uint64_t> rational_prime;
  std::vector<PrimeIdeal> factorization;  // ordered by e descending
};

struct Verdict {
  Criterion criterion = Criterion::WkBound;
  std::string field_poly;
  std::optional<long> r;
  Applies applies = Applies::Unknown;
  std::vector<HypothesisStatus> hypotheses;
  std::string conclusion;
  std::vector<std::string> notes;
};

using SUnitPair = std::pair<FieldElement, FieldElement>;

// Condition tests for one solution at one prime P above 2.
bool cond_le_4v2(const PrimeValuation& pv);
bool cond_le_4v2_mod3(const PrimeValuation& pv);
bool cond_eq_v2(const PrimeValuation& pv);

PrimeValuation prime_valuation(const FieldElement& lambda, const FieldElement& mu,
                               const PrimeIdeal& P);

// Evaluates "for every solution there is P in primes with cond(P)".
HypothesisStatus sunit_condition(const std::string& name, const std::vector<PrimeIdeal>& primes,
                                 const std::vector<SUnitPair>& solutions,
                                 bool (*cond)(const PrimeValuation&), long bound);

// Solutions of lambda + mu = 1 in S_K-units with exponents bounded by B.
std::vector<SUnitPair> sunit_pairs(const NumberField& k, const std::vector<PrimeIdeal>& S, long B,
                                   const Config& cfg);

Applies aggregate(const std::vector<HypothesisStatus>& hyps);

// The injected list replaces the S-unit search (fixtures only).
Verdict check_wk_bound(const NumberField& k, long B, const Config& cfg,
                       const std::vector<SUnitPair>* injected = nullptr);
Verdict check_uk_bound(const NumberField& k, long B, long r, const Config& cfg,
                       const std::vector<SUnitPair>* injected = nullptr);
Verdict check_uk_exact(const NumberField& k, long B, long r, const Config& cfg,
                       const std::vector<SUnitPair>* injected = nullptr);
Verdict check_pp2_selmer(const NumberField& k, long B, const Config& cfg);
Verdict check_local_inert_ramified(const NumberField& k, long l);
Verdict check_local_inert_split3(const NumberField& k);
// mode 1 uses l, mode 2 ignores it.
Verdict check_local_wk(const NumberField& k, int mode, long l);

struct RamifiedCandidate {
  long l = 0;
  bool totally_ramified = false;
  bool coprime = false;  // gcd(n, l - 1) == 1
  std::string error;     // set when l divides the index of Z[theta]
};

std::vector<RamifiedCandidate> scan_ramified_l(const NumberField& k, long l_max);

}  // namespace aflt
