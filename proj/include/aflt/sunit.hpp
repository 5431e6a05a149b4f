#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aflt/class_group.hpp"
#include "aflt/config.hpp"
#include "aflt/ideal.hpp"
#include "aflt/units.hpp"

namespace aflt {

struct SUnitBasis {
  NumberField field;
  std::vector<PrimeIdeal> S;
  FieldElement torsion;
  int torsion_order = 2;
  std::vector<FieldElement> units;
  // Generators of the principal ideals supported on S. With h = 1 or a
  // single prime these are pi_P with v_P(pi_P) = o_P.
  std::vector<FieldElement> s_generators;
  std::vector<long> orders;
  Completeness unit_completeness = Completeness::Proven;

  std::vector<FieldElement> free_generators() const;
};

// Errors: BasisUnavailable (units or class data cannot be produced).
SUnitBasis sunit_basis(const NumberField& k, const std::vector<PrimeIdeal>& S, const Config& cfg);

// v_Q(x) == 0 for every prime Q outside S. Exact; uses the characteristic
// polynomial of x, so no factorization is needed.
bool is_s_unit(const FieldElement& x, const std::vector<PrimeIdeal>& S);

struct SUnitSolution {
  FieldElement lambda, mu;
  std::vector<std::pair<long, long>> val_profile;  // per prime of S
  std::vector<long> t_max;
  std::size_t partner = 0;  // index of (mu, lambda)
};

struct SUnitResult {
  std::vector<SUnitSolution> solutions;
  long bound = 0;
  std::uint64_t candidates = 0;
};

// Errors: WorkExceeded(max_candidates).
SUnitResult solve_sunit(const SUnitBasis& basis, long bound, const Config& cfg);

}  // namespace aflt
