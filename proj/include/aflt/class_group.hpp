#pragma once

#include <map>
#include <optional>
#include <vector>

#include "aflt/config.hpp"
#include "aflt/ideal.hpp"
#include "aflt/units.hpp"

namespace aflt {

// Integral ideal carried as a valuation vector over prime ideals.
struct IdealFactorization {
  std::vector<std::pair<PrimeIdeal, long>> parts;
  mpz_class norm() const;
};

// A class representative: a prime ideal coprime to 2, or the unit ideal when
// allow_trivial_ideal is set.
struct ClassRep {
  std::optional<PrimeIdeal> prime;
};

struct ClassData {
  long h = 1;
  long h_plus = 1;
  std::vector<ClassRep> reps_H;
  bool user_supplied = false;
  long enum_bound = 0;
};

// Errors: Unsupported (degree above 3 or imaginary cubic), MissingUserClassNumber.
ClassData class_data(const NumberField& k, const UnitGroup& units, const Config& cfg);

// Generator of an integral ideal, or nullopt when it is not principal.
// Quadratic fields use the exact norm-equation bound; other degrees search
// Z[theta] up to the configured budget and raise GeneratorNotFound on
// exhaustion.
std::optional<FieldElement> principal_generator(const NumberField& k, const IdealFactorization& I,
                                                const UnitGroup& units, const Config& cfg);

// Galois conjugate of a prime of a quadratic field.
PrimeIdeal quadratic_conjugate(const PrimeIdeal& p);

bool same_class(const PrimeIdeal& a, const PrimeIdeal& b, const UnitGroup& units, const Config& cfg);

// Order of [P] in the class group together with a generator of P^order.
std::pair<long, FieldElement> class_order(const PrimeIdeal& p, long h, const UnitGroup& units,
                                          const Config& cfg);

// Odd prime ideals sorted by (norm, residue root, q), for rational primes up
// to the bound; primes where the Dedekind criterion fails are skipped.
std::vector<PrimeIdeal> odd_primes_by_norm(const NumberField& k, long bound);

// Primes of K dividing numerator or denominator data of x.
std::vector<PrimeIdeal> support(const FieldElement& x);

bool is_integral(const FieldElement& x);

struct NormalizedTriple {
  FieldElement a, b, c, xi;
  ClassRep m;
  IdealFactorization gcd_ideal;
};

// Errors: InvalidArgument for (0,0,0), Unsupported (h > 1), GeneratorNotFound.
NormalizedTriple normalize_solution(const FieldElement& a, const FieldElement& b,
                                    const FieldElement& c, const ClassData& cd,
                                    const UnitGroup& units, const Config& cfg);

}  // namespace aflt
