#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "aflt/config.hpp"
#include "aflt/number_field.hpp"

namespace aflt {

// Data of a quadratic field Q(sqrt d) presented by any monic quadratic.
struct QuadraticData {
  mpz_class d;      // squarefree
  mpz_class disc;   // fundamental discriminant D
  FieldElement sqrt_d;
  FieldElement omega;  // O_K = Z[omega]
  mpz_class omega_trace;
  mpz_class omega_norm;
};

std::optional<QuadraticData> quadratic_data(const NumberField& k);

enum class Completeness { Proven, BoundedSearch };

struct UnitGroup {
  explicit UnitGroup(const NumberField& k) : torsion(k, mpq_class(-1)) {}

  int rank = 0;
  std::vector<FieldElement> fundamental_units;
  FieldElement torsion;  // generator of the roots of unity
  int torsion_order = 2;
  Completeness completeness = Completeness::Proven;
  mpz_class height_searched = 0;  // for BoundedSearch
};

// Degree 1, quadratic and cubic fields.
// Errors: Unsupported, SearchExhausted.
UnitGroup fundamental_units(const NumberField& k, const Config& cfg = {});

// Elements of Z[theta] with integer coordinates bounded by h in sup norm,
// shell by shell; the callback returns false to stop. Returns the number of
// candidates visited.
template <class F>
std::uint64_t enumerate_shells(int n, long h_max, std::uint64_t max_candidates, F&& visit);

}  // namespace aflt

#include "aflt/units_impl.hpp"
