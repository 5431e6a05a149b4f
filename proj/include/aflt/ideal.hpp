#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aflt/fq.hpp"
#include "aflt/number_field.hpp"

namespace aflt {

// Prime P = (q, g(theta)) of O_K from a Dedekind factorization of f mod q.
struct PrimeIdeal {
  NumberField field;
  std::uint64_t q = 0;
  int e = 0;
  int f = 0;
  fq::FPoly gen_poly;  // monic irreducible factor of f mod q
  FieldElement anti_uniformizer;  // in P^-1, not integral, integral at other primes above q

  mpz_class norm() const;
  // Lift of gen_poly evaluated at theta.
  FieldElement generator() const;
  // For f == 1 the root of gen_poly in [0, q); otherwise q.
  std::uint64_t residue_root() const;
  std::string to_string() const;

  bool operator==(const PrimeIdeal& o) const {
    return q == o.q && gen_poly == o.gen_poly && field == o.field;
  }
  bool operator!=(const PrimeIdeal& o) const { return !(*this == o); }
};

// Errors: IndexDivisor when q divides [O_K : Z[theta]], InvalidArgument when
// q is not prime.
std::vector<PrimeIdeal> factor_rational_prime(const NumberField& k, std::uint64_t q);

// True when the Dedekind criterion passes at q.
bool is_q_maximal(const NumberField& k, std::uint64_t q);

struct SplittingType {
  enum class Kind { Inert, TotallyRamified, TotallySplit, Mixed };
  Kind kind = Kind::Mixed;
  std::vector<std::pair<int, int>> pattern;  // (e, f) per prime, e descending
  bool inert = false;
  bool totally_ramified = false;
  bool totally_split = false;
};

const char* kind_name(SplittingType::Kind k);

SplittingType classify(int n, const std::vector<PrimeIdeal>& primes);
SplittingType splitting_type(const NumberField& k, std::uint64_t q);

std::vector<PrimeIdeal> s_k(const NumberField& k);
std::vector<PrimeIdeal> u_k(const NumberField& k);

// Errors: ZeroElement.
long valuation(const FieldElement& x, const PrimeIdeal& p);

}  // namespace aflt
