#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "aflt/poly.hpp"

namespace aflt::fq {

// Polynomials over the prime field F_p, p < 2^62, low-to-high and trimmed.
using FPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

FPoly reduce(const ZPoly& f, std::uint64_t p);
// Representatives in [0, p).
ZPoly lift(const FPoly& f);

void trim(FPoly& f);
int degree(const FPoly& f);
FPoly add(const FPoly& a, const FPoly& b, std::uint64_t p);
FPoly sub(const FPoly& a, const FPoly& b, std::uint64_t p);
FPoly mul(const FPoly& a, const FPoly& b, std::uint64_t p);
FPoly scale(const FPoly& a, std::uint64_t s, std::uint64_t p);
std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b, std::uint64_t p);
FPoly rem(const FPoly& a, const FPoly& b, std::uint64_t p);
FPoly monic(const FPoly& a, std::uint64_t p);
FPoly gcd(FPoly a, FPoly b, std::uint64_t p);
FPoly derivative(const FPoly& a, std::uint64_t p);
FPoly powmod(const FPoly& base, const mpz_class& e, const FPoly& mod, std::uint64_t p);

// Returns (g, s, t) with s*a + t*b = g, g monic.
struct Bezout {
  FPoly g, s, t;
};
Bezout xgcd(const FPoly& a, const FPoly& b, std::uint64_t p);

struct Factor {
  FPoly poly;  // monic irreducible
  unsigned multiplicity;
};

// Complete factorization of a nonzero polynomial into monic irreducibles,
// ordered by degree, then by root for linear factors, then by coefficients.
std::vector<Factor> factor(const FPoly& f, std::uint64_t p);

bool is_irreducible(const FPoly& f, std::uint64_t p);

}  // namespace aflt::fq
