#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace aflt::intfac {

struct Factorization {
  std::vector<std::pair<mpz_class, unsigned>> factors;  // ascending primes
  bool complete = true;  // false when a composite cofactor could not be split
  mpz_class leftover = 1;
};

// Factors |n| for n != 0. Trial division by primes below 10^6, then
// probabilistic primality and Pollard-Brent rho on the cofactor.
Factorization factor(const mpz_class& n);

bool is_prime(const mpz_class& n);
bool is_prime(unsigned long n);

// Primes below the bound, ascending.
const std::vector<unsigned long>& small_primes();

unsigned valuation(mpz_class n, const mpz_class& p);

}  // namespace aflt::intfac
