#include "aflt/int_factor.hpp"

#include <algorithm>
#include <map>

namespace aflt::intfac {

namespace {

constexpr unsigned long kTrialBound = 1000000;

std::vector<unsigned long> sieve(unsigned long bound) {
  std::vector<bool> composite(bound, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

// Pollard-Brent rho; returns a nontrivial factor or 0 on failure.
mpz_class brent(const mpz_class& n, unsigned long c0) {
  for (unsigned long c = c0; c < c0 + 20; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    unsigned long steps = 0;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      steps += r;
    } while (g == 1 && steps < (1ul << 24));
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& acc, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  mpz_class root;
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k < 64; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<mpz_class, unsigned> sub;
        split(root, sub, out);
        for (auto& [p, e] : sub) acc[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  mpz_class d = brent(n, 1);
  if (d == 0) {
    out.complete = false;
    out.leftover *= n;
    return;
  }
  split(d, acc, out);
  split(n / d, acc, out);
}

}  // namespace

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = sieve(kTrialBound);
  return primes;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_prime(unsigned long n) { return is_prime(mpz_class(n)); }

unsigned valuation(mpz_class n, const mpz_class& p) {
  if (n == 0) return 0;
  unsigned v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

Factorization factor(const mpz_class& n_in) {
  Factorization out;
  mpz_class n = abs(n_in);
  if (n == 0) {
    out.complete = false;
    out.leftover = 0;
    return out;
  }
  std::map<mpz_class, unsigned> acc;
  for (unsigned long p : small_primes()) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
      acc[mpz_class(p)] = e;
    }
  }
  split(n, acc, out);
  for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
  return out;
}

}  // namespace aflt::intfac
