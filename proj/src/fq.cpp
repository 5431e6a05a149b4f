#include "aflt/fq.hpp"

#include <algorithm>
#include <random>

#include "aflt/errors.hpp"

namespace aflt::fq {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero mod p");
  return powmod(a, p - 2, p);
}

void trim(FPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

FPoly reduce(const ZPoly& f, std::uint64_t p) {
  FPoly out(f.size());
  mpz_class r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

ZPoly lift(const FPoly& f) {
  ZPoly out;
  out.reserve(f.size());
  for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

FPoly add(const FPoly& a, const FPoly& b, std::uint64_t p) {
  FPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] += b[i];
    if (out[i] >= p) out[i] -= p;
  }
  trim(out);
  return out;
}

FPoly sub(const FPoly& a, const FPoly& b, std::uint64_t p) {
  FPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

FPoly mul(const FPoly& a, const FPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(out);
  return out;
}

FPoly scale(const FPoly& a, std::uint64_t s, std::uint64_t p) {
  FPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod(a[i], s, p);
  trim(out);
  return out;
}

std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b, std::uint64_t p) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero mod p");
  FPoly r(a);
  trim(r);
  if (r.size() < b.size()) return {FPoly{}, r};
  FPoly q(r.size() - b.size() + 1, 0);
  std::uint64_t inv = invmod(b.back(), p);
  for (int i = degree(r); i >= degree(b); --i) {
    if (r[i] == 0) continue;
    std::uint64_t c = mulmod(r[i], inv, p);
    int shift = i - degree(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] = (r[shift + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

FPoly rem(const FPoly& a, const FPoly& b, std::uint64_t p) { return divmod(a, b, p).second; }

FPoly monic(const FPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

FPoly gcd(FPoly a, FPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FPoly derivative(const FPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  FPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod(a[i], i % p, p);
  trim(out);
  return out;
}

FPoly powmod(const FPoly& base, const mpz_class& e, const FPoly& mod, std::uint64_t p) {
  FPoly result{1};
  result = rem(result, mod, p);
  FPoly b = rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), mod, p);
  }
  return result;
}

Bezout xgcd(const FPoly& a, const FPoly& b, std::uint64_t p) {
  FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    FPoly s = sub(s0, mul(q, s1, p), p);
    FPoly t = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

namespace {

// f = g(x^p) with f' == 0; returns g (coefficients are their own p-th roots).
FPoly pth_root(const FPoly& f, std::uint64_t p) {
  FPoly out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
  trim(out);
  return out;
}

void squarefree(const FPoly& f, std::uint64_t p, unsigned mult, std::vector<Factor>& out) {
  if (degree(f) < 1) return;
  FPoly d = derivative(f, p);
  if (d.empty()) {
    squarefree(pth_root(f, p), p, mult * static_cast<unsigned>(p), out);
    return;
  }
  FPoly c = gcd(f, d, p);
  FPoly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    FPoly y = gcd(w, c, p);
    FPoly fac = divmod(w, y, p).first;
    if (degree(fac) > 0) out.push_back({monic(fac, p), i * mult});
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (degree(c) > 0) squarefree(pth_root(c, p), p, mult * static_cast<unsigned>(p), out);
}

std::vector<std::pair<FPoly, int>> distinct_degree(FPoly f, std::uint64_t p) {
  std::vector<std::pair<FPoly, int>> out;
  FPoly x{0, 1};
  FPoly h = rem(x, f, p);
  mpz_class pe(static_cast<unsigned long>(p));
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, pe, f, p);
    FPoly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f, p), degree(f));
  return out;
}

void equal_degree(const FPoly& f, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<FPoly>& out) {
  if (degree(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  const int n = degree(f);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  mpz_class e = (q - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    FPoly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    FPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^{2^{d-1}}.
      FPoly t = rem(a, f, p), acc = t;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      b = acc;
    } else {
      b = sub(powmod(a, e, f, p), FPoly{1}, p);
    }
    FPoly g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

bool factor_less(const Factor& x, const Factor& y, std::uint64_t p) {
  if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
  if (x.poly.size() == 2) {
    std::uint64_t rx = (p - x.poly[0]) % p, ry = (p - y.poly[0]) % p;
    if (rx != ry) return rx < ry;
  } else if (x.poly != y.poly) {
    return std::lexicographical_compare(x.poly.rbegin(), x.poly.rend(), y.poly.rbegin(),
                                        y.poly.rend());
  }
  return x.multiplicity < y.multiplicity;
}

}  // namespace

std::vector<Factor> factor(const FPoly& f_in, std::uint64_t p) {
  FPoly f = f_in;
  trim(f);
  if (f.empty()) throw Error(ErrorCode::ZeroElement, "factorization of the zero polynomial");
  f = monic(f, p);
  std::vector<Factor> sqf;
  squarefree(f, p, 1, sqf);
  std::mt19937_64 rng(0x5eedu + p);
  std::vector<Factor> out;
  for (const auto& [g, m] : sqf) {
    for (const auto& [part, d] : distinct_degree(g, p)) {
      std::vector<FPoly> pieces;
      equal_degree(part, d, p, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece, m});
    }
  }
  std::sort(out.begin(), out.end(),
            [p](const Factor& a, const Factor& b) { return factor_less(a, b, p); });
  // Merge equal factors arising from different squarefree layers.
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(fac);
  }
  return merged;
}

bool is_irreducible(const FPoly& f, std::uint64_t p) {
  auto fs = factor(f, p);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace aflt::fq
