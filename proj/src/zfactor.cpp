#include "aflt/zfactor.hpp"

#include <algorithm>
#include <numeric>

#include "aflt/errors.hpp"
#include "aflt/fq.hpp"
#include "aflt/int_factor.hpp"

namespace aflt::zfactor {

namespace {

ZPoly mod_coeffs(ZPoly f, const mpz_class& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  poly::trim(f);
  return f;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly::trim(out);
  return out;
}

ZPoly add_scaled(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += m * b[i];
  poly::trim(out);
  return out;
}

// Exact division of monic integer polynomials; false if b does not divide a.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r(a);
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, 0);
  for (int i = poly::degree(r); i >= poly::degree(b); --i) {
    if (r[i] == 0) continue;
    mpz_class c = r[i];
    int shift = i - poly::degree(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
  }
  poly::trim(r);
  poly::trim(q);
  return r.empty();
}

// Lifts F = g*h (mod p), g and h monic, to a factorization mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const fq::FPoly& g0, const fq::FPoly& h0,
                                    std::uint64_t p, unsigned k) {
  fq::Bezout bz = fq::xgcd(g0, h0, p);
  if (bz.g != fq::FPoly{1}) throw Error(ErrorCode::InvalidArgument, "Hensel factors not coprime");
  ZPoly g = fq::lift(g0), h = fq::lift(h0);
  mpz_class m = p;
  for (unsigned i = 1; i < k; ++i) {
    ZPoly e = sub(F, poly::mul(g, h));
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    fq::FPoly eb = fq::reduce(e, p);
    auto [Q, A] = fq::divmod(fq::mul(bz.t, eb, p), g0, p);
    fq::FPoly B = fq::add(fq::mul(bz.s, eb, p), fq::mul(Q, h0, p), p);
    g = add_scaled(g, fq::lift(A), m);
    h = add_scaled(h, fq::lift(B), m);
    m *= p;
  }
  return {mod_coeffs(g, m), mod_coeffs(h, m)};
}

void hensel_tree(const ZPoly& F, const std::vector<fq::FPoly>& facs, std::uint64_t p, unsigned k,
                 std::vector<ZPoly>& out) {
  if (facs.size() == 1) {
    out.push_back(F);
    return;
  }
  std::size_t half = facs.size() / 2;
  fq::FPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = fq::mul(g0, facs[i], p);
  for (std::size_t i = half; i < facs.size(); ++i) h0 = fq::mul(h0, facs[i], p);
  auto [g, h] = hensel_pair(F, g0, h0, p, k);
  hensel_tree(g, {facs.begin(), facs.begin() + half}, p, k, out);
  hensel_tree(h, {facs.begin() + half, facs.end()}, p, k, out);
}

ZPoly symmetric(ZPoly f, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  poly::trim(f);
  return f;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = poly::degree(f);
  if (n <= 1) return {f};
  // Pick the prime among a few squarefree candidates with the fewest factors.
  std::uint64_t best_p = 0;
  std::vector<fq::FPoly> best;
  int tried = 0;
  for (unsigned long p : intfac::small_primes()) {
    if (p == 2) continue;
    fq::FPoly fp = fq::reduce(f, p);
    if (fq::degree(fq::gcd(fp, fq::derivative(fp, p), p)) > 0) continue;
    auto fs = fq::factor(fp, p);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best.clear();
      for (auto& x : fs) best.push_back(x.poly);
    }
    if (best.size() == 1 || ++tried >= 8) break;
  }
  if (best.size() == 1) return {f};
  const std::uint64_t p = best_p;

  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = 2 * (mpz_class(1) << n) * norm;
  unsigned k = 1;
  mpz_class M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }
  std::vector<ZPoly> lifted;
  hensel_tree(f, best, p, k, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly g{1};
      for (auto i : idx) g = mod_coeffs(poly::mul(g, pool[i]), M);
      g = symmetric(g, M);
      if (rest[0] != 0 && (g[0] == 0 || !mpz_divisible_p(rest[0].get_mpz_t(), g[0].get_mpz_t())))
        continue;
      ZPoly q;
      if (exact_divide(rest, g, q)) {
        result.push_back(g);
        rest = q;
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i)
            ++j;
          else
            remaining.push_back(pool[i]);
        }
        pool = std::move(remaining);
        found = true;
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!found) ++s;
  }
  if (poly::degree(rest) > 0) result.push_back(rest);
  return result;
}

ZPoly to_monic_z(const QPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral factor");
    out[i] = f[i].get_num();
  }
  return out;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<Factor> factor_monic(const ZPoly& f) {
  if (f.empty() || f.back() != 1) throw Error(ErrorCode::NotMonic, "factorization expects a monic polynomial");
  std::vector<Factor> out;
  if (poly::degree(f) < 1) return out;
  // Yun squarefree decomposition over Q.
  QPoly fq = poly::to_q(f);
  QPoly df = poly::derivative(fq);
  QPoly a0 = poly::gcd(fq, df);
  QPoly b = poly::divmod(fq, a0).first;
  QPoly c = poly::divmod(df, a0).first;
  QPoly d = poly::sub(c, poly::derivative(b));
  unsigned i = 1;
  while (poly::degree(b) > 0) {
    QPoly a = poly::gcd(b, d);
    if (poly::degree(a) > 0) {
      for (auto& g : zassenhaus(to_monic_z(poly::monic(a)))) out.push_back({g, i});
    }
    b = poly::divmod(b, a).first;
    c = poly::divmod(d, a).first;
    d = poly::sub(c, poly::derivative(b));
    ++i;
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.poly != y.poly) return zpoly_less(x.poly, y.poly);
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

std::vector<QFactor> factor_monic(const QPoly& f) {
  if (f.empty() || f.back() != 1) throw Error(ErrorCode::NotMonic, "factorization expects a monic polynomial");
  const int n = poly::degree(f);
  mpz_class D = 1;
  for (const auto& c : f) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  // D^n f(y/D) is monic integral.
  ZPoly g(f.size());
  mpz_class pw = 1;
  for (int i = n; i >= 0; --i) {
    mpq_class v = f[i] * pw;
    g[i] = v.get_num();
    pw *= D;
  }
  std::vector<QFactor> out;
  for (const auto& fac : factor_monic(g)) {
    const int m = poly::degree(fac.poly);
    QPoly h(fac.poly.size());
    mpq_class pwq = 1;
    for (int i = m; i >= 0; --i) {
      h[i] = mpq_class(fac.poly[i]) / pwq;
      pwq *= D;
    }
    out.push_back({h, fac.multiplicity});
  }
  return out;
}

bool is_irreducible(const ZPoly& f) {
  auto fs = factor_monic(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace aflt::zfactor
