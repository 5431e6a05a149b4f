#include "aflt/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"

namespace aflt {

namespace {

using Form = std::tuple<mpz_class, mpz_class, mpz_class>;

mpz_class gcd3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

long count_definite_forms(const mpz_class& D) {
  mpz_class absd = -D;
  long h = 0;
  for (mpz_class a = 1; 3 * a * a <= absd; ++a) {
    for (mpz_class b = -a + 1; b <= a; ++b) {
      mpz_class num = b * b - D;
      if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(4 * a).get_mpz_t())) continue;
      mpz_class c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (gcd3(a, b, c) != 1) continue;
      ++h;
    }
  }
  return h;
}

long count_indefinite_cycles(const mpz_class& D) {
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
  std::set<Form> reduced;
  for (mpz_class b = 1; b <= s; ++b) {
    mpz_class num = b * b - D;  // negative
    for (mpz_class aa = 1; aa <= s; ++aa) {
      if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(4 * aa).get_mpz_t())) continue;
      mpz_class t = 2 * aa + b;
      if (t * t <= D) continue;
      if (2 * aa - b > s) continue;
      for (int sign : {1, -1}) {
        mpz_class a = aa * sign;
        mpz_class c = num / (4 * a);
        if (gcd3(a, b, c) != 1) continue;
        reduced.insert({a, b, c});
      }
    }
  }
  long cycles = 0;
  std::set<Form> seen;
  for (const auto& f : reduced) {
    if (seen.count(f)) continue;
    ++cycles;
    Form cur = f;
    while (!seen.count(cur)) {
      seen.insert(cur);
      const auto& [a, b, c] = cur;
      mpz_class m = 2 * abs(c), r = s + b, nb;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      nb = s - r;
      mpz_class nc = (nb * nb - D) / (4 * c);
      cur = {c, nb, nc};
      if (!reduced.count(cur)) throw Error(ErrorCode::InvalidArgument, "reduction cycle left the reduced set");
    }
  }
  return cycles;
}

std::vector<PrimeIdeal> primes_above(const NumberField& k, const mpz_class& q) {
  if (!q.fits_ulong_p()) throw Error(ErrorCode::Unsupported, "prime " + q.get_str() + " too large");
  return factor_rational_prime(k, q.get_ui());
}

// Valuations of alpha agree with the target at every prime above the primes
// dividing the norm.
bool matches(const FieldElement& alpha, const IdealFactorization& I,
             const std::vector<PrimeIdeal>& relevant) {
  for (const auto& p : relevant) {
    long want = 0;
    for (const auto& [q, e] : I.parts)
      if (q == p) want += e;
    if (valuation(alpha, p) != want) return false;
  }
  return true;
}

std::vector<PrimeIdeal> relevant_primes(const NumberField& k, const mpz_class& m) {
  std::vector<PrimeIdeal> out;
  auto fac = intfac::factor(m);
  if (!fac.complete) throw Error(ErrorCode::Unsupported, "cannot factor ideal norm " + m.get_str());
  for (const auto& [q, e] : fac.factors)
    for (auto& p : primes_above(k, q)) out.push_back(p);
  return out;
}

std::optional<FieldElement> quadratic_generator(const NumberField& k, const IdealFactorization& I,
                                                const UnitGroup& units) {
  QuadraticData qd = *quadratic_data(k);
  mpz_class m = I.norm();
  auto relevant = relevant_primes(k, m);
  const mpz_class& D = qd.disc;
  double ym;
  if (D > 0) {
    double eps = std::exp(std::fabs(units.fundamental_units.at(0).log_abs_real()[0]));
    ym = std::sqrt(m.get_d()) * (eps + 1) / std::sqrt(D.get_d());
  } else {
    ym = 2 * std::sqrt(m.get_d()) / std::sqrt(-D.get_d());
  }
  mpz_class ymax(std::floor(ym) + 1);
  for (mpz_class y = 0; y <= ymax; ++y) {
    std::vector<mpz_class> xs;
    for (int s : {1, -1}) {
      if (D < 0 && s < 0) continue;
      mpz_class disc = D * y * y + 4 * s * m;
      if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
      for (const mpz_class& num : {mpz_class(-y * qd.omega_trace + r), mpz_class(-y * qd.omega_trace - r)}) {
        if (mpz_odd_p(num.get_mpz_t())) continue;
        mpz_class x = num / 2;
        if (y == 0 && x <= 0) continue;
        xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end(), [](const mpz_class& a, const mpz_class& b) {
      if (abs(a) != abs(b)) return abs(a) < abs(b);
      return a > b;
    });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const auto& x : xs) {
      FieldElement alpha = FieldElement(k, mpq_class(x)) + FieldElement(k, mpq_class(y)) * qd.omega;
      if (matches(alpha, I, relevant)) return alpha;
    }
  }
  return std::nullopt;
}

FieldElement searched_generator(const NumberField& k, const IdealFactorization& I, const Config& cfg) {
  mpz_class m = I.norm();
  auto relevant = relevant_primes(k, m);
  std::optional<FieldElement> found;
  long cap = cfg.unit_height_bound.fits_slong_p() ? cfg.unit_height_bound.get_si() : (1L << 40);
  enumerate_shells(k.degree(), cap, cfg.max_candidates, [&](const std::vector<long>& v, long) {
    FieldElement a(k, std::vector<mpq_class>(v.begin(), v.end()));
    if (abs(a.norm()) != m) return true;
    if (!matches(a, I, relevant)) return true;
    found = a;
    return false;
  });
  if (!found)
    throw Error(ErrorCode::GeneratorNotFound,
                "no generator of norm " + m.get_str() + " within max_candidates=" +
                    std::to_string(cfg.max_candidates));
  return *found;
}

}  // namespace

mpz_class IdealFactorization::norm() const {
  mpz_class n = 1;
  for (const auto& [p, e] : parts) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), p.norm().get_mpz_t(), static_cast<unsigned long>(e));
    n *= t;
  }
  return n;
}

std::optional<FieldElement> principal_generator(const NumberField& k, const IdealFactorization& I,
                                                const UnitGroup& units, const Config& cfg) {
  for (const auto& [p, e] : I.parts)
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "principal test expects an integral ideal");
  if (k.degree() == 1) {
    mpz_class g = I.norm();
    return FieldElement(k, mpq_class(g));
  }
  if (I.parts.empty()) return FieldElement(k, mpq_class(1));
  if (k.degree() == 2) return quadratic_generator(k, I, units);
  return searched_generator(k, I, cfg);
}

PrimeIdeal quadratic_conjugate(const PrimeIdeal& p) {
  auto all = factor_rational_prime(p.field, p.q);
  if (all.size() == 1) return all[0];
  return all[0] == p ? all[1] : all[0];
}

bool same_class(const PrimeIdeal& a, const PrimeIdeal& b, const UnitGroup& units, const Config& cfg) {
  const NumberField& k = a.field;
  if (k.degree() == 1 || a == b) return true;
  if (k.degree() != 2) throw Error(ErrorCode::Unsupported, "class comparison needs a quadratic field");
  PrimeIdeal bc = quadratic_conjugate(b);
  IdealFactorization I;
  if (a == bc)
    I.parts.push_back({a, 2});
  else
    I.parts = {{a, 1}, {bc, 1}};
  return principal_generator(k, I, units, cfg).has_value();
}

std::pair<long, FieldElement> class_order(const PrimeIdeal& p, long h, const UnitGroup& units,
                                          const Config& cfg) {
  for (long k = 1; k <= h; ++k) {
    IdealFactorization I;
    I.parts.push_back({p, k});
    if (h == 1 && p.field.degree() > 2) return {1, searched_generator(p.field, I, cfg)};
    auto g = principal_generator(p.field, I, units, cfg);
    if (g) return {k, *g};
  }
  throw Error(ErrorCode::GeneratorNotFound, "no power of " + p.to_string() + " up to h is principal");
}

std::vector<PrimeIdeal> odd_primes_by_norm(const NumberField& k, long bound) {
  std::vector<PrimeIdeal> out;
  for (unsigned long q : intfac::small_primes()) {
    if (q == 2) continue;
    if (static_cast<long>(q) > bound) break;
    try {
      for (auto& p : factor_rational_prime(k, q))
        if (p.norm() <= bound) out.push_back(p);
    } catch (const IndexDivisorError&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    if (a.residue_root() != b.residue_root()) return a.residue_root() < b.residue_root();
    return a.q < b.q;
  });
  return out;
}

ClassData class_data(const NumberField& k, const UnitGroup& units, const Config& cfg) {
  ClassData cd;
  cd.enum_bound = cfg.class_enum_bound;
  if (k.degree() == 2) {
    QuadraticData qd = *quadratic_data(k);
    if (qd.disc < 0) {
      cd.h = cd.h_plus = count_definite_forms(qd.disc);
    } else {
      cd.h_plus = count_indefinite_cycles(qd.disc);
      bool neg = units.fundamental_units.at(0).norm() == -1;
      cd.h = neg ? cd.h_plus : cd.h_plus / 2;
    }
  } else if (k.degree() == 3) {
    if (!cfg.user_class_number)
      throw Error(ErrorCode::MissingUserClassNumber,
                  "class number of a cubic field must be supplied via user_class_number");
    cd.h = *cfg.user_class_number;
    cd.user_supplied = true;
    // h+ = h * 2^r1 / |sign image of the units|.
    std::set<std::vector<int>> image;
    std::vector<FieldElement> gens = units.fundamental_units;
    gens.push_back(units.torsion);
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
      std::vector<int> sig(k.r1(), 1);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask & (1u << i))
          for (int j = 0; j < k.r1(); ++j) sig[j] *= gens[i].sign_at(j);
      image.insert(sig);
    }
    cd.h_plus = cd.h * (1L << k.r1()) / static_cast<long>(image.size());
  } else if (k.degree() != 1) {
    throw Error(ErrorCode::Unsupported, "class data is supported up to degree 3");
  }

  if (cfg.allow_trivial_ideal) cd.reps_H.push_back(ClassRep{std::nullopt});
  if (k.degree() == 3 && cd.h > 1) return cd;
  if (static_cast<long>(cd.reps_H.size()) >= cd.h) return cd;
  for (const auto& p : odd_primes_by_norm(k, cfg.class_enum_bound)) {
    bool known = false;
    for (const auto& rep : cd.reps_H) {
      if (rep.prime ? (cd.h == 1 || same_class(p, *rep.prime, units, cfg))
                    : (cd.h == 1 || principal_generator(k, {{{p, 1}}}, units, cfg).has_value())) {
        known = true;
        break;
      }
    }
    if (!known) cd.reps_H.push_back(ClassRep{p});
    if (static_cast<long>(cd.reps_H.size()) == cd.h) return cd;
  }
  throw Error(ErrorCode::SearchExhausted,
              "only " + std::to_string(cd.reps_H.size()) + " of " + std::to_string(cd.h) +
                  " classes represented by odd primes of norm <= " + std::to_string(cfg.class_enum_bound));
}

std::vector<PrimeIdeal> support(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "support of zero");
  mpz_class d = x.denominator();
  FieldElement y = x * FieldElement(x.field(), mpq_class(d));
  mpz_class nrm = abs(y.norm().get_num()) * d;
  auto fac = intfac::factor(nrm);
  if (!fac.complete) throw Error(ErrorCode::Unsupported, "cannot factor " + nrm.get_str());
  std::vector<PrimeIdeal> out;
  for (const auto& [q, e] : fac.factors)
    for (auto& p : primes_above(x.field(), q))
      if (valuation(x, p) != 0) out.push_back(p);
  return out;
}

bool is_integral(const FieldElement& x) {
  for (const auto& c : x.charpoly())
    if (c.get_den() != 1) return false;
  return true;
}

NormalizedTriple normalize_solution(const FieldElement& a, const FieldElement& b,
                                    const FieldElement& c, const ClassData& cd,
                                    const UnitGroup& units, const Config& cfg) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw Error(ErrorCode::InvalidArgument, "normalization of (0, 0, 0)");
  if (cd.h != 1) throw Error(ErrorCode::Unsupported, "normalization requires class number 1");
  const NumberField& k = a.field();
  std::vector<PrimeIdeal> primes;
  for (const auto* x : {&a, &b, &c}) {
    if (x->is_zero()) continue;
    for (auto& p : support(*x))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  NormalizedTriple out{a, b, c, FieldElement(k, mpq_class(1)), cd.reps_H.at(0), {}};
  FieldElement xi(k, mpq_class(1));
  for (const auto& p : primes) {
    long v = 1L << 40;
    for (const auto* x : {&a, &b, &c})
      if (!x->is_zero()) v = std::min(v, valuation(*x, p));
    if (v == 0) continue;
    out.gcd_ideal.parts.push_back({p, v});
    FieldElement pi = class_order(p, 1, units, cfg).second;
    xi *= pi.pow(-v);
  }
  if (out.m.prime) xi *= class_order(*out.m.prime, 1, units, cfg).second;
  out.xi = xi;
  out.a = xi * a;
  out.b = xi * b;
  out.c = xi * c;
  return out;
}

}  // namespace aflt
