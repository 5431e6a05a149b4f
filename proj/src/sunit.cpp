#include "aflt/sunit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aflt/errors.hpp"
#include "aflt/lattice.hpp"

namespace aflt {

namespace {

// Strips every prime of T from n; true when only +-1 remains.
bool supported_on(mpz_class n, const std::vector<std::uint64_t>& T) {
  n = abs(n);
  for (auto q : T)
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
  return n == 1;
}

std::vector<std::uint64_t> primes_below(const std::vector<PrimeIdeal>& S) {
  std::vector<std::uint64_t> T;
  for (const auto& p : S)
    if (std::find(T.begin(), T.end(), p.q) == T.end()) T.push_back(p.q);
  return T;
}

// Principal ideals supported on S, via a lattice basis of exponent vectors.
void principal_lattice(SUnitBasis& b, long h, const UnitGroup& units, const Config& cfg) {
  const std::size_t s = b.S.size();
  if (h == 1 || s == 1) {
    for (const auto& p : b.S) {
      auto [o, g] = class_order(p, h, units, cfg);
      b.orders.push_back(o);
      b.s_generators.push_back(g);
    }
    return;
  }
  std::vector<std::vector<long>> rows;
  std::vector<FieldElement> gens;
  std::vector<long> v(s, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < s && v[i] == h) v[i++] = 0;
    if (i == s) break;
    ++v[i];
    IdealFactorization I;
    for (std::size_t j = 0; j < s; ++j)
      if (v[j]) I.parts.push_back({b.S[j], v[j]});
    if (auto g = principal_generator(b.field, I, units, cfg)) {
      rows.push_back(v);
      gens.push_back(*g);
    }
  }
  auto U = hermite(rows, static_cast<int>(s));
  for (std::size_t r = 0; r < s; ++r) {
    FieldElement g(b.field, mpq_class(1));
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (U[r][j]) g *= gens[j].pow(U[r][j]);
    b.s_generators.push_back(g);
    b.orders.push_back(rows[r][r]);
  }
}

}  // namespace

std::vector<FieldElement> SUnitBasis::free_generators() const {
  std::vector<FieldElement> out = units;
  out.insert(out.end(), s_generators.begin(), s_generators.end());
  return out;
}

SUnitBasis sunit_basis(const NumberField& k, const std::vector<PrimeIdeal>& S, const Config& cfg) {
  try {
    UnitGroup ug = fundamental_units(k, cfg);
    SUnitBasis b{k, S, ug.torsion, ug.torsion_order, ug.fundamental_units, {}, {}, ug.completeness};
    if (S.empty()) return b;
    long h = 1;
    if (k.degree() == 2) {
      h = class_data(k, ug, [&] {
            Config c = cfg;
            c.allow_trivial_ideal = true;
            return c;
          }())
              .h;
    } else if (k.degree() == 3) {
      h = cfg.user_class_number.value_or(1);
    }
    principal_lattice(b, h, ug, cfg);
    return b;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IndexDivisor) throw;
    throw Error(ErrorCode::BasisUnavailable, std::string("S-unit basis unavailable: ") + e.what());
  }
}

bool is_s_unit(const FieldElement& x, const std::vector<PrimeIdeal>& S) {
  if (x.is_zero()) return false;
  auto T = primes_below(S);
  QPoly cp = x.charpoly();
  for (const auto& c : cp)
    if (!supported_on(c.get_den(), T)) return false;
  if (!supported_on(cp[0].get_num(), T) || !supported_on(cp[0].get_den(), T)) return false;
  // Primes above q in T that are missing from S.
  for (auto q : T) {
    auto all = factor_rational_prime(x.field(), q);
    for (const auto& p : all)
      if (std::find(S.begin(), S.end(), p) == S.end() && valuation(x, p) != 0) return false;
  }
  return true;
}

SUnitResult solve_sunit(const SUnitBasis& basis, long bound, const Config& cfg) {
  const NumberField& k = basis.field;
  SUnitResult res;
  res.bound = bound;
  auto gens = basis.free_generators();
  const std::size_t g = gens.size();
  long double total = basis.torsion_order;
  for (std::size_t i = 0; i < g; ++i) total *= static_cast<long double>(2 * bound + 1);
  if (total > static_cast<long double>(cfg.max_candidates))
    throw Error(ErrorCode::WorkExceeded,
                "exponent box of " + std::to_string(static_cast<unsigned long long>(total)) +
                    " candidates exceeds max_candidates=" + std::to_string(cfg.max_candidates));

  std::vector<std::vector<FieldElement>> powers(g);
  for (std::size_t i = 0; i < g; ++i)
    for (long e = -bound; e <= bound; ++e) powers[i].push_back(gens[i].pow(e));
  std::vector<FieldElement> tors;
  for (int t = 0; t < basis.torsion_order; ++t) tors.push_back(basis.torsion.pow(t));

  const FieldElement one(k, mpq_class(1));
  std::map<std::vector<mpq_class>, std::pair<FieldElement, FieldElement>> found;
  std::vector<long> e(g, -bound);
  for (;;) {
    FieldElement base = one;
    for (std::size_t i = 0; i < g; ++i) base *= powers[i][e[i] + bound];
    for (const auto& z : tors) {
      ++res.candidates;
      FieldElement lambda = z * base;
      if (lambda == one) continue;
      FieldElement mu = one - lambda;
      if (!is_s_unit(mu, basis.S)) continue;
      found.emplace(lambda.coords(), std::make_pair(lambda, mu));
      found.emplace(mu.coords(), std::make_pair(mu, lambda));
    }
    std::size_t i = 0;
    while (i < g && e[i] == bound) e[i++] = -bound;
    if (i == g) break;
    ++e[i];
  }

  for (const auto& [key, lm] : found) {
    SUnitSolution s{lm.first, lm.second, {}, {}, 0};
    if (s.lambda + s.mu != one) throw Error(ErrorCode::RelationViolated, "lambda + mu != 1");
    for (const auto& p : basis.S) {
      long vl = valuation(s.lambda, p), vm = valuation(s.mu, p);
      s.val_profile.emplace_back(vl, vm);
      s.t_max.push_back(std::max(std::labs(vl), std::labs(vm)));
    }
    res.solutions.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    auto it = found.find(res.solutions[i].mu.coords());
    res.solutions[i].partner = static_cast<std::size_t>(std::distance(found.begin(), it));
  }
  return res;
}

}  // namespace aflt
