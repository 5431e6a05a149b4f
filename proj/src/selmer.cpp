#include "aflt/selmer.hpp"

#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"
#include "aflt/zfactor.hpp"

namespace aflt {

namespace {

// Characteristic polynomial over Q of c0 + c1*z acting on K[z]/(z^2 - x).
QPoly relative_charpoly(const FieldElement& x, const FieldElement& c0, const FieldElement& c1) {
  const int n = x.field().degree();
  std::vector<std::vector<mpq_class>> m(2 * n, std::vector<mpq_class>(2 * n));
  // Basis theta^i (index i) and theta^i z (index n + i).
  auto m0 = c0.mult_matrix(), m1 = c1.mult_matrix(), m1x = (c1 * x).mult_matrix();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = m0[i][j];
      m[n + i][n + j] = m0[i][j];
      m[n + i][j] = m1[i][j];
      m[i][n + j] = m1x[i][j];
    }
  }
  return poly::charpoly(m);
}

QPoly relative_charpoly(const FieldElement& x, long s) {
  const NumberField& k = x.field();
  return relative_charpoly(x, FieldElement(k, mpq_class(s)) * FieldElement::theta(k),
                           FieldElement(k, mpq_class(1)));
}

bool squarefree_q(const QPoly& f) { return poly::degree(poly::gcd(f, poly::derivative(f))) == 0; }

}  // namespace

std::optional<FieldElement> square_root(const FieldElement& x) {
  const NumberField& k = x.field();
  if (x.is_zero()) return x;
  mpq_class nrm = x.norm();
  if (nrm < 0 || !mpz_perfect_square_p(nrm.get_num_mpz_t()) ||
      !mpz_perfect_square_p(nrm.get_den_mpz_t()))
    return std::nullopt;
  if (k.degree() == 1) {
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), x.rational().get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), x.rational().get_den_mpz_t());
    return FieldElement(k, mpq_class(a, b));
  }
  const FieldElement one(k, mpq_class(1));
  for (long w = 0; w < 32; ++w) {
    // x' = x * (w + theta)^2 keeps the square class; y' = sqrt(x') should
    // generate K so that the norm polynomial is squarefree.
    FieldElement wt = FieldElement(k, mpq_class(w)) + FieldElement::theta(k);
    FieldElement xp = x * wt * wt;
    QPoly R = relative_charpoly(xp, 0);
    if (!squarefree_q(R)) continue;
    for (const auto& fac : zfactor::factor_monic(R)) {
      if (poly::degree(fac.poly) != k.degree()) continue;
      // g(z) mod (z^2 - x') = A + B z.
      FieldElement A(k), B(k), zpow_a = one, zpow_b(k);
      for (std::size_t i = 0; i < fac.poly.size(); ++i) {
        FieldElement c(k, fac.poly[i]);
        A += c * zpow_a;
        B += c * zpow_b;
        // z^{i+1}: (a + b z) z = b x' + a z
        FieldElement na = zpow_b * xp, nb = zpow_a;
        zpow_a = na;
        zpow_b = nb;
      }
      if (B.is_zero()) continue;
      FieldElement y = -A / B;
      if (y * y == xp) return y / wt;
    }
    return std::nullopt;
  }
  throw Error(ErrorCode::SearchExhausted, "square root test found no separating shift");
}

bool is_square(const FieldElement& x) { return square_root(x).has_value(); }

SelmerGroup selmer_group(const SUnitBasis& basis, long h, int m) {
  if (m != 2) throw Error(ErrorCode::Unsupported, "Selmer groups are implemented for m = 2 only");
  const NumberField& k = basis.field;
  SelmerGroup g{k, basis.S, m, {}, {}, 0, {}};
  std::vector<FieldElement> cands{basis.torsion};
  for (const auto& u : basis.units) cands.push_back(u);
  for (const auto& p : basis.s_generators) cands.push_back(p);
  const FieldElement one(k, mpq_class(1));
  for (const auto& c : cands) {
    // Keep c unless some product with a subset of the kept generators is a square.
    bool dependent = false;
    const std::size_t kept = g.generators.size();
    for (unsigned long mask = 0; mask < (1ul << kept) && !dependent; ++mask) {
      FieldElement prod = c;
      for (std::size_t i = 0; i < kept; ++i)
        if (mask & (1ul << i)) prod *= g.generators[i];
      if (is_square(prod)) dependent = true;
    }
    if (!dependent) g.generators.push_back(c);
  }
  g.basis_size = static_cast<int>(g.generators.size());
  for (unsigned long mask = 0; mask < (1ul << g.basis_size); ++mask) {
    FieldElement prod = one;
    for (int i = 0; i < g.basis_size; ++i)
      if (mask & (1ul << i)) prod *= g.generators[i];
    g.representatives.push_back(prod);
  }
  if (h % 2 == 0)
    g.caveats.push_back("class number " + std::to_string(h) +
                        " is even; classes from the 2-torsion of the class group are not included");
  if (basis.unit_completeness == Completeness::BoundedSearch)
    g.caveats.push_back("unit generators come from a bounded search");
  return g;
}

NumberField quadratic_extension(const FieldElement& a_in) {
  const NumberField& k = a_in.field();
  if (a_in.is_zero()) throw Error(ErrorCode::InvalidArgument, "quadratic extension by zero");
  if (is_square(a_in)) throw Error(ErrorCode::IsSquare, a_in.to_string() + " is a square in K");
  if (2 * k.degree() > 6)
    throw Error(ErrorCode::Unsupported, "absolute degree " + std::to_string(2 * k.degree()) + " exceeds 6");
  mpz_class d = a_in.denominator();
  FieldElement a = a_in * FieldElement(k, mpq_class(d * d));
  if (k.degree() == 1) {
    mpz_class v = a.rational().get_num();
    auto fac = intfac::factor(v);
    mpz_class sf = v < 0 ? -1 : 1;
    for (const auto& [p, e] : fac.factors)
      if (e % 2) sf *= p;
    if (mpz_fdiv_ui(sf.get_mpz_t(), 4) == 1)
      return NumberField::make({(1 - sf) / 4, -1, 1});
    return NumberField::make({-sf, 0, 1});
  }
  std::optional<ZPoly> fallback;
  auto attempt = [&](const QPoly& R) -> std::optional<NumberField> {
    for (const auto& c : R)
      if (c.get_den() != 1) return std::nullopt;
    if (!squarefree_q(R)) return std::nullopt;
    ZPoly z(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) z[i] = R[i].get_num();
    if (!zfactor::is_irreducible(z)) return std::nullopt;
    NumberField L = NumberField::make(z);
    if (is_q_maximal(L, 2)) return L;
    if (!fallback) fallback = z;
    return std::nullopt;
  };
  for (long s = 0; s <= 8; ++s)
    if (auto L = attempt(relative_charpoly(a, s))) return *L;
  // Elements c0 + c1 z with half-integral coordinates, smallest first.
  const int n = k.degree();
  const FieldElement one(k, mpq_class(1));
  for (long h = 1; h <= 2; ++h) {
    std::optional<NumberField> hit;
    enumerate_shells(2 * n, h, 1u << 20, [&](const std::vector<long>& v, long hv) {
      if (hv != h) return true;
      std::vector<mpq_class> c0(n), c1(n);
      for (int i = 0; i < n; ++i) {
        c0[i] = mpq_class(v[i], 2);
        c1[i] = mpq_class(v[n + i], 2);
      }
      FieldElement e1(k, c1);
      if (e1.is_zero()) return true;
      if (auto L = attempt(relative_charpoly(a, FieldElement(k, c0), e1))) {
        hit = L;
        return false;
      }
      return true;
    });
    if (hit) return *hit;
  }
  if (fallback) return NumberField::make(*fallback);
  throw Error(ErrorCode::Unsupported, "no primitive element found for K(sqrt a)");
}

}  // namespace aflt
