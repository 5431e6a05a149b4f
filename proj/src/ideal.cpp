#include "aflt/ideal.hpp"

#include <numeric>

#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"

namespace aflt {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t(1) << 62;

struct Dedekind {
  std::vector<fq::Factor> factors;
  bool maximal = true;
};

Dedekind dedekind(const NumberField& k, std::uint64_t q) {
  if (q >= kMaxPrime || !intfac::is_prime(static_cast<unsigned long>(q)))
    throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a supported prime");
  Dedekind out;
  out.factors = fq::factor(fq::reduce(k.poly(), q), q);
  ZPoly prod{1};
  for (const auto& fac : out.factors) {
    ZPoly g = fq::lift(fac.poly);
    for (unsigned i = 0; i < fac.multiplicity; ++i) prod = poly::mul(prod, g);
  }
  ZPoly diff(std::max(prod.size(), k.poly().size()));
  for (std::size_t i = 0; i < k.poly().size(); ++i) diff[i] += k.poly()[i];
  for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
  for (auto& c : diff) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), q);
  poly::trim(diff);
  fq::FPoly F = fq::reduce(diff, q);
  for (const auto& fac : out.factors) {
    if (fac.multiplicity < 2) continue;
    if (fq::rem(F, fac.poly, q).empty()) out.maximal = false;
  }
  return out;
}

mpq_class pow_q(std::uint64_t q, long s) {
  mpz_class b = static_cast<unsigned long>(q), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(s < 0 ? -s : s));
  return s < 0 ? mpq_class(1, r) : mpq_class(r);
}

bool q_integral(const FieldElement& x, std::uint64_t q) {
  for (const auto& c : x.coords())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), q)) return false;
  return true;
}

long vq(const mpz_class& n, std::uint64_t q) {
  if (n == 0) return 1L << 40;
  return static_cast<long>(intfac::valuation(n, mpz_class(static_cast<unsigned long>(q))));
}

}  // namespace

mpz_class PrimeIdeal::norm() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(f));
  return r;
}

FieldElement PrimeIdeal::generator() const {
  return FieldElement::from_poly(field, poly::to_q(fq::lift(gen_poly)));
}

std::uint64_t PrimeIdeal::residue_root() const {
  if (f != 1) return q;
  return (q - gen_poly[0]) % q;
}

std::string PrimeIdeal::to_string() const {
  if (field.degree() == 1) return "(" + std::to_string(q) + ")";
  return "(" + std::to_string(q) + ", " + poly::to_string(fq::lift(gen_poly), 't') + ")";
}

bool is_q_maximal(const NumberField& k, std::uint64_t q) { return dedekind(k, q).maximal; }

std::vector<PrimeIdeal> factor_rational_prime(const NumberField& k, std::uint64_t q) {
  Dedekind dk = dedekind(k, q);
  if (!dk.maximal) throw IndexDivisorError(q, k.poly_string());
  fq::FPoly fbar = fq::reduce(k.poly(), q);
  std::vector<PrimeIdeal> out;
  for (const auto& fac : dk.factors) {
    PrimeIdeal p{k, q, static_cast<int>(fac.multiplicity), fq::degree(fac.poly), fac.poly,
                 FieldElement(k)};
    fq::FPoly h = fq::divmod(fbar, fac.poly, q).first;
    FieldElement beta = FieldElement::from_poly(k, poly::to_q(fq::lift(h)));
    p.anti_uniformizer = beta * FieldElement(k, mpq_class(1, static_cast<unsigned long>(q)));
    out.push_back(std::move(p));
  }
  return out;
}

const char* kind_name(SplittingType::Kind k) {
  switch (k) {
    case SplittingType::Kind::Inert: return "Inert";
    case SplittingType::Kind::TotallyRamified: return "TotallyRamified";
    case SplittingType::Kind::TotallySplit: return "TotallySplit";
    case SplittingType::Kind::Mixed: return "Mixed";
  }
  return "Mixed";
}

SplittingType classify(int n, const std::vector<PrimeIdeal>& primes) {
  SplittingType st;
  for (const auto& p : primes) st.pattern.emplace_back(p.e, p.f);
  std::stable_sort(st.pattern.begin(), st.pattern.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  st.inert = primes.size() == 1 && primes[0].f == n;
  st.totally_ramified = primes.size() == 1 && primes[0].e == n;
  st.totally_split = static_cast<int>(primes.size()) == n;
  if (st.totally_split)
    st.kind = SplittingType::Kind::TotallySplit;
  else if (st.inert)
    st.kind = SplittingType::Kind::Inert;
  else if (st.totally_ramified)
    st.kind = SplittingType::Kind::TotallyRamified;
  else
    st.kind = SplittingType::Kind::Mixed;
  return st;
}

SplittingType splitting_type(const NumberField& k, std::uint64_t q) {
  return classify(k.degree(), factor_rational_prime(k, q));
}

std::vector<PrimeIdeal> s_k(const NumberField& k) { return factor_rational_prime(k, 2); }

std::vector<PrimeIdeal> u_k(const NumberField& k) {
  std::vector<PrimeIdeal> out;
  for (auto& p : s_k(k))
    if (std::gcd(3, p.e) == 1) out.push_back(p);
  return out;
}

long valuation(const FieldElement& x, const PrimeIdeal& p) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of zero is undefined");
  if (x.field() != p.field) throw Error(ErrorCode::InvalidArgument, "prime of a different field");
  long s = 1L << 40;
  for (const auto& c : x.coords()) {
    if (c == 0) continue;
    s = std::min(s, vq(c.get_num(), p.q) - vq(c.get_den(), p.q));
  }
  FieldElement y = x * FieldElement(x.field(), pow_q(p.q, -s));
  long count = 0;
  for (;;) {
    y *= p.anti_uniformizer;
    if (!q_integral(y, p.q)) break;
    ++count;
  }
  return static_cast<long>(p.e) * s + count;
}

}  // namespace aflt
