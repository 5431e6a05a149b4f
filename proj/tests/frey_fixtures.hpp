// Concrete triples satisfying the defining relations of both Frey families.
#pragma once

#include <string>
#include <vector>

#include "aflt/frey.hpp"

namespace test {

struct FreyFixture {
  std::string label;
  aflt::FreySpec spec;
};

inline aflt::FreySpec frey_spec(aflt::FreyFamily fam, long r, const aflt::FieldElement& a,
                                const aflt::FieldElement& b, const aflt::FieldElement& c, long p) {
  aflt::FreySpec s{fam, r, a, b, c, p};
  return s;
}

inline std::vector<FreyFixture> frey_fixtures() {
  using aflt::FieldElement;
  using aflt::FreyFamily;
  using aflt::NumberField;
  std::vector<FreyFixture> out;
  auto add = [&](FreyFamily fam, long r, const FieldElement& a, const FieldElement& b,
                 const FieldElement& c, long p) {
    std::string label = std::string(aflt::family_name(fam)) + " K=" + a.field().poly_string() +
                        " (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                        ") r=" + std::to_string(r) + " p=" + std::to_string(p);
    out.push_back({label, frey_spec(fam, r, a, b, c, p)});
  };
  auto q = NumberField::parse("x");
  auto k2 = NumberField::parse("x^2 - 2");
  auto rat = [&](const NumberField& k, mpq_class v) { return FieldElement(k, v); };
  auto t2 = FieldElement::theta(k2);
  auto one2 = rat(k2, 1);

  // x^p + y^p = 2^r z^p
  for (long p : {3L, 5L, 7L, 11L, 13L}) add(FreyFamily::TwoPowerTwist, 1, rat(q, 1), rat(q, 1), rat(q, 1), p);
  for (mpq_class x : {mpq_class(2), mpq_class(3), mpq_class(-5), mpq_class(1, 2), mpq_class(7, 3)})
    for (long p : {3L, 5L}) add(FreyFamily::TwoPowerTwist, 1, rat(q, x), rat(q, x), rat(q, x), p);
  for (long x : {1L, 2L, 3L})
    for (long p : {3L, 5L})
      add(FreyFamily::TwoPowerTwist, p + 1, rat(q, x), rat(q, x), rat(q, mpq_class(x, 2)), p);
  for (long p : {3L, 5L}) {
    add(FreyFamily::TwoPowerTwist, 1, t2, t2, t2, p);
    add(FreyFamily::TwoPowerTwist, 1, one2 + t2, one2 + t2, one2 + t2, p);
  }
  // 1 + theta^p = 2^r with theta^p = 2^r - 1
  for (long p : {3L, 5L})
    for (long r : {2L, 3L, 4L}) {
      auto k = NumberField::parse("x^" + std::to_string(p) + " - " + std::to_string((1L << r) - 1));
      auto th = FieldElement::theta(k);
      add(FreyFamily::TwoPowerTwist, r, rat(k, 1), th, rat(k, 1), p);
      add(FreyFamily::TwoPowerTwist, r, th, rat(k, 1), rat(k, 1), p);
    }

  // x^p + y^p = z^2
  for (long p : {3L, 5L, 7L}) add(FreyFamily::PPTwo, 0, one2, one2, t2, p);
  for (mpq_class y : {mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(1, 3)})
    for (long p : {3L, 5L, 7L}) {
      mpq_class c = 1;
      for (long i = 0; i < (p + 1) / 2; ++i) c *= 2;
      for (long i = 0; i < p; ++i) c *= y;
      add(FreyFamily::PPTwo, 0, rat(q, 2 * y * y), rat(q, 2 * y * y), rat(q, c), p);
    }
  for (const auto& y : {one2, rat(k2, 2), t2, one2 + t2})
    for (long p : {3L, 5L}) add(FreyFamily::PPTwo, 0, y * y, y * y, t2 * y.pow(p), p);
  add(FreyFamily::PPTwo, 0, rat(q, 1), rat(q, 2), rat(q, 3), 3);
  add(FreyFamily::PPTwo, 0, rat(q, 2), rat(q, 1), rat(q, -3), 3);
  add(FreyFamily::PPTwo, 0, rat(q, -7), rat(q, 8), rat(q, 13), 3);
  // (a, b, sqrt(a^p + b^p)) in Q(sqrt(a^p + b^p))
  for (long p : {3L, 5L})
    for (long a : {-1L, 1L, 2L, 3L})
      for (long b : {2L, 3L, 5L}) {
        mpz_class s = 0, ap, bp;
        mpz_pow_ui(ap.get_mpz_t(), mpz_class(a).get_mpz_t(), p);
        mpz_pow_ui(bp.get_mpz_t(), mpz_class(b).get_mpz_t(), p);
        s = ap + bp;
        if (s == 0 || mpz_perfect_square_p(s.get_mpz_t())) continue;
        auto k = NumberField::parse("x^2 - (" + s.get_str() + ")");
        add(FreyFamily::PPTwo, 0, rat(k, a), rat(k, b), FieldElement::theta(k), p);
      }
  return out;
}

}  // namespace test
