#include <doctest.h>

#include <random>

#include "aflt/errors.hpp"
#include "aflt/fq.hpp"
#include "aflt/int_factor.hpp"
#include "aflt/number_field.hpp"
#include "aflt/poly.hpp"
#include "aflt/zfactor.hpp"
#include "test_util.hpp"

using namespace aflt;

TEST_CASE("field summaries") {
  auto q = NumberField::parse("x");
  CHECK(q.degree() == 1);
  CHECK(q.r1() == 1);
  CHECK(q.r2() == 0);

  auto k2 = NumberField::parse("x^2 - 2");
  CHECK(k2.poly_disc() == 8);
  CHECK(k2.r1() == 2);
  CHECK(k2.totally_real());

  auto k3 = NumberField::parse("x^3 - x^2 + 1");
  CHECK(k3.degree() == 3);
  // 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 with (a, b, c) = (-1, 0, 1)
  long a = -1, b = 0, c = 1;
  long disc = 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
  CHECK(k3.poly_disc() == disc);
  CHECK(disc == -23);
  CHECK(k3.r1() == 1);
  CHECK(k3.r2() == 1);
  CHECK_FALSE(k3.totally_real());
}

TEST_CASE("coefficient list input") {
  auto k = NumberField::parse("[1, 0, -1, 1]");
  CHECK(k.poly_string() == "x^3 - x^2 + 1");
  CHECK(NumberField::parse("1,0,-1,1") == k);
}

TEST_CASE("construction errors") {
  for (auto s : {"x^2 - 1", "x^3 - x", "x^4 - 4"}) CHECK(test::code_of([&] { NumberField::parse(s); }) == ErrorCode::Reducible);
  CHECK(test::code_of([] { NumberField::parse("2*x^2 - 1"); }) == ErrorCode::NotMonic);
  CHECK(test::code_of([] { NumberField::parse("5"); }) == ErrorCode::DegreeZero);
  CHECK(test::code_of([] { NumberField::parse("x^7 - 2"); }) == ErrorCode::Unsupported);
  CHECK(test::code_of([] { NumberField::parse("x^2 +* 1"); }) == ErrorCode::Parse);
}

TEST_CASE("element arithmetic examples") {
  auto k = NumberField::parse("x^2 - 2");
  auto t = FieldElement::theta(k);
  CHECK(t * t == FieldElement(k, mpq_class(2)));
  auto one = FieldElement(k, mpq_class(1));
  CHECK((one / (one + t)) == t - one);
  CHECK(t.norm() == -2);
  CHECK((one + t).norm() == -1);

  auto q = NumberField::parse("x");
  CHECK((FieldElement(q, mpq_class(3)) / FieldElement(q, mpq_class(2))).rational() == mpq_class(3, 2));

  auto k3 = NumberField::parse("x^3 - x^2 + 1");
  CHECK(FieldElement::theta(k3).trace() == 1);
  // (-1)^n f(0)
  CHECK(FieldElement::theta(k3).norm() == -1);

  CHECK(test::code_of([&] { (void)(one / FieldElement(k)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("total positivity") {
  auto k = NumberField::parse("x^2 - 2");
  auto t = FieldElement::theta(k);
  CHECK(FieldElement(k, mpq_class(2)).is_totally_positive());
  CHECK_FALSE(t.is_totally_positive());
  CHECK((FieldElement(k, mpq_class(3)) + t).is_totally_positive());
  auto k3 = NumberField::parse("x^3 - x^2 + 1");
  CHECK(test::code_of([&] { (void)FieldElement(k3, mpq_class(1)).is_totally_positive(); }) ==
        ErrorCode::NotTotallyReal);
}

TEST_CASE("norm and trace against closed forms in quadratic fields") {
  std::mt19937_64 rng(7);
  for (long d : {2L, 3L, -1L, 7L, -5L}) {
    auto k = NumberField::parse("x^2 - (" + std::to_string(d) + ")");
    for (int i = 0; i < 50; ++i) {
      mpq_class u = test::rand_q(rng, 20), v = test::rand_q(rng, 20);
      FieldElement x(k, {u, v});
      CHECK(x.norm() == u * u - d * v * v);
      CHECK(x.trace() == 2 * u);
    }
  }
}

TEST_CASE("norm multiplicative, trace additive, division round-trips") {
  std::mt19937_64 rng(11);
  for (auto s : {"x^2 - 2", "x^2 + 1", "x^3 - x^2 + 1", "x^3 - 3*x + 1", "x^4 - 10*x^2 + 1",
                 "x^6 + x + 1"}) {
    auto k = NumberField::parse(s);
    for (int i = 0; i < 120; ++i) {
      auto x = test::rand_elem(rng, k, 9), y = test::rand_elem(rng, k, 9);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x + y).trace() == x.trace() + y.trace());
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("signature agrees with the Sturm chain") {
  for (auto s : {"x", "x^2 - 2", "x^2 + 1", "x^3 - x^2 + 1", "x^3 - 3*x + 1", "x^3 - 2",
                 "x^4 - 10*x^2 + 1", "x^5 - x - 1", "x^6 - 3*x^2 + 1"}) {
    auto k = NumberField::parse(s);
    auto f = poly::to_q(k.poly());
    auto chain = poly::sturm_chain(f);
    auto B = poly::root_bound(f);
    int real = poly::sign_variations(chain, -B) - poly::sign_variations(chain, B);
    CHECK(real == k.r1());
    CHECK(k.r1() + 2 * k.r2() == k.degree());
  }
}

TEST_CASE("discriminant against the cubic formula") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int i = 0; i < 200; ++i) {
    long a = dist(rng), b = dist(rng), c = dist(rng);
    ZPoly f{c, b, a, 1};
    mpz_class A = a, B = b, C = c;
    mpz_class expect = 18 * A * B * C - 4 * A * A * A * C + A * A * B * B - 4 * B * B * B - 27 * C * C;
    CHECK(poly::discriminant(f) == expect);
  }
}

TEST_CASE("integer polynomial factorization reproduces the input") {
  std::vector<ZPoly> cases = {
      {4, 0, 0, 0, 1},             // x^4 + 4
      {-1, 0, 0, 0, 0, 0, 1},      // x^6 - 1
      {1, 0, -10, 0, 1},           // irreducible
      {-6, 11, -6, 1},             // (x-1)(x-2)(x-3)
      {0, 0, 1},                   // x^2
      {1, 2, 1},                   // (x+1)^2
  };
  for (const auto& f : cases) {
    auto fs = zfactor::factor_monic(f);
    ZPoly prod{1};
    for (const auto& fa : fs)
      for (unsigned m = 0; m < fa.multiplicity; ++m) prod = poly::mul(prod, fa.poly);
    CHECK(prod == f);
    for (const auto& fa : fs) CHECK(zfactor::is_irreducible(fa.poly));
  }
  CHECK(zfactor::factor_monic(cases[0]).size() == 2);
  CHECK(zfactor::factor_monic(cases[1]).size() == 4);
  CHECK(zfactor::is_irreducible(cases[2]));
}

TEST_CASE("factorization mod p against brute-force roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 23ULL, 101ULL}) {
    for (int i = 0; i < 40; ++i) {
      ZPoly f{dist(rng), dist(rng), dist(rng), dist(rng), 1};
      auto fp = fq::reduce(f, p);
      auto fs = fq::factor(fp, p);
      fq::FPoly prod{1};
      std::size_t linear = 0;
      for (const auto& fa : fs) {
        for (unsigned m = 0; m < fa.multiplicity; ++m) prod = fq::mul(prod, fa.poly, p);
        if (fq::degree(fa.poly) == 1) ++linear;
        CHECK(fq::is_irreducible(fa.poly, p));
      }
      CHECK(prod == fq::monic(fp, p));
      std::size_t roots = 0;
      for (std::uint64_t x = 0; x < p; ++x) {
        mpz_class v = poly::eval(f, mpz_class(static_cast<unsigned long>(x))) % static_cast<unsigned long>(p);
        if (v == 0) ++roots;
      }
      CHECK(roots == linear);
    }
  }
}

TEST_CASE("integer factorization") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    mpz_class n = static_cast<unsigned long>(rng() % 1000000000ULL) + 2;
    auto fa = intfac::factor(n);
    REQUIRE(fa.complete);
    mpz_class prod = 1;
    for (const auto& [q, e] : fa.factors) {
      CHECK(intfac::is_prime(q));
      for (unsigned j = 0; j < e; ++j) prod *= q;
    }
    CHECK(prod == n);
  }
  mpz_class big("1000000000000000000000000000057");  // prime
  CHECK(intfac::is_prime(big));
  auto fa = intfac::factor(big * 3);
  CHECK(fa.factors.size() == 2);
}
