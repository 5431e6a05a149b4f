#include <doctest.h>

#include <algorithm>
#include <random>

#include "aflt/errors.hpp"
#include "aflt/selmer.hpp"
#include "aflt/sunit.hpp"
#include "sunit_oracle.hpp"
#include "test_util.hpp"

using namespace aflt;

TEST_CASE("box oracle sanity") {
  // Q: lambda = +-2^e with 1 - lambda = +-2^f
  auto s = test::oracle_set(test::box_cases()[0], 8);
  test::PairSet expect = {{{2, 0}, {-1, 0}}, {{-1, 0}, {2, 0}}, {{mpq_class(1, 2), 0}, {mpq_class(1, 2), 0}}};
  CHECK(s == expect);
  // Q(i): 1 - i = -i (1 + i) and 1/2 = -i (1 + i)^-2
  auto si = test::oracle_set(test::box_cases()[1], 6);
  CHECK(si.count({{0, 1}, {1, -1}}));
  CHECK(si.count({{1, 1}, {0, -1}}));
  CHECK(si.count({{mpq_class(1, 2), 0}, {mpq_class(1, 2), 0}}));
}

TEST_CASE("solver matches the exhaustive box") {
  Config cfg;
  for (const auto& c : test::box_cases()) {
    CAPTURE(c.poly);
    auto k = NumberField::parse(c.poly);
    auto basis = sunit_basis(k, s_k(k), cfg);
    REQUIRE(test::same_generators(basis, c));
    for (long B : {0L, 2L, 6L}) {
      auto lib = test::to_set(solve_sunit(basis, B, cfg));
      CHECK(lib == test::oracle_set(c, B));
    }
  }
}

TEST_CASE("Q with B = 8") {
  Config cfg;
  auto q = NumberField::parse("x");
  auto r = solve_sunit(sunit_basis(q, s_k(q), cfg), 8, cfg);
  test::PairSet expect = {{{2, 0}, {-1, 0}}, {{-1, 0}, {2, 0}}, {{mpq_class(1, 2), 0}, {mpq_class(1, 2), 0}}};
  CHECK(test::to_set(r) == expect);
  CHECK(r.solutions.size() == 3);
}

TEST_CASE("empty S over Q has no solutions") {
  Config cfg;
  auto q = NumberField::parse("x");
  CHECK(solve_sunit(sunit_basis(q, {}, cfg), 8, cfg).solutions.empty());
}

TEST_CASE("solution invariants") {
  Config cfg;
  for (auto s : {"x", "x^2 + 1", "x^2 - 2", "x^2 - 3", "x^2 - x - 1"}) {
    CAPTURE(s);
    auto k = NumberField::parse(s);
    auto S = s_k(k);
    auto basis = sunit_basis(k, S, cfg);
    auto r6 = solve_sunit(basis, 6, cfg);
    auto r3 = solve_sunit(basis, 3, cfg);
    auto one = FieldElement(k, mpq_class(1));
    for (std::size_t i = 0; i < r6.solutions.size(); ++i) {
      const auto& sol = r6.solutions[i];
      CHECK(sol.lambda + sol.mu == one);
      CHECK(is_s_unit(sol.lambda, S));
      CHECK(is_s_unit(sol.mu, S));
      REQUIRE(sol.partner < r6.solutions.size());
      CHECK(r6.solutions[sol.partner].lambda == sol.mu);
      CHECK(r6.solutions[sol.partner].mu == sol.lambda);
      for (std::size_t j = 0; j < S.size(); ++j) {
        long vl = valuation(sol.lambda, S[j]), vm = valuation(sol.mu, S[j]);
        long t = std::max(std::labs(vl), std::labs(vm));
        CHECK(sol.t_max[j] == t);
        if (t > 0) {
          long vlm = vl + vm;
          CHECK((vlm == -2 * t || vlm == t));
        }
      }
    }
    auto big = test::to_set(r6);
    for (const auto& p : test::to_set(r3)) CHECK(big.count(p));
  }
}

TEST_CASE("S-unit membership") {
  auto k = NumberField::parse("x^2 - 2");
  auto S = s_k(k);
  auto t = FieldElement::theta(k);
  auto one = FieldElement(k, mpq_class(1));
  CHECK(is_s_unit(t, S));
  CHECK(is_s_unit(one + t, S));
  CHECK(is_s_unit(FieldElement(k, mpq_class(1, 8)), S));
  CHECK_FALSE(is_s_unit(FieldElement(k, mpq_class(3)), S));
  // norm 1 but not a unit at 7
  CHECK_FALSE(is_s_unit((FieldElement(k, mpq_class(3)) + t) / (FieldElement(k, mpq_class(3)) - t), S));
}

TEST_CASE("Selmer group of Q") {
  Config cfg;
  auto q = NumberField::parse("x");
  auto g = selmer_group(sunit_basis(q, s_k(q), cfg), 1);
  CHECK(g.basis_size == 2);
  std::vector<mpq_class> reps;
  for (const auto& r : g.representatives) reps.push_back(r.rational());
  std::sort(reps.begin(), reps.end());
  CHECK(reps == std::vector<mpq_class>{-2, -1, 1, 2});

  auto g0 = selmer_group(sunit_basis(q, {}, cfg), 1);
  CHECK(g0.representatives.size() == 2);
  CHECK(test::code_of([&] { selmer_group(sunit_basis(q, s_k(q), cfg), 1, 3); }) ==
        ErrorCode::Unsupported);
}

TEST_CASE("Selmer group of Q(sqrt 2): closure and independence") {
  Config cfg;
  auto k = NumberField::parse("x^2 - 2");
  auto g = selmer_group(sunit_basis(k, s_k(k), cfg), 1);
  CHECK(g.basis_size == 3);
  REQUIRE(g.representatives.size() == 8);
  CHECK(std::find(g.representatives.begin(), g.representatives.end(),
                  FieldElement(k, mpq_class(1))) != g.representatives.end());
  std::vector<oracle::Quad> reps;
  for (const auto& r : g.representatives) reps.push_back(test::to_quad(r));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i != j) CHECK_FALSE(oracle::quad_is_square(oracle::qmul(reps[i], oracle::qinv(reps[j], 2), 2), 2));
      auto prod = oracle::qmul(reps[i], reps[j], 2);
      int hits = 0;
      for (const auto& r : reps)
        if (oracle::quad_is_square(oracle::qmul(prod, oracle::qinv(r, 2), 2), 2)) ++hits;
      CHECK(hits == 1);
    }
}

TEST_CASE("square roots") {
  std::mt19937_64 rng(31);
  for (auto s : {"x", "x^2 - 2", "x^2 + 1", "x^3 - x^2 + 1", "x^3 - 3*x + 1"}) {
    auto k = NumberField::parse(s);
    for (int i = 0; i < 30; ++i) {
      auto y = test::rand_nonzero(rng, k, 15);
      auto r = square_root(y * y);
      REQUIRE(r);
      CHECK((*r == y || *r == -y));
    }
  }
  auto k = NumberField::parse("x^2 - 2");
  CHECK(is_square(FieldElement(k, mpq_class(2))));
  CHECK_FALSE(is_square(FieldElement(k, mpq_class(3))));
  CHECK_FALSE(is_square(FieldElement::theta(k)));
}

TEST_CASE("quadratic extensions") {
  auto q = NumberField::parse("x");
  auto L2 = quadratic_extension(FieldElement(q, mpq_class(2)));
  CHECK(L2.poly_string() == "x^2 - 2");
  auto Li = quadratic_extension(FieldElement(q, mpq_class(-1)));
  CHECK(Li.poly_string() == "x^2 + 1");
  auto S = s_k(Li);
  REQUIRE(S.size() == 1);
  CHECK(S[0].e == 2);
  CHECK(test::code_of([&] { quadratic_extension(FieldElement(q, mpq_class(1))); }) ==
        ErrorCode::IsSquare);

  auto k = NumberField::parse("x^2 - 2");
  auto L = quadratic_extension(FieldElement::theta(k));
  CHECK(L.poly_string() == "x^4 - 2");
}
