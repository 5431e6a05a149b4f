#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "aflt/criteria.hpp"
#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"
#include "aflt/poly.hpp"
#include "test_util.hpp"

using namespace aflt;

namespace {

FieldElement rat(const NumberField& k, mpq_class v) { return FieldElement(k, v); }

const HypothesisStatus* find_hyp(const Verdict& v, const std::string& prefix) {
  for (const auto& h : v.hypotheses)
    if (h.name.rfind(prefix, 0) == 0) return &h;
  return nullptr;
}

// Every witness and every per-prime record recomputes through valuation().
void revalidate(const Verdict& v) {
  for (const auto& h : v.hypotheses)
    for (const auto& sc : h.solutions) {
      CHECK(sc.lambda + sc.mu == rat(sc.lambda.field(), 1));
      for (const auto& pv : sc.per_prime) {
        CHECK(valuation(sc.lambda, pv.prime) == pv.v_lambda);
        CHECK(valuation(sc.mu, pv.prime) == pv.v_mu);
        CHECK(valuation(sc.lambda * sc.mu, pv.prime) == pv.v_lambda_mu);
        CHECK(valuation(rat(sc.lambda.field(), 2), pv.prime) == pv.v2);
      }
      CHECK(sc.ok == sc.witness.has_value());
      if (sc.witness) CHECK(sc.per_prime.at(*sc.witness).ok);
    }
}

bool sturm_totally_real(const NumberField& k) {
  auto f = poly::to_q(k.poly());
  auto chain = poly::sturm_chain(f);
  auto B = poly::root_bound(f);
  return poly::sign_variations(chain, -B) - poly::sign_variations(chain, B) == k.degree();
}

// Independent recomputation of a local hypothesis by name.
bool recompute(const NumberField& k, const HypothesisStatus& h, long l) {
  const int n = k.degree();
  if (h.name == "K totally real") return sturm_totally_real(k);
  if (h.name == "n odd") return n % 2 == 1;
  if (h.name == "3 does not divide n") return n % 3 != 0;
  if (h.name == "2 inert") {
    auto ps = factor_rational_prime(k, 2);
    return ps.size() == 1 && ps[0].f == n;
  }
  if (h.name == "3 totally split") return static_cast<int>(factor_rational_prime(k, 3).size()) == n;
  if (h.name == "l > 5 prime") return l > 5 && intfac::is_prime(static_cast<unsigned long>(l));
  if (h.name == "gcd(n, l - 1) = 1") return std::gcd(static_cast<long>(n), l - 1) == 1;
  if (h.name == std::to_string(l) + " totally ramified") {
    auto ps = factor_rational_prime(k, static_cast<std::uint64_t>(l));
    return ps.size() == 1 && ps[0].e == n;
  }
  FAIL("unknown hypothesis " << h.name);
  return false;
}

}  // namespace

TEST_CASE("criterion ids and aliases") {
  for (auto c : {Criterion::WkBound, Criterion::UkBound, Criterion::UkExact, Criterion::PP2Selmer,
                 Criterion::LocalInertRamified, Criterion::LocalInertSplit3,
                 Criterion::LocalWkRamified, Criterion::LocalWkSplit3})
    CHECK(parse_criterion(criterion_id(c)) == c);
  CHECK(parse_criterion("thm-3-2") == Criterion::WkBound);
  CHECK(parse_criterion("cor-3-4") == Criterion::UkExact);
  CHECK(parse_criterion("thm-7-1") == Criterion::LocalInertRamified);
  CHECK(parse_criterion("cor-7-2") == Criterion::LocalInertSplit3);
  CHECK_FALSE(parse_criterion("thm-9-9"));
}

TEST_CASE("aggregation is three-valued") {
  HypothesisStatus yes;
  yes.holds = true;
  HypothesisStatus bounded = yes;
  bounded.caveat = Caveat::BoundedSearch;
  HypothesisStatus no;
  HypothesisStatus undet;
  undet.caveat = Caveat::Undetermined;
  CHECK(aggregate({yes, yes}) == Applies::Yes);
  CHECK(aggregate({yes, bounded}) == Applies::Unknown);
  CHECK(aggregate({yes, undet}) == Applies::Unknown);
  CHECK(aggregate({bounded, no}) == Applies::No);
  CHECK(aggregate({undet, no}) == Applies::No);
  CHECK(aggregate({}) == Applies::Yes);
}

TEST_CASE("S_K bound over Q") {
  Config cfg;
  auto q = NumberField::parse("x");
  auto v = check_wk_bound(q, 8, cfg);
  CHECK(v.applies == Applies::Unknown);
  auto h = find_hyp(v, "every S_K-unit solution");
  REQUIRE(h);
  CHECK(h->holds);
  CHECK(h->caveat == Caveat::BoundedSearch);
  REQUIRE(h->solutions.size() == 3);
  for (const auto& sc : h->solutions) {
    REQUIRE(sc.witness);
    const auto& pv = sc.per_prime[*sc.witness];
    CHECK(pv.t == 1);
    CHECK(pv.v2 == 1);
    CHECK(pv.t <= 4 * pv.v2);
  }
  revalidate(v);

  auto v0 = check_wk_bound(q, 0, cfg);
  CHECK(v0.applies == Applies::Unknown);
}

TEST_CASE("injected counterexample refutes") {
  Config cfg;
  auto q = NumberField::parse("x");
  std::vector<SUnitPair> inj{{rat(q, 1024), rat(q, -1023)}};
  auto v = check_wk_bound(q, 8, cfg, &inj);
  CHECK(v.applies == Applies::No);
  auto h = find_hyp(v, "every S_K-unit solution");
  REQUIRE(h);
  REQUIRE(h->solutions.size() == 1);
  CHECK_FALSE(h->solutions[0].witness);
  CHECK(h->solutions[0].per_prime[0].t == 10);
  std::vector<SUnitPair> bad{{rat(q, 2), rat(q, 2)}};
  CHECK(test::code_of([&] { check_wk_bound(q, 8, cfg, &bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("U_K exact over Q") {
  Config cfg;
  auto q = NumberField::parse("x");
  auto v = check_uk_exact(q, 8, 2, cfg);
  CHECK(v.applies == Applies::Unknown);
  auto h = find_hyp(v, "every S_K-unit solution has P in U_K");
  REQUIRE(h);
  for (const auto& sc : h->solutions) {
    REQUIRE(sc.witness);
    CHECK(sc.per_prime[*sc.witness].t == sc.per_prime[*sc.witness].v2);
  }
  auto d = find_hyp(v, "derivation");
  REQUIRE(d);
  CHECK(d->holds);
  revalidate(v);
  CHECK(check_uk_exact(q, 8, 4, cfg).applies == Applies::No);
}

TEST_CASE("U_K bound over Q(sqrt 2)") {
  Config cfg;
  auto k = NumberField::parse("x^2 - 2");
  auto v = check_uk_bound(k, 8, 2, cfg);
  auto es = find_hyp(v, "(ES)");
  REQUIRE(es);
  CHECK(es->caveat == Caveat::AssumedIfNeeded);
  CHECK(es->note.find("[K:Q] even") != std::string::npos);
  auto h = find_hyp(v, "every S_K-unit solution has P in U_K");
  REQUIRE(h);
  for (const auto& sc : h->solutions)
    for (const auto& pv : sc.per_prime) CHECK(pv.v2 == 2);
  // computed: some solutions have v(lambda mu) != v_P(2) mod 3
  CHECK(v.applies == Applies::No);
  revalidate(v);
}

TEST_CASE("S-unit criteria are never Yes and No persists as B grows") {
  Config cfg;
  for (auto s : {"x", "x^2 - 2", "x^2 - 3", "x^2 - x - 1", "x^2 - 6"}) {
    CAPTURE(s);
    auto k = NumberField::parse(s);
    for (long B : {2L, 4L}) {
      auto a = check_wk_bound(k, B, cfg);
      auto b = check_uk_bound(k, B, 3, cfg);
      auto c = check_uk_exact(k, B, 2, cfg);
      for (const auto* v : {&a, &b, &c}) {
        CHECK(v->applies != Applies::Yes);
        revalidate(*v);
      }
      if (a.applies == Applies::No) CHECK(check_wk_bound(k, B + 2, cfg).applies == Applies::No);
      if (b.applies == Applies::No) CHECK(check_uk_bound(k, B + 2, 3, cfg).applies == Applies::No);
      if (c.applies == Applies::No) CHECK(check_uk_exact(k, B + 2, 2, cfg).applies == Applies::No);
    }
  }
}

TEST_CASE("x^p + y^p = z^2 pipeline over Q") {
  Config cfg;
  auto q = NumberField::parse("x");
  auto v = check_pp2_selmer(q, 6, cfg);
  CHECK(v.applies == Applies::Unknown);
  auto hp = find_hyp(v, "h+ = 1");
  REQUIRE(hp);
  CHECK(hp->holds);
  std::set<std::string> polys;
  for (const auto& h : v.hypotheses) {
    CHECK(h.holds);
    if (h.field_poly.empty()) continue;
    polys.insert(h.field_poly);
    CHECK_FALSE(h.solutions.empty());
    for (const auto& sc : h.solutions) CHECK(sc.witness);
  }
  CHECK(polys == std::set<std::string>{"x^2 + 1", "x^2 - 2", "x^2 + 2"});
  revalidate(v);

  auto k3 = NumberField::parse("x^2 - 3");
  auto v3 = check_pp2_selmer(k3, 4, cfg);
  CHECK(v3.applies == Applies::No);
  auto h3 = find_hyp(v3, "h+ = 1");
  REQUIRE(h3);
  CHECK_FALSE(h3->holds);
}

TEST_CASE("local criteria over Q") {
  auto q = NumberField::parse("x");
  CHECK(check_local_inert_split3(q).applies == Applies::Yes);
  CHECK(check_local_wk(q, 2, 0).applies == Applies::Yes);
  CHECK(test::code_of([&] { check_local_wk(q, 3, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("the discrepant cubic") {
  auto k = NumberField::parse("x^3 - x^2 + 1");
  auto v = check_local_inert_ramified(k, 23);
  CHECK(v.applies == Applies::No);
  auto inert = find_hyp(v, "2 inert");
  REQUIRE(inert);
  CHECK(inert->holds);
  auto ram = find_hyp(v, "23 totally ramified");
  REQUIRE(ram);
  CHECK_FALSE(ram->holds);
  CHECK(ram->note == "shape [(2,1), (1,1)]");
  REQUIRE(ram->factorization.size() == 2);
  CHECK(ram->factorization[0].residue_root() == 16);
  CHECK(ram->factorization[1].residue_root() == 15);
  auto tr = find_hyp(v, "K totally real");
  REQUIRE(tr);
  CHECK_FALSE(tr->holds);
  REQUIRE(v.notes.size() == 1);
  CHECK(v.notes[0].find("(x - 16)^2 (x - 15) mod 23") != std::string::npos);

  auto scan = scan_ramified_l(k, 1000);
  REQUIRE(scan.size() == 1);
  CHECK(scan[0].l == 23);
  CHECK_FALSE(scan[0].totally_ramified);
  CHECK(scan_ramified_l(NumberField::parse("x^2 - 2"), 1000).empty());
  CHECK(scan_ramified_l(NumberField::parse("x"), 1000).empty());
}

TEST_CASE("local verdicts recompute hypothesis by hypothesis") {
  int yes = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -6; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        std::optional<NumberField> kk;
        try {
          kk = NumberField::make(ZPoly{c, b, a, 1});
        } catch (const Error&) {
          continue;
        }
        const NumberField& k = *kk;
        std::vector<std::pair<Verdict, long>> vs;
        try {
          vs.push_back({check_local_inert_split3(k), 0});
          vs.push_back({check_local_wk(k, 2, 0), 0});
          for (const auto& cand : scan_ramified_l(k, 200)) {
            if (!cand.error.empty()) continue;
            vs.push_back({check_local_inert_ramified(k, cand.l), cand.l});
            vs.push_back({check_local_wk(k, 1, cand.l), cand.l});
          }
        } catch (const IndexDivisorError&) {
          continue;
        }
        for (const auto& [v, l] : vs) {
          bool all = true;
          for (const auto& h : v.hypotheses) {
            bool r = recompute(k, h, l);
            CHECK(r == h.holds);
            all = all && r;
          }
          CHECK((v.applies == Applies::Yes) == all);
          if (v.applies == Applies::Yes) ++yes;
        }
      }
  CHECK(yes > 0);
}
