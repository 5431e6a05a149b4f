// Acceptance run: one PASS/FAIL line per criterion, with elapsed time.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aflt/criteria.hpp"
#include "aflt/frey.hpp"
#include "aflt/ideal.hpp"
#include "aflt/report.hpp"
#include "aflt/selmer.hpp"
#include "aflt/sunit.hpp"
#include "frey_fixtures.hpp"
#include "oracles.hpp"
#include "sunit_oracle.hpp"
#include "test_util.hpp"

using namespace aflt;

namespace {

FieldElement rat(const NumberField& k, mpq_class v) { return FieldElement(k, v); }

// Collects failed expectations for one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const HypothesisStatus* find_hyp(const Verdict& v, const std::string& prefix) {
  for (const auto& h : v.hypotheses)
    if (h.name.rfind(prefix, 0) == 0) return &h;
  return nullptr;
}

void criterion1(Probe& pr) {
  auto fx = test::frey_fixtures();
  auto q = NumberField::parse("x");
  auto k2 = NumberField::parse("x^2 - 2");
  for (long p : {3L, 5L, 7L})
    fx.push_back({"(1,1,1) p=" + std::to_string(p),
                  test::frey_spec(FreyFamily::TwoPowerTwist, 1, rat(q, 1), rat(q, 1), rat(q, 1), p)});
  for (long p : {3L, 5L})
    fx.push_back({"(1,1,t) p=" + std::to_string(p),
                  test::frey_spec(FreyFamily::PPTwo, 0, rat(k2, 1), rat(k2, 1), FieldElement::theta(k2), p)});
  std::size_t per_family[2] = {0, 0};
  for (const auto& f : fx) {
    ++per_family[f.spec.family == FreyFamily::TwoPowerTwist ? 0 : 1];
    auto cc = concrete_cross_check(f.spec);
    pr.expect(cc.ok(), "cross-check " + f.label);
    auto m = frey_model(f.spec);
    pr.expect(m.c4 * m.c4 * m.c4 - m.c6 * m.c6 == rat(f.spec.a.field(), 1728) * m.delta,
              "c4^3 - c6^2 = 1728 delta " + f.label);
    auto inv = invariants(f.spec);
    pr.expect(inv.delta && *inv.delta == m.delta && inv.c4 && *inv.c4 == m.c4 && inv.j && m.j &&
                  *inv.j == *m.j,
              "closed forms " + f.label);
  }
  pr.expect(fx.size() >= 50, "fewer than 50 fixtures");
  pr.expect(per_family[0] > 0 && per_family[1] > 0, "both families present");
}

void criterion2(Probe& pr) {
  Config cfg;
  auto q = NumberField::parse("x");
  auto r = solve_sunit(sunit_basis(q, s_k(q), cfg), 8, cfg);
  test::PairSet expect = {{{2, 0}, {-1, 0}}, {{-1, 0}, {2, 0}}, {{mpq_class(1, 2), 0}, {mpq_class(1, 2), 0}}};
  pr.expect(test::to_set(r) == expect && r.solutions.size() == 3, "Q, B = 8");
  for (const auto& c : test::box_cases()) {
    if (c.d == 0) continue;
    auto k = NumberField::parse(c.poly);
    auto basis = sunit_basis(k, s_k(k), cfg);
    if (!test::same_generators(basis, c)) {
      pr.expect(false, "generators differ from the oracle's for " + std::string(c.poly));
      continue;
    }
    pr.expect(test::to_set(solve_sunit(basis, 6, cfg)) == test::oracle_set(c, 6), "box oracle " + std::string(c.poly));
  }
}

std::string quad_poly(long d) {
  if (((d % 4) + 4) % 4 == 1) return "x^2 - x - " + std::to_string((d - 1) / 4);
  return "x^2 - " + std::to_string(d);
}

void criterion3(Probe& pr) {
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    auto k = NumberField::parse(quad_poly(d));
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
      auto kind = splitting_type(k, q).kind;
      SplittingType::Kind want = SplittingType::Kind::TotallySplit;
      switch (oracle::quadratic_split(d, q)) {
        case oracle::Split::Split: want = SplittingType::Kind::TotallySplit; break;
        case oracle::Split::Inert: want = SplittingType::Kind::Inert; break;
        case oracle::Split::Ramified: want = SplittingType::Kind::TotallyRamified; break;
      }
      pr.expect(kind == want, "d = " + std::to_string(d) + ", q = " + std::to_string(q));
    }
  }
}

void criterion4(Probe& pr) {
  auto k = NumberField::parse("x^3 - x^2 + 1");
  auto v = check_local_inert_ramified(k, 23);
  pr.expect(v.applies == Applies::No, "verdict No");
  auto inert = find_hyp(v, "2 inert");
  pr.expect(inert && inert->holds, "2 inert = Yes");
  auto ram = find_hyp(v, "23 totally ramified");
  pr.expect(ram && !ram->holds, "23 not totally ramified");
  if (ram) {
    const auto& fac = ram->factorization;
    pr.expect(fac.size() == 2 && fac[0].e == 2 && fac[0].f == 1 && fac[1].e == 1 && fac[1].f == 1,
              "shape [(2,1), (1,1)]");
    pr.expect(fac.size() == 2 && fac[0].residue_root() == 16 && fac[1].residue_root() == 15,
              "roots 16 (double) and 15 (simple)");
  }
  pr.expect(!v.notes.empty() && v.notes[0].find("(x - 16)^2 (x - 15) mod 23") != std::string::npos,
            "discrepancy note");
  Config cfg;
  CheckRequest req;
  req.criterion = "thm-7-1";
  req.l = 23;
  auto r1 = run_check(k, req, cfg), r2 = run_check(k, req, cfg);
  pr.expect(r1.exit_code == 2, "exit code 2");
  pr.expect(emit_json(r1.doc) == emit_json(r2.doc) && r1.text == r2.text, "deterministic output");
}

void witnesses_t1(Probe& pr, const Verdict& v, const std::string& hyp, const std::string& what) {
  pr.expect(v.applies == Applies::Unknown, what + " Unknown");
  auto h = find_hyp(v, hyp);
  pr.expect(h && h->holds && h->caveat == Caveat::BoundedSearch && !h->solutions.empty(),
            what + " bounded confirmation");
  if (!h) return;
  for (const auto& sc : h->solutions) {
    if (!sc.witness) {
      pr.expect(false, what + " missing witness");
      continue;
    }
    const auto& pv = sc.per_prime[*sc.witness];
    long t = std::max(std::labs(valuation(sc.lambda, pv.prime)), std::labs(valuation(sc.mu, pv.prime)));
    pr.expect(t == 1 && pv.t == 1 && pv.v2 == 1 && t <= 4 * pv.v2, what + " witness t = 1 = v(2)");
  }
}

void criterion5(Probe& pr) {
  Config cfg;
  auto q = NumberField::parse("x");
  pr.expect(check_local_inert_split3(q).applies == Applies::Yes, "2 inert, 3 split over Q");
  pr.expect(check_local_wk(q, 2, 0).applies == Applies::Yes, "W_K local criterion, mode 2");
  witnesses_t1(pr, check_wk_bound(q, 8, cfg), "every S_K-unit solution", "S_K bound");
  witnesses_t1(pr, check_uk_exact(q, 8, 2, cfg), "every S_K-unit solution has P in U_K", "U_K exact");
}

void criterion6(Probe& pr) {
  Config cfg;
  long checked = 0;
  for (const auto& c : test::box_cases()) {
    auto k = NumberField::parse(c.poly);
    auto S = s_k(k);
    auto r = solve_sunit(sunit_basis(k, S, cfg), c.d == 0 ? 8 : 6, cfg);
    for (const auto& sol : r.solutions)
      for (const auto& P : S) {
        long vl = valuation(sol.lambda, P), vm = valuation(sol.mu, P);
        long t = std::max(std::labs(vl), std::labs(vm));
        long v2 = valuation(rat(k, 2), P);
        long vlm = valuation(sol.lambda * sol.mu, P);
        long vj = valuation(j_from_lambda_mu(sol.lambda, sol.mu), P);
        std::string at = std::string(c.poly) + " lambda = " + sol.lambda.to_string();
        if (t > 0) pr.expect(vlm == -2 * t || vlm == t, "v(lambda mu) " + at);
        pr.expect(vj >= 8 * v2 - 2 * t, "v(j) lower bound " + at);
        pr.expect((vj - (8 * v2 - 2 * vlm)) % 3 == 0, "v(j) mod 3 " + at);
        ++checked;
      }
  }
  pr.expect(checked > 0, "no solutions checked");
}

void criterion7(Probe& pr) {
  std::mt19937_64 rng(7);
  for (auto s : {"x", "x^2 - 2", "x^2 - x - 1"}) {
    auto k = NumberField::parse(s);
    int done = 0;
    while (done < 100) {
      auto l = test::rand_elem(rng, k, 25);
      if (l.is_zero() || l == rat(k, 1)) continue;
      auto j = legendre_j(l);
      for (const auto& x : lambda_orbit(l))
        pr.expect(legendre_j(x) == j, std::string(s) + " lambda = " + l.to_string());
      ++done;
    }
  }
}

void criterion8(Probe& pr) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-60, 60);
  long checked = 0;
  for (int i = 0; i < 1000; ++i) {
    ValuationForm f{dist(rng), dist(rng)};
    for (long p : {7L, 11L, 13L, 10007L}) {
      if (p <= f.threshold()) continue;
      ++checked;
      mpz_class v = f.eval(p);
      bool div = mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
      pr.expect(div == f.divisible_by_p() && sgn(v) == f.sign(), f.to_string() + " at p = " + std::to_string(p));
    }
  }
  pr.expect(checked > 0, "no forms checked");
}

void criterion9(Probe& pr) {
  Config cfg;
  auto q = NumberField::parse("x");
  auto g = selmer_group(sunit_basis(q, s_k(q), cfg), 1);
  std::vector<mpq_class> reps;
  for (const auto& r : g.representatives) reps.push_back(r.rational());
  std::sort(reps.begin(), reps.end());
  pr.expect(reps == std::vector<mpq_class>{-2, -1, 1, 2}, "Q(S, 2) = {1, -1, 2, -2}");

  auto k = NumberField::parse("x^2 - 2");
  auto gk = selmer_group(sunit_basis(k, s_k(k), cfg), 1);
  std::vector<oracle::Quad> qs;
  for (const auto& r : gk.representatives) qs.push_back(test::to_quad(r));
  pr.expect(qs.size() == 8, "Q(sqrt 2) group has 8 classes");
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (i != j)
        pr.expect(!oracle::quad_is_square(oracle::qmul(qs[i], oracle::qinv(qs[j], 2), 2), 2),
                  "square ratio");
      auto prod = oracle::qmul(qs[i], qs[j], 2);
      int hits = 0;
      for (const auto& r : qs)
        if (oracle::quad_is_square(oracle::qmul(prod, oracle::qinv(r, 2), 2), 2)) ++hits;
      pr.expect(hits == 1, "closure");
    }
}

void criterion10(Probe& pr) {
  Config cfg;
  auto v = check_pp2_selmer(NumberField::parse("x"), 6, cfg);
  pr.expect(v.applies == Applies::Unknown, "verdict Unknown");
  auto hp = find_hyp(v, "h+ = 1");
  pr.expect(hp && hp->holds, "h+ = 1");
  std::set<std::string> polys;
  for (const auto& h : v.hypotheses) {
    pr.expect(h.holds, "hypothesis fails: " + h.name);
    if (h.field_poly.empty()) continue;
    polys.insert(h.field_poly);
    pr.expect(h.caveat == Caveat::BoundedSearch && !h.solutions.empty(), "S_L solutions in " + h.field_poly);
    for (const auto& sc : h.solutions) pr.expect(sc.witness.has_value(), "witness in " + h.field_poly);
  }
  pr.expect(polys == std::set<std::string>{"x^2 + 1", "x^2 - 2", "x^2 + 2"}, "three quadratic extensions");
}

struct Entry {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Probe&)> run;
};

}  // namespace

int main() {
  const std::vector<Entry> all = {
      {1, "Frey invariants match the literal model", 5, criterion1},
      {2, "S-unit solver equals the exhaustive box", 60, criterion2},
      {3, "quadratic splitting matches congruence rules", 5, criterion3},
      {4, "x^3 - x^2 + 1 with l = 23", 1, criterion4},
      {5, "criteria over Q", 5, criterion5},
      {6, "valuations along the S-unit proof chain", 5, criterion6},
      {7, "legendre_j constant on lambda orbits", 5, criterion7},
      {8, "ValuationForm rules", 1, criterion8},
      {9, "Selmer groups", 5, criterion9},
      {10, "x^p + y^p = z^2 pipeline over Q", 60, criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    Probe pr;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(pr);
    } catch (const std::exception& e) {
      pr.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= c.limit_s) {
      std::ostringstream os;
      os << "runtime " << s << " s exceeds " << c.limit_s << " s";
      pr.failures.push_back(os.str());
    }
    bool ok = pr.failures.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.3f s, limit %g s)\n", ok ? "PASS" : "FAIL", c.id, c.title, s,
                c.limit_s);
    for (std::size_t i = 0; i < pr.failures.size() && i < 5; ++i)
      std::printf("    %s\n", pr.failures[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
