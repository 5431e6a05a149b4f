#include "aflt/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/selmer.hpp"
#include "aflt/sunit.hpp"
#include "aflt/units.hpp"

namespace aflt {

using nlohmann::json;

namespace {

// Left-aligned columns padded to the widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string field_line(const NumberField& k) {
  return "field      " + k.poly_string() + "  degree " + std::to_string(k.degree()) +
         "  signature (" + std::to_string(k.r1()) + ", " + std::to_string(k.r2()) + ")  disc " +
         k.poly_disc().get_str() + "\n";
}

json config_json(const Config& cfg) {
  json j;
  j["sunit_exponent_bound"] = cfg.sunit_exponent_bound;
  j["unit_height_bound"] = to_json(cfg.unit_height_bound);
  j["class_enum_bound"] = cfg.class_enum_bound;
  j["l_max"] = cfg.l_max;
  j["max_candidates"] = to_json(mpz_class(std::to_string(cfg.max_candidates)));
  j["user_class_number"] = cfg.user_class_number ? json(*cfg.user_class_number) : json(nullptr);
  j["allow_trivial_ideal"] = cfg.allow_trivial_ideal;
  j["r"] = cfg.r;
  j["seed"] = to_json(mpz_class(std::to_string(cfg.seed)));
  return j;
}

json prime_list(const std::vector<PrimeIdeal>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

std::string prime_names(const std::vector<PrimeIdeal>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s.empty() ? "(none)" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Header fields common to every report; the payload goes under "result".
Report start(const NumberField& k, const Config& cfg, json command) {
  Report r;
  r.doc["schema_version"] = kSchemaVersion;
  r.doc["field"] = field_summary(k);
  r.doc["command"] = std::move(command);
  r.doc["config"] = config_json(cfg);
  r.doc["caveats"] = json::array();
  return r;
}

template <class F>
Report timed(const Config& cfg, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = body();
  if (cfg.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    r.doc["timing"] = {{"elapsed_ms", static_cast<long long>(ms)}};
    r.text += "elapsed    " + std::to_string(ms) + " ms\n";
  }
  return r;
}

void add_caveat(Report& r, const std::string& c) {
  r.doc["caveats"].push_back(c);
  r.text += "caveat     " + c + "\n";
}

std::string factorization_string(const std::vector<PrimeIdeal>& ps) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += " ";
    s += p.to_string();
    if (p.e > 1) s += "^" + std::to_string(p.e);
    if (p.f == 1) s += "[root " + std::to_string(p.residue_root()) + "]";
  }
  return s;
}

std::string verdict_text(const Verdict& v) {
  std::string s = "criterion  " + std::string(criterion_id(v.criterion)) + "\n";
  if (v.r) s += "r          " + std::to_string(*v.r) + "\n";
  s += "applies    " + std::string(applies_name(v.applies)) + "\n";
  Table t({"hypothesis", "holds", "caveat", "detail"});
  for (const auto& h : v.hypotheses) {
    std::string detail = h.note;
    if (!h.factorization.empty()) detail += "; " + factorization_string(h.factorization);
    if (!h.field_poly.empty()) detail += "; L: " + h.field_poly;
    std::string cav = caveat_name(h.caveat);
    if (h.caveat == Caveat::BoundedSearch) cav += "(B=" + std::to_string(h.bound) + ")";
    t.add({h.name, yes_no(h.holds), cav, detail});
  }
  s += t.str();
  for (const auto& h : v.hypotheses)
    for (const auto& sc : h.solutions) {
      if (sc.ok) continue;
      s += "counterexample  lambda = " + sc.lambda.to_string() + ", mu = " + sc.mu.to_string();
      for (const auto& pv : sc.per_prime)
        s += "; " + pv.prime.to_string() + ": t = " + std::to_string(pv.t) +
             ", v(lambda mu) = " + std::to_string(pv.v_lambda_mu);
      s += "\n";
    }
  for (const auto& n : v.notes) s += "note       " + n + "\n";
  s += "conclusion " + v.conclusion + " (contingent on the hypotheses above)\n";
  return s;
}

FreyFamily parse_family(const std::string& s) {
  if (s == "A" || s == "a" || s == "two-power-twist" || s == "2r")
    return FreyFamily::TwoPowerTwist;
  if (s == "B" || s == "b" || s == "pp2") return FreyFamily::PPTwo;
  throw Error(ErrorCode::InvalidArgument, "unknown Frey family '" + s + "' (use A or B)");
}

json opt_elem(const std::optional<FieldElement>& x) { return x ? to_json(*x) : json(nullptr); }

}  // namespace

int exit_code(Applies a) {
  switch (a) {
    case Applies::Yes: return 0;
    case Applies::No: return 2;
    case Applies::Unknown: return 3;
  }
  return 1;
}

json to_json(const mpz_class& z) {
  static const mpz_class lim = mpz_class(1) << 53;
  if (abs(z) < lim) return json(z.get_si());
  return json(z.get_str());
}

json to_json(const mpq_class& q) { return json(q.get_str()); }

json to_json(const FieldElement& x) {
  json c = json::array();
  for (const auto& q : x.coords()) c.push_back(to_json(q));
  return {{"coords", c}, {"str", x.to_string()}};
}

json to_json(const PrimeIdeal& p) {
  json j = {{"q", to_json(mpz_class(std::to_string(p.q)))},
            {"e", p.e},
            {"f", p.f},
            {"str", p.to_string()},
            {"norm", to_json(p.norm())}};
  j["residue_root"] = p.f == 1 ? to_json(mpz_class(std::to_string(p.residue_root()))) : json(nullptr);
  return j;
}

json to_json(const ValuationForm& v) {
  return {{"alpha", v.alpha}, {"beta", v.beta}, {"threshold", v.threshold()}, {"str", v.to_string()}};
}

json to_json(const ReductionReport& r) {
  return {{"prime", to_json(r.prime)},
          {"v_delta", to_json(r.v_delta)},
          {"v_c4", to_json(r.v_c4)},
          {"v_j", to_json(r.v_j)},
          {"c4_exact", r.c4_exact},
          {"type", reduction_name(r.type)},
          {"flag_p_in_inertia", r.flag_p_in_inertia},
          {"flag_3_in_inertia", r.flag_3_in_inertia},
          {"p_threshold", r.p_threshold}};
}

json to_json(const HypothesisStatus& h) {
  json j = {{"name", h.name},
            {"holds", h.holds},
            {"caveat", caveat_name(h.caveat)},
            {"note", h.note}};
  if (h.caveat == Caveat::BoundedSearch) j["bound"] = h.bound;
  if (!h.field_poly.empty()) j["field_poly"] = h.field_poly;
  if (h.rational_prime) {
    j["rational_prime"] = to_json(mpz_class(std::to_string(*h.rational_prime)));
    j["factorization"] = prime_list(h.factorization);
    json shape = json::array();
    for (const auto& p : h.factorization) shape.push_back({p.e, p.f});
    j["shape"] = shape;
  }
  if (!h.solutions.empty() || h.caveat == Caveat::BoundedSearch) {
    json sols = json::array();
    for (const auto& sc : h.solutions) {
      json per = json::array();
      for (const auto& pv : sc.per_prime)
        per.push_back({{"prime", pv.prime.to_string()},
                       {"v_lambda", pv.v_lambda},
                       {"v_mu", pv.v_mu},
                       {"t", pv.t},
                       {"v_lambda_mu", pv.v_lambda_mu},
                       {"v2", pv.v2},
                       {"ok", pv.ok}});
      sols.push_back({{"lambda", to_json(sc.lambda)},
                      {"mu", to_json(sc.mu)},
                      {"per_prime", per},
                      {"witness", sc.witness ? json(*sc.witness) : json(nullptr)},
                      {"ok", sc.ok}});
    }
    j["solutions"] = sols;
  }
  return j;
}

json to_json(const Verdict& v) {
  json hyps = json::array();
  for (const auto& h : v.hypotheses) hyps.push_back(to_json(h));
  return {{"criterion", criterion_id(v.criterion)},
          {"field_poly", v.field_poly},
          {"r", v.r ? json(*v.r) : json(nullptr)},
          {"applies", applies_name(v.applies)},
          {"hypotheses", hyps},
          {"conclusion", v.conclusion},
          {"notes", v.notes}};
}

json field_summary(const NumberField& k) {
  return {{"poly", k.poly_string()},
          {"degree", k.degree()},
          {"signature", {k.r1(), k.r2()}},
          {"poly_disc", to_json(k.poly_disc())},
          {"totally_real", k.totally_real()}};
}

FieldElement parse_element(const NumberField& k, const std::string& text) {
  QPoly p = poly::parse(text);
  return FieldElement::from_poly(k, p);
}

std::string emit_json(const json& doc) { return doc.dump(2) + "\n"; }

json error_json(const std::string& code, const std::string& message) {
  return {{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
}

Report run_field(const NumberField& k, const Config& cfg) {
  return timed(cfg, [&] {
    Report r = start(k, cfg, {{"name", "field"}});
    r.text = field_line(k);
    json res;
    Table t({"q", "splitting", "shape", "primes"});
    for (std::uint64_t q : {2u, 3u}) {
      auto primes = factor_rational_prime(k, q);
      SplittingType st = classify(k.degree(), primes);
      json shape = json::array();
      for (const auto& [e, f] : st.pattern) shape.push_back({e, f});
      res["factor_" + std::to_string(q)] = {{"kind", kind_name(st.kind)},
                                            {"inert", st.inert},
                                            {"totally_ramified", st.totally_ramified},
                                            {"totally_split", st.totally_split},
                                            {"shape", shape},
                                            {"primes", prime_list(primes)}};
      t.add({std::to_string(q), kind_name(st.kind), shape.dump(), factorization_string(primes)});
    }
    auto S = s_k(k), U = u_k(k);
    res["S_K"] = prime_list(S);
    res["U_K"] = prime_list(U);
    r.doc["result"] = res;
    r.text += t.str();
    r.text += "S_K        " + prime_names(S) + "\n";
    r.text += "U_K        " + prime_names(U) + "\n";
    return r;
  });
}

Report run_sunit(const NumberField& k, long bound, const Config& cfg) {
  return timed(cfg, [&] {
    Report r = start(k, cfg, {{"name", "sunit"}, {"bound", bound}});
    r.text = field_line(k);
    auto S = s_k(k);
    SUnitBasis basis = sunit_basis(k, S, cfg);
    SUnitResult res = solve_sunit(basis, bound, cfg);
    json gens = json::array();
    for (const auto& g : basis.free_generators()) gens.push_back(to_json(g));
    json sols = json::array();
    Table t({"#", "lambda", "mu", "valuations (v(lambda), v(mu)) per P", "partner"});
    for (std::size_t i = 0; i < res.solutions.size(); ++i) {
      const auto& s = res.solutions[i];
      json vals = json::array();
      std::string vs;
      for (std::size_t j = 0; j < S.size(); ++j) {
        vals.push_back({{"prime", S[j].to_string()},
                        {"v_lambda", s.val_profile[j].first},
                        {"v_mu", s.val_profile[j].second},
                        {"t", s.t_max[j]}});
        vs += (vs.empty() ? "" : " ") + S[j].to_string() + ":(" +
              std::to_string(s.val_profile[j].first) + "," +
              std::to_string(s.val_profile[j].second) + ")";
      }
      sols.push_back({{"lambda", to_json(s.lambda)},
                      {"mu", to_json(s.mu)},
                      {"valuations", vals},
                      {"partner", s.partner}});
      t.add({std::to_string(i), s.lambda.to_string(), s.mu.to_string(), vs,
             std::to_string(s.partner)});
    }
    r.doc["result"] = {{"S", prime_list(S)},
                       {"bound", bound},
                       {"candidates", to_json(mpz_class(std::to_string(res.candidates)))},
                       {"generators", gens},
                       {"torsion", to_json(basis.torsion)},
                       {"torsion_order", basis.torsion_order},
                       {"count", res.solutions.size()},
                       {"solutions", sols}};
    r.text += "S          " + prime_names(S) + "\n";
    r.text += "solutions  " + std::to_string(res.solutions.size()) + " (bound " +
              std::to_string(bound) + ", " + std::to_string(res.candidates) + " candidates)\n";
    r.text += t.str();
    add_caveat(r, "bounded-search: exponents |e_i| <= " + std::to_string(bound) +
                      " over the free generators; completeness not proven");
    if (basis.unit_completeness == Completeness::BoundedSearch)
      add_caveat(r, "unit group from a bounded search");
    return r;
  });
}

Report run_selmer(const NumberField& k, const Config& cfg) {
  return timed(cfg, [&] {
    Report r = start(k, cfg, {{"name", "selmer"}});
    r.text = field_line(k);
    UnitGroup units = fundamental_units(k, cfg);
    ClassData cd = class_data(k, units, cfg);
    auto S = s_k(k);
    SUnitBasis basis = sunit_basis(k, S, cfg);
    SelmerGroup sel = selmer_group(basis, cd.h);
    json gens = json::array(), reps = json::array();
    for (const auto& g : sel.generators) gens.push_back(to_json(g));
    Table t({"a", "L = K(sqrt a)"});
    for (const auto& a : sel.representatives) {
      json e = to_json(a);
      std::string ext;
      if (a == FieldElement(k, mpq_class(1))) {
        ext = "(trivial)";
        e["extension"] = nullptr;
      } else {
        try {
          ext = quadratic_extension(a).poly_string();
          e["extension"] = ext;
        } catch (const Error& err) {
          ext = std::string(error_name(err.code())) + ": " + err.what();
          e["extension"] = nullptr;
          e["extension_error"] = {{"code", error_name(err.code())}, {"message", err.what()}};
        }
      }
      reps.push_back(e);
      t.add({a.to_string(), ext});
    }
    r.doc["result"] = {{"S", prime_list(S)},   {"m", sel.m},
                       {"h", cd.h},            {"h_plus", cd.h_plus},
                       {"basis_size", sel.basis_size}, {"generators", gens},
                       {"representatives", reps}};
    r.text += "h, h+      " + std::to_string(cd.h) + ", " + std::to_string(cd.h_plus) + "\n";
    r.text += "basis size " + std::to_string(sel.basis_size) + "\n";
    r.text += t.str();
    for (const auto& c : sel.caveats) add_caveat(r, c);
    return r;
  });
}

Report run_frey(const NumberField& k, const FreyRequest& req, const Config& cfg) {
  return timed(cfg, [&] {
    FreySpec spec{parse_family(req.family), req.r, parse_element(k, req.a),
                  parse_element(k, req.b), parse_element(k, req.c), req.p};
    const bool fam_a = spec.family == FreyFamily::TwoPowerTwist;
    json cmd = {{"name", "frey"},
                {"family", family_name(spec.family)},
                {"a", req.a},
                {"b", req.b},
                {"c", req.c},
                {"p", req.p ? json(*req.p) : json("symbolic")},
                {"prime", req.prime ? json(*req.prime) : json(nullptr)}};
    if (fam_a) cmd["r"] = req.r;
    Report r = start(k, cfg, cmd);
    r.text = field_line(k);
    FreyInvariants inv = invariants(spec);
    json res;
    res["family"] = family_name(spec.family);
    res["trivial"] = fam_a ? is_trivial_2r(spec.a, spec.b, spec.c)
                           : is_trivial_pp2(spec.a, spec.b, spec.c);
    json ij = {{"delta_expr", inv.delta_expr},
               {"c4_expr", inv.c4_expr},
               {"j_expr", inv.j_expr},
               {"delta", opt_elem(inv.delta)},
               {"c4", opt_elem(inv.c4)},
               {"j", opt_elem(inv.j)}};
    if (!inv.j_alt_expr.empty()) ij["j_alt_expr"] = inv.j_alt_expr, ij["j_alt"] = opt_elem(inv.j_alt);
    if (!inv.c4_alt_expr.empty())
      ij["c4_alt_expr"] = inv.c4_alt_expr, ij["c4_alt"] = opt_elem(inv.c4_alt);
    res["invariants"] = ij;
    r.text += "family     " + std::string(family_name(spec.family)) +
              (fam_a ? "  r = " + std::to_string(req.r) : std::string()) + "  p = " +
              (req.p ? std::to_string(*req.p) : std::string("symbolic")) + "\n";
    r.text += "delta      " + inv.delta_expr + (inv.delta ? " = " + inv.delta->to_string() : "") + "\n";
    r.text += "c4         " + inv.c4_expr + (inv.c4 ? " = " + inv.c4->to_string() : "") + "\n";
    r.text += "j          " + inv.j_expr + (inv.j ? " = " + inv.j->to_string() : "") + "\n";
    if (req.p) {
      CrossCheck cc = concrete_cross_check(spec);
      WeierstrassModel m = frey_model(spec);
      json coeffs = json::array();
      for (const auto& a : m.a) coeffs.push_back(to_json(a));
      res["weierstrass"] = {{"a", coeffs},       {"c4", to_json(m.c4)},
                            {"c6", to_json(m.c6)}, {"delta", to_json(m.delta)},
                            {"j", opt_elem(m.j)}};
      res["cross_check"] = {{"delta", cc.delta}, {"c4", cc.c4},       {"j", cc.j},
                            {"j_alt", cc.j_alt}, {"c4_alt", cc.c4_alt}, {"identity", cc.identity},
                            {"ok", cc.ok()}};
      r.text += "cross-check " + std::string(cc.ok() ? "ok" : "MISMATCH") +
                " (c4^3 - c6^2 = 1728 delta: " + yes_no(cc.identity) + ")\n";
    }
    ConductorShape cs = conductor_shape(spec, std::nullopt);
    json terms = json::array();
    for (const auto& t : cs.terms)
      terms.push_back({{"prime", t.prime},
                       {"lo", t.lo},
                       {"hi", t.hi},
                       {"role", t.role},
                       {"in_level_lowered", t.in_level_lowered}});
    res["conductor"] = {{"terms", terms},
                        {"symbolic_odd_part", cs.symbolic_odd_part},
                        {"conductor", cs.conductor},
                        {"level_lowered", cs.level_lowered}};
    r.text += "conductor  " + cs.conductor + "\n";
    r.text += "n_p        " + cs.level_lowered + "\n";
    if (req.prime) {
      json profiles = json::array();
      Table t({"prime", "v(a),v(b),v(c)", "v(delta)", "v(c4)", "v(j)", "type", "p|I", "3|I", "p >"});
      for (const auto& P : factor_rational_prime(k, *req.prime)) {
        Divisibility d;
        const FieldElement* xs[] = {&spec.a, &spec.b, &spec.c};
        long* vs[] = {&d.va, &d.vb, &d.vc};
        for (int i = 0; i < 3; ++i) {
          if (xs[i]->is_zero()) throw Error(ErrorCode::InvalidArgument, "a, b, c must be nonzero");
          *vs[i] = valuation(*xs[i], P);
        }
        json pj = {{"divisibility", {d.va, d.vb, d.vc}}};
        try {
          ReductionReport rep = valuation_profile(spec.family, req.r, P, d);
          pj["report"] = to_json(rep);
          std::string prefix = rep.c4_exact ? "" : ">= ";
          t.add({P.to_string(),
                 std::to_string(d.va) + "," + std::to_string(d.vb) + "," + std::to_string(d.vc),
                 rep.v_delta.to_string(), prefix + rep.v_c4.to_string(),
                 prefix + rep.v_j.to_string(), reduction_name(rep.type),
                 yes_no(rep.flag_p_in_inertia), yes_no(rep.flag_3_in_inertia),
                 std::to_string(rep.p_threshold)});
        } catch (const Error& err) {
          if (err.code() != ErrorCode::InconsistentDivisibility &&
              err.code() != ErrorCode::UnsupportedCase)
            throw;
          pj["error"] = {{"code", error_name(err.code())}, {"message", err.what()}};
          t.add({P.to_string(), "", "", "", "", error_name(err.code()), "", "", ""});
        }
        profiles.push_back(pj);
      }
      res["profiles"] = profiles;
      r.text += t.str();
    }
    r.doc["result"] = res;
    return r;
  });
}

Report run_check(const NumberField& k, const CheckRequest& req, const Config& cfg) {
  return timed(cfg, [&] {
    std::string id = req.criterion;
    int mode = req.mode;
    if (id == "thm-7-3" || id == "local-wk") {
      if (mode == 0) mode = req.l ? 1 : 2;
      id = mode == 1 ? "local-wk-ramified" : "local-wk-split3";
    }
    auto crit = parse_criterion(id);
    if (!crit) throw Error(ErrorCode::InvalidArgument, "unknown criterion '" + req.criterion + "'");
    json cmd = {{"name", "check"}, {"criterion", criterion_id(*crit)}, {"requested", req.criterion}};
    auto need_l = [&] {
      if (!req.l) throw Error(ErrorCode::InvalidArgument, "criterion needs --l");
      cmd["l"] = *req.l;
      return *req.l;
    };
    Verdict v;
    switch (*crit) {
      case Criterion::WkBound:
        cmd["bound"] = req.bound;
        v = check_wk_bound(k, req.bound, cfg);
        break;
      case Criterion::UkBound:
        cmd["bound"] = req.bound, cmd["r"] = req.r;
        v = check_uk_bound(k, req.bound, req.r, cfg);
        break;
      case Criterion::UkExact:
        cmd["bound"] = req.bound, cmd["r"] = req.r;
        v = check_uk_exact(k, req.bound, req.r, cfg);
        break;
      case Criterion::PP2Selmer:
        cmd["bound"] = req.bound;
        v = check_pp2_selmer(k, req.bound, cfg);
        break;
      case Criterion::LocalInertRamified:
        v = check_local_inert_ramified(k, need_l());
        break;
      case Criterion::LocalInertSplit3:
        v = check_local_inert_split3(k);
        break;
      case Criterion::LocalWkRamified:
        v = check_local_wk(k, 1, need_l());
        break;
      case Criterion::LocalWkSplit3:
        v = check_local_wk(k, 2, 0);
        break;
    }
    Report r = start(k, cfg, cmd);
    r.text = field_line(k) + verdict_text(v);
    r.doc["result"] = to_json(v);
    r.exit_code = exit_code(v.applies);
    for (const auto& h : v.hypotheses)
      if (h.caveat == Caveat::BoundedSearch) {
        add_caveat(r, "bounded-search (B = " + std::to_string(h.bound) +
                          "): a universal S-unit condition is only checked on found solutions");
        break;
      }
    for (const auto& h : v.hypotheses)
      if (h.caveat == Caveat::AssumedIfNeeded) add_caveat(r, h.name + " assumed: " + h.note);
    return r;
  });
}

Report run_scan(const NumberField& k, const Config& cfg) {
  return timed(cfg, [&] {
    Report r = start(k, cfg, {{"name", "scan"}, {"l_max", cfg.l_max}});
    r.text = field_line(k);
    json cands = json::array();
    Table t({"l", "totally ramified", "gcd(n, l-1) = 1", "error"});
    for (const auto& c : scan_ramified_l(k, cfg.l_max)) {
      cands.push_back({{"l", c.l},
                       {"totally_ramified", c.totally_ramified},
                       {"coprime", c.coprime},
                       {"error", c.error.empty() ? json(nullptr) : json(c.error)}});
      t.add({std::to_string(c.l), yes_no(c.totally_ramified), yes_no(c.coprime), c.error});
    }
    r.doc["result"] = {{"candidates", cands}};
    r.text += cands.empty() ? std::string("no candidate l\n") : t.str();
    return r;
  });
}

}  // namespace aflt
