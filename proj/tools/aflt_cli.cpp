// Command-line driver over the aflt C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aflt/aflt.h"

namespace {

struct Options {
  bool json = false;
  std::string config_file;
  std::vector<std::string> sets;
  std::string seed;
  bool timing = false;

  std::string poly;
  long bound = -1;
  std::string family, a, b, c;
  long r = 0;
  std::string p = "symbolic";
  unsigned long prime = 0;
  std::string criterion;
  long l = 0;
  int mode = 0;
};

int fail(const Options& o, aflt_status s, const std::string& msg) {
  std::fprintf(stderr, "error: %s: %s\n", aflt_status_name(s), msg.c_str());
  if (o.json) {
    char* doc = aflt_error_json(s, msg.c_str());
    if (doc) std::fputs(doc, stdout);
    aflt_string_free(doc);
  }
  return 1;
}

int fail_last(const Options& o, aflt_status s) { return fail(o, s, aflt_last_error()); }

aflt_status apply_config(const Options& o, aflt_config* cfg) {
  aflt_status s = AFLT_OK;
  if (!o.config_file.empty() && (s = aflt_config_load(cfg, o.config_file.c_str())) != AFLT_OK)
    return s;
  for (const auto& kv : o.sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) return aflt_config_set(cfg, kv.c_str(), "");
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if ((s = aflt_config_set(cfg, key.c_str(), value.c_str())) != AFLT_OK) return s;
  }
  if (!o.seed.empty() && (s = aflt_config_set(cfg, "seed", o.seed.c_str())) != AFLT_OK) return s;
  if (o.timing && (s = aflt_config_set(cfg, "timing", "true")) != AFLT_OK) return s;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Frey-curve and S-unit criteria for x^p + y^p = 2^r z^p and x^p + y^p = z^2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit canonical JSON");
  app.add_option("--config", o.config_file, "key=value config file");
  app.add_option("--set", o.sets, "Override a config key (key=value)");
  app.add_option("--seed", o.seed, "Seed for randomized modes");
  app.add_flag("--timing", o.timing, "Include elapsed time in the report");

  auto* field = app.add_subcommand("field", "Signature, discriminant, factorization of 2 and 3");
  field->add_option("poly", o.poly, "Defining polynomial")->required();

  auto* sunit = app.add_subcommand("sunit", "Solve lambda + mu = 1 in S_K-units");
  sunit->add_option("poly", o.poly, "Defining polynomial")->required();
  sunit->add_option("--bound", o.bound, "Exponent bound B");

  auto* selmer = app.add_subcommand("selmer", "K(S_K, 2) and the extensions K(sqrt a)");
  selmer->add_option("poly", o.poly, "Defining polynomial")->required();

  auto* frey = app.add_subcommand("frey", "Frey-curve invariants and local profiles");
  frey->add_option("family", o.family, "A (x^p + y^p = 2^r z^p) or B (x^p + y^p = z^2)")
      ->required();
  frey->add_option("poly", o.poly, "Defining polynomial")->required();
  frey->add_option("--a", o.a, "a as a polynomial in the generator")->required();
  frey->add_option("--b", o.b, "b")->required();
  frey->add_option("--c", o.c, "c")->required();
  frey->add_option("--r", o.r, "Power of 2 for family A");
  frey->add_option("--p", o.p, "Prime exponent or 'symbolic'");
  frey->add_option("--prime", o.prime, "Rational prime whose prime ideals get profiles");

  auto* check = app.add_subcommand("check", "Evaluate a criterion's hypotheses");
  check->add_option("criterion", o.criterion, "Criterion id or alias")->required();
  check->add_option("poly", o.poly, "Defining polynomial")->required();
  check->add_option("--r", o.r, "r in x^p + y^p = 2^r z^p");
  check->add_option("--l", o.l, "Auxiliary prime l");
  check->add_option("--bound", o.bound, "Exponent bound B");
  check->add_option("--mode", o.mode, "1 (l totally ramified) or 2 (3 totally split)");

  auto* scan = app.add_subcommand("scan", "Primes l > 5 dividing disc(f) that totally ramify");
  scan->add_option("poly", o.poly, "Defining polynomial")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  aflt_config* cfg = nullptr;
  aflt_field* k = nullptr;
  aflt_report* rep = nullptr;
  aflt_status s = aflt_config_new(&cfg);
  if (s != AFLT_OK) return fail_last(o, s);
  if ((s = apply_config(o, cfg)) != AFLT_OK) {
    int rc = fail_last(o, s);
    aflt_config_free(cfg);
    return rc;
  }
  if ((s = aflt_field_new(o.poly.c_str(), &k)) != AFLT_OK) {
    int rc = fail_last(o, s);
    aflt_config_free(cfg);
    return rc;
  }
  if (o.r != 0) s = aflt_config_set(cfg, "r", std::to_string(o.r).c_str());
  if (s == AFLT_OK && o.bound >= 0)
    s = aflt_config_set(cfg, "sunit_exponent_bound", std::to_string(o.bound).c_str());
  long r = 2, bound = 8;
  if (s == AFLT_OK) s = aflt_config_get_long(cfg, "r", &r);
  if (s == AFLT_OK) s = aflt_config_get_long(cfg, "sunit_exponent_bound", &bound);

  if (s == AFLT_OK) {
    if (*field) {
      s = aflt_run_field(k, cfg, &rep);
    } else if (*sunit) {
      s = aflt_run_sunit(k, cfg, bound, &rep);
    } else if (*selmer) {
      s = aflt_run_selmer(k, cfg, &rep);
    } else if (*frey) {
      long p = 0;
      if (o.p != "symbolic") {
        try {
          p = std::stol(o.p);
        } catch (const std::exception&) {
          p = -1;
        }
        if (p <= 0) {
          aflt_field_free(k);
          aflt_config_free(cfg);
          return fail(o, AFLT_E_INVALID_ARGUMENT, "--p must be a prime or 'symbolic'");
        }
      }
      s = aflt_run_frey(k, cfg, o.family.c_str(), o.a.c_str(), o.b.c_str(), o.c.c_str(), r, p,
                        o.prime, &rep);
    } else if (*check) {
      s = aflt_run_check(k, cfg, o.criterion.c_str(), r, o.l, bound, o.mode, &rep);
    } else if (*scan) {
      s = aflt_run_scan(k, cfg, &rep);
    }
  }

  int rc = 0;
  if (s != AFLT_OK) {
    rc = fail_last(o, s);
  } else {
    std::fputs(o.json ? aflt_report_json(rep) : aflt_report_text(rep), stdout);
    rc = aflt_report_exit_code(rep);
  }
  aflt_report_free(rep);
  aflt_field_free(k);
  aflt_config_free(cfg);
  return rc;
}
