#include "aflt/aflt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "aflt/errors.hpp"
#include "aflt/report.hpp"

struct aflt_config {
  aflt::Config cfg;
};

struct aflt_field {
  aflt::NumberField k;
};

struct aflt_report {
  std::string json;
  std::string text;
  int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

static_assert(static_cast<int>(aflt::ErrorCode::DegenerateLambda) + 1 == AFLT_E_DEGENERATE_LAMBDA);

aflt_status from_code(aflt::ErrorCode c) {
  // ErrorCode and aflt_status share ordering, offset by AFLT_OK.
  return static_cast<aflt_status>(static_cast<int>(c) + 1);
}

template <class F>
aflt_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return AFLT_OK;
  } catch (const aflt::Error& e) {
    g_last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return AFLT_E_INTERNAL;
}

aflt_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return AFLT_E_INVALID_ARGUMENT;
}

aflt_status wrap(aflt::Report r, aflt_report** out) {
  auto* h = new aflt_report;
  h->json = aflt::emit_json(r.doc);
  h->text = std::move(r.text);
  h->exit_code = r.exit_code;
  *out = h;
  return AFLT_OK;
}

template <class F>
aflt_status run(const aflt_field* k, const aflt_config* cfg, aflt_report** out, F&& body) {
  if (!k) return null_arg("field");
  if (!cfg) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { wrap(body(k->k, cfg->cfg), out); });
}

}  // namespace

extern "C" {

const char* aflt_status_name(aflt_status s) {
  if (s == AFLT_OK) return "Ok";
  if (s == AFLT_E_INTERNAL) return "Internal";
  if (s < AFLT_OK || s > AFLT_E_INTERNAL) return "Unknown";
  return aflt::error_name(static_cast<aflt::ErrorCode>(static_cast<int>(s) - 1));
}

const char* aflt_last_error(void) { return g_last_error.c_str(); }

aflt_status aflt_config_new(aflt_config** out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = new aflt_config; });
}

void aflt_config_free(aflt_config* cfg) { delete cfg; }

aflt_status aflt_config_set(aflt_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return null_arg("config, key or value");
  return guard([&] { cfg->cfg.set(key, value); });
}

aflt_status aflt_config_load(aflt_config* cfg, const char* path) {
  if (!cfg || !path) return null_arg("config or path");
  return guard([&] { cfg->cfg.load_file(path); });
}

aflt_status aflt_config_get_long(const aflt_config* cfg, const char* key, long* out) {
  if (!cfg || !key || !out) return null_arg("config, key or out");
  std::string k = key;
  if (k == "r") *out = cfg->cfg.r;
  else if (k == "sunit_exponent_bound") *out = cfg->cfg.sunit_exponent_bound;
  else if (k == "class_enum_bound") *out = cfg->cfg.class_enum_bound;
  else if (k == "l_max") *out = cfg->cfg.l_max;
  else {
    g_last_error = "no integer config key '" + k + "'";
    return AFLT_E_INVALID_ARGUMENT;
  }
  return AFLT_OK;
}

aflt_status aflt_field_new(const char* poly, aflt_field** out) {
  if (!poly || !out) return null_arg("poly or out");
  *out = nullptr;
  return guard([&] { *out = new aflt_field{aflt::NumberField::parse(poly)}; });
}

void aflt_field_free(aflt_field* k) { delete k; }

int aflt_field_degree(const aflt_field* k) { return k ? k->k.degree() : 0; }

aflt_status aflt_field_signature(const aflt_field* k, int* r1, int* r2) {
  if (!k || !r1 || !r2) return null_arg("field, r1 or r2");
  *r1 = k->k.r1();
  *r2 = k->k.r2();
  return AFLT_OK;
}

aflt_status aflt_run_field(const aflt_field* k, const aflt_config* cfg, aflt_report** out) {
  return run(k, cfg, out, [](const auto& f, const auto& c) { return aflt::run_field(f, c); });
}

aflt_status aflt_run_sunit(const aflt_field* k, const aflt_config* cfg, long bound,
                           aflt_report** out) {
  return run(k, cfg, out,
             [&](const auto& f, const auto& c) { return aflt::run_sunit(f, bound, c); });
}

aflt_status aflt_run_selmer(const aflt_field* k, const aflt_config* cfg, aflt_report** out) {
  return run(k, cfg, out, [](const auto& f, const auto& c) { return aflt::run_selmer(f, c); });
}

aflt_status aflt_run_frey(const aflt_field* k, const aflt_config* cfg, const char* family,
                          const char* a, const char* b, const char* c, long r, long p,
                          unsigned long prime, aflt_report** out) {
  if (!family || !a || !b || !c) return null_arg("family, a, b or c");
  aflt::FreyRequest req;
  req.family = family;
  req.a = a;
  req.b = b;
  req.c = c;
  req.r = r;
  if (p != 0) req.p = p;
  if (prime != 0) req.prime = prime;
  return run(k, cfg, out, [&](const auto& f, const auto& cf) { return aflt::run_frey(f, req, cf); });
}

aflt_status aflt_run_check(const aflt_field* k, const aflt_config* cfg, const char* criterion,
                           long r, long l, long bound, int mode, aflt_report** out) {
  if (!criterion) return null_arg("criterion");
  aflt::CheckRequest req;
  req.criterion = criterion;
  req.r = r;
  if (l != 0) req.l = l;
  req.bound = bound;
  req.mode = mode;
  return run(k, cfg, out, [&](const auto& f, const auto& c) { return aflt::run_check(f, req, c); });
}

aflt_status aflt_run_scan(const aflt_field* k, const aflt_config* cfg, aflt_report** out) {
  return run(k, cfg, out, [](const auto& f, const auto& c) { return aflt::run_scan(f, c); });
}

const char* aflt_report_json(const aflt_report* r) { return r ? r->json.c_str() : ""; }

const char* aflt_report_text(const aflt_report* r) { return r ? r->text.c_str() : ""; }

int aflt_report_exit_code(const aflt_report* r) { return r ? r->exit_code : 1; }

void aflt_report_free(aflt_report* r) { delete r; }

char* aflt_error_json(aflt_status s, const char* message) {
  std::string doc = aflt::emit_json(aflt::error_json(aflt_status_name(s), message ? message : ""));
  char* out = static_cast<char*>(std::malloc(doc.size() + 1));
  if (out) std::memcpy(out, doc.c_str(), doc.size() + 1);
  return out;
}

void aflt_string_free(char* s) { std::free(s); }

}  // extern "C"
