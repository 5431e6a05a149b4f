/* C interface to the aflt library. All handles are opaque; functions return
 * an aflt_status and report details through aflt_last_error(). */
#ifndef AFLT_H
#define AFLT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aflt_status {
  AFLT_OK = 0,
  AFLT_E_PARSE,
  AFLT_E_INVALID_ARGUMENT,
  AFLT_E_NOT_MONIC,
  AFLT_E_REDUCIBLE,
  AFLT_E_DEGREE_ZERO,
  AFLT_E_UNSUPPORTED,
  AFLT_E_DIVISION_BY_ZERO,
  AFLT_E_ZERO_ELEMENT,
  AFLT_E_NOT_TOTALLY_REAL,
  AFLT_E_INDEX_DIVISOR,
  AFLT_E_SEARCH_EXHAUSTED,
  AFLT_E_MISSING_USER_CLASS_NUMBER,
  AFLT_E_GENERATOR_NOT_FOUND,
  AFLT_E_BASIS_UNAVAILABLE,
  AFLT_E_WORK_EXCEEDED,
  AFLT_E_IS_SQUARE,
  AFLT_E_RELATION_VIOLATED,
  AFLT_E_INCONSISTENT_DIVISIBILITY,
  AFLT_E_UNSUPPORTED_CASE,
  AFLT_E_DEGENERATE_LAMBDA,
  AFLT_E_INTERNAL
} aflt_status;

typedef struct aflt_config aflt_config;
typedef struct aflt_field aflt_field;
typedef struct aflt_report aflt_report;

/* Name of a status code, e.g. "IndexDivisor". */
const char* aflt_status_name(aflt_status s);
/* Message of the last failure on the calling thread. */
const char* aflt_last_error(void);

aflt_status aflt_config_new(aflt_config** out);
void aflt_config_free(aflt_config* cfg);
/* Keys as in the config file, e.g. "sunit_exponent_bound". */
aflt_status aflt_config_set(aflt_config* cfg, const char* key, const char* value);
aflt_status aflt_config_load(aflt_config* cfg, const char* path);
/* Integer keys: r, sunit_exponent_bound, class_enum_bound, l_max. */
aflt_status aflt_config_get_long(const aflt_config* cfg, const char* key, long* out);

aflt_status aflt_field_new(const char* poly, aflt_field** out);
void aflt_field_free(aflt_field* k);
int aflt_field_degree(const aflt_field* k);
aflt_status aflt_field_signature(const aflt_field* k, int* r1, int* r2);

aflt_status aflt_run_field(const aflt_field* k, const aflt_config* cfg, aflt_report** out);
aflt_status aflt_run_sunit(const aflt_field* k, const aflt_config* cfg, long bound,
                           aflt_report** out);
aflt_status aflt_run_selmer(const aflt_field* k, const aflt_config* cfg, aflt_report** out);
/* family "A" or "B"; p == 0 means symbolic; prime == 0 skips local profiles. */
aflt_status aflt_run_frey(const aflt_field* k, const aflt_config* cfg, const char* family,
                          const char* a, const char* b, const char* c, long r, long p,
                          unsigned long prime, aflt_report** out);
/* l == 0 when absent; mode == 0 picks a default. */
aflt_status aflt_run_check(const aflt_field* k, const aflt_config* cfg, const char* criterion,
                           long r, long l, long bound, int mode, aflt_report** out);
aflt_status aflt_run_scan(const aflt_field* k, const aflt_config* cfg, aflt_report** out);

/* Owned by the report; valid until aflt_report_free. */
const char* aflt_report_json(const aflt_report* r);
const char* aflt_report_text(const aflt_report* r);
/* 0 data or verdict Yes, 2 verdict No, 3 verdict Unknown. */
int aflt_report_exit_code(const aflt_report* r);
void aflt_report_free(aflt_report* r);

/* Canonical error document for a failed call; caller frees with aflt_string_free. */
char* aflt_error_json(aflt_status s, const char* message);
void aflt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
