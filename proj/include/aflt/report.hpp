#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "aflt/config.hpp"
#include "aflt/criteria.hpp"
#include "aflt/frey.hpp"
#include "aflt/number_field.hpp"

namespace aflt {

inline constexpr const char* kSchemaVersion = "1";

// Exit codes: 0 ran (verdict Yes or data), 2 verdict No, 3 verdict Unknown,
// 1 error.
int exit_code(Applies a);

struct Report {
  nlohmann::json doc;
  std::string text;
  int exit_code = 0;
};

// Integers beyond 53 bits become decimal strings.
nlohmann::json to_json(const mpz_class& z);
// "num/den", or "num" when integral.
nlohmann::json to_json(const mpq_class& q);
nlohmann::json to_json(const FieldElement& x);
nlohmann::json to_json(const PrimeIdeal& p);
nlohmann::json to_json(const ValuationForm& v);
nlohmann::json to_json(const ReductionReport& r);
nlohmann::json to_json(const HypothesisStatus& h);
nlohmann::json to_json(const Verdict& v);
nlohmann::json field_summary(const NumberField& k);

// Parses an element written in any single variable, e.g. "t + 1" or "3/2".
FieldElement parse_element(const NumberField& k, const std::string& text);

struct FreyRequest {
  std::string family;  // "A", "two-power-twist", "B", "pp2"
  std::string a, b, c;
  long r = 2;
  std::optional<long> p;  // nullopt for symbolic
  std::optional<std::uint64_t> prime;
};

struct CheckRequest {
  std::string criterion;
  long r = 2;
  std::optional<long> l;
  long bound = 8;
  int mode = 0;  // for the W_K local criterion; 0 picks 1 when l is given
};

Report run_field(const NumberField& k, const Config& cfg);
Report run_sunit(const NumberField& k, long bound, const Config& cfg);
Report run_selmer(const NumberField& k, const Config& cfg);
Report run_frey(const NumberField& k, const FreyRequest& req, const Config& cfg);
Report run_check(const NumberField& k, const CheckRequest& req, const Config& cfg);
Report run_scan(const NumberField& k, const Config& cfg);

// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string emit_json(const nlohmann::json& doc);
nlohmann::json error_json(const std::string& code, const std::string& message);

}  // namespace aflt
