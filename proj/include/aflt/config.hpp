#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace aflt {

struct Config {
  long sunit_exponent_bound = 8;
  mpz_class unit_height_bound = 1000000;
  // Largest rational prime examined when choosing class representatives.
  long class_enum_bound = 1000;
  long l_max = 1000;
  std::uint64_t max_candidates = 10000000;
  std::optional<long> user_class_number;
  bool allow_trivial_ideal = false;
  long r = 2;
  std::uint64_t seed = 1;
  bool timing = false;

  // Errors: InvalidArgument for unknown keys or out-of-range values.
  void set(const std::string& key, const std::string& value);
  // key=value lines; '#' starts a comment.
  void load_file(const std::string& path);
};

}  // namespace aflt
