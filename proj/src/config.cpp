#include "aflt/config.hpp"

#include <fstream>
#include <sstream>

#include "aflt/errors.hpp"

namespace aflt {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v, long min) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    if (x < min) throw Error(ErrorCode::InvalidArgument, key + " must be >= " + std::to_string(min));
    return x;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "invalid integer for " + key + ": '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw Error(ErrorCode::InvalidArgument, "invalid boolean for " + key + ": '" + v + "'");
}

}  // namespace

void Config::set(const std::string& key_in, const std::string& value_in) {
  std::string key = strip(key_in), v = strip(value_in);
  if (key == "sunit_exponent_bound" || key == "bound") {
    sunit_exponent_bound = to_long(key, v, 0);
  } else if (key == "unit_height_bound") {
    if (mpz_class tmp; tmp.set_str(v, 10) != 0 || tmp < 1)
      throw Error(ErrorCode::InvalidArgument, "invalid unit_height_bound '" + v + "'");
    else
      unit_height_bound = tmp;
  } else if (key == "class_enum_bound") {
    class_enum_bound = to_long(key, v, 3);
  } else if (key == "l_max") {
    l_max = to_long(key, v, 1);
  } else if (key == "max_candidates") {
    max_candidates = static_cast<std::uint64_t>(to_long(key, v, 1));
  } else if (key == "user_class_number") {
    user_class_number = to_long(key, v, 1);
  } else if (key == "allow_trivial_ideal") {
    allow_trivial_ideal = to_bool(key, v);
  } else if (key == "r") {
    r = to_long(key, v, 1);
  } else if (key == "seed") {
    seed = static_cast<std::uint64_t>(to_long(key, v, 0));
  } else if (key == "timing") {
    timing = to_bool(key, v);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  }
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (strip(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": expected key=value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

}  // namespace aflt
