// Bridges between library elements and the exhaustive box oracle.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "aflt/sunit.hpp"
#include "oracles.hpp"

namespace test {

// Q(sqrt d) presented by x^2 - d; d = 0 stands for Q itself.
struct BoxCase {
  const char* poly;
  long d;
  oracle::Quad zeta;
  int zeta_order;
  std::vector<oracle::Quad> gens;  // hand-derived: units, then the prime above 2
};

inline std::vector<BoxCase> box_cases() {
  return {
      {"x", 0, {-1, 0}, 2, {{2, 0}}},
      {"x^2 + 1", -1, {0, 1}, 4, {{1, 1}}},
      {"x^2 - 2", 2, {-1, 0}, 2, {{1, 1}, {0, 1}}},
  };
}

inline oracle::Quad to_quad(const aflt::FieldElement& x) {
  const auto& c = x.coords();
  return {c[0], c.size() > 1 ? c[1] : mpq_class(0)};
}

using PairSet = std::set<std::pair<oracle::Quad, oracle::Quad>>;

inline PairSet to_set(const aflt::SUnitResult& r) {
  PairSet out;
  for (const auto& s : r.solutions) out.insert({to_quad(s.lambda), to_quad(s.mu)});
  return out;
}

// Each library generator is zeta^i g^{+-1} for the matching oracle generator,
// so both enumerate the same box.
inline bool same_generators(const aflt::SUnitBasis& b, const BoxCase& c) {
  auto lib = b.free_generators();
  if (lib.size() != c.gens.size()) return false;
  for (std::size_t j = 0; j < lib.size(); ++j) {
    auto q = to_quad(lib[j]);
    bool ok = false;
    for (long e : {1L, -1L}) {
      oracle::Quad g = oracle::qpow(c.gens[j], e, c.d), z{1, 0};
      for (int i = 0; i < c.zeta_order; ++i) {
        if (oracle::qmul(z, g, c.d) == q) ok = true;
        z = oracle::qmul(z, c.zeta, c.d);
      }
    }
    if (!ok) return false;
  }
  return true;
}

inline PairSet oracle_set(const BoxCase& c, long B) {
  return oracle::sunit_box(c.d, c.zeta, c.zeta_order, c.gens, B);
}

}  // namespace test
