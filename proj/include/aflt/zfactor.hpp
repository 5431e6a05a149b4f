#pragma once

#include <vector>

#include "aflt/poly.hpp"

namespace aflt::zfactor {

struct Factor {
  ZPoly poly;  // monic, irreducible over Q
  unsigned multiplicity;
};

// Factorization of a monic integer polynomial over Q: Yun squarefree
// decomposition, then Hensel lifting and Zassenhaus recombination.
std::vector<Factor> factor_monic(const ZPoly& f);

// Same for a monic rational polynomial; factors are monic rational.
struct QFactor {
  QPoly poly;
  unsigned multiplicity;
};
std::vector<QFactor> factor_monic(const QPoly& f);

bool is_irreducible(const ZPoly& f);

}  // namespace aflt::zfactor
