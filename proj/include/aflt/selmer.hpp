#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aflt/sunit.hpp"

namespace aflt {

// Square root in K when x is a square, exact.
std::optional<FieldElement> square_root(const FieldElement& x);
bool is_square(const FieldElement& x);

struct SelmerGroup {
  NumberField field;
  std::vector<PrimeIdeal> S;
  int m = 2;
  std::vector<FieldElement> generators;       // independent mod squares
  std::vector<FieldElement> representatives;  // subset products, binary order
  int basis_size = 0;
  std::vector<std::string> caveats;
};

// Errors: Unsupported (m != 2).
SelmerGroup selmer_group(const SUnitBasis& basis, long h, int m = 2);

// L = K(sqrt a) as an absolute field. Errors: IsSquare, Unsupported (2n > 6).
NumberField quadratic_extension(const FieldElement& a);

}  // namespace aflt
