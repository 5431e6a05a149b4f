#pragma once

#include <vector>

namespace aflt {

// Row echelon form of small integer rows over Z by Euclidean row operations.
// Rows are reduced in place; returns the unimodular transform U with
// U * rows_in = rows_out. Nonzero rows come first.
std::vector<std::vector<long>> hermite(std::vector<std::vector<long>>& rows, int cols);

}  // namespace aflt
