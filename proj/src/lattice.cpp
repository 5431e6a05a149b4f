#include "aflt/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace aflt {

std::vector<std::vector<long>> hermite(std::vector<std::vector<long>>& rows, int cols) {
  const std::size_t r = rows.size();
  std::vector<std::vector<long>> U(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) U[i][i] = 1;
  std::size_t pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < r; ++c) {
    for (;;) {
      // Find the row with the smallest nonzero |entry| at or below pivot_row.
      std::size_t best = r;
      for (std::size_t i = pivot_row; i < r; ++i)
        if (rows[i][c] != 0 && (best == r || std::labs(rows[i][c]) < std::labs(rows[best][c])))
          best = i;
      if (best == r) break;
      std::swap(rows[best], rows[pivot_row]);
      std::swap(U[best], U[pivot_row]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < r; ++i) {
        if (rows[i][c] == 0) continue;
        long qt = rows[i][c] / rows[pivot_row][c];
        for (int j = 0; j < cols; ++j) rows[i][j] -= qt * rows[pivot_row][j];
        for (std::size_t j = 0; j < r; ++j) U[i][j] -= qt * U[pivot_row][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return U;
}

}  // namespace aflt
