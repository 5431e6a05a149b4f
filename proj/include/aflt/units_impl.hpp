#pragma once

#include <cstdlib>
#include <vector>

namespace aflt {

template <class F>
std::uint64_t enumerate_shells(int n, long h_max, std::uint64_t max_candidates, F&& visit) {
  std::uint64_t count = 0;
  std::vector<long> v(n);
  for (long h = 1; h <= h_max; ++h) {
    // Odometer over the first n-1 coordinates; the last one is forced onto
    // the shell unless an earlier coordinate already is.
    for (auto& x : v) x = -h;
    for (;;) {
      long mx = 0;
      for (int i = 0; i + 1 < n; ++i) mx = std::max(mx, std::labs(v[i]));
      for (long last = -h; last <= h; last += (mx == h ? 1 : 2 * h)) {
        v[n - 1] = last;
        if (++count > max_candidates) return count;
        if (!visit(v, h)) return count;
      }
      int i = 0;
      while (i + 1 < n && v[i] == h) v[i++] = -h;
      if (i + 1 >= n) break;
      ++v[i];
    }
  }
  return count;
}

}  // namespace aflt
