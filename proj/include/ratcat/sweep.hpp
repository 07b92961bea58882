#pragma once

// The sweep map and the two dinv statistics.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ratcat/lattice.hpp"

namespace ratcat {

/// Rearranges the steps by weakly increasing rank; steps of equal rank are
/// taken in reverse order of appearance.
inline DyckPath zeta(const DyckPath& path) {
  const auto ranks = step_ranks(path);
  std::vector<std::size_t> order(path.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return a > b;
  });
  std::string out;
  out.reserve(path.size());
  for (std::size_t k : order) out.push_back(path[k]);
  ensure(is_dyck_word(path.params(), out), ErrorKind::AboveDiagonal,
         "sweep image of '" + path.steps() + "' is not a Dyck path");
  return DyckPath::parse(out, path.params());
}

inline Int dinv_sweep(const DyckPath& path) { return area(zeta(path)); }

/// Counts diagram boxes with leg/(arm+1) < n/m <= (leg+1)/arm. The arm runs
/// horizontally to the path's vertical step in the box's row, the leg
/// vertically to the horizontal step in its column.
inline Int dinv_armleg(const DyckPath& path) {
  const GridParams& p = path.params();
  const Int n = p.n();
  const Int m = p.m();
  const auto rows = row_lengths(path);
  // Height of the horizontal step crossing column x.
  std::vector<Int> column_step(p.M(), 0);
  {
    Point pt{p.M(), 0};
    for (char c : path.steps()) {
      if (c == 'h') {
        --pt.x;
        column_step[pt.x] = pt.y;
      } else {
        ++pt.y;
      }
    }
  }
  Int count = 0;
  for (Int y = 0; y < p.N(); ++y) {
    for (Int x = 0; x < rows[y]; ++x) {
      const Int arm = rows[y] - x - 1;
      const Int leg = column_step[x] - y - 1;
      const bool left = m * leg < n * (arm + 1);
      const bool right = arm == 0 || n * arm <= m * (leg + 1);
      count += left && right;
    }
  }
  return count;
}

}  // namespace ratcat
