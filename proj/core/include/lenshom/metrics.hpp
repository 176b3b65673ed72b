#ifndef LENSHOM_METRICS_HPP
#define LENSHOM_METRICS_HPP

#include "lenshom/diagram.hpp"

#include <compare>
#include <utility>

namespace lenshom {

// Columns of an S^3 diagram with marking rows {a1,b1} and {a2,b2}
// interleave iff the four rows are pairwise distinct and the first pair
// separates the second on the cyclic row set Z_{row_count}.
bool interleaving_pair(std::pair<int, int> rows1, std::pair<int, int> rows2,
                       int row_count);

// Number of unordered interleaving column pairs in the lift of d.
int scr(const GridDiagram& d);

// Same count computed through the height map route: columns map to
// (lower, upper) marking heights measured from the horizontal cut
// alpha0_row (a row index of the lift), and a pair interleaves iff exactly
// one coordinate of the second point lies strictly inside the open height
// interval of the first. Independent of the cut choice.
int scr_interleaving_regions(const GridDiagram& d, int alpha0_row);

// Lexicographic complexity (grid number, scr, plan steps remaining).
struct Complexity {
  int gn = 0;
  long long scr_value = 0;
  long long plan_remaining = 0;
  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

Complexity complexity(const GridDiagram& d, long long plan_remaining);

}  // namespace lenshom

#endif
