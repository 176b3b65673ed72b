#include "lenshom/metrics.hpp"

#include "lenshom/errors.hpp"

#include <vector>

namespace lenshom {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

bool in_open_interval(int lo, int hi, int x, int m) {
  return mod(x - lo, m) != 0 && mod(x - lo, m) < mod(hi - lo, m);
}

// Per-column marking rows of an S^3 diagram.
std::vector<std::pair<int, int>> column_rows(const GridDiagram& s3) {
  std::vector<std::pair<int, int>> rows(s3.n());
  for (int j = 0; j < s3.n(); ++j)
    rows[j] = {s3.o_in_column(j).row, s3.x_in_column(j).row};
  return rows;
}

}  // namespace

bool interleaving_pair(std::pair<int, int> rows1, std::pair<int, int> rows2,
                       int row_count) {
  auto [a1, b1] = rows1;
  auto [a2, b2] = rows2;
  if (a1 == b1 || a2 == b2) return false;
  if (a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) return false;
  return in_open_interval(a1, b1, a2, row_count) !=
         in_open_interval(a1, b1, b2, row_count);
}

int scr(const GridDiagram& d) {
  const GridDiagram cover = d.p() == 1 ? d : lift(d);
  const auto rows = column_rows(cover);
  const int m = cover.n();
  int count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (interleaving_pair(rows[i], rows[j], m)) ++count;
  return count;
}

int scr_interleaving_regions(const GridDiagram& d, int alpha0_row) {
  const GridDiagram cover = d.p() == 1 ? d : lift(d);
  const int m = cover.n();
  if (alpha0_row < 0 || alpha0_row >= m)
    throw MoveError("CellNotInPair", "alpha_0 cut outside row range");
  // Height above the cut; the height map sends a column to its ordered
  // marking-height pair.
  std::vector<std::pair<int, int>> points(m);
  for (int j = 0; j < m; ++j) {
    int h1 = mod(cover.o_in_column(j).row - alpha0_row, m);
    int h2 = mod(cover.x_in_column(j).row - alpha0_row, m);
    points[j] = {std::min(h1, h2), std::max(h1, h2)};
  }
  auto region_hit = [&](const std::pair<int, int>& p1,
                        const std::pair<int, int>& p2) {
    auto [u, v] = p1;
    auto [a, b] = p2;
    // The interleaving regions are open: boundary contact never counts.
    if (a == u || a == v || b == u || b == v) return false;
    bool a_in = u < a && a < v;
    bool b_in = u < b && b < v;
    return a_in != b_in;
  };
  int count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (region_hit(points[i], points[j])) ++count;
  return count;
}

Complexity complexity(const GridDiagram& d, long long plan_remaining) {
  return {d.n(), scr(d), plan_remaining};
}

}  // namespace lenshom
