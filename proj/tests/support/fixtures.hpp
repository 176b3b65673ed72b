// Paper-derived example diagrams and seeded random diagram generation
// shared by the unit and acceptance suites.
#ifndef LENSHOM_TESTS_FIXTURES_HPP
#define LENSHOM_TESTS_FIXTURES_HPP

#include "lenshom/diagram.hpp"
#include "lenshom/trivial.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace fixtures {

using lenshom::Cell;
using lenshom::GridDiagram;

// Nullhomotopic knot B in L(5,1), grid number 2.
inline GridDiagram knot_b() {
  return GridDiagram(5, 1, 2, {{0, 0}, {1, 1}}, {{3, 0}, {8, 1}});
}

// The trivial link diagram reached by resolving B's positive crossing.
inline GridDiagram knot_b0() {
  return GridDiagram(5, 1, 2, {{1, 0}, {0, 1}}, {{3, 0}, {8, 1}});
}

// B after its crossing change: a grid number 2 diagram of the unknot K_0.
inline GridDiagram knot_b_minus() {
  return GridDiagram(5, 1, 2, {{1, 0}, {0, 1}}, {{2, 0}, {9, 1}});
}

// The mu(L) = 2 link L in L(5,1), grid number 3.
inline GridDiagram link_l() {
  return GridDiagram(5, 1, 3, {{12, 0}, {1, 2}, {2, 1}},
                     {{12, 2}, {13, 1}, {14, 0}});
}

// Input of the covering-space example: its lift is a Hopf link in S^3.
inline GridDiagram hopf_cover_input() {
  return GridDiagram(5, 1, 2, {{0, 1}, {1, 0}}, {{8, 1}, {3, 0}});
}

// The grid number 1 knot K_3 in L(7,2).
inline GridDiagram k3_l72() {
  return GridDiagram(7, 2, 1, {{0, 0}}, {{1, 0}});
}

// Degenerate-unknot diagram of K_0 in L(p,q).
inline GridDiagram k0(int p, int q) {
  return GridDiagram(p, q, 1, {{0, 0}}, {{0, 0}});
}

// The L_n family in L(5,1), grid number n+2: the first two columns form a
// negative skein crossing; commuting them gives L_{n-2}, resolving L_{n-1}.
inline GridDiagram family_ln(int n) {
  const int N = n + 2;
  const int pn = 5 * N;
  std::vector<Cell> os, xs;
  for (int i = 0; i < N; ++i) xs.push_back({pn - N + i, N - 1 - i});
  os.push_back({N - 2, N - 1});
  os.push_back({N - 1, N - 2});
  for (int i = 2; i < N; ++i) os.push_back({pn - N + i - 2, N - 1 - i});
  return GridDiagram(5, 1, N, std::move(os), std::move(xs));
}

// Right-handed trefoil in L(1,0): all three crossings of the associated
// grid projection are positive.
inline GridDiagram rh_trefoil() {
  return GridDiagram(1, 0, 5, {{0, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}},
                     {{3, 4}, {2, 3}, {1, 2}, {0, 1}, {4, 0}});
}

inline const std::vector<std::pair<int, int>>& lens_spaces() {
  static const std::vector<std::pair<int, int>> spaces = {
      {1, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1},
      {5, 2}, {5, -2}, {6, 1}, {7, 2}, {7, 3}, {7, -4}};
  return spaces;
}

inline GridDiagram random_diagram(std::mt19937_64& rng, int max_p = 7,
                                  int max_n = 5) {
  const auto& spaces = lens_spaces();
  std::pair<int, int> pq;
  do {
    pq = spaces[rng() % spaces.size()];
  } while (pq.first > max_p);
  const auto [p, q] = pq;
  const int n = 1 + static_cast<int>(rng() % max_n);

  auto random_marks = [&](std::vector<Cell>& out) {
    std::vector<int> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    for (int i = 0; i < n; ++i) {
      int block = static_cast<int>(rng() % p);
      out.push_back({cols[i] + block * n, rows[i]});
    }
  };
  std::vector<Cell> os, xs;
  random_marks(os);
  random_marks(xs);
  return GridDiagram(p, q, n, std::move(os), std::move(xs));
}

inline lenshom::IndexSet random_index_set(std::mt19937_64& rng, int p, int q,
                                          int max_total) {
  lenshom::IndexSet idx{p, q, std::vector<int>(p, 0)};
  const int total = 1 + static_cast<int>(rng() % max_total);
  for (int i = 0; i < total; ++i) ++idx.m[rng() % p];
  return idx;
}

}  // namespace fixtures

#endif
