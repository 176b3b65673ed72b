#ifndef LENSHOM_DIAGRAM_HPP
#define LENSHOM_DIAGRAM_HPP

#include <compare>
#include <string>
#include <vector>

namespace lenshom {

// A fundamental parallelogram of the straightened torus: strip in [0, p*n)
// is the discrete theta_1 coordinate, row in [0, n) the theta_2 coordinate.
struct Cell {
  int strip = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Toroidal grid diagram in L(p,q), straightened coordinates.
//
// Wrap convention: crossing alpha_0 upward (row n-1 into row 0) carries
// strip s to (s - q*n) mod p*n. Marking lists are stored sorted by column
// index (strip mod n), so o_marks()[j] is the O marking of column j.
class GridDiagram {
 public:
  // Validates and normalizes; throws ValidationError naming the violated
  // invariant otherwise.
  GridDiagram(int p, int q, int n, std::vector<Cell> o_marks,
              std::vector<Cell> x_marks);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return n_; }
  int strips() const { return p_ * n_; }
  // q reduced into [0, p).
  int q_mod() const { return q_mod_; }
  // Inverse of q mod p (0 when p == 1, where every class is trivial).
  int q_inv() const { return q_inv_; }
  // Strip shift when crossing alpha_0 upward is -shear() mod strips().
  int shear() const { return q_mod_ * n_; }

  const std::vector<Cell>& o_marks() const { return o_marks_; }
  const std::vector<Cell>& x_marks() const { return x_marks_; }

  int column_of(const Cell& c) const { return c.strip % n_; }
  const Cell& o_in_column(int j) const { return o_marks_[j]; }
  const Cell& x_in_column(int j) const { return x_marks_[j]; }
  Cell o_in_row(int r) const;
  Cell x_in_row(int r) const;

  // Neighbor cell upward/downward along the cell's column annulus.
  Cell up(const Cell& c) const;
  Cell down(const Cell& c) const;

  // Position of a cell in its column annulus, counted upward from the
  // cell (strip mod n, row 0); in [0, p*n).
  int column_pos(const Cell& c) const;

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  int p_, q_, n_;
  int q_mod_, q_inv_;
  std::vector<Cell> o_marks_;
  std::vector<Cell> x_marks_;
};

// Torus translation: h horizontal unit shifts (strip +1), then v vertical
// unit shifts (row +1; a marking leaving row n-1 re-enters row 0 with
// strip - q*n). Negative offsets allowed.
GridDiagram translate(const GridDiagram& d, int h, int v);

// Exchange every O marking with an X marking and vice versa (the diagram
// of the reversed link, rD).
GridDiagram reverse_orientation(const GridDiagram& d);

struct ComponentDecomposition {
  int count = 0;
  std::vector<int> o_component;   // per column index
  std::vector<int> x_component;   // per column index
  std::vector<int> grid_number;   // per component: count of its O markings
  std::vector<int> mu;            // per component: homology class in [0, p)
};

// Union of row links (X-O sharing a row) and column links (O-X sharing a
// column); components are numbered by their smallest O column.
ComponentDecomposition components(const GridDiagram& d);

// Homology class of one component: sum over its vertical arcs of
// q^{-1} * (s_O - s_X)/n  mod p. Zero when p == 1.
int mu_of_component(const GridDiagram& d, const ComponentDecomposition& comps,
                    int component);

// Sum of all component classes mod p.
int total_mu(const GridDiagram& d);

// The p-fold cover: a diagram in L(1,0) with grid number p*n. Each marking
// (s, r) lifts to ((s + k*q*n) mod p*n, r + k*n) for k = 0..p-1.
GridDiagram lift(const GridDiagram& d);

// Lexicographically minimal serialization over all p*n^2 translations.
// Translation-equivalent diagrams share the key.
std::string canonical_key(const GridDiagram& d);

// The translate realizing canonical_key.
GridDiagram canonical_form(const GridDiagram& d);

}  // namespace lenshom

#endif
