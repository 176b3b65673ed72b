#ifndef LENSHOM_MOVES_HPP
#define LENSHOM_MOVES_HPP

#include "lenshom/diagram.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lenshom {

enum class CommuteClass { NonInterleaving, Interleaving, Illegal };
enum class CrossSign { Positive, Negative };
enum class MarkType { O, X };
enum class StabCorner { NW, NE, SW, SE };

const char* to_string(CommuteClass c);
const char* to_string(CrossSign s);
const char* to_string(MarkType t);
const char* to_string(StabCorner c);

// An adjacent interleaving column pair. left_column is the interface index
// j (columns j and (j+1) mod n); segments holds the annulus indices of
// (o_left, x_left, o_right, x_right).
struct SkeinCrossing {
  int left_column = 0;
  CrossSign sign = CrossSign::Positive;
  std::array<int, 4> segments{};
};

// Annulus segment of `cell` in the two-column annulus whose left column is
// `left_column`; in [0, p*n), increasing upward. Right-column cells use the
// paired strip one to the left. Throws MoveError(CellNotInPair) otherwise.
int segment_index(const GridDiagram& d, const Cell& cell, int left_column);

// Trichotomy for exchanging columns j and (j+1) mod n. Illegal iff the two
// columns have markings sharing a segment.
CommuteClass classify_column_commutation(const GridDiagram& d, int j);

// Trichotomy for exchanging rows r and (r+1) mod n; the two-row annulus has
// no shear, so its segments are strips (bottom-row indexing across the
// alpha_0 seam).
CommuteClass classify_row_commutation(const GridDiagram& d, int r);

// Exchange columns j, (j+1) mod n: column j markings gain one strip, column
// j+1 markings lose one. Throws MoveError(IllegalExchange) when Illegal.
GridDiagram commute_columns(const GridDiagram& d, int j);

// Exchange rows r, (r+1) mod n; the seam pair shifts strips by the shear.
GridDiagram commute_rows(const GridDiagram& d, int r);

// The crossing at interface j, if that pair interleaves.
std::optional<SkeinCrossing> skein_crossing_at(const GridDiagram& d, int j);

// One entry per interleaving interface, ordered by interface index. A
// grid-number-2 diagram has two distinct interfaces for its single column
// pair; each is reported separately.
std::vector<SkeinCrossing> find_skein_crossings(const GridDiagram& d);

// Commutation at the crossing; the result carries the opposite-sign
// crossing at the same interface.
GridDiagram crossing_change(const GridDiagram& d, const SkeinCrossing& c);

// The resolution D_0: at a positive crossing each column's O marking moves
// across the interface to the other column at its own annulus height
// (left O one strip right, right O one strip left); at a negative crossing
// the X markings move instead.
GridDiagram resolve(const GridDiagram& d, const SkeinCrossing& c);

// Grid stabilization at the marking of the given type in `at`; the corner
// names the empty cell of the resulting 2x2 block.
GridDiagram stabilize(const GridDiagram& d, MarkType type, const Cell& at,
                      StabCorner corner);

struct DestabTriple {
  Cell a, b, c;  // b is the middle marking; type(a) == type(c) != type(b)
};

// Inverse of stabilization: deletes b's row and column and merges a, c to
// one marking of a's type at the block's empty corner. Throws
// MoveError(NotDestabilizable) when the adjacency preconditions fail.
GridDiagram destabilize(const GridDiagram& d, const DestabTriple& t);

// Replayable move description; applying a record sequence to its source
// diagram reproduces the target diagram.
struct MoveRecord {
  enum class Kind {
    ColumnCommute,
    RowCommute,
    CrossingChange,
    Resolve,
    Stabilize,
    Destabilize
  };
  Kind kind = Kind::ColumnCommute;
  int index = -1;                       // column or row interface
  CrossSign sign = CrossSign::Positive; // Resolve
  MarkType stab_type = MarkType::X;     // Stabilize
  Cell stab_at{};                       // Stabilize
  StabCorner corner = StabCorner::NW;   // Stabilize
  DestabTriple triple{};                // Destabilize

  std::string describe() const;
};

GridDiagram apply_move(const GridDiagram& d, const MoveRecord& m);

}  // namespace lenshom

#endif
