#include "lenshom/moves.hpp"

#include "lenshom/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lenshom {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

// x strictly inside the ascending cyclic open interval (lo, hi) of Z_m.
bool in_open_interval(int lo, int hi, int x, int m) {
  return mod(x - lo, m) != 0 && mod(x - lo, m) < mod(hi - lo, m);
}

// {b1, b2} lies in distinct open arcs of Z_m - {a1, a2}; all four distinct.
bool cyclically_separates(int a1, int a2, int b1, int b2, int m) {
  if (a1 == a2 || b1 == b2) return false;
  if (b1 == a1 || b1 == a2 || b2 == a1 || b2 == a2) return false;
  return in_open_interval(a1, a2, b1, m) != in_open_interval(a1, a2, b2, m);
}

}  // namespace

const char* to_string(CommuteClass c) {
  switch (c) {
    case CommuteClass::NonInterleaving: return "non-interleaving";
    case CommuteClass::Interleaving: return "interleaving";
    case CommuteClass::Illegal: return "illegal";
  }
  return "?";
}

const char* to_string(CrossSign s) {
  return s == CrossSign::Positive ? "positive" : "negative";
}

const char* to_string(MarkType t) { return t == MarkType::O ? "O" : "X"; }

const char* to_string(StabCorner c) {
  switch (c) {
    case StabCorner::NW: return "NW";
    case StabCorner::NE: return "NE";
    case StabCorner::SW: return "SW";
    case StabCorner::SE: return "SE";
  }
  return "?";
}

int segment_index(const GridDiagram& d, const Cell& cell, int left_column) {
  const int n = d.n();
  const int right_column = (left_column + 1) % n;
  int strip = cell.strip;
  if (cell.strip % n == right_column) {
    strip = mod(strip - 1, d.strips());
  } else if (cell.strip % n != left_column) {
    throw MoveError("CellNotInPair",
                    "strip " + std::to_string(cell.strip) + " not in pair (" +
                        std::to_string(left_column) + "," +
                        std::to_string(right_column) + ")");
  }
  // Wrap index of `strip` within the left column's orbit under s -> s - q*n,
  // started at the base strip `left_column`.
  int s = left_column;
  for (int w = 0; w < d.p(); ++w) {
    if (s == strip) return w * n + cell.row;
    s = mod(s - d.shear(), d.strips());
  }
  throw InternalInvariantViolation("strip outside column orbit");
}

namespace {

struct PairSegments {
  int o_left, x_left, o_right, x_right;
};

PairSegments pair_segments(const GridDiagram& d, int j) {
  const int right = (j + 1) % d.n();
  return {segment_index(d, d.o_in_column(j), j),
          segment_index(d, d.x_in_column(j), j),
          segment_index(d, d.o_in_column(right), j),
          segment_index(d, d.x_in_column(right), j)};
}

CommuteClass classify_segments(int o1, int x1, int o2, int x2, int m) {
  if (o1 == o2 || o1 == x2 || x1 == o2 || x1 == x2)
    return CommuteClass::Illegal;
  return cyclically_separates(o1, x1, o2, x2, m)
             ? CommuteClass::Interleaving
             : CommuteClass::NonInterleaving;
}

}  // namespace

CommuteClass classify_column_commutation(const GridDiagram& d, int j) {
  if (d.n() < 2)
    throw MoveError("CellNotInPair", "no column pair in a grid number 1 diagram");
  auto s = pair_segments(d, j);
  return classify_segments(s.o_left, s.x_left, s.o_right, s.x_right,
                           d.strips());
}

CommuteClass classify_row_commutation(const GridDiagram& d, int r) {
  if (d.n() < 2)
    throw MoveError("CellNotInPair", "no row pair in a grid number 1 diagram");
  const int top = (r + 1) % d.n();
  // Segment of a mark in the two-row annulus, indexed by bottom-row strip.
  auto seg = [&](const Cell& c) {
    if (c.row == r) return c.strip;
    return top == 0 ? mod(c.strip + d.shear(), d.strips()) : c.strip;
  };
  Cell o1 = d.o_in_row(r), x1 = d.x_in_row(r);
  Cell o2 = d.o_in_row(top), x2 = d.x_in_row(top);
  return classify_segments(seg(o1), seg(x1), seg(o2), seg(x2), d.strips());
}

GridDiagram commute_columns(const GridDiagram& d, int j) {
  if (classify_column_commutation(d, j) == CommuteClass::Illegal)
    throw MoveError("IllegalExchange",
                    "columns " + std::to_string(j) + "," +
                        std::to_string((j + 1) % d.n()) + " share a segment");
  const int right = (j + 1) % d.n();
  auto shift = [&](std::vector<Cell> marks) {
    for (Cell& c : marks) {
      if (c.strip % d.n() == j)
        c.strip = mod(c.strip + 1, d.strips());
      else if (c.strip % d.n() == right)
        c.strip = mod(c.strip - 1, d.strips());
    }
    return marks;
  };
  return GridDiagram(d.p(), d.q(), d.n(), shift(d.o_marks()),
                     shift(d.x_marks()));
}

GridDiagram commute_rows(const GridDiagram& d, int r) {
  if (classify_row_commutation(d, r) == CommuteClass::Illegal)
    throw MoveError("IllegalExchange",
                    "rows " + std::to_string(r) + "," +
                        std::to_string((r + 1) % d.n()) + " share a segment");
  const int top = (r + 1) % d.n();
  auto shift = [&](std::vector<Cell> marks) {
    for (Cell& c : marks) {
      if (top == 0) {
        // Seam pair: the bottom-row mark moves up across alpha_0 and the
        // top-row mark moves down across it.
        if (c.row == r)
          c = {mod(c.strip - d.shear(), d.strips()), 0};
        else if (c.row == 0)
          c = {mod(c.strip + d.shear(), d.strips()), r};
      } else {
        if (c.row == r)
          c.row = top;
        else if (c.row == top)
          c.row = r;
      }
    }
    return marks;
  };
  return GridDiagram(d.p(), d.q(), d.n(), shift(d.o_marks()),
                     shift(d.x_marks()));
}

std::optional<SkeinCrossing> skein_crossing_at(const GridDiagram& d, int j) {
  if (d.n() < 2) return std::nullopt;
  auto s = pair_segments(d, j);
  if (classify_segments(s.o_left, s.x_left, s.o_right, s.x_right,
                        d.strips()) != CommuteClass::Interleaving)
    return std::nullopt;
  SkeinCrossing out;
  out.left_column = j;
  out.segments = {s.o_left, s.x_left, s.o_right, s.x_right};
  out.sign = in_open_interval(s.o_left, s.x_left, s.o_right, d.strips())
                 ? CrossSign::Positive
                 : CrossSign::Negative;
  return out;
}

std::vector<SkeinCrossing> find_skein_crossings(const GridDiagram& d) {
  std::vector<SkeinCrossing> out;
  if (d.n() < 2) return out;
  for (int j = 0; j < d.n(); ++j)
    if (auto c = skein_crossing_at(d, j)) out.push_back(*c);
  return out;
}

GridDiagram crossing_change(const GridDiagram& d, const SkeinCrossing& c) {
  return commute_columns(d, c.left_column);
}

GridDiagram resolve(const GridDiagram& d, const SkeinCrossing& c) {
  const int j = c.left_column;
  const int right = (j + 1) % d.n();
  std::vector<Cell> os = d.o_marks();
  std::vector<Cell> xs = d.x_marks();
  // Each marking crosses the interface staying at its own annulus height:
  // left marking one strip right, right marking one strip left.
  auto exchange = [&](std::vector<Cell>& marks) {
    for (Cell& m : marks) {
      if (m.strip % d.n() == j)
        m.strip = mod(m.strip + 1, d.strips());
      else if (m.strip % d.n() == right)
        m.strip = mod(m.strip - 1, d.strips());
    }
  };
  if (c.sign == CrossSign::Positive)
    exchange(os);
  else
    exchange(xs);
  return GridDiagram(d.p(), d.q(), d.n(), std::move(os), std::move(xs));
}

namespace {

struct CornerOffsets {
  int col;  // 0 = left new column, 1 = right
  int row;  // 0 = bottom new row, 1 = top
};

CornerOffsets corner_offsets(StabCorner c) {
  switch (c) {
    case StabCorner::NW: return {0, 1};
    case StabCorner::NE: return {1, 1};
    case StabCorner::SW: return {0, 0};
    case StabCorner::SE: return {1, 0};
  }
  return {0, 0};
}

}  // namespace

GridDiagram stabilize(const GridDiagram& d, MarkType type, const Cell& at,
                      StabCorner corner) {
  const auto& own = type == MarkType::O ? d.o_marks() : d.x_marks();
  if (std::find(own.begin(), own.end(), at) == own.end())
    throw MoveError("CellNotInPair",
                    std::string("no ") + to_string(type) + " marking at strip " +
                        std::to_string(at.strip) + " row " +
                        std::to_string(at.row));
  const int n = d.n();
  const int j = at.strip % n;
  const int r = at.row;
  const auto empty = corner_offsets(corner);

  // Old (slot k, block b, row r') -> new slot k + [k > j], width n+1.
  auto reindex = [&](const Cell& c) -> Cell {
    int slot = c.strip % n;
    int block = c.strip / n;
    int new_slot = slot + (slot > j ? 1 : 0);
    return {new_slot + (n + 1) * block, c.row + (c.row > r ? 1 : 0)};
  };

  const int block = at.strip / n;
  auto block_cell = [&](int dcol, int drow) -> Cell {
    return {j + dcol + (n + 1) * block, r + drow};
  };

  std::vector<Cell> os, xs;
  auto& same = type == MarkType::O ? os : xs;
  auto& other = type == MarkType::O ? xs : os;

  // The stabilized marking becomes three: the opposite type diagonal to the
  // empty corner, the same type in the two cells adjacent to it.
  other.push_back(block_cell(1 - empty.col, 1 - empty.row));
  same.push_back(block_cell(empty.col, 1 - empty.row));
  same.push_back(block_cell(1 - empty.col, empty.row));

  const Cell col_partner =
      type == MarkType::O ? d.x_in_column(j) : d.o_in_column(j);
  const Cell row_partner = type == MarkType::O ? d.x_in_row(r) : d.o_in_row(r);
  const bool partner_shared = col_partner == row_partner;

  for (const Cell& c : d.o_marks()) {
    if (type == MarkType::O && c == at) continue;
    if (type == MarkType::X && (c == col_partner || c == row_partner)) continue;
    os.push_back(reindex(c));
  }
  for (const Cell& c : d.x_marks()) {
    if (type == MarkType::X && c == at) continue;
    if (type == MarkType::O && (c == col_partner || c == row_partner)) continue;
    xs.push_back(reindex(c));
  }

  // Partners move into the empty corner's column and row respectively; a
  // single shared partner takes both at once, keeping its own block.
  if (partner_shared) {
    other.push_back({j + empty.col + (n + 1) * (col_partner.strip / n),
                     r + empty.row});
  } else {
    other.push_back({j + empty.col + (n + 1) * (col_partner.strip / n),
                     col_partner.row + (col_partner.row > r ? 1 : 0)});
    int slot = row_partner.strip % n;
    other.push_back({slot + (slot > j ? 1 : 0) + (n + 1) * (row_partner.strip / n),
                     r + empty.row});
  }

  return GridDiagram(d.p(), d.q(), n + 1, std::move(os), std::move(xs));
}

namespace {

std::optional<MarkType> mark_type_at(const GridDiagram& d, const Cell& c) {
  const auto& os = d.o_marks();
  const auto& xs = d.x_marks();
  bool is_o = std::find(os.begin(), os.end(), c) != os.end();
  bool is_x = std::find(xs.begin(), xs.end(), c) != xs.end();
  if (is_o && is_x) return std::nullopt;  // degenerate unknot cell
  if (is_o) return MarkType::O;
  if (is_x) return MarkType::X;
  return std::nullopt;
}

}  // namespace

GridDiagram destabilize(const GridDiagram& d, const DestabTriple& t) {
  const int n = d.n();
  if (n < 2)
    throw MoveError("NotDestabilizable", "grid number is already 1");

  auto type_a = mark_type_at(d, t.a);
  auto type_b = mark_type_at(d, t.b);
  auto type_c = mark_type_at(d, t.c);
  if (!type_a || !type_b || !type_c)
    throw MoveError("NotDestabilizable", "triple cells must carry unambiguous markings");
  if (*type_a != *type_c || *type_a == *type_b)
    throw MoveError("NotDestabilizable", "triple must be (T, not-T, T)");

  // Orientation: one of (a,b) / (b,c) is the vertical pair (same column,
  // annulus-adjacent), the other the horizontal pair (same row, adjacent
  // strips).
  auto vertically_adjacent = [&](const Cell& u, const Cell& v) {
    return d.column_of(u) == d.column_of(v) && (d.up(u) == v || d.down(u) == v);
  };
  auto horizontally_adjacent = [&](const Cell& u, const Cell& v) {
    return u.row == v.row && (mod(u.strip - v.strip, d.strips()) == 1 ||
                              mod(v.strip - u.strip, d.strips()) == 1);
  };

  bool ab_vertical = vertically_adjacent(t.a, t.b);
  bool bc_vertical = vertically_adjacent(t.b, t.c);
  if (ab_vertical == bc_vertical ||
      !(ab_vertical ? horizontally_adjacent(t.b, t.c)
                    : horizontally_adjacent(t.a, t.b)))
    throw MoveError("NotDestabilizable", "triple is not an adjacent L-pattern");

  // The merged marking takes the block's empty corner: next to a, on the
  // side where c sits relative to b. Local adjacency handles both seams.
  Cell merged;
  if (ab_vertical) {
    const bool c_right = mod(t.c.strip - t.b.strip, d.strips()) == 1;
    merged = {mod(t.a.strip + (c_right ? 1 : -1), d.strips()), t.a.row};
  } else {
    merged = d.up(t.b) == t.c ? d.up(t.a) : d.down(t.a);
  }
  const int dead_slot = t.b.strip % n;
  const int dead_row = t.b.row;

  std::vector<Cell> os, xs;
  auto keep = [&](const std::vector<Cell>& marks, MarkType mt) {
    std::vector<Cell> out;
    for (const Cell& m : marks) {
      if (m == t.b && mt == *type_b) continue;
      if ((m == t.a || m == t.c) && mt == *type_a) continue;
      out.push_back(m);
    }
    return out;
  };
  os = keep(d.o_marks(), MarkType::O);
  xs = keep(d.x_marks(), MarkType::X);
  (*type_a == MarkType::O ? os : xs).push_back(merged);

  // Rank reindexing: (slot k, block blk) -> slot k - [k > dead_slot],
  // width n-1; rows above dead_row shift down.
  auto reindex = [&](std::vector<Cell>& marks) {
    for (Cell& m : marks) {
      int slot = m.strip % n;
      int block = m.strip / n;
      if (slot == dead_slot || m.row == dead_row)
        throw InternalInvariantViolation("surviving marking in deleted row/column");
      m = {slot - (slot > dead_slot ? 1 : 0) + (n - 1) * block,
           m.row - (m.row > dead_row ? 1 : 0)};
    }
  };
  reindex(os);
  reindex(xs);

  return GridDiagram(d.p(), d.q(), n - 1, std::move(os), std::move(xs));
}

std::string MoveRecord::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ColumnCommute: os << "commute-cols " << index; break;
    case Kind::RowCommute: os << "commute-rows " << index; break;
    case Kind::CrossingChange: os << "crossing-change " << index; break;
    case Kind::Resolve:
      os << "resolve " << index << " (" << to_string(sign) << ")";
      break;
    case Kind::Stabilize:
      os << "stabilize " << to_string(stab_type) << ":" << to_string(corner)
         << " at (" << stab_at.strip << "," << stab_at.row << ")";
      break;
    case Kind::Destabilize:
      os << "destabilize (" << triple.a.strip << "," << triple.a.row << ")-("
         << triple.b.strip << "," << triple.b.row << ")-(" << triple.c.strip
         << "," << triple.c.row << ")";
      break;
  }
  return os.str();
}

GridDiagram apply_move(const GridDiagram& d, const MoveRecord& m) {
  switch (m.kind) {
    case MoveRecord::Kind::ColumnCommute:
    case MoveRecord::Kind::CrossingChange:
      return commute_columns(d, m.index);
    case MoveRecord::Kind::RowCommute:
      return commute_rows(d, m.index);
    case MoveRecord::Kind::Resolve: {
      auto c = skein_crossing_at(d, m.index);
      if (!c)
        throw MoveError("IllegalExchange",
                        "no skein crossing at interface " + std::to_string(m.index));
      return resolve(d, *c);
    }
    case MoveRecord::Kind::Stabilize:
      return stabilize(d, m.stab_type, m.stab_at, m.corner);
    case MoveRecord::Kind::Destabilize:
      return destabilize(d, m.triple);
  }
  throw InternalInvariantViolation("unknown move kind");
}

}  // namespace lenshom
