#include "lenshom/diagram.hpp"

#include "lenshom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lenshom {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

int mod_inverse(int a, int p) {
  if (p == 1) return 0;
  // Extended Euclid; a is coprime to p by validation.
  int t = 0, new_t = 1;
  int r = p, new_r = a % p;
  while (new_r != 0) {
    int quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return t < 0 ? t + p : t;
}

void check_marks(const std::vector<Cell>& marks, int p, int n,
                 const char* label) {
  if (static_cast<int>(marks.size()) != n)
    throw ValidationError("StripOutOfRange",
                          std::string(label) + " list must have n entries");
  std::vector<bool> row_seen(n, false), col_seen(n, false);
  for (const Cell& c : marks) {
    if (c.strip < 0 || c.strip >= p * n)
      throw ValidationError("StripOutOfRange",
                            std::string(label) + " strip " +
                                std::to_string(c.strip) + " outside [0," +
                                std::to_string(p * n) + ")");
    if (c.row < 0 || c.row >= n)
      throw ValidationError("StripOutOfRange",
                            std::string(label) + " row " +
                                std::to_string(c.row) + " outside [0," +
                                std::to_string(n) + ")");
    if (row_seen[c.row])
      throw ValidationError("DuplicateRow", std::string(label) + " row " +
                                                std::to_string(c.row));
    if (col_seen[c.strip % n])
      throw ValidationError("DuplicateColumn",
                            std::string(label) + " column " +
                                std::to_string(c.strip % n) + " (strip " +
                                std::to_string(c.strip) + ")");
    row_seen[c.row] = true;
    col_seen[c.strip % n] = true;
  }
}

}  // namespace

GridDiagram::GridDiagram(int p, int q, int n, std::vector<Cell> o_marks,
                         std::vector<Cell> x_marks)
    : p_(p), q_(q), n_(n), o_marks_(std::move(o_marks)),
      x_marks_(std::move(x_marks)) {
  if (p < 1)
    throw ValidationError("NonCoprime", "p must be positive");
  if (std::abs(q) >= p && !(p == 1 && q == 0))
    throw ValidationError("NonCoprime", "|q| must be smaller than p");
  if (std::gcd(p, std::abs(q)) != 1)
    throw ValidationError("NonCoprime", "gcd(p,q) = " +
                                            std::to_string(std::gcd(p, std::abs(q))));
  if (n < 1)
    throw ValidationError("StripOutOfRange", "grid number must be positive");
  check_marks(o_marks_, p_, n_, "O");
  check_marks(x_marks_, p_, n_, "X");

  auto by_column = [this](const Cell& a, const Cell& b) {
    return a.strip % n_ < b.strip % n_;
  };
  std::sort(o_marks_.begin(), o_marks_.end(), by_column);
  std::sort(x_marks_.begin(), x_marks_.end(), by_column);

  q_mod_ = mod(q_, p_);
  q_inv_ = mod_inverse(q_mod_, p_);

  // An O and an X may share a cell only as a degenerate unknot: its row
  // partner and column partner must both be that same X.
  for (int j = 0; j < n_; ++j) {
    const Cell& o = o_marks_[j];
    for (const Cell& x : x_marks_) {
      if (x == o) {
        if (x_in_column(j) != o || x_in_row(o.row) != o)
          throw ValidationError("SharedCellOutsideUnknot",
                                "strip " + std::to_string(o.strip) + " row " +
                                    std::to_string(o.row));
      }
    }
  }
}

Cell GridDiagram::o_in_row(int r) const {
  for (const Cell& c : o_marks_)
    if (c.row == r) return c;
  throw InternalInvariantViolation("row without O marking");
}

Cell GridDiagram::x_in_row(int r) const {
  for (const Cell& c : x_marks_)
    if (c.row == r) return c;
  throw InternalInvariantViolation("row without X marking");
}

Cell GridDiagram::up(const Cell& c) const {
  if (c.row + 1 < n_) return {c.strip, c.row + 1};
  return {mod(c.strip - shear(), strips()), 0};
}

Cell GridDiagram::down(const Cell& c) const {
  if (c.row > 0) return {c.strip, c.row - 1};
  return {mod(c.strip + shear(), strips()), n_ - 1};
}

int GridDiagram::column_pos(const Cell& c) const {
  const int base = c.strip % n_;
  int s = base;
  for (int w = 0; w < p_; ++w) {
    if (s == c.strip) return w * n_ + c.row;
    s = mod(s - shear(), strips());
  }
  throw InternalInvariantViolation("strip not in its column orbit");
}

GridDiagram translate(const GridDiagram& d, int h, int v) {
  const int pn = d.strips();
  // A full vertical period is the horizontal shift by -q*n.
  const int v_m = mod(v, d.n());
  const long long cycles = (static_cast<long long>(v) - v_m) / d.n();
  h = mod(h - cycles * d.shear(), pn);
  v = v_m;
  auto shift = [&](std::vector<Cell> marks) {
    for (Cell& c : marks) {
      for (int step = 0; step < v; ++step) {
        if (c.row + 1 < d.n()) {
          ++c.row;
        } else {
          c.row = 0;
          c.strip = mod(c.strip - d.shear(), pn);
        }
      }
      c.strip = mod(c.strip + h, pn);
    }
    return marks;
  };
  return GridDiagram(d.p(), d.q(), d.n(), shift(d.o_marks()),
                     shift(d.x_marks()));
}

GridDiagram reverse_orientation(const GridDiagram& d) {
  return GridDiagram(d.p(), d.q(), d.n(), d.x_marks(), d.o_marks());
}

ComponentDecomposition components(const GridDiagram& d) {
  const int n = d.n();
  // Union-find over O columns: O of column j is linked through its column
  // X (vertical arc) to that X's row O (horizontal arc).
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int j = 0; j < n; ++j) {
    const Cell& x = d.x_in_column(j);
    int next_o_col = d.column_of(d.o_in_row(x.row));
    int ra = find(j), rb = find(next_o_col);
    if (ra != rb) parent[ra] = rb;
  }

  ComponentDecomposition out;
  out.o_component.assign(n, -1);
  out.x_component.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int j = 0; j < n; ++j) {
    int root = find(j);
    if (id_of_root[root] < 0) {
      id_of_root[root] = out.count++;
      out.grid_number.push_back(0);
    }
    out.o_component[j] = id_of_root[root];
    out.x_component[j] = id_of_root[root];
    ++out.grid_number[id_of_root[root]];
  }
  out.mu.resize(out.count);
  for (int c = 0; c < out.count; ++c)
    out.mu[c] = mu_of_component(d, out, c);
  return out;
}

int mu_of_component(const GridDiagram& d, const ComponentDecomposition& comps,
                    int component) {
  if (d.p() == 1) return 0;
  long long total = 0;
  for (int j = 0; j < d.n(); ++j) {
    if (comps.o_component[j] != component) continue;
    const Cell& o = d.o_in_column(j);
    const Cell& x = d.x_in_column(j);
    total += static_cast<long long>(d.q_inv()) * ((o.strip - x.strip) / d.n());
  }
  return mod(total, d.p());
}

int total_mu(const GridDiagram& d) {
  auto comps = components(d);
  long long total = 0;
  for (int m : comps.mu) total += m;
  return static_cast<int>(total % d.p());
}

GridDiagram lift(const GridDiagram& d) {
  const int pn = d.strips();
  auto lift_marks = [&](const std::vector<Cell>& marks) {
    std::vector<Cell> out;
    out.reserve(marks.size() * d.p());
    for (const Cell& c : marks)
      for (int k = 0; k < d.p(); ++k)
        out.push_back({mod(c.strip + static_cast<long long>(k) * d.shear(), pn),
                       c.row + k * d.n()});
    return out;
  };
  return GridDiagram(1, 0, pn, lift_marks(d.o_marks()), lift_marks(d.x_marks()));
}

namespace {

std::string serialize(const GridDiagram& d) {
  std::ostringstream os;
  os << d.p() << ' ' << d.q() << ' ' << d.n() << '|';
  for (const Cell& c : d.o_marks()) os << c.strip << ',' << c.row << ';';
  os << '|';
  for (const Cell& c : d.x_marks()) os << c.strip << ',' << c.row << ';';
  return os.str();
}

}  // namespace

GridDiagram canonical_form(const GridDiagram& d) {
  GridDiagram best = d;
  std::string best_key = serialize(d);
  GridDiagram row_shifted = d;
  for (int v = 0; v < d.n(); ++v) {
    if (v > 0) row_shifted = translate(row_shifted, 0, 1);
    GridDiagram candidate = row_shifted;
    for (int h = 0; h < d.strips(); ++h) {
      if (h > 0) candidate = translate(candidate, 1, 0);
      std::string key = serialize(candidate);
      if (key < best_key) {
        best_key = std::move(key);
        best = candidate;
      }
    }
  }
  return best;
}

std::string canonical_key(const GridDiagram& d) {
  return serialize(canonical_form(d));
}

}  // namespace lenshom
