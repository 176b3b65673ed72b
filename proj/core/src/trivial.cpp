#include "lenshom/trivial.hpp"

#include "lenshom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lenshom {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

}  // namespace

int IndexSet::total() const {
  return std::accumulate(m.begin(), m.end(), 0);
}

int sigma(int p, int q, int i) {
  for (int k = 0; k < p; ++k)
    if (mod(static_cast<long long>(k) * q, p) == mod(i, p)) return k;
  throw MoveError("EmptyIndexSet", "sigma undefined: gcd(p,q) != 1");
}

GridDiagram build_trivial_diagram(const IndexSet& idx) {
  const int p = idx.p;
  const int n = idx.total();
  if (n < 1) throw MoveError("EmptyIndexSet", "index set has no components");
  const int q_mod = mod(idx.q, p);
  std::vector<Cell> os, xs;
  os.reserve(n);
  xs.reserve(n);
  int i = 0;  // 0-based component counter along the diagonal
  for (int l = 0; l < p; ++l) {
    const int cls = sigma(p, idx.q, l);
    for (int k = 0; k < idx.m[cls]; ++k, ++i) {
      const int row = n - 1 - i;
      os.push_back({i, row});
      xs.push_back({mod(i - static_cast<long long>(cls) * q_mod * n, p * n), row});
    }
  }
  return GridDiagram(p, idx.q, n, std::move(os), std::move(xs));
}

IndexSet index_set_of(const GridDiagram& d) {
  auto comps = components(d);
  for (int g : comps.grid_number)
    if (g != 1)
      throw MoveError("NotAllGridNumberOne",
                      "component with grid number " + std::to_string(g));
  IndexSet out;
  out.p = d.p();
  out.q = d.q();
  out.m.assign(d.p(), 0);
  for (int mu : comps.mu) ++out.m[mu];
  return out;
}

ProjectionStats projection_stats(const IndexSet& idx) {
  const GridDiagram d = build_trivial_diagram(idx);
  const int p = d.p();
  const int pn = d.strips();
  const int q_mod = d.q_mod();

  ProjectionStats out;
  // Arc interiors, one vertical and one horizontal arc per component.
  std::vector<std::set<Cell>> vertical(d.n()), horizontal(d.n());
  std::vector<int> mu_arc(d.n()), lambda_arc(d.n());
  for (int j = 0; j < d.n(); ++j) {
    const Cell o = d.o_in_column(j);
    const Cell x = d.x_in_column(j);
    const int mu = mod(static_cast<long long>(d.q_inv()) *
                           ((o.strip - x.strip) / d.n()),
                       p);
    mu_arc[j] = mu;
    lambda_arc[j] = mod(static_cast<long long>(mu) * q_mod, p);
    // Vertical arc upward from O, crossing alpha_0 exactly mu times.
    Cell cur = o;
    for (int step = 1; step < mu * d.n(); ++step) {
      cur = d.up(cur);
      vertical[j].insert(cur);
    }
    if (mu > 0) {
      if (d.up(cur) != x)
        throw InternalInvariantViolation("vertical arc misses its X marking");
    }
    // Horizontal arc rightward from X, crossing beta_0 lambda times.
    const int span = mod(o.strip - x.strip, pn);
    for (int step = 1; step < span; ++step)
      horizontal[j].insert({mod(x.strip + step, pn), x.row});
  }
  for (int i = 0; i < d.n(); ++i) {
    out.mu_total += mu_arc[i];
    out.lambda_total += lambda_arc[i];
    for (int j = 0; j < d.n(); ++j)
      for (const Cell& c : vertical[i])
        if (horizontal[j].count(c)) ++out.writhe;
  }
  out.p_times_s = p * out.writhe - out.mu_total * out.lambda_total -
                  (out.mu_total - out.lambda_total);
  return out;
}

void NormalizationTable::set(std::vector<int> m, LaurentPoly value) {
  if (!m.empty() && m[0] > 0)
    throw MoveError("EmptyIndexSet",
                    "normalization overrides may not cover nullhomotopic components");
  entries_[std::move(m)] = std::move(value);
}

const LaurentPoly* NormalizationTable::find(const std::vector<int>& m) const {
  auto it = entries_.find(m);
  return it == entries_.end() ? nullptr : &it->second;
}

LaurentPoly trivial_value(const IndexSet& idx,
                          const NormalizationTable* overrides) {
  const int p = idx.p;
  if (idx.total() < 1)
    throw MoveError("EmptyIndexSet", "index set has no components");
  const int unknots = idx.m.empty() ? 0 : idx.m[0];
  IndexSet essential = idx;
  if (!essential.m.empty()) essential.m[0] = 0;

  LaurentPoly factor = LaurentPoly::unknot_factor(p);
  if (essential.total() == 0) {
    // Entirely nullhomotopic: J(U) = a^{-p+1} with one factor per extra U.
    LaurentPoly value = LaurentPoly::monomial(1, -p + 1, 0);
    for (int k = 1; k < unknots; ++k) value = value * factor;
    return value;
  }
  LaurentPoly value;
  if (const LaurentPoly* v = overrides ? overrides->find(essential.m) : nullptr) {
    value = *v;
  } else {
    value = LaurentPoly::monomial(1, projection_stats(essential).p_times_s + 1, 0);
  }
  for (int k = 0; k < unknots; ++k) value = value * factor;
  return value;
}

namespace {

// Particle view of an all-grid-number-1 diagram: one component per column.
struct Particle {
  int source_column;  // column in the input diagram
  int strip;          // current O strip
  int row;            // current O row
  int mu;
  int key1;           // mu*q mod p
};

}  // namespace

SortPlan sorted_trivial_form(const GridDiagram& d) {
  auto comps = components(d);
  for (int g : comps.grid_number)
    if (g != 1)
      throw MoveError("NotAllGridNumberOne",
                      "component with grid number " + std::to_string(g));

  const int n = d.n();
  const int pn = d.strips();
  SortPlan plan{.moves = {}, .order = {}, .sorted = d};
  GridDiagram& sim = plan.sorted;

  std::vector<Particle> parts(n);
  for (int j = 0; j < n; ++j) {
    const Cell& o = d.o_in_column(j);
    parts[j] = {j, o.strip, o.row, comps.mu[comps.o_component[j]],
                mod(static_cast<long long>(comps.mu[comps.o_component[j]]) *
                        d.q_mod(),
                    d.p())};
  }

  auto swap_columns = [&](int j) {
    plan.moves.push_back({.kind = MoveRecord::Kind::ColumnCommute, .index = j});
    sim = commute_columns(sim, j);
    const int right = (j + 1) % n;
    for (Particle& pt : parts) {
      if (pt.strip % n == j)
        pt.strip = mod(pt.strip + 1, pn);
      else if (pt.strip % n == right)
        pt.strip = mod(pt.strip - 1, pn);
    }
  };

  auto particle_at_slot = [&](int slot) -> Particle& {
    for (Particle& pt : parts)
      if (pt.strip % n == slot) return pt;
    throw InternalInvariantViolation("column slot without particle");
  };

  if (n > 1) {
    // Phase 1: pack the O strips into one consecutive run. The anchor is
    // the particle after the largest cyclic strip gap (ties: smallest
    // strip); each full leftward cycle of n-1 swaps carries the next
    // particle one block closer while shifting the rest by one strip.
    std::vector<int> strips_sorted;
    for (const Particle& pt : parts) strips_sorted.push_back(pt.strip);
    std::sort(strips_sorted.begin(), strips_sorted.end());
    int anchor_strip = strips_sorted[0];
    int best_gap = -1;
    for (int i = 0; i < n; ++i) {
      int gap = mod(strips_sorted[(i + 1) % n] - strips_sorted[i], pn);
      if (gap > best_gap) {
        best_gap = gap;
        anchor_strip = strips_sorted[(i + 1) % n];
      }
    }
    const int anchor_source =
        particle_at_slot(anchor_strip % n).source_column;
    auto anchor = [&]() -> Particle& {
      for (Particle& pt : parts)
        if (pt.source_column == anchor_source) return pt;
      throw InternalInvariantViolation("anchor lost");
    };

    for (int k = 1; k < n; ++k) {
      const int target_slot = mod(anchor().strip + k, n);
      Particle& q = particle_at_slot(target_slot);
      int delta = mod(q.strip - (anchor().strip + k), pn);
      if (delta % n != 0)
        throw InternalInvariantViolation("pack distance not a block multiple");
      while (delta > 0) {
        const int slot = q.strip % n;
        for (int t = 1; t < n; ++t) swap_columns(mod(slot - t, n));
        delta -= n;
      }
    }

    // Phase 2: bubble-sort the run by (mu*q mod p, row descending);
    // adjacent run particles exchange strips under one commutation.
    auto key_less = [](const Particle& a, const Particle& b) {
      if (a.key1 != b.key1) return a.key1 < b.key1;
      return a.row > b.row;
    };
    auto particle_at_strip = [&](int strip) -> Particle& {
      for (Particle& pt : parts)
        if (pt.strip == strip) return pt;
      throw InternalInvariantViolation("run strip without particle");
    };
    const int run_start = [&] {
      // Lowest strip of the run: the one whose predecessor is vacant.
      for (const Particle& pt : parts) {
        bool has_pred = false;
        for (const Particle& other : parts)
          if (other.strip == mod(pt.strip - 1, pn)) has_pred = true;
        if (!has_pred) return pt.strip;
      }
      return parts[0].strip;  // n == pn: fully wrapped run
    }();
    for (int pass = 0; pass + 1 < n; ++pass) {
      for (int pos = 0; pos + 1 < n; ++pos) {
        Particle& u = particle_at_strip(mod(run_start + pos, pn));
        Particle& v = particle_at_strip(mod(run_start + pos + 1, pn));
        if (key_less(v, u)) swap_columns(mod(run_start + pos, n));
      }
    }

    // Phase 3: non-interleaving row commutations put the O markings on the
    // descending diagonal.
    auto desired_row = [&](const Particle& pt) {
      return n - 1 - mod(pt.strip - run_start, pn);
    };
    auto particle_in_row = [&](int row) -> Particle& {
      for (Particle& pt : parts)
        if (pt.row == row) return pt;
      throw InternalInvariantViolation("row without particle");
    };
    for (int pass = 0; pass + 1 < n; ++pass) {
      for (int r = 0; r + 1 < n; ++r) {
        Particle& u = particle_in_row(r);
        Particle& v = particle_in_row(r + 1);
        if (desired_row(u) > desired_row(v)) {
          plan.moves.push_back({.kind = MoveRecord::Kind::RowCommute, .index = r});
          sim = commute_rows(sim, r);
          u.row = r + 1;
          v.row = r;
        }
      }
    }

    plan.order.resize(n);
    for (const Particle& pt : parts)
      plan.order[mod(pt.strip - run_start, pn)] = pt.source_column;
  } else {
    plan.order = {0};
  }

  return plan;
}

}  // namespace lenshom
