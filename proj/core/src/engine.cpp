#include "lenshom/engine.hpp"

#include "lenshom/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace lenshom {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

}  // namespace

long long len_between(const GridDiagram& d, const Cell& a, const Cell& b,
                      Axis axis) {
  if (a == b) return 0;
  const int pn = d.strips();
  if (axis == Axis::Row) {
    if (a.row != b.row)
      throw MoveError("NotAligned", "cells do not share a row");
    int diff = mod(a.strip - b.strip, pn);
    return std::min(diff, pn - diff);
  }
  if (d.column_of(a) != d.column_of(b))
    throw MoveError("NotAligned", "cells do not share a column");
  int diff = mod(d.column_pos(a) - d.column_pos(b), pn);
  return std::min(diff, pn - diff);
}

bool all_components_grid_one(const GridDiagram& d) {
  for (int j = 0; j < d.n(); ++j)
    if (d.x_in_column(j).row != d.o_in_column(j).row) return false;
  return true;
}

namespace {

// Simulator for one reduction step: applies moves to a scratch diagram and
// keeps the step's named markings tracked through them.
struct StepSim {
  GridDiagram d;
  std::vector<MoveRecord> moves;
  std::vector<Cell*> tracked;

  explicit StepSim(GridDiagram start) : d(std::move(start)) {}

  void track(Cell& c) { tracked.push_back(&c); }

  void commute_cols(int j) {
    moves.push_back({.kind = MoveRecord::Kind::ColumnCommute, .index = j});
    d = commute_columns(d, j);
    const int n = d.n();
    const int right = (j + 1) % n;
    for (Cell* c : tracked) {
      if (c->strip % n == j)
        c->strip = mod(c->strip + 1, d.strips());
      else if (c->strip % n == right)
        c->strip = mod(c->strip - 1, d.strips());
    }
  }

  void commute_rws(int r) {
    moves.push_back({.kind = MoveRecord::Kind::RowCommute, .index = r});
    d = commute_rows(d, r);
    const int n = d.n();
    const int top = (r + 1) % n;
    for (Cell* c : tracked) {
      if (top == 0) {
        if (c->row == r)
          *c = {mod(c->strip - d.shear(), d.strips()), 0};
        else if (c->row == 0)
          *c = {mod(c->strip + d.shear(), d.strips()), r};
      } else {
        if (c->row == r)
          c->row = top;
        else if (c->row == top)
          c->row = r;
      }
    }
  }
};

}  // namespace

StepPlan reduce_grid_number_step(const GridDiagram& d0) {
  const int n = d0.n();
  const int pn = d0.strips();

  // Triple (X1, O1, X2): X1 shares O1's column, X2 shares O1's row, X1 and
  // X2 distinct; minimal len(X1 O1), ties toward the lowest column.
  std::optional<long long> best_len;
  int best_col = -1;
  for (int j = 0; j < n; ++j) {
    const Cell o1 = d0.o_in_column(j);
    const Cell x1 = d0.x_in_column(j);
    if (x1.row == o1.row) continue;  // grid number 1 component
    long long len = len_between(d0, x1, o1, Axis::Column);
    if (!best_len || len < *best_len) {
      best_len = len;
      best_col = j;
    }
  }
  if (!best_len)
    throw MoveError("NotAllGridNumberOne",
                    "no component with grid number above one");

  StepSim sim(d0);
  Cell o1 = d0.o_in_column(best_col);
  Cell x1 = d0.x_in_column(best_col);
  Cell x2 = d0.x_in_row(o1.row);
  Cell o2 = d0.o_in_column(d0.column_of(x2));
  Cell x3 = d0.x_in_row(o2.row);
  Cell o3 = d0.o_in_column(d0.column_of(x3));
  sim.track(o1);
  sim.track(x1);
  sim.track(x2);
  sim.track(o2);
  sim.track(x3);
  sim.track(o3);

  // Move the column of X2 toward O1 until they are strip-adjacent (case 1)
  // or the next exchange is blocked by O2 and X3 sharing a segment (case 2).
  bool case1 = false;
  while (true) {
    long long len12 = len_between(sim.d, o1, x2, Axis::Row);
    if (len12 == 1) {
      case1 = true;
      break;
    }
    const int d_plus = mod(x2.strip - o1.strip, pn);
    const bool move_left = d_plus <= pn - d_plus;
    const int c2_slot = x2.strip % n;
    const int interface = move_left ? mod(c2_slot - 1, n) : c2_slot;
    if (classify_column_commutation(sim.d, interface) == CommuteClass::Illegal) {
      // The paper's dichotomy: the block must come from O2 and X3.
      const int neighbor_slot = move_left ? interface : (c2_slot + 1) % n;
      const bool x3_adjacent =
          x3.strip % n == neighbor_slot &&
          (move_left ? mod(o2.strip - x3.strip, pn) == 1
                     : mod(x3.strip - o2.strip, pn) == 1);
      if (!x3_adjacent)
        throw InternalInvariantViolation(
            "illegal exchange not caused by the O2/X3 segment");
      break;
    }
    sim.commute_cols(interface);
    long long after = len_between(sim.d, o1, x2, Axis::Row);
    if (after >= len12)
      throw InternalInvariantViolation("column movement failed to shorten the row arc");
  }

  // Shrink a vertical arc by row commutations until the pair is
  // annulus-adjacent; every such commutation must be non-interleaving
  // (asserted by the executor).
  auto shrink_vertical = [&](Cell& moving, const Cell& target) {
    while (true) {
      long long len = len_between(sim.d, target, moving, Axis::Column);
      if (len == 1) break;
      const int d_up = mod(sim.d.column_pos(target) - sim.d.column_pos(moving), pn);
      const bool up = d_up <= pn - d_up;
      const int iface = up ? moving.row : mod(moving.row - 1, n);
      sim.commute_rws(iface);
      long long after = len_between(sim.d, target, moving, Axis::Column);
      if (after >= len)
        throw InternalInvariantViolation("row movement failed to shorten the column arc");
    }
  };

  if (case1) {
    shrink_vertical(o1, x1);
    sim.moves.push_back({.kind = MoveRecord::Kind::Destabilize,
                         .triple = {x1, o1, x2}});
    sim.d = destabilize(sim.d, {x1, o1, x2});
  } else {
    const long long len2 = len_between(sim.d, x2, o2, Axis::Column);
    const long long len3 = len_between(sim.d, x3, o3, Axis::Column);
    if (len3 >= len2) {
      shrink_vertical(o2, x2);
      sim.moves.push_back({.kind = MoveRecord::Kind::Destabilize,
                           .triple = {x2, o2, x3}});
      sim.d = destabilize(sim.d, {x2, o2, x3});
    } else {
      shrink_vertical(x3, o3);
      sim.moves.push_back({.kind = MoveRecord::Kind::Destabilize,
                           .triple = {o2, x3, o3}});
      sim.d = destabilize(sim.d, {o2, x3, o3});
    }
  }

  return {std::move(sim.moves), std::move(sim.d)};
}

Evaluator::Evaluator(EvalOptions options) : options_(options) {}

namespace {

void ensure_node(SkeinTree& tree, const std::string& key, GridDiagram diagram,
                 const std::string& role) {
  auto it = tree.nodes.find(key);
  if (it == tree.nodes.end()) {
    tree.nodes.emplace(key, SkeinTreeNode{key, std::move(diagram), role,
                                          std::nullopt, std::nullopt});
  } else if (role == "leaf" || role == "cached") {
    it->second.role = role;
  }
}

}  // namespace

Evaluator::MemoEntry Evaluator::eval_node(const GridDiagram& start,
                                          SkeinTree& tree,
                                          std::vector<TraceStep>* trace) {
  const std::string key0 = canonical_key(start);
  if (auto it = memo_.find(key0); it != memo_.end()) {
    ensure_node(tree, key0, canonical_form(start), "cached");
    tree.nodes.at(key0).value = it->second.value;
    return it->second;
  }
  ensure_node(tree, key0, canonical_form(start), "internal");

  struct Frame {
    CrossSign sign;
    GridDiagram resolution;
    std::string branch_key;
    std::string cont_key;
  };
  std::vector<Frame> frames;

  GridDiagram d = start;
  std::string seg_key = key0;
  std::vector<MoveRecord> seg_moves;
  std::optional<MemoEntry> stopped;

  auto flush_edge = [&](const std::string& to_key) {
    if (to_key != seg_key || !seg_moves.empty())
      tree.edges.push_back({seg_key, to_key, seg_moves});
    seg_moves.clear();
  };
  auto record = [&](const MoveRecord& mv, CommuteClass cls,
                    long long remaining) {
    if (!trace) return;
    trace->push_back({seg_key, mv, cls, complexity(d, remaining),
                      canonical_key(d)});
  };

  while (!stopped) {
    std::vector<MoveRecord> plan;
    bool terminal = false;
    if (all_components_grid_one(d)) {
      plan = sorted_trivial_form(d).moves;
      terminal = true;
    } else {
      plan = reduce_grid_number_step(d).moves;
    }

    for (std::size_t i = 0; i < plan.size() && !stopped; ++i) {
      const MoveRecord& mv = plan[i];
      const long long remaining =
          static_cast<long long>(plan.size()) - 1 - static_cast<long long>(i);
      switch (mv.kind) {
        case MoveRecord::Kind::ColumnCommute: {
          const CommuteClass cls = classify_column_commutation(d, mv.index);
          if (cls == CommuteClass::Illegal)
            throw InternalInvariantViolation("planned column commutation is illegal");
          if (cls == CommuteClass::Interleaving) {
            const SkeinCrossing crossing = *skein_crossing_at(d, mv.index);
            const std::string branch_key = canonical_key(d);
            flush_edge(branch_key);
            ensure_node(tree, branch_key, canonical_form(d), "internal");

            GridDiagram res = resolve(d, crossing);
            GridDiagram next = commute_columns(d, mv.index);

            // Termination measure, asserted at every branch event: the
            // resolution child drops scr by at least p at equal grid
            // number; the crossing-change child keeps (gn, scr) and has
            // strictly fewer plan steps remaining.
            const long long scr_parent = scr(d);
            if (scr(res) > scr_parent - d.p())
              throw InternalInvariantViolation(
                  "resolution did not lower scr by p");
            if (scr(next) != scr_parent)
              throw InternalInvariantViolation(
                  "crossing change altered scr");

            const std::string next_key = canonical_key(next);
            const std::string res_key = canonical_key(res);
            tree.branches.push_back(
                {branch_key, mv.index, crossing.sign, next_key, res_key});
            MoveRecord change = mv;
            change.kind = MoveRecord::Kind::CrossingChange;
            tree.edges.push_back({branch_key, next_key, {change}});
            frames.push_back({crossing.sign, std::move(res), branch_key, next_key});

            d = std::move(next);
            record(change, cls, remaining);
            seg_key = next_key;
            ensure_node(tree, seg_key, canonical_form(d), "internal");
            if (auto it = memo_.find(next_key); it != memo_.end()) {
              tree.nodes.at(next_key).role = "cached";
              tree.nodes.at(next_key).value = it->second.value;
              stopped = it->second;
            }
          } else {
            d = commute_columns(d, mv.index);
            seg_moves.push_back(mv);
            record(mv, cls, remaining);
          }
          break;
        }
        case MoveRecord::Kind::RowCommute: {
          const CommuteClass cls = classify_row_commutation(d, mv.index);
          if (cls != CommuteClass::NonInterleaving)
            throw InternalInvariantViolation(
                std::string("reduction row commutation classified ") +
                to_string(cls));
          d = commute_rows(d, mv.index);
          seg_moves.push_back(mv);
          record(mv, cls, remaining);
          break;
        }
        case MoveRecord::Kind::Destabilize: {
          d = destabilize(d, mv.triple);
          seg_moves.push_back(mv);
          record(mv, CommuteClass::NonInterleaving, remaining);
          break;
        }
        default:
          throw InternalInvariantViolation("unexpected move kind in plan");
      }
    }
    if (terminal) break;
  }

  MemoEntry entry;
  if (stopped) {
    entry = *stopped;
  } else {
    const std::string leaf_key = canonical_key(d);
    flush_edge(leaf_key);
    const IndexSet idx = index_set_of(d);
    if (canonical_key(build_trivial_diagram(idx)) != leaf_key)
      throw InternalInvariantViolation(
          "reduction leaf is not the trivial link diagram of its index set");
    LaurentPoly value = trivial_value(idx, options_.normalization);
    ensure_node(tree, leaf_key, canonical_form(d), "leaf");
    auto& node = tree.nodes.at(leaf_key);
    node.index_set = idx;
    node.value = value;
    entry = {std::move(value), 0};
  }

  auto memo_set = [&](const std::string& key, const MemoEntry& e) {
    auto [it, inserted] = memo_.try_emplace(key, e);
    if (!inserted && !(it->second.value == e.value))
      throw InternalInvariantViolation(
          "conflicting values for one canonical diagram");
  };

  const int p = start.p();
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    memo_set(it->cont_key, entry);
    if (auto node = tree.nodes.find(it->cont_key); node != tree.nodes.end())
      node->second.value = entry.value;
    const MemoEntry res_entry = eval_node(it->resolution, tree, trace);
    LaurentPoly combined;
    if (it->sign == CrossSign::Positive) {
      combined = LaurentPoly::monomial(1, 2 * p, 0) * entry.value +
                 LaurentPoly::monomial(1, p, 1) * res_entry.value;
    } else {
      combined = LaurentPoly::monomial(1, -2 * p, 0) * entry.value -
                 LaurentPoly::monomial(1, -p, 1) * res_entry.value;
    }
    entry = {std::move(combined), entry.u_tail + 1};
    memo_set(it->branch_key, entry);
    tree.nodes.at(it->branch_key).value = entry.value;
  }

  memo_set(key0, entry);
  tree.nodes.at(key0).value = entry.value;
  return entry;
}

EvalResult Evaluator::evaluate(const GridDiagram& d) {
  EvalResult out;
  out.tree.root = canonical_key(d);
  auto entry = eval_node(d, out.tree,
                         options_.record_trace ? &out.trace : nullptr);
  out.value = std::move(entry.value);
  out.tree.u_bound = entry.u_tail;
  return out;
}

}  // namespace lenshom
