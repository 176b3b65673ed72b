#include "lenshom/engine.hpp"
#include "lenshom/errors.hpp"
#include "lenshom/json_io.hpp"

#include <doctest.h>

#include "support/fixtures.hpp"

#include <random>

using namespace lenshom;

namespace {

LaurentPoly evaluate_fresh(const GridDiagram& d) {
  Evaluator evaluator;
  return evaluator.evaluate(d).value;
}

}  // namespace

TEST_CASE("arc lengths") {
  GridDiagram k3 = fixtures::k3_l72();
  CHECK(len_between(k3, {0, 0}, {1, 0}, Axis::Row) == 1);
  CHECK(len_between(k3, {0, 0}, {1, 0}, Axis::Column) == 3);
  CHECK(len_between(k3, {0, 0}, {0, 0}, Axis::Column) == 0);
  CHECK_THROWS_AS(
      len_between(fixtures::knot_b(), {0, 0}, {8, 1}, Axis::Row), MoveError);
}

TEST_CASE("reduce step drops the grid number") {
  std::mt19937_64 rng(401);
  for (int i = 0; i < 60; ++i) {
    GridDiagram d = fixtures::random_diagram(rng, 5, 5);
    int guard = 0;
    while (!all_components_grid_one(d)) {
      StepPlan step = reduce_grid_number_step(d);
      CHECK(step.result.n() == d.n() - 1);
      // Replaying the recorded moves reproduces the step's diagram.
      GridDiagram replay = d;
      for (const MoveRecord& mv : step.moves) replay = apply_move(replay, mv);
      CHECK(replay == step.result);
      d = step.result;
      REQUIRE(++guard < 16);
    }
  }
}

TEST_CASE("reduce step rejects all-trivial diagrams") {
  CHECK_THROWS_AS(reduce_grid_number_step(fixtures::knot_b0()), MoveError);
}

TEST_CASE("reduce step blocked into case 2a") {
  // Column movement is stopped immediately by the O2/X3 segment; the
  // shorter vertical arc is at X2's column, so (X2, O2, X3) destabilizes.
  GridDiagram d(1, 0, 5, {{0, 2}, {1, 1}, {2, 4}, {3, 0}, {4, 3}},
                {{0, 0}, {1, 4}, {2, 2}, {3, 3}, {4, 1}});
  StepPlan step = reduce_grid_number_step(d);
  REQUIRE(step.moves.size() == 2);
  CHECK(step.moves[0].kind == MoveRecord::Kind::RowCommute);
  CHECK(step.moves[0].index == 3);
  CHECK(step.moves[1].kind == MoveRecord::Kind::Destabilize);
  CHECK(step.result.n() == 4);
}

TEST_CASE("reduce step blocked into case 2b") {
  // Same block, but the third column's vertical arc is strictly shorter,
  // so the step destabilizes (O2, X3, O3) instead.
  GridDiagram d(1, 0, 6, {{0, 2}, {1, 3}, {2, 5}, {3, 0}, {4, 1}, {5, 4}},
                {{0, 0}, {1, 5}, {2, 2}, {3, 3}, {4, 4}, {5, 1}});
  StepPlan step = reduce_grid_number_step(d);
  REQUIRE(step.moves.size() == 2);
  CHECK(step.moves[0].kind == MoveRecord::Kind::RowCommute);
  CHECK(step.moves[0].index == 4);
  CHECK(step.moves[1].kind == MoveRecord::Kind::Destabilize);
  CHECK(step.moves[1].triple.b == Cell{1, 4});
  CHECK(step.result.n() == 5);
}

TEST_CASE("evaluating the paper example B") {
  Evaluator evaluator;
  EvalResult result = evaluator.evaluate(fixtures::knot_b());
  CHECK(result.value == LaurentPoly::parse("a^6 + a^6*z"));
  CHECK(result.tree.u_bound == 1);
  CHECK(result.tree.branches.size() == 1);
  CHECK(result.tree.branches[0].sign == CrossSign::Positive);
  // Both branches reach grid number one diagrams: the unknot and B_0.
  int leaves = 0;
  for (const auto& [key, node] : result.tree.nodes)
    if (node.role == "leaf") ++leaves;
  CHECK(leaves == 2);
}

TEST_CASE("evaluating the paper example L") {
  CHECK(evaluate_fresh(fixtures::link_l()) ==
        LaurentPoly::parse("a^-8 - a^-8*z"));
}

TEST_CASE("trivial diagrams evaluate without branching") {
  Evaluator evaluator;
  EvalResult b0 = evaluator.evaluate(fixtures::knot_b0());
  CHECK(b0.value == LaurentPoly::parse("a"));
  CHECK(b0.tree.u_bound == 0);
  CHECK(b0.tree.branches.empty());

  EvalResult l0 = evaluator.evaluate(fixtures::family_ln(0));
  CHECK(l0.value == LaurentPoly::parse("a^-3"));
  CHECK(l0.tree.u_bound == 0);
}

TEST_CASE("unknot anchors in several lens spaces") {
  for (auto [p, q] : fixtures::lens_spaces())
    CHECK(evaluate_fresh(fixtures::k0(p, q)) ==
          LaurentPoly::monomial(1, -p + 1, 0));
}

TEST_CASE("right trefoil in S^3") {
  CHECK(evaluate_fresh(fixtures::rh_trefoil()) ==
        LaurentPoly::parse("2a^2 - a^4 + a^2*z^2"));
}

TEST_CASE("the L_n family satisfies its recursion") {
  Evaluator evaluator;  // shared memo across the family
  LaurentPoly f_prev2 = LaurentPoly::parse("1");
  LaurentPoly f_prev1 = LaurentPoly::parse("1 - z");
  for (int n = 0; n <= 6; ++n) {
    LaurentPoly f_n;
    if (n == 0) f_n = f_prev2;
    else if (n == 1) f_n = f_prev1;
    else {
      f_n = f_prev2 - LaurentPoly::monomial(1, 0, 1) * f_prev1;
      f_prev2 = f_prev1;
      f_prev1 = f_n;
    }
    LaurentPoly expected = LaurentPoly::monomial(1, -5 * n - 3, 0) * f_n;
    CHECK(evaluator.evaluate(fixtures::family_ln(n)).value == expected);
  }
}

TEST_CASE("skein relation holds at every detected crossing") {
  std::mt19937_64 rng(402);
  Evaluator evaluator;
  int seen = 0;
  for (int i = 0; i < 150 && seen < 25; ++i) {
    GridDiagram d = fixtures::random_diagram(rng, 5, 3);
    for (const auto& crossing : find_skein_crossings(d)) {
      ++seen;
      GridDiagram other = crossing_change(d, crossing);
      GridDiagram zero = resolve(d, crossing);
      const GridDiagram& plus = crossing.sign == CrossSign::Positive ? d : other;
      const GridDiagram& minus = crossing.sign == CrossSign::Positive ? other : d;
      const int p = d.p();
      LaurentPoly lhs =
          LaurentPoly::monomial(1, -p, 0) * evaluator.evaluate(plus).value -
          LaurentPoly::monomial(1, p, 0) * evaluator.evaluate(minus).value;
      LaurentPoly rhs =
          LaurentPoly::monomial(1, 0, 1) * evaluator.evaluate(zero).value;
      CHECK(lhs == rhs);
    }
  }
  CHECK(seen >= 25);
}

TEST_CASE("evaluation is invariant under isotopy moves") {
  std::mt19937_64 rng(403);
  Evaluator evaluator;
  for (int i = 0; i < 25; ++i) {
    GridDiagram d = fixtures::random_diagram(rng, 5, 3);
    LaurentPoly reference = evaluator.evaluate(d).value;
    GridDiagram moved = d;
    for (int step = 0; step < 12; ++step) {
      switch (rng() % 4) {
        case 0: {
          if (moved.n() < 2) break;
          int j = static_cast<int>(rng() % moved.n());
          if (classify_column_commutation(moved, j) ==
              CommuteClass::NonInterleaving)
            moved = commute_columns(moved, j);
          break;
        }
        case 1: {
          if (moved.n() < 2) break;
          int r = static_cast<int>(rng() % moved.n());
          if (classify_row_commutation(moved, r) ==
              CommuteClass::NonInterleaving)
            moved = commute_rows(moved, r);
          break;
        }
        case 2:
          moved = translate(moved, static_cast<int>(rng() % moved.strips()),
                            static_cast<int>(rng() % moved.n()));
          break;
        default: {
          if (moved.n() >= 6) break;
          const bool pick_o = rng() % 2 == 0;
          const auto& marks = pick_o ? moved.o_marks() : moved.x_marks();
          Cell at = marks[rng() % marks.size()];
          const StabCorner corners[] = {StabCorner::NW, StabCorner::NE,
                                        StabCorner::SW, StabCorner::SE};
          moved = stabilize(moved, pick_o ? MarkType::O : MarkType::X, at,
                            corners[rng() % 4]);
          break;
        }
      }
    }
    CHECK(evaluator.evaluate(moved).value == reference);
  }
}

TEST_CASE("all tree nodes share the total homology class") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 15; ++i) {
    GridDiagram d = fixtures::random_diagram(rng, 5, 3);
    Evaluator evaluator;
    EvalResult result = evaluator.evaluate(d);
    const int expected = total_mu(d);
    for (const auto& [key, node] : result.tree.nodes)
      CHECK(total_mu(node.diagram) == expected);
  }
}

TEST_CASE("evaluation is deterministic") {
  GridDiagram d = fixtures::family_ln(2);
  Evaluator a, b;
  EvalResult ra = a.evaluate(d);
  EvalResult rb = b.evaluate(d);
  CHECK(ra.value == rb.value);
  CHECK(skein_tree_to_json(ra.tree) == skein_tree_to_json(rb.tree));
}

TEST_CASE("trees replay to the reported value") {
  // Replay: leaves and cached nodes carry values; every branch combines its
  // children by the skein relation; edges preserve the value.
  std::mt19937_64 rng(405);
  for (int i = 0; i < 10; ++i) {
    GridDiagram d = fixtures::random_diagram(rng, 5, 3);
    Evaluator evaluator;
    EvalResult result = evaluator.evaluate(d);
    const int p = d.p();
    for (const auto& branch : result.tree.branches) {
      const auto& at = result.tree.nodes.at(branch.at);
      const auto& change = result.tree.nodes.at(branch.child_after_change);
      const auto& res = result.tree.nodes.at(branch.child_resolution);
      REQUIRE(at.value.has_value());
      REQUIRE(change.value.has_value());
      REQUIRE(res.value.has_value());
      LaurentPoly expected;
      if (branch.sign == CrossSign::Positive)
        expected = LaurentPoly::monomial(1, 2 * p, 0) * *change.value +
                   LaurentPoly::monomial(1, p, 1) * *res.value;
      else
        expected = LaurentPoly::monomial(1, -2 * p, 0) * *change.value -
                   LaurentPoly::monomial(1, -p, 1) * *res.value;
      CHECK(*at.value == expected);
    }
    CHECK(*result.tree.nodes.at(result.tree.root).value == result.value);
    for (const auto& edge : result.tree.edges) {
      // Free-move edges join isotopic diagrams, so values agree; crossing
      // change edges are the branch children handled above.
      bool is_change = edge.moves.size() == 1 &&
                       edge.moves[0].kind == MoveRecord::Kind::CrossingChange;
      if (is_change) continue;
      const auto& from = result.tree.nodes.at(edge.from);
      const auto& to = result.tree.nodes.at(edge.to);
      if (from.value && to.value) CHECK(*from.value == *to.value);
    }
  }
}

TEST_CASE("trace records only legal reduction moves") {
  EvalOptions options;
  options.record_trace = true;
  Evaluator evaluator(options);
  EvalResult result = evaluator.evaluate(fixtures::family_ln(1));
  CHECK(!result.trace.empty());
  for (const auto& step : result.trace) {
    CHECK(step.cls != CommuteClass::Illegal);
    if (step.move.kind == MoveRecord::Kind::RowCommute)
      CHECK(step.cls == CommuteClass::NonInterleaving);
  }
}
