#ifndef LENSHOM_ENGINE_HPP
#define LENSHOM_ENGINE_HPP

#include "lenshom/diagram.hpp"
#include "lenshom/laurent.hpp"
#include "lenshom/metrics.hpp"
#include "lenshom/moves.hpp"
#include "lenshom/trivial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lenshom {

enum class Axis { Row, Column };

// Minimum arc length between two aligned marking cells: the cyclic strip
// distance for a row pair, the cyclic column-annulus distance for a column
// pair; 0 for coincident cells. Throws MoveError(NotAligned) if the cells
// do not share the requested axis.
long long len_between(const GridDiagram& d, const Cell& a, const Cell& b,
                      Axis axis);

// One grid-number reduction step: commutations moving the chosen triple
// together, then a destabilization. Interleaving column commutations in
// the plan are skein branch sites. Pre: some component has grid number > 1.
struct StepPlan {
  std::vector<MoveRecord> moves;
  GridDiagram result;  // plan applied, crossing changes performed
};

StepPlan reduce_grid_number_step(const GridDiagram& d);

bool all_components_grid_one(const GridDiagram& d);

// Evaluation trace entry: one executed move on the principal path of a
// node's reduction, with its classification and the complexity after it.
struct TraceStep {
  std::string node_key;  // canonical key of the segment being reduced
  MoveRecord move;
  CommuteClass cls = CommuteClass::NonInterleaving;
  Complexity after;
  std::string key_after;
};

struct SkeinTreeNode {
  std::string key;
  GridDiagram diagram;
  // internal: carries a branch; leaf: trivial link diagram; cached: value
  // reused from the evaluator's memo without re-expansion.
  std::string role;
  std::optional<IndexSet> index_set;
  std::optional<LaurentPoly> value;
};

struct SkeinTreeEdge {
  std::string from, to;
  std::vector<MoveRecord> moves;
};

struct SkeinBranch {
  std::string at;
  int column = 0;
  CrossSign sign = CrossSign::Positive;
  std::string child_after_change;
  std::string child_resolution;
};

// Evaluation trace: nodes keyed by canonical diagram, free-move edges,
// branch records, and leaf normalizations. Shared subtrees appear once.
struct SkeinTree {
  std::string root;
  std::map<std::string, SkeinTreeNode> nodes;
  std::vector<SkeinTreeEdge> edges;
  std::vector<SkeinBranch> branches;
  long long u_bound = 0;  // branch events on the principal path
};

struct EvalOptions {
  const NormalizationTable* normalization = nullptr;
  bool record_trace = false;
};

struct EvalResult {
  LaurentPoly value;
  SkeinTree tree;
  std::vector<TraceStep> trace;
};

// Recursive skein evaluator with memoization by canonical key. The memo
// persists across evaluate() calls, so one evaluator may serve many
// diagrams of the same family. Single-threaded and deterministic.
class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});

  EvalResult evaluate(const GridDiagram& d);

 private:
  struct MemoEntry {
    LaurentPoly value;
    long long u_tail = 0;
  };
  struct WalkState;

  MemoEntry eval_node(const GridDiagram& start, SkeinTree& tree,
                      std::vector<TraceStep>* trace);

  EvalOptions options_;
  std::map<std::string, MemoEntry> memo_;
};

}  // namespace lenshom

#endif
