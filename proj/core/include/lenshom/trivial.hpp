#ifndef LENSHOM_TRIVIAL_HPP
#define LENSHOM_TRIVIAL_HPP

#include "lenshom/diagram.hpp"
#include "lenshom/laurent.hpp"
#include "lenshom/moves.hpp"

#include <map>
#include <vector>

namespace lenshom {

// Multiplicities (m_0, ..., m_{p-1}) of grid-number-1 components per
// homology class; identifies a trivial link.
struct IndexSet {
  int p = 1;
  int q = 0;
  std::vector<int> m;

  int total() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// The unique solution of sigma(i)*q = i mod p.
int sigma(int p, int q, int i);

// The trivial link diagram D(I): O markings on the descending diagonal of
// the first theta_1 block, X markings placed by homology class blocks in
// sigma order. Throws MoveError(EmptyIndexSet) when all m_i vanish.
GridDiagram build_trivial_diagram(const IndexSet& idx);

// Multiplicity vector of a diagram whose components all have grid number
// one; throws MoveError(NotAllGridNumberOne) otherwise.
IndexSet index_set_of(const GridDiagram& d);

// Invariants of the canonical grid projection P(I): every vertical arc
// runs upward crossing alpha_0 exactly mu times, every horizontal arc runs
// rightward crossing beta_0 exactly lambda times, and all crossings are
// positive. p*s = p*writhe - mu*lambda - (mu - lambda) is an integer.
struct ProjectionStats {
  long long writhe = 0;
  long long mu_total = 0;
  long long lambda_total = 0;
  long long p_times_s = 0;
};

ProjectionStats projection_stats(const IndexSet& idx);

// Optional user-chosen values for trivial links without nullhomotopic
// components; entries with m_0 > 0 are rejected.
class NormalizationTable {
 public:
  void set(std::vector<int> m, LaurentPoly value);
  const LaurentPoly* find(const std::vector<int>& m) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::vector<int>, LaurentPoly> entries_;
};

// J of the trivial link: a^{p s + 1} on the nullhomotopic-free part, one
// unknot factor (a^-p - a^p)/z per m_0 component, and a^{-p+1} in place of
// the last factor when the link is entirely nullhomotopic.
LaurentPoly trivial_value(const IndexSet& idx,
                          const NormalizationTable* overrides = nullptr);

// Move plan normalizing a diagram with all-grid-number-1 components to its
// trivial link diagram: column commutations packing the O markings into
// one consecutive strip run and sorting them by (mu*q mod p, row
// descending), then row commutations placing the O markings on the
// descending diagonal. Interleaving column swaps in the plan are the skein
// branch sites; row swaps are always non-interleaving.
struct SortPlan {
  std::vector<MoveRecord> moves;
  std::vector<int> order;  // order[k]: source column of the rank-k component
  GridDiagram sorted;      // plan applied, crossing changes performed
};

SortPlan sorted_trivial_form(const GridDiagram& d);

}  // namespace lenshom

#endif
