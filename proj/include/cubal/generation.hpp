#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cubal/cubic.hpp"
#include "cubal/free_construction.hpp"

namespace cubal {

// How an atom sits relative to an interval [x, y]: left when atom <= x,
// right when atom <= ¬y. Both at once is impossible (x <= y), which the
// implementation asserts.
enum class AssociationKind { none, left, right, both };

struct ClosureResult {
  std::vector<Interval> elements;  // canonically sorted
  bool complete = true;            // false when the limit cut the run short
};

// Least family containing seed ∪ {top}, closed under pairwise join and
// delta of comparable pairs. Worklist over packed keys; limit = 0 means
// unlimited.
ClosureResult cubic_closure(const std::vector<Interval>& seed, size_t limit = 0);

// signed set ⟨{j : atom <= s_j}, {j : atom <= ¬t_j}⟩ over {0..k}
SignedSet r_map(const FreeInstance& inst, const Element& atom);

// the same map computed by the inductive rules along the chain of
// instances 0..k; entry i corresponds to atom i
std::vector<SignedSet> r_map_inductive_all(const FreeInstance& inst);

// J(A0, A1) = ⋁_{j∈A0} I_j ∨ ⋁_{l∈A1} delta(1, I_l); J(∅,∅) = top
Interval j_interval(const FreeInstance& inst, const SignedSet& s);

AssociationKind associated(const FreeInstance& inst, const Element& atom, const Interval& x);

// For non-top s, builds the atom whose r_map is s or swap(s): normalize on
// j1 = min(A0 ∪ A1) (0 only ever appears negatively; a positive minimum
// appears positively), then meet the full sign pattern over all positions.
Element atom_for_signed_set(const FreeInstance& inst, const SignedSet& s);

struct GenerationReport {
  unsigned k = 0;
  uint64_t closure_size = 0;
  uint64_t lx_size = 0;
  bool equal = false;
  std::optional<Interval> witness;  // an element of the symmetric difference

  nlohmann::json to_json() const;
};

// closure of {I_0..I_k} compared, as a set, against build_LX
GenerationReport verify_generation(const FreeInstance& inst, size_t limit = 0);

}  // namespace cubal
