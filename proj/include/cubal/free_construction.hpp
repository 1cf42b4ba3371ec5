#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubal/boolean.hpp"
#include "cubal/cubic.hpp"

namespace cubal {

// The k-th stage of the construction: the free boolean algebra on the names
// s0..sk, t0..tk, its quotient by the relation ideal, and the generator
// intervals Ii = [si, ti] inside the quotient.
struct FreeInstance {
  unsigned k = 0;
  BoolAlg base;      // the free algebra, 2^(2k+2) atoms
  Quotient quot;     // quotient by ideal_generators(k, base)
  BoolAlg algebra;   // quot.algebra()
  std::vector<Interval> gens;  // I0..Ik

  Element s(unsigned i) const;  // image of si in the quotient
  Element t(unsigned i) const;
};

// names s0..sk then t0..tk, the canonical generator order
std::vector<std::string> free_generator_names(unsigned k);

// The 2k+3 generators of the relation ideal, in order:
//   s0; ui = si∧¬ti (0<=i<=k); ri = t0 ∧ ⋀_{j=1..i}¬sj ∧ ¬t_{i+1} (0<=i<k);
//   qk = t0 ∧ ⋀_{j=0..k}¬sj.
// Empty conjunctions are top.
std::vector<Element> ideal_generators(unsigned k, const BoolAlg& F);

// full construction; atom-level work supported for k <= 7
FreeInstance build(unsigned k);

// sigma/tau recurrence inside any algebra carrying generators s0..sk,t0..tk:
// sigma0 = s0, tau0 = t0, sigma_{i+1} = sigma_i ∨ (tau_i ∧ ¬t_{i+1}),
// tau_{i+1} = sigma_i ∨ (tau_i ∧ ¬s_{i+1}). Returns pairs (sigma_i, tau_i).
std::vector<std::pair<Element, Element>> sigma_tau(const BoolAlg& B, unsigned k);
std::vector<std::pair<Element, Element>> sigma_tau(const FreeInstance& inst);

// delta_0 = I0, delta_{i+1} = caret(delta_i, I_{i+1}); equals [sigma_i, tau_i]
std::vector<Interval> delta_sequence(const FreeInstance& inst);

// t <= s_l ∨ ... ∨ s_i ∨ t_{i+1} ∨ alpha (empty join when l > i)
bool relation_R(unsigned l, unsigned k, unsigned i, const Element& t, const Element& alpha);
// t <= s_l ∨ ... ∨ s_k ∨ alpha
bool relation_Q(unsigned l, unsigned k, const Element& t, const Element& alpha);

// Checks, over quotients of the free algebra by subsets of the candidate
// relations, that sigma_k = tau_k = 0 holds exactly when s0 = 0, all the
// R relations and the Q relation hold. Exhaustive over all subsets for
// k <= 3, sampled (fixed seed) for k = 4, 5.
struct RelationsReport {
  unsigned k = 0;
  uint64_t subsets_checked = 0;
  bool exhaustive = false;
  bool pass = false;
  std::optional<std::vector<unsigned>> witness;  // indices into ideal_generators

  nlohmann::json to_json() const;
};
RelationsReport relations_equivalence_check(unsigned k, uint64_t max_subsets = 2048,
                                            uint64_t seed = 0x51a7e5);

// L(X) = union of the localizations at the Ii, as a canonically sorted
// vector. Full enumeration of the 3^n interval space; k <= 2.
std::vector<Interval> build_LX(const FreeInstance& inst);

// the element t0 ∧ ⋀_{i=1..k-1} ¬si of the quotient; an atom for k >= 1
Element new_atom(const FreeInstance& inst);

// How each atom of cur arises from prev (the chain embedding step):
// every prev atom contributes three children (∧ s_k, ∧ ¬s_k∧t_k, ∧ ¬t_k)
// and exactly one fresh atom appears.
enum class ChildKind : uint8_t { fresh, with_s, with_mid, with_not_t };
struct ChainStep {
  std::vector<uint32_t> parent;  // per cur atom: prev atom index, or UINT32_MAX
  std::vector<ChildKind> kind;   // per cur atom
  bool consistent = false;
  std::string detail;            // first inconsistency, when any
};
ChainStep chain_step(const FreeInstance& prev, const FreeInstance& cur);

// the splitting law: |atoms(cur)| = 3|atoms(prev)| + 1, every prev atom has
// exactly one child of each surviving kind, the dead sign combination never
// survives, and the unique fresh atom is new_atom(cur)
struct SplitReport {
  bool pass = false;
  std::string detail;
  uint32_t prev_atoms = 0, cur_atoms = 0, fresh_atoms = 0;
};
SplitReport check_atom_split(const FreeInstance& prev, const FreeInstance& cur);

nlohmann::json instance_json(const FreeInstance& inst,
                             std::optional<uint64_t> lx_size = std::nullopt);

}  // namespace cubal
