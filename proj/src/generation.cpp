#include "cubal/generation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubal/kernels.hpp"
#include "cubal/keys.hpp"

namespace cubal {

ClosureResult cubic_closure(const std::vector<Interval>& seed, size_t limit) {
  if (seed.empty()) throw std::invalid_argument("cubic_closure: empty seed");
  const BoolAlg B = seed[0].parent();
  for (const auto& v : seed)
    if (!v.parent().same_as(B))
      throw std::invalid_argument("cubic_closure: seed elements from different algebras");
  const unsigned n = keys::check_width(B);
  if (n > 14) throw std::invalid_argument("cubic_closure: algebra too large");

  std::vector<uint64_t> seen((size_t(1) << (2 * n)) / 64 + 1, 0);
  std::vector<uint32_t> elems;
  auto insert = [&](uint32_t key) {
    uint64_t& w = seen[key >> 6];
    const uint64_t bit = uint64_t{1} << (key & 63);
    if (w & bit) return;
    w |= bit;
    elems.push_back(key);
  };

  insert(keys::pack(0, (1u << n) - 1, n));  // the top interval
  std::vector<uint32_t> seed_keys;
  for (const auto& v : seed) seed_keys.push_back(keys::from_interval(v));
  std::sort(seed_keys.begin(), seed_keys.end());
  for (uint32_t k : seed_keys) insert(k);

  const auto& kb = kern::active_backend();
  ClosureResult res;
  std::vector<uint32_t> join_out, delta_out;
  for (size_t p = 0; p < elems.size(); ++p) {
    if (limit && elems.size() > limit) {
      res.complete = false;
      break;
    }
    const uint32_t x = elems[p];
    const size_t cnt = p + 1;
    join_out.resize(cnt);
    delta_out.resize(cnt);
    kb.join_many(x, elems.data(), join_out.data(), cnt, n);
    kb.delta_comparable_many(x, elems.data(), delta_out.data(), cnt, n);
    for (size_t i = 0; i < cnt; ++i) {
      insert(join_out[i]);
      if (delta_out[i] != kern::kNoKey) insert(delta_out[i]);
    }
  }

  std::sort(elems.begin(), elems.end());
  res.elements.reserve(elems.size());
  for (uint32_t key : elems) res.elements.push_back(keys::to_interval(key, n, B));
  return res;
}

SignedSet r_map(const FreeInstance& inst, const Element& atom) {
  if (!inst.algebra.owns(atom))
    throw std::invalid_argument("r_map: element not in the quotient algebra");
  if (!is_atom(atom)) throw std::invalid_argument("r_map: element is not an atom");
  uint32_t pos = 0, neg = 0;
  for (unsigned j = 0; j <= inst.k; ++j) {
    if (leq(atom, inst.s(j))) pos |= 1u << j;
    if (leq(atom, complement(inst.t(j)))) neg |= 1u << j;
  }
  return SignedSet(inst.k + 1, pos, neg);
}

std::vector<SignedSet> r_map_inductive_all(const FreeInstance& inst) {
  // masks per atom, propagated along the chain of instances
  std::vector<std::pair<uint32_t, uint32_t>> cur{{0, 1}};  // the single atom of stage 0
  FreeInstance prev = build(0);
  for (unsigned j = 1; j <= inst.k; ++j) {
    FreeInstance next = build(j);
    ChainStep st = chain_step(prev, next);
    if (!st.consistent)
      throw std::logic_error("r_map_inductive_all: chain step inconsistent: " + st.detail);
    std::vector<std::pair<uint32_t, uint32_t>> propagated(st.parent.size());
    for (size_t i = 0; i < st.parent.size(); ++i) {
      if (st.parent[i] == UINT32_MAX) {
        propagated[i] = {1u << j, 0};
        continue;
      }
      auto [pos, neg] = cur[st.parent[i]];
      switch (st.kind[i]) {
        case ChildKind::with_s: pos |= 1u << j; break;
        case ChildKind::with_not_t: neg |= 1u << j; break;
        default: break;  // middle child keeps the parent's value
      }
      propagated[i] = {pos, neg};
    }
    cur = std::move(propagated);
    prev = std::move(next);
  }
  std::vector<SignedSet> out;
  out.reserve(cur.size());
  for (auto [pos, neg] : cur) out.emplace_back(inst.k + 1, pos, neg);
  return out;
}

Interval j_interval(const FreeInstance& inst, const SignedSet& s) {
  if (s.ground_size() != inst.k + 1)
    throw std::invalid_argument("j_interval: signed set over the wrong ground set");
  std::vector<Interval> terms;
  const Interval top = interval_top(inst.algebra);
  for (unsigned j = 0; j <= inst.k; ++j) {
    if ((s.pos() >> j) & 1u) terms.push_back(inst.gens[j]);
    if ((s.neg() >> j) & 1u) terms.push_back(interval_delta(top, inst.gens[j]));
  }
  if (terms.empty()) return top;
  Interval acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) acc = interval_join(acc, terms[i]);
  return acc;
}

AssociationKind associated(const FreeInstance& inst, const Element& atom, const Interval& x) {
  if (!inst.algebra.owns(atom))
    throw std::invalid_argument("associated: element not in the quotient algebra");
  if (!is_atom(atom)) throw std::invalid_argument("associated: element is not an atom");
  const bool l = leq(atom, x.lo());
  const bool r = leq(atom, complement(x.hi()));
  if (l && r)
    throw std::logic_error("associated: atom below both lo and ¬hi (lo ≤ hi violated)");
  if (l) return AssociationKind::left;
  if (r) return AssociationKind::right;
  return AssociationKind::none;
}

Element atom_for_signed_set(const FreeInstance& inst, const SignedSet& s) {
  if (s.ground_size() != inst.k + 1)
    throw std::invalid_argument("atom_for_signed_set: signed set over the wrong ground set");
  uint32_t A0 = s.pos(), A1 = s.neg();
  if ((A0 | A1) == 0)
    throw std::invalid_argument("atom_for_signed_set: the top signed set has no atom");
  // Normalize to the representative that the atom labelling produces: no
  // atom sits below s_0 = 0, so 0 can only appear negatively, and when the
  // minimum index is positive it must appear positively (the complementary
  // choice meets the prefix t_0 ∧ ¬s_1..¬s_{j1-1} with ¬t_{j1}, which the
  // chain relations kill).
  const unsigned j1 = unsigned(std::countr_zero(A0 | A1));
  if (j1 == 0) {
    if (A0 & 1u) std::swap(A0, A1);  // ensure 0 ∈ A1
  } else {
    if (!((A0 >> j1) & 1u)) std::swap(A0, A1);  // ensure j1 ∈ A0
  }
  // The full sign pattern: every atom equals the meet of s_j over its
  // positive positions, ¬t_j over its negative ones, and t_j ∧ ¬s_j
  // elsewhere. Dropping the term at j1 would be too coarse: at k = 2 the
  // pattern <{1,2}, {}> without s_1 gives t0 ∧ s2, which still contains
  // both t0 ∧ s1 and the fresh atom t0 ∧ ¬s1.
  Element a = inst.algebra.top();
  for (unsigned j = 0; j <= inst.k; ++j) {
    if ((A0 >> j) & 1u) a = meet(a, inst.s(j));
    else if ((A1 >> j) & 1u) a = difference(a, inst.t(j));
    else a = meet(a, difference(inst.t(j), inst.s(j)));
  }
  if (!is_atom(a))
    throw std::logic_error("atom_for_signed_set: construction did not yield an atom");
  return a;
}

nlohmann::json GenerationReport::to_json() const {
  nlohmann::json w;
  if (witness) w = witness->to_json();
  return nlohmann::json{{"k", k},
                        {"closure_size", closure_size},
                        {"lx_size", lx_size},
                        {"equal", equal},
                        {"witness", w}};
}

GenerationReport verify_generation(const FreeInstance& inst, size_t limit) {
  std::vector<Interval> lx = build_LX(inst);
  ClosureResult cl = cubic_closure(inst.gens, limit);
  if (!cl.complete) throw std::runtime_error("verify_generation: closure limit exceeded");
  GenerationReport rep;
  rep.k = inst.k;
  rep.closure_size = cl.elements.size();
  rep.lx_size = lx.size();
  rep.equal = cl.elements == lx;
  if (!rep.equal) {
    // first element of the symmetric difference (both lists are sorted)
    size_t i = 0, j = 0;
    while (i < cl.elements.size() && j < lx.size()) {
      if (cl.elements[i] == lx[j]) { ++i; ++j; continue; }
      rep.witness = (cl.elements[i] < lx[j]) ? cl.elements[i] : lx[j];
      break;
    }
    if (!rep.witness) {
      rep.witness = (i < cl.elements.size()) ? cl.elements[i] : lx[j];
    }
  }
  return rep;
}

}  // namespace cubal
