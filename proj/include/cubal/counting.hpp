#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "cubal/cubic.hpp"
#include "cubal/free_construction.hpp"

namespace cubal {

// exact arbitrary-precision count; no floating point anywhere in this module
using BigCount = mpz_class;

// number of atoms of the k-th quotient algebra: (3^(k+1) - 1) / 2
BigCount alpha_total(unsigned k);

// atoms below a meet of n terms (¬s_j ∧ t_j) with distinct indices j >= 1:
// (3^(k+1-n) - 1) / 2; requires 0 <= n <= k+1
BigCount alpha_distinct_meet(unsigned k, unsigned n);

// atoms of the quotient lattice [x, 1] in I(B):
// atom_count(B) - atoms_below(¬x.lo ∧ x.hi)
BigCount atoms_in_upper_interval(const BoolAlg& B, const Interval& x);

// |L_x| = 3^atoms_in_upper_interval(B, x)
BigCount localization_size(const BoolAlg& B, const Interval& x);

// eta sequence for a non-empty J ⊆ {0..k} (increasing enumeration j0<j1<...):
// eta_0 = I_{j0}; eta_{p+1} = eta_p ∨ delta(eta_p ∨ I_{j_{p+1}}, I_{j_{p+1}})
std::vector<Interval> eta(const FreeInstance& inst, const std::vector<unsigned>& J);
// closed form of eta_i:
// [ s_{j0} ∧ ⋀_{p=1..i}(s_{jp} ∨ ¬t_{jp}), t_{j0} ∨ ⋁_{p=1..i}(¬s_{jp} ∧ t_{jp}) ]
Interval eta_closed_form(const FreeInstance& inst, const std::vector<unsigned>& J, unsigned i);

// 3^(k-l) * 2^l; requires l <= k (non-integral otherwise, rejected)
BigCount phi(unsigned k, unsigned l);

// size of the free algebra on m >= 1 generators, with k = m-1:
// sum_{i=1..k+1} C(k+1,i) (-1)^(i+1) 3^phi(k, i-1)
BigCount free_algebra_size(unsigned m);

// 3^(2^(2m)), the interval-algebra embedding bound
BigCount embedding_upper_bound(unsigned m);

// rows m = 1..N of (m, atoms, free size, upper bound)
std::string size_table_text(unsigned N);
nlohmann::json size_table_json(unsigned N);

}  // namespace cubal
