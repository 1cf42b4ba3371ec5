#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cubal/boolean.hpp"

namespace cubal {

// Closed interval [lo, hi] of a boolean algebra, lo <= hi. These are the
// elements of the interval algebra I(B). The order is reverse inclusion of
// the underlying element ranges: [a,b] <= [c,d] iff c <= a and b <= d, so
// the whole algebra [0,1] is the top element.
class Interval {
public:
  Interval(Element lo, Element hi);

  const Element& lo() const { return lo_; }
  const Element& hi() const { return hi_; }
  BoolAlg parent() const { return lo_.parent(); }

  bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
  // canonical order used for deterministic listings: by (lo, hi)
  bool operator<(const Interval& o) const {
    if (lo_ != o.lo_) return lo_ < o.lo_;
    return hi_ < o.hi_;
  }

  nlohmann::json to_json() const;  // {"lo": [...], "hi": [...]}

private:
  Element lo_, hi_;
};

Interval interval_top(const BoolAlg& B);                       // [0, 1]
bool interval_leq(const Interval& a, const Interval& b);
bool interval_lt(const Interval& a, const Interval& b);
Interval interval_join(const Interval& a, const Interval& b);  // [lo∧lo', hi∨hi']
// meet in the containment order when it exists: [lo∨lo', hi∧hi'] if valid
std::optional<Interval> interval_meet(const Interval& a, const Interval& b);
// Δ(y, x) for x <= y: the complement of x inside the face y; partial, throws
// when x is not below y
Interval interval_delta(const Interval& y, const Interval& x);
// x -> y  =  Δ(1, Δ(x∨y, y)) ∨ y
Interval implication(const Interval& x, const Interval& y);
// a ^ w = a ∧ Δ(a∨w, w), the part of a "facing" w; total
Interval caret(const Interval& a, const Interval& w);

// a ≼ w, three equivalent forms (the equivalence is property-tested):
//   (1) w ∈ L_a, i.e. w = Δ(y,x) for some a <= x <= y
//   (2) a <= Δ(a∨w, w)
//   (3) w = (a∨w) ∧ (Δ(1,a) ∨ w) where the meet is taken in I(B)
bool preceq(const Interval& a, const Interval& w);             // form (2)
bool preceq_by_ideal(const Interval& a, const Interval& w);    // form (1), enumerates x,y
bool preceq_by_meet(const Interval& a, const Interval& w);     // form (3)

// all elements of I(B), canonically sorted; |I(B)| = 3^n. Guarded to n <= 10.
std::vector<Interval> all_intervals(const BoolAlg& B);

// L_a = { w in I(B) : a ≼ w }, canonically sorted. Guarded like all_intervals.
std::vector<Interval> localization(const BoolAlg& B, const Interval& a);
// same set computed from form (1): { Δ(y,x) : a <= x <= y }
std::vector<Interval> localization_by_delta(const BoolAlg& B, const Interval& a);

// Signed subsets of {0..m-1}: a pair of disjoint subsets (pos, neg) stored as
// bit masks. Order: <A,B> <= <C,D> iff C ⊆ A and D ⊆ B; the empty signed set
// is the top. Isomorphic to I(power_set(m)) via <A,B> -> [A, complement(B)].
class SignedSet {
public:
  SignedSet(unsigned m, uint32_t pos, uint32_t neg);

  static SignedSet top(unsigned m) { return SignedSet(m, 0, 0); }

  unsigned ground_size() const { return m_; }
  uint32_t pos() const { return pos_; }
  uint32_t neg() const { return neg_; }

  bool operator==(const SignedSet& o) const {
    return m_ == o.m_ && pos_ == o.pos_ && neg_ == o.neg_;
  }
  bool operator!=(const SignedSet& o) const { return !(*this == o); }

  nlohmann::json to_json() const;  // {"pos": [...], "neg": [...]}

private:
  unsigned m_ = 0;
  uint32_t pos_ = 0, neg_ = 0;
};

bool signed_leq(const SignedSet& a, const SignedSet& b);
SignedSet signed_join(const SignedSet& a, const SignedSet& b);
// Δ(y, x) for x <= y in the signed-set order; partial
SignedSet signed_delta(const SignedSet& y, const SignedSet& x);
// Δ(1, s): swap the two halves
SignedSet signed_swap(const SignedSet& s);
std::vector<SignedSet> all_signed_sets(unsigned m);  // 3^m of them, m <= 15

// the isomorphism S({0..m-1}) -> I(power_set(m)) and its inverse
Interval signed_to_interval(const SignedSet& s, const BoolAlg& P);
SignedSet interval_to_signed(const Interval& v);

}  // namespace cubal
