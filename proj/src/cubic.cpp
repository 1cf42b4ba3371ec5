#include "cubal/cubic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubal {

Interval::Interval(Element lo, Element hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!lo_.same_parent(hi_))
    throw std::invalid_argument("interval: endpoints from different algebras");
  if (!leq(lo_, hi_))
    throw std::invalid_argument("interval: lower endpoint not below upper endpoint");
}

nlohmann::json Interval::to_json() const {
  return nlohmann::json{{"lo", lo_.to_json()}, {"hi", hi_.to_json()}};
}

Interval interval_top(const BoolAlg& B) { return Interval(B.bottom(), B.top()); }

bool interval_leq(const Interval& a, const Interval& b) {
  return leq(b.lo(), a.lo()) && leq(a.hi(), b.hi());
}

bool interval_lt(const Interval& a, const Interval& b) {
  return interval_leq(a, b) && a != b;
}

Interval interval_join(const Interval& a, const Interval& b) {
  return Interval(meet(a.lo(), b.lo()), join(a.hi(), b.hi()));
}

std::optional<Interval> interval_meet(const Interval& a, const Interval& b) {
  Element lo = join(a.lo(), b.lo());
  Element hi = meet(a.hi(), b.hi());
  if (!leq(lo, hi)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

Interval interval_delta(const Interval& y, const Interval& x) {
  if (!interval_leq(x, y))
    throw std::invalid_argument("interval_delta: second argument not below first");
  const Element& a = y.lo();
  const Element& b = y.hi();
  const Element& c = x.lo();
  const Element& d = x.hi();
  return Interval(join(a, difference(b, d)), meet(b, join(a, complement(c))));
}

Interval implication(const Interval& x, const Interval& y) {
  Interval j = interval_join(x, y);
  Interval inner = interval_delta(j, y);
  Interval flipped = interval_delta(interval_top(y.parent()), inner);
  return interval_join(flipped, y);
}

// a ∧ Δ(a∨w, w); the meet always exists and reduces to this closed form
Interval caret(const Interval& a, const Interval& w) {
  return Interval(join(a.lo(), difference(a.hi(), w.hi())),
                  meet(a.hi(), join(a.lo(), complement(w.lo()))));
}

bool preceq(const Interval& a, const Interval& w) {
  Interval j = interval_join(a, w);
  return interval_leq(a, interval_delta(j, w));
}

bool preceq_by_meet(const Interval& a, const Interval& w) {
  Interval lhs = interval_join(a, w);
  Interval swapped(complement(a.hi()), complement(a.lo()));
  Interval rhs = interval_join(swapped, w);
  auto m = interval_meet(lhs, rhs);
  return m && *m == w;
}

std::vector<Interval> all_intervals(const BoolAlg& B) {
  const unsigned n = B.atom_count();
  if (n > 10)
    throw std::invalid_argument("all_intervals: algebra too large (more than 10 atoms)");
  std::vector<Interval> out;
  const uint64_t top = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  auto elem = [&](uint64_t mask) {
    Bits b(n);
    for (unsigned i = 0; i < n; ++i)
      if ((mask >> i) & 1u) b.set(i);
    return B.from_atom_set(b);
  };
  for (uint64_t lo = 0; lo <= top; ++lo) {
    const uint64_t rest = top & ~lo;
    for (uint64_t t = 0;;) {
      out.emplace_back(elem(lo), elem(lo | t));
      if (t == rest) break;
      t = (t - rest) & rest;
    }
    if (lo == top) break;
  }
  return out;
}

bool preceq_by_ideal(const Interval& a, const Interval& w) {
  auto elems = all_intervals(a.parent());
  for (const auto& x : elems) {
    if (!interval_leq(a, x)) continue;
    for (const auto& y : elems) {
      if (!interval_leq(x, y)) continue;
      if (interval_delta(y, x) == w) return true;
    }
  }
  return false;
}

std::vector<Interval> localization(const BoolAlg& B, const Interval& a) {
  std::vector<Interval> out;
  for (const auto& w : all_intervals(B))
    if (preceq(a, w)) out.push_back(w);
  return out;
}

std::vector<Interval> localization_by_delta(const BoolAlg& B, const Interval& a) {
  auto elems = all_intervals(B);
  std::vector<Interval> out;
  for (const auto& x : elems) {
    if (!interval_leq(a, x)) continue;
    for (const auto& y : elems) {
      if (!interval_leq(x, y)) continue;
      out.push_back(interval_delta(y, x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignedSet::SignedSet(unsigned m, uint32_t pos, uint32_t neg) : m_(m), pos_(pos), neg_(neg) {
  if (m > 31) throw std::invalid_argument("signed set: ground set too large");
  const uint32_t full = (uint32_t{1} << m) - 1;
  if ((pos & ~full) || (neg & ~full))
    throw std::invalid_argument("signed set: member outside the ground set");
  if (pos & neg)
    throw std::invalid_argument("signed set: halves not disjoint");
}

nlohmann::json SignedSet::to_json() const {
  auto mask_to_list = [](uint32_t m) {
    nlohmann::json a = nlohmann::json::array();
    for (unsigned i = 0; i < 32; ++i)
      if ((m >> i) & 1u) a.push_back(i);
    return a;
  };
  return nlohmann::json{{"pos", mask_to_list(pos_)}, {"neg", mask_to_list(neg_)}};
}

namespace {
void match_ground(const SignedSet& a, const SignedSet& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("signed sets over different ground sets");
}
}  // namespace

bool signed_leq(const SignedSet& a, const SignedSet& b) {
  match_ground(a, b);
  return (b.pos() & ~a.pos()) == 0 && (b.neg() & ~a.neg()) == 0;
}

SignedSet signed_join(const SignedSet& a, const SignedSet& b) {
  match_ground(a, b);
  return SignedSet(a.ground_size(), a.pos() & b.pos(), a.neg() & b.neg());
}

SignedSet signed_delta(const SignedSet& y, const SignedSet& x) {
  match_ground(y, x);
  if (!signed_leq(x, y))
    throw std::invalid_argument("signed_delta: second argument not below first");
  const uint32_t pos = y.pos() | (x.neg() & ~y.neg());
  const uint32_t neg = y.neg() | (x.pos() & ~y.pos());
  return SignedSet(y.ground_size(), pos, neg);
}

SignedSet signed_swap(const SignedSet& s) {
  return SignedSet(s.ground_size(), s.neg(), s.pos());
}

std::vector<SignedSet> all_signed_sets(unsigned m) {
  if (m > 15) throw std::invalid_argument("all_signed_sets: ground set too large");
  std::vector<SignedSet> out;
  const uint32_t full = (uint32_t{1} << m) - 1;
  for (uint32_t pos = 0; pos <= full; ++pos) {
    const uint32_t rest = full & ~pos;
    for (uint32_t t = 0;;) {
      out.emplace_back(m, pos, t);
      if (t == rest) break;
      t = (t - rest) & rest;
    }
    if (pos == full) break;
  }
  return out;
}

Interval signed_to_interval(const SignedSet& s, const BoolAlg& P) {
  if (P.atom_count() != s.ground_size())
    throw std::invalid_argument("signed_to_interval: algebra size does not match ground set");
  const unsigned m = s.ground_size();
  Bits lo(m), hi(m);
  for (unsigned i = 0; i < m; ++i) {
    if ((s.pos() >> i) & 1u) lo.set(i);
    if (!((s.neg() >> i) & 1u)) hi.set(i);
  }
  return Interval(P.from_atom_set(lo), P.from_atom_set(hi));
}

SignedSet interval_to_signed(const Interval& v) {
  const unsigned m = v.parent().atom_count();
  if (m > 31) throw std::invalid_argument("interval_to_signed: algebra too large");
  uint32_t pos = 0, neg = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (v.lo().atoms().test(i)) pos |= uint32_t{1} << i;
    if (!v.hi().atoms().test(i)) neg |= uint32_t{1} << i;
  }
  return SignedSet(m, pos, neg);
}

}  // namespace cubal
