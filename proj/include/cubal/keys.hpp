#pragma once

#include <cstdint>
#include <stdexcept>

#include "cubal/cubic.hpp"

namespace cubal::keys {

// Packed interval keys for algebras with n <= 15 atoms: (lo << n) | hi.
// Ascending key order coincides with the canonical (lo, hi) order.

inline unsigned check_width(const BoolAlg& B) {
  const unsigned n = B.atom_count();
  if (n > 15)
    throw std::invalid_argument("packed interval scan: algebra has more than 15 atoms");
  return n;
}

inline uint32_t pack(uint32_t lo, uint32_t hi, unsigned n) { return (lo << n) | hi; }
inline uint32_t lo_of(uint32_t key, unsigned n) { return key >> n; }
inline uint32_t hi_of(uint32_t key, unsigned n) { return key & ((1u << n) - 1); }

inline uint32_t from_interval(const Interval& v) {
  const unsigned n = check_width(v.parent());
  uint32_t lo = 0, hi = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (v.lo().atoms().test(i)) lo |= 1u << i;
    if (v.hi().atoms().test(i)) hi |= 1u << i;
  }
  return pack(lo, hi, n);
}

inline Interval to_interval(uint32_t key, unsigned n, const BoolAlg& B) {
  Bits lo(n), hi(n);
  for (unsigned i = 0; i < n; ++i) {
    if ((key >> (n + i)) & 1u) lo.set(i);
    if ((key >> i) & 1u) hi.set(i);
  }
  return Interval(B.from_atom_set(lo), B.from_atom_set(hi));
}

// visit every valid key (lo ⊆ hi) in ascending order; f(uint32_t key)
template <class F>
void for_each_interval_key(unsigned n, F&& f) {
  const uint32_t full = (1u << n) - 1;
  for (uint32_t lo = 0;; ++lo) {
    const uint32_t rest = full & ~lo;
    for (uint32_t t = 0;;) {
      f(pack(lo, lo | t, n));
      if (t == rest) break;
      t = (t - rest) & rest;
    }
    if (lo == full) break;
  }
}

}  // namespace cubal::keys
