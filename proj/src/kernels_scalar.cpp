#include "cubal/kernels.hpp"

namespace cubal::kern {

namespace {

inline uint32_t lo_of(uint32_t key, unsigned n) { return key >> n; }
inline uint32_t hi_of(uint32_t key, unsigned n) { return key & ((1u << n) - 1); }

void preceq_flags_scalar(uint32_t a_key, const uint32_t* w_keys, uint8_t* flags,
                         size_t cnt, unsigned n) {
  const uint32_t full = (1u << n) - 1;
  const uint32_t a_lo = lo_of(a_key, n), a_hi = hi_of(a_key, n);
  for (size_t i = 0; i < cnt; ++i) {
    const uint32_t w_lo = lo_of(w_keys[i], n), w_hi = hi_of(w_keys[i], n);
    const uint32_t j_lo = a_lo & w_lo;
    const uint32_t j_hi = a_hi | w_hi;
    const uint32_t d_lo = j_lo | (j_hi & (full ^ w_hi));
    const uint32_t d_hi = j_hi & (j_lo | (full ^ w_lo));
    flags[i] = ((d_lo & ~a_lo) | (a_hi & ~d_hi)) == 0 ? 1 : 0;
  }
}

void join_many_scalar(uint32_t x_key, const uint32_t* ys, uint32_t* out,
                      size_t cnt, unsigned n) {
  const uint32_t x_lo = lo_of(x_key, n), x_hi = hi_of(x_key, n);
  for (size_t i = 0; i < cnt; ++i) {
    const uint32_t y_lo = lo_of(ys[i], n), y_hi = hi_of(ys[i], n);
    out[i] = ((x_lo & y_lo) << n) | (x_hi | y_hi);
  }
}

void delta_comparable_many_scalar(uint32_t x_key, const uint32_t* ys,
                                  uint32_t* out, size_t cnt, unsigned n) {
  const uint32_t full = (1u << n) - 1;
  const uint32_t x_lo = lo_of(x_key, n), x_hi = hi_of(x_key, n);
  for (size_t i = 0; i < cnt; ++i) {
    const uint32_t y_lo = lo_of(ys[i], n), y_hi = hi_of(ys[i], n);
    // y <= x in the containment order: x_lo ⊆ y_lo and y_hi ⊆ x_hi
    const bool y_below = ((x_lo & ~y_lo) | (y_hi & ~x_hi)) == 0;
    const bool x_below = ((y_lo & ~x_lo) | (x_hi & ~y_hi)) == 0;
    if (y_below) {
      const uint32_t d_lo = x_lo | (x_hi & (full ^ y_hi));
      const uint32_t d_hi = x_hi & (x_lo | (full ^ y_lo));
      out[i] = (d_lo << n) | d_hi;
    } else if (x_below) {
      const uint32_t d_lo = y_lo | (y_hi & (full ^ x_hi));
      const uint32_t d_hi = y_hi & (y_lo | (full ^ x_lo));
      out[i] = (d_lo << n) | d_hi;
    } else {
      out[i] = kNoKey;
    }
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", preceq_flags_scalar, join_many_scalar,
                         delta_comparable_many_scalar};
  return b;
}

}  // namespace cubal::kern
