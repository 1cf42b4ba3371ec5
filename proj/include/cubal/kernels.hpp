#pragma once

#include <cstddef>
#include <cstdint>

namespace cubal::kern {

// Batch kernels for the large interval scans. An interval over an algebra
// with n atoms (n <= 15) is packed into a 32-bit key: (lo << n) | hi, where
// lo ⊆ hi are atom masks. All backends must agree bit for bit; the scalar
// backend is the reference.

inline constexpr uint32_t kNoKey = UINT32_MAX;

struct Backend {
  const char* name;
  // flags[i] = 1 if a ≼ w_i (w_i is in the localization of a), else 0
  void (*preceq_flags)(uint32_t a_key, const uint32_t* w_keys, uint8_t* flags,
                       size_t cnt, unsigned n);
  // out[i] = key of the interval join of x and ys[i]
  void (*join_many)(uint32_t x_key, const uint32_t* ys, uint32_t* out,
                    size_t cnt, unsigned n);
  // out[i] = key of delta(larger, smaller) when x and ys[i] are comparable,
  // kNoKey otherwise
  void (*delta_comparable_many)(uint32_t x_key, const uint32_t* ys,
                                uint32_t* out, size_t cnt, unsigned n);
};

const Backend& scalar_backend();
bool cpu_has_avx2();
// null when this build has no AVX2 backend or the CPU lacks AVX2
const Backend* avx2_backend_if_available();

// Backend selected at startup: CUBAL_KERNEL=scalar|avx2 forces one (throws
// if the forced backend is unavailable); by default the best available wins.
const Backend& active_backend();

}  // namespace cubal::kern
