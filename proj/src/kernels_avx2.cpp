#include "cubal/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace cubal::kern {

namespace {

struct Lanes {
  __m256i lo, hi;
};

inline Lanes split8(__m256i keys, __m128i shift, __m256i full) {
  Lanes l;
  l.lo = _mm256_srl_epi32(keys, shift);
  l.hi = _mm256_and_si256(keys, full);
  return l;
}

inline __m256i pack8(Lanes l, __m128i shift) {
  return _mm256_or_si256(_mm256_sll_epi32(l.lo, shift), l.hi);
}

// all-ones lanes where ((b_lo & ~a_lo) | (a_hi & ~b_hi)) == 0, i.e. a <= b
inline __m256i leq_mask(Lanes a, Lanes b) {
  __m256i bad = _mm256_or_si256(_mm256_andnot_si256(a.lo, b.lo),
                                _mm256_andnot_si256(b.hi, a.hi));
  return _mm256_cmpeq_epi32(bad, _mm256_setzero_si256());
}

// delta(y, x) assuming x <= y, lane-wise
inline Lanes delta_lanes(Lanes y, Lanes x, __m256i full) {
  Lanes d;
  d.lo = _mm256_or_si256(y.lo, _mm256_and_si256(y.hi, _mm256_xor_si256(full, x.hi)));
  d.hi = _mm256_and_si256(y.hi, _mm256_or_si256(y.lo, _mm256_xor_si256(full, x.lo)));
  return d;
}

void preceq_flags_avx2(uint32_t a_key, const uint32_t* w_keys, uint8_t* flags,
                       size_t cnt, unsigned n) {
  const uint32_t full32 = (1u << n) - 1;
  const __m128i shift = _mm_cvtsi32_si128(int(n));
  const __m256i full = _mm256_set1_epi32(int32_t(full32));
  const __m256i a_lo = _mm256_set1_epi32(int32_t(a_key >> n));
  const __m256i a_hi = _mm256_set1_epi32(int32_t(a_key & full32));
  size_t i = 0;
  for (; i + 8 <= cnt; i += 8) {
    __m256i keys = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w_keys + i));
    Lanes w = split8(keys, shift, full);
    __m256i j_lo = _mm256_and_si256(a_lo, w.lo);
    __m256i j_hi = _mm256_or_si256(a_hi, w.hi);
    __m256i d_lo = _mm256_or_si256(j_lo, _mm256_and_si256(j_hi, _mm256_xor_si256(full, w.hi)));
    __m256i d_hi = _mm256_and_si256(j_hi, _mm256_or_si256(j_lo, _mm256_xor_si256(full, w.lo)));
    __m256i bad = _mm256_or_si256(_mm256_andnot_si256(a_lo, d_lo),
                                  _mm256_andnot_si256(d_hi, a_hi));
    __m256i ok = _mm256_cmpeq_epi32(bad, _mm256_setzero_si256());
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
    for (unsigned l = 0; l < 8; ++l) flags[i + l] = uint8_t((mask >> l) & 1);
  }
  if (i < cnt) scalar_backend().preceq_flags(a_key, w_keys + i, flags + i, cnt - i, n);
}

void join_many_avx2(uint32_t x_key, const uint32_t* ys, uint32_t* out,
                    size_t cnt, unsigned n) {
  const uint32_t full32 = (1u << n) - 1;
  const __m128i shift = _mm_cvtsi32_si128(int(n));
  const __m256i full = _mm256_set1_epi32(int32_t(full32));
  const __m256i x_lo = _mm256_set1_epi32(int32_t(x_key >> n));
  const __m256i x_hi = _mm256_set1_epi32(int32_t(x_key & full32));
  size_t i = 0;
  for (; i + 8 <= cnt; i += 8) {
    __m256i keys = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys + i));
    Lanes y = split8(keys, shift, full);
    Lanes j{_mm256_and_si256(x_lo, y.lo), _mm256_or_si256(x_hi, y.hi)};
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), pack8(j, shift));
  }
  if (i < cnt) scalar_backend().join_many(x_key, ys + i, out + i, cnt - i, n);
}

void delta_comparable_many_avx2(uint32_t x_key, const uint32_t* ys,
                                uint32_t* out, size_t cnt, unsigned n) {
  const uint32_t full32 = (1u << n) - 1;
  const __m128i shift = _mm_cvtsi32_si128(int(n));
  const __m256i full = _mm256_set1_epi32(int32_t(full32));
  Lanes x{_mm256_set1_epi32(int32_t(x_key >> n)),
          _mm256_set1_epi32(int32_t(x_key & full32))};
  const __m256i none = _mm256_set1_epi32(int32_t(kNoKey));
  size_t i = 0;
  for (; i + 8 <= cnt; i += 8) {
    __m256i keys = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys + i));
    Lanes y = split8(keys, shift, full);
    __m256i y_below = leq_mask(y, x);
    __m256i x_below = leq_mask(x, y);
    __m256i d_xy = pack8(delta_lanes(x, y, full), shift);  // y <= x
    __m256i d_yx = pack8(delta_lanes(y, x, full), shift);  // x <= y
    __m256i r = _mm256_blendv_epi8(none, d_yx, x_below);
    r = _mm256_blendv_epi8(r, d_xy, y_below);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  if (i < cnt)
    scalar_backend().delta_comparable_many(x_key, ys + i, out + i, cnt - i, n);
}

}  // namespace

const Backend* avx2_backend_impl() {
  static const Backend b{"avx2", preceq_flags_avx2, join_many_avx2,
                         delta_comparable_many_avx2};
  return &b;
}

}  // namespace cubal::kern

#endif
