#include "cubal/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cubal::kern {

#ifdef CUBAL_HAVE_AVX2_BACKEND
const Backend* avx2_backend_impl();  // kernels_avx2.cpp
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Backend* avx2_backend_if_available() {
#ifdef CUBAL_HAVE_AVX2_BACKEND
  if (cpu_has_avx2()) return avx2_backend_impl();
#endif
  return nullptr;
}

const Backend& active_backend() {
  static const Backend* chosen = [] {
    if (const char* env = std::getenv("CUBAL_KERNEL")) {
      const std::string want = env;
      if (want == "scalar") return &scalar_backend();
      if (want == "avx2") {
        const Backend* b = avx2_backend_if_available();
        if (!b) throw std::runtime_error("CUBAL_KERNEL=avx2 but AVX2 is unavailable");
        return b;
      }
      if (!want.empty())
        throw std::runtime_error("CUBAL_KERNEL: unknown backend '" + want + "'");
    }
    if (const Backend* b = avx2_backend_if_available()) return b;
    return &scalar_backend();
  }();
  return *chosen;
}

}  // namespace cubal::kern
