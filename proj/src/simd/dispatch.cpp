#include "ufa/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace ufa::simd {

#if defined(UFA_HAVE_AVX2)
const BitKernels& avx2_table();
#endif

const BitKernels* avx2_kernels() {
#if defined(UFA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const BitKernels& active_kernels() {
    static const BitKernels& chosen = [] () -> const BitKernels& {
        const char* env = std::getenv("UFA_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
        if (const BitKernels* fast = avx2_kernels()) return *fast;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace ufa::simd
