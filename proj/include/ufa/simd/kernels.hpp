#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ufa::simd {

using Word64 = std::uint64_t;

// Word-parallel bitset primitives. Every variant must produce results
// identical to the scalar table for all inputs; lengths of paired spans
// must match.
struct BitKernels {
    std::string_view name;
    void (*or_into)(std::span<Word64> dst, std::span<const Word64> src);
    void (*and_into)(std::span<Word64> dst, std::span<const Word64> src);
    void (*andnot_into)(std::span<Word64> dst, std::span<const Word64> src);  // dst &= ~src
    bool (*intersects)(std::span<const Word64> a, std::span<const Word64> b);
    bool (*subset_of)(std::span<const Word64> a, std::span<const Word64> b);
    std::size_t (*popcount)(std::span<const Word64> a);
    std::size_t (*and_popcount)(std::span<const Word64> a, std::span<const Word64> b);
};

const BitKernels& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const BitKernels* avx2_kernels();

// The table used by the library. Picks AVX2 when available unless the
// environment variable UFA_SIMD is set to "scalar". Resolved once.
const BitKernels& active_kernels();

}  // namespace ufa::simd
