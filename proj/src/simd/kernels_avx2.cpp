// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include "ufa/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace ufa::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word64* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word64* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-lookup popcount, one count per 64-bit lane.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) Word64 lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void or_into(std::span<Word64> dst, std::span<const Word64> src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::span<Word64> dst, std::span<const Word64> src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word64> dst, std::span<const Word64> src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b
    for (; i + kLanes <= n; i += kLanes)
        store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects(std::span<const Word64> a, std::span<const Word64> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool subset_of(std::span<const Word64> a, std::span<const Word64> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    // testc(b, a) is 1 iff (~b & a) == 0
    for (; i + kLanes <= n; i += kLanes)
        if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::size_t popcount(std::span<const Word64> a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(std::span<const Word64> a, std::span<const Word64> b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

}  // namespace

const BitKernels& avx2_table() {
    static const BitKernels table{"avx2",     &or_into,   &and_into, &andnot_into,
                                  &intersects, &subset_of, &popcount, &and_popcount};
    return table;
}

}  // namespace ufa::simd
