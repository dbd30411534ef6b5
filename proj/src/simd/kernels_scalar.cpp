#include "ufa/simd/kernels.hpp"

#include <bit>

namespace ufa::simd {
namespace {

void or_into(std::span<Word64> dst, std::span<const Word64> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word64> dst, std::span<const Word64> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word64> dst, std::span<const Word64> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

bool intersects(std::span<const Word64> a, std::span<const Word64> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool subset_of(std::span<const Word64> a, std::span<const Word64> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::size_t popcount(std::span<const Word64> a) {
    std::size_t total = 0;
    for (Word64 w : a) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t and_popcount(std::span<const Word64> a, std::span<const Word64> b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

}  // namespace

const BitKernels& scalar_kernels() {
    static const BitKernels table{"scalar",   &or_into,   &and_into,     &andnot_into,
                                  &intersects, &subset_of, &popcount, &and_popcount};
    return table;
}

}  // namespace ufa::simd
