#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ufa/simd/kernels.hpp"

namespace ufa {

using Index = std::uint32_t;

// Fixed-universe set of indices 0..universe-1 stored as 64-bit words.
// Bits past the universe are always zero, so word-wise equality is set
// equality and the words form a canonical encoding.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe);
    Bitset(std::size_t universe, std::initializer_list<Index> members);
    Bitset(std::size_t universe, std::span<const Index> members);

    static Bitset full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::span<const simd::Word64> words() const { return words_; }

    bool test(Index i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(Index i);
    void reset(Index i);

    std::size_t count() const;
    bool empty() const;
    std::vector<Index> members() const;

    // Visits members in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            simd::Word64 bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                fn(static_cast<Index>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    Bitset& operator|=(const Bitset& other);
    Bitset& operator&=(const Bitset& other);
    Bitset& operator-=(const Bitset& other);
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const;
    bool intersects(const Bitset& other) const;
    bool is_subset_of(const Bitset& other) const;
    std::size_t intersection_count(const Bitset& other) const;

    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    // Lexicographic order of the ascending member lists.
    static bool lex_less(const Bitset& a, const Bitset& b);
    // Smaller sets first, ties broken by lex_less.
    static bool shortlex_less(const Bitset& a, const Bitset& b);

    std::size_t hash() const;

    // "{0,2,5}"
    std::string to_string() const;

private:
    void check_universe(const Bitset& other) const;

    std::size_t universe_ = 0;
    std::vector<simd::Word64> words_;
};

using StateSet = Bitset;
using VertexSet = Bitset;

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ufa
