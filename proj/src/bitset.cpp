#include "ufa/bitset.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace ufa {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

const simd::BitKernels& kernels() { return simd::active_kernels(); }

}  // namespace

Bitset::Bitset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

Bitset::Bitset(std::size_t universe, std::initializer_list<Index> members)
    : Bitset(universe, std::span<const Index>(members.begin(), members.size())) {}

Bitset::Bitset(std::size_t universe, std::span<const Index> members) : Bitset(universe) {
    for (Index m : members) set(m);
}

Bitset Bitset::full(std::size_t universe) { return Bitset(universe).complement(); }

void Bitset::set(Index i) {
    if (i >= universe_) throw std::out_of_range("index " + std::to_string(i) + " outside set universe");
    words_[i >> 6] |= simd::Word64{1} << (i & 63);
}

void Bitset::reset(Index i) {
    if (i >= universe_) throw std::out_of_range("index " + std::to_string(i) + " outside set universe");
    words_[i >> 6] &= ~(simd::Word64{1} << (i & 63));
}

std::size_t Bitset::count() const { return kernels().popcount(words_); }

bool Bitset::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](simd::Word64 w) { return w == 0; });
}

std::vector<Index> Bitset::members() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
}

void Bitset::check_universe(const Bitset& other) const {
    if (other.universe_ != universe_) throw std::invalid_argument("bitset universe mismatch");
}

Bitset& Bitset::operator|=(const Bitset& other) {
    check_universe(other);
    kernels().or_into(words_, other.words_);
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
    check_universe(other);
    kernels().and_into(words_, other.words_);
    return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
    check_universe(other);
    kernels().andnot_into(words_, other.words_);
    return *this;
}

Bitset Bitset::complement() const {
    Bitset out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    if (const std::size_t tail = universe_ & 63; tail != 0) out.words_.back() &= (simd::Word64{1} << tail) - 1;
    return out;
}

bool Bitset::intersects(const Bitset& other) const {
    check_universe(other);
    return kernels().intersects(words_, other.words_);
}

bool Bitset::is_subset_of(const Bitset& other) const {
    check_universe(other);
    return kernels().subset_of(words_, other.words_);
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
    check_universe(other);
    return kernels().and_popcount(words_, other.words_);
}

bool Bitset::lex_less(const Bitset& a, const Bitset& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

bool Bitset::shortlex_less(const Bitset& a, const Bitset& b) {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

std::size_t Bitset::hash() const {
    std::size_t seed = universe_;
    boost::hash_range(seed, words_.begin(), words_.end());
    return seed;
}

std::string Bitset::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Index i) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    });
    out += '}';
    return out;
}

}  // namespace ufa
