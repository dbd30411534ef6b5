#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ufa/bitset.hpp"
#include "ufa/errors.hpp"

namespace ufa {

struct Transition {
    Index source;
    Index symbol;  // index into the alphabet
    Index target;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Immutable NFA (Q, Sigma, delta, I, F) with Q = {0..state_count-1}.
// Construction validates every index and symbol and stores the transition
// relation both as a sorted triple list and as per-symbol successor and
// predecessor bitset rows.
class Nfa {
public:
    Nfa() : Nfa(0, {}, {}, StateSet(0), StateSet(0)) {}
    Nfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<Transition> transitions,
        std::span<const Index> initial, std::span<const Index> final_states);
    Nfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<Transition> transitions,
        StateSet initial, StateSet final_states);

    std::size_t state_count() const { return state_count_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    // Sorted by (source, symbol, target), duplicates removed.
    const std::vector<Transition>& transitions() const { return transitions_; }
    const StateSet& initial() const { return initial_; }
    const StateSet& final_states() const { return final_; }

    std::optional<Index> find_symbol(std::string_view label) const;
    Index symbol(std::string_view label) const;  // throws UnknownSymbol
    Word word(std::span<const std::string> labels) const;
    std::string render(const Word& w) const;  // space separated, "<eps>" when empty

    const StateSet& successors(Index state, Index symbol) const { return succ_[symbol * state_count_ + state]; }
    const StateSet& predecessors(Index state, Index symbol) const { return pred_[symbol * state_count_ + state]; }

    friend bool operator==(const Nfa& a, const Nfa& b) {
        return a.state_count_ == b.state_count_ && a.alphabet_ == b.alphabet_ &&
               a.transitions_ == b.transitions_ && a.initial_ == b.initial_ && a.final_ == b.final_;
    }

private:
    void build();

    std::size_t state_count_;
    std::vector<std::string> alphabet_;
    std::vector<Transition> transitions_;
    StateSet initial_;
    StateSet final_;
    std::unordered_map<std::string, Index> symbol_index_;
    std::vector<StateSet> succ_;  // [symbol * n + state]
    std::vector<StateSet> pred_;
};

}  // namespace ufa
