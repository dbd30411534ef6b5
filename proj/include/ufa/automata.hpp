#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ufa/bitset.hpp"
#include "ufa/nfa.hpp"

namespace ufa {

using Count = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

// delta(S, a) and delta^{-1}(a, S) for a single letter.
StateSet step_forward(const Nfa& nfa, const StateSet& states, Index symbol);
StateSet step_forward(const Nfa& nfa, const StateSet& states, std::string_view symbol);
StateSet step_backward(const Nfa& nfa, Index symbol, const StateSet& states);
StateSet step_backward(const Nfa& nfa, std::string_view symbol, const StateSet& states);

StateSet reach_forward(const Nfa& nfa, const StateSet& states, const Word& word);
StateSet reach_backward(const Nfa& nfa, const Word& word, const StateSet& states);

// Exact number of accepting runs on `word`.
Count count_accepting_runs(const Nfa& nfa, const Word& word);
bool accepts(const Nfa& nfa, const Word& word);

struct AmbiguityResult {
    bool unambiguous = true;
    std::optional<Word> witness;  // has >= 2 accepting runs when present
};

// Self-product test: ambiguous iff an off-diagonal state pair is reachable
// from I x I and co-reachable to F x F. The witness is a shortest word.
AmbiguityResult check_unambiguous(const Nfa& nfa);
bool is_unambiguous(const Nfa& nfa);

enum class Direction { forward, backward };

std::string_view to_string(Direction d);

// Subset automaton reached from I (forward) or co-reached from F (backward).
//
// forward:  states = { delta(I, w) }, next(i, a) = index of delta(S_i, a),
//           entry = index of I, marked = subsets meeting F.
// backward: states = { delta^{-1}(w, F) }, next(i, a) = index of
//           delta^{-1}(a, S_i), entry = index of F, marked = subsets meeting I.
class SubsetAutomaton {
public:
    SubsetAutomaton(Direction direction, std::size_t base_states, std::vector<std::string> alphabet,
                    std::vector<StateSet> states, std::vector<Index> next, std::vector<bool> marked);

    Direction direction() const { return direction_; }
    std::size_t base_state_count() const { return base_states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<StateSet>& states() const { return states_; }
    const StateSet& state(Index i) const { return states_[i]; }
    Index entry() const { return 0; }
    Index next(Index state, Index symbol) const { return next_[state * alphabet_.size() + symbol]; }
    bool marked(Index state) const { return marked_[state]; }
    std::optional<Index> find(const StateSet& s) const;

    // forward: DFA with initial {entry} and final = marked.
    // backward: backward-deterministic NFA with edges next(S,a) -a-> S,
    //           initial = marked and final = {entry}.
    Nfa to_nfa() const;
    // Same automaton with the marked set complemented; recognizes the
    // complement language and is unambiguous.
    Nfa complemented() const;

private:
    Nfa build_nfa(bool flip) const;

    Direction direction_;
    std::size_t base_states_;
    std::vector<std::string> alphabet_;
    std::vector<StateSet> states_;
    std::vector<Index> next_;
    std::vector<bool> marked_;
};

SubsetAutomaton forward_determinize(const Nfa& nfa, std::size_t cap = kDefaultCap);
SubsetAutomaton backward_determinize(const Nfa& nfa, std::size_t cap = kDefaultCap);
SubsetAutomaton determinize(const Nfa& nfa, Direction direction, std::size_t cap = kDefaultCap);

struct BoundReport {
    std::size_t n = 0;
    std::optional<std::size_t> k;  // empty when forward determinization hit the cap
    std::optional<std::size_t> l;  // same for backward
    Direction chosen = Direction::forward;
    std::size_t result_states = 0;
    double bound = 0.0;  // sqrt(n+1) * 2^(n/2)
    Count bound_sq;      // (n+1) * 2^n
    bool within_bound() const { return Count(result_states) * result_states <= bound_sq; }
};

struct ComplementResult {
    Nfa automaton;
    BoundReport report;
};

// Complements a UFA through the smaller of its two determinizations
// (forward on ties). Throws AmbiguousInput for ambiguous input and
// StateLimitExceeded only when both sides exceed the cap.
ComplementResult complement_ufa(const Nfa& nfa, std::size_t cap = kDefaultCap);

struct EquivalenceResult {
    bool equivalent = true;
    std::optional<Word> witness;  // symbol indices of `a`'s alphabet
};

// Language equality by BFS over pairs of forward subsets (the empty subset
// acts as sink). Alphabets must contain the same labels, in any order.
EquivalenceResult equivalent(const Nfa& a, const Nfa& b, std::size_t cap = kDefaultCap);

// sqrt(n+1) * 2^(n/2) and its exact square.
double complement_bound(std::size_t n);
Count complement_bound_sq(std::size_t n);

}  // namespace ufa
