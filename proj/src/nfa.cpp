#include "ufa/nfa.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ufa {
namespace {

StateSet make_set(std::size_t n, std::span<const Index> members, const char* what) {
    StateSet out(n);
    for (Index m : members) {
        if (m >= n) throw std::out_of_range(std::string(what) + " state " + std::to_string(m) + " out of range");
        out.set(m);
    }
    return out;
}

}  // namespace

Nfa::Nfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<Transition> transitions,
         std::span<const Index> initial, std::span<const Index> final_states)
    : Nfa(state_count, std::move(alphabet), std::move(transitions), make_set(state_count, initial, "initial"),
          make_set(state_count, final_states, "final")) {}

Nfa::Nfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<Transition> transitions,
         StateSet initial, StateSet final_states)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      final_(std::move(final_states)) {
    if (initial_.universe() != state_count_ || final_.universe() != state_count_)
        throw std::invalid_argument("initial/final set universe does not match state count");
    build();
}

void Nfa::build() {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        const std::string& label = alphabet_[i];
        if (label.empty()) throw std::invalid_argument("empty symbol label");
        if (std::any_of(label.begin(), label.end(), [](unsigned char c) { return std::isspace(c); }))
            throw std::invalid_argument("symbol label contains whitespace: " + label);
        if (!symbol_index_.emplace(label, static_cast<Index>(i)).second)
            throw std::invalid_argument("duplicate symbol: " + label);
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    succ_.assign(alphabet_.size() * state_count_, StateSet(state_count_));
    pred_.assign(alphabet_.size() * state_count_, StateSet(state_count_));
    for (const Transition& t : transitions_) {
        if (t.source >= state_count_ || t.target >= state_count_)
            throw std::out_of_range("transition state out of range");
        if (t.symbol >= alphabet_.size()) throw std::out_of_range("transition symbol out of range");
        succ_[t.symbol * state_count_ + t.source].set(t.target);
        pred_[t.symbol * state_count_ + t.target].set(t.source);
    }
}

std::optional<Index> Nfa::find_symbol(std::string_view label) const {
    if (auto it = symbol_index_.find(std::string(label)); it != symbol_index_.end()) return it->second;
    return std::nullopt;
}

Index Nfa::symbol(std::string_view label) const {
    if (auto found = find_symbol(label)) return *found;
    throw UnknownSymbol(std::string(label));
}

Word Nfa::word(std::span<const std::string> labels) const {
    Word out;
    out.reserve(labels.size());
    for (const std::string& l : labels) out.push_back(symbol(l));
    return out;
}

std::string Nfa::render(const Word& w) const {
    if (w.empty()) return "<eps>";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += alphabet_.at(w[i]);
    }
    return out;
}

}  // namespace ufa
