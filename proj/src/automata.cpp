#include "ufa/automata.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace ufa {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void check_states(const Nfa& nfa, const StateSet& s) {
    if (s.universe() != nfa.state_count()) throw std::invalid_argument("state set does not belong to this automaton");
}

void check_symbol(const Nfa& nfa, Index symbol) {
    if (symbol >= nfa.alphabet_size()) throw UnknownSymbol("#" + std::to_string(symbol));
}

// Generic subset BFS. `step(set, symbol)` produces the neighbouring subset.
template <typename Step>
SubsetAutomaton explore_subsets(const Nfa& nfa, Direction direction, StateSet start, const StateSet& mark_against,
                                std::size_t cap, Step&& step) {
    if (cap == 0) throw std::invalid_argument("state cap must be positive");
    const std::size_t sigma = nfa.alphabet_size();
    std::vector<StateSet> states;
    std::vector<Index> next;
    std::unordered_map<StateSet, Index, BitsetHash> index;

    index.emplace(start, 0);
    states.push_back(std::move(start));
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (Index a = 0; a < sigma; ++a) {
            StateSet target = step(states[i], a);
            auto it = index.find(target);
            if (it == index.end()) {
                if (states.size() >= cap) throw StateLimitExceeded(cap, states.size() + 1);
                it = index.emplace(target, static_cast<Index>(states.size())).first;
                states.push_back(std::move(target));
            }
            next.push_back(it->second);
        }
    }

    std::vector<bool> marked(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) marked[i] = states[i].intersects(mark_against);
    return SubsetAutomaton(direction, nfa.state_count(), nfa.alphabet(), std::move(states), std::move(next),
                           std::move(marked));
}

}  // namespace

StateSet step_forward(const Nfa& nfa, const StateSet& states, Index symbol) {
    check_states(nfa, states);
    check_symbol(nfa, symbol);
    StateSet out(nfa.state_count());
    states.for_each([&](Index q) { out |= nfa.successors(q, symbol); });
    return out;
}

StateSet step_forward(const Nfa& nfa, const StateSet& states, std::string_view symbol) {
    return step_forward(nfa, states, nfa.symbol(symbol));
}

StateSet step_backward(const Nfa& nfa, Index symbol, const StateSet& states) {
    check_states(nfa, states);
    check_symbol(nfa, symbol);
    StateSet out(nfa.state_count());
    states.for_each([&](Index q) { out |= nfa.predecessors(q, symbol); });
    return out;
}

StateSet step_backward(const Nfa& nfa, std::string_view symbol, const StateSet& states) {
    return step_backward(nfa, nfa.symbol(symbol), states);
}

StateSet reach_forward(const Nfa& nfa, const StateSet& states, const Word& word) {
    check_states(nfa, states);
    StateSet current = states;
    for (Index a : word) current = step_forward(nfa, current, a);
    return current;
}

StateSet reach_backward(const Nfa& nfa, const Word& word, const StateSet& states) {
    check_states(nfa, states);
    StateSet current = states;
    for (auto it = word.rbegin(); it != word.rend(); ++it) current = step_backward(nfa, *it, current);
    return current;
}

Count count_accepting_runs(const Nfa& nfa, const Word& word) {
    const std::size_t n = nfa.state_count();
    std::vector<Count> runs(n);
    nfa.initial().for_each([&](Index q) { runs[q] = 1; });
    for (Index a : word) {
        check_symbol(nfa, a);
        std::vector<Count> next(n);
        for (Index q = 0; q < n; ++q) {
            if (runs[q] == 0) continue;
            nfa.successors(q, a).for_each([&](Index r) { next[r] += runs[q]; });
        }
        runs = std::move(next);
    }
    Count total = 0;
    nfa.final_states().for_each([&](Index q) { total += runs[q]; });
    return total;
}

bool accepts(const Nfa& nfa, const Word& word) {
    return reach_forward(nfa, nfa.initial(), word).intersects(nfa.final_states());
}

AmbiguityResult check_unambiguous(const Nfa& nfa) {
    const std::size_t n = nfa.state_count();
    const std::size_t sigma = nfa.alphabet_size();
    const std::size_t pairs = n * n;
    auto pair_id = [n](Index p, Index q) { return static_cast<std::size_t>(p) * n + q; };

    // Forward BFS over the self-product from I x I.
    std::vector<std::size_t> fwd_dist(pairs, kUnreached), fwd_prev(pairs, kUnreached);
    std::vector<Index> fwd_sym(pairs, 0);
    std::deque<std::size_t> queue;
    nfa.initial().for_each([&](Index p) {
        nfa.initial().for_each([&](Index q) {
            fwd_dist[pair_id(p, q)] = 0;
            queue.push_back(pair_id(p, q));
        });
    });
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Index p = static_cast<Index>(cur / n), q = static_cast<Index>(cur % n);
        for (Index a = 0; a < sigma; ++a) {
            const StateSet& sq = nfa.successors(q, a);
            nfa.successors(p, a).for_each([&](Index p2) {
                sq.for_each([&](Index q2) {
                    const std::size_t id = pair_id(p2, q2);
                    if (fwd_dist[id] != kUnreached) return;
                    fwd_dist[id] = fwd_dist[cur] + 1;
                    fwd_prev[id] = cur;
                    fwd_sym[id] = a;
                    queue.push_back(id);
                });
            });
        }
    }

    // Backward BFS from F x F; bwd_next points one step closer to F x F.
    std::vector<std::size_t> bwd_dist(pairs, kUnreached), bwd_next(pairs, kUnreached);
    std::vector<Index> bwd_sym(pairs, 0);
    nfa.final_states().for_each([&](Index p) {
        nfa.final_states().for_each([&](Index q) {
            bwd_dist[pair_id(p, q)] = 0;
            queue.push_back(pair_id(p, q));
        });
    });
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Index p = static_cast<Index>(cur / n), q = static_cast<Index>(cur % n);
        for (Index a = 0; a < sigma; ++a) {
            const StateSet& pq = nfa.predecessors(q, a);
            nfa.predecessors(p, a).for_each([&](Index p2) {
                pq.for_each([&](Index q2) {
                    const std::size_t id = pair_id(p2, q2);
                    if (bwd_dist[id] != kUnreached) return;
                    bwd_dist[id] = bwd_dist[cur] + 1;
                    bwd_next[id] = cur;
                    bwd_sym[id] = a;
                    queue.push_back(id);
                });
            });
        }
    }

    std::size_t best = kUnreached, best_len = kUnreached;
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            if (p == q) continue;
            const std::size_t id = pair_id(p, q);
            if (fwd_dist[id] == kUnreached || bwd_dist[id] == kUnreached) continue;
            if (const std::size_t len = fwd_dist[id] + bwd_dist[id]; len < best_len) {
                best = id;
                best_len = len;
            }
        }
    }
    if (best == kUnreached) return {};

    Word witness;
    for (std::size_t id = best; fwd_dist[id] != 0; id = fwd_prev[id]) witness.push_back(fwd_sym[id]);
    std::reverse(witness.begin(), witness.end());
    for (std::size_t id = best; bwd_dist[id] != 0; id = bwd_next[id]) witness.push_back(bwd_sym[id]);
    return {false, std::move(witness)};
}

bool is_unambiguous(const Nfa& nfa) { return check_unambiguous(nfa).unambiguous; }

std::string_view to_string(Direction d) { return d == Direction::forward ? "fwd" : "bwd"; }

SubsetAutomaton::SubsetAutomaton(Direction direction, std::size_t base_states, std::vector<std::string> alphabet,
                                 std::vector<StateSet> states, std::vector<Index> next, std::vector<bool> marked)
    : direction_(direction),
      base_states_(base_states),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      next_(std::move(next)),
      marked_(std::move(marked)) {
    if (states_.empty()) throw std::invalid_argument("subset automaton needs an entry state");
    if (next_.size() != states_.size() * alphabet_.size() || marked_.size() != states_.size())
        throw std::invalid_argument("subset automaton tables have inconsistent sizes");
}

std::optional<Index> SubsetAutomaton::find(const StateSet& s) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == s) return static_cast<Index>(i);
    return std::nullopt;
}

Nfa SubsetAutomaton::build_nfa(bool flip) const {
    const std::size_t m = states_.size();
    std::vector<Transition> transitions;
    transitions.reserve(next_.size());
    for (Index s = 0; s < m; ++s) {
        for (Index a = 0; a < alphabet_.size(); ++a) {
            if (direction_ == Direction::forward)
                transitions.push_back({s, a, next(s, a)});
            else
                transitions.push_back({next(s, a), a, s});
        }
    }
    StateSet marked(m);
    for (Index s = 0; s < m; ++s)
        if (marked_[s] != flip) marked.set(s);
    StateSet entry(m, {this->entry()});
    if (direction_ == Direction::forward)
        return Nfa(m, alphabet_, std::move(transitions), std::move(entry), std::move(marked));
    return Nfa(m, alphabet_, std::move(transitions), std::move(marked), std::move(entry));
}

Nfa SubsetAutomaton::to_nfa() const { return build_nfa(false); }
Nfa SubsetAutomaton::complemented() const { return build_nfa(true); }

SubsetAutomaton forward_determinize(const Nfa& nfa, std::size_t cap) {
    return explore_subsets(nfa, Direction::forward, nfa.initial(), nfa.final_states(), cap,
                           [&](const StateSet& s, Index a) { return step_forward(nfa, s, a); });
}

SubsetAutomaton backward_determinize(const Nfa& nfa, std::size_t cap) {
    return explore_subsets(nfa, Direction::backward, nfa.final_states(), nfa.initial(), cap,
                           [&](const StateSet& s, Index a) { return step_backward(nfa, a, s); });
}

SubsetAutomaton determinize(const Nfa& nfa, Direction direction, std::size_t cap) {
    return direction == Direction::forward ? forward_determinize(nfa, cap) : backward_determinize(nfa, cap);
}

double complement_bound(std::size_t n) {
    return std::sqrt(static_cast<double>(n + 1)) * std::exp2(static_cast<double>(n) / 2.0);
}

Count complement_bound_sq(std::size_t n) { return Count(n + 1) << n; }

ComplementResult complement_ufa(const Nfa& nfa, std::size_t cap) {
    if (auto amb = check_unambiguous(nfa); !amb.unambiguous) throw AmbiguousInput(*amb.witness, nfa.render(*amb.witness));

    std::optional<SubsetAutomaton> fwd, bwd;
    std::optional<StateLimitExceeded> fwd_error;
    try {
        fwd.emplace(forward_determinize(nfa, cap));
    } catch (const StateLimitExceeded& e) {
        fwd_error.emplace(e);
    }
    try {
        bwd.emplace(backward_determinize(nfa, cap));
    } catch (const StateLimitExceeded&) {
        if (fwd_error) throw *fwd_error;
    }

    BoundReport report;
    report.n = nfa.state_count();
    if (fwd) report.k = fwd->size();
    if (bwd) report.l = bwd->size();
    report.bound = complement_bound(report.n);
    report.bound_sq = complement_bound_sq(report.n);

    const bool use_forward = fwd && (!bwd || fwd->size() <= bwd->size());
    const SubsetAutomaton& chosen = use_forward ? *fwd : *bwd;
    report.chosen = chosen.direction();
    report.result_states = chosen.size();
    return {chosen.complemented(), std::move(report)};
}

EquivalenceResult equivalent(const Nfa& a, const Nfa& b, std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("state cap must be positive");
    if (a.alphabet_size() != b.alphabet_size()) throw std::invalid_argument("automata have different alphabets");
    std::vector<Index> to_b(a.alphabet_size());
    for (Index s = 0; s < a.alphabet_size(); ++s) {
        const auto found = b.find_symbol(a.alphabet()[s]);
        if (!found) throw std::invalid_argument("automata have different alphabets");
        to_b[s] = *found;
    }

    struct Node {
        StateSet left, right;
        std::size_t prev;
        Index symbol;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<StateSet, StateSet>& p) const {
            return p.first.hash() * 31 + p.second.hash();
        }
    };
    std::vector<Node> nodes;
    std::unordered_map<std::pair<StateSet, StateSet>, std::size_t, PairHash> seen;

    nodes.push_back({a.initial(), b.initial(), kUnreached, 0});
    seen.emplace(std::make_pair(a.initial(), b.initial()), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const bool acc_a = nodes[i].left.intersects(a.final_states());
        const bool acc_b = nodes[i].right.intersects(b.final_states());
        if (acc_a != acc_b) {
            Word w;
            for (std::size_t id = i; nodes[id].prev != kUnreached; id = nodes[id].prev) w.push_back(nodes[id].symbol);
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
        }
        for (Index s = 0; s < a.alphabet_size(); ++s) {
            auto key = std::make_pair(step_forward(a, nodes[i].left, s), step_forward(b, nodes[i].right, to_b[s]));
            if (seen.contains(key)) continue;
            if (nodes.size() >= cap) throw StateLimitExceeded(cap, nodes.size() + 1);
            seen.emplace(key, nodes.size());
            nodes.push_back({std::move(key.first), std::move(key.second), i, s});
        }
    }
    return {};
}

}  // namespace ufa
