#pragma once

// Brute-force reference routines for tests. They work from the raw
// transition list and edge queries only, never through the bitset rows or
// the subset/pair searches they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ufa/automata.hpp"
#include "ufa/graph.hpp"
#include "ufa/nfa.hpp"

namespace ufa::testing {

using Members = std::vector<Index>;

inline Members members_of(std::uint64_t bits) {
    Members out;
    for (Index v = 0; v < 64; ++v)
        if ((bits >> v) & 1u) out.push_back(v);
    return out;
}

inline bool naive_is_clique(const Graph& g, const Members& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.adjacent(x[i], x[j])) return false;
    return true;
}

inline bool naive_is_coclique(const Graph& g, const Members& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.adjacent(x[i], x[j])) return false;
    return true;
}

// Counts by checking all 2^n subsets.
inline std::uint64_t naive_count_cliques(const Graph& g) {
    std::uint64_t total = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits)
        total += naive_is_clique(g, members_of(bits));
    return total;
}

inline std::uint64_t naive_count_cocliques(const Graph& g) {
    std::uint64_t total = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits)
        total += naive_is_coclique(g, members_of(bits));
    return total;
}

inline std::set<std::vector<Index>> naive_partitions(const Graph& g, std::uint64_t s) {
    std::set<std::vector<Index>> out;
    for (std::uint64_t x = s;; x = (x - 1) & s) {
        if (naive_is_clique(g, members_of(x)) && naive_is_coclique(g, members_of(s & ~x))) out.insert(members_of(x));
        if (x == 0) break;
    }
    return out;
}

inline std::set<std::pair<Members, Members>> naive_covers(const Graph& g, std::uint64_t s) {
    std::set<std::pair<Members, Members>> out;
    for (std::uint64_t x = s;; x = (x - 1) & s) {
        for (std::uint64_t y = s;; y = (y - 1) & s) {
            if ((x | y) == s && naive_is_clique(g, members_of(x)) && naive_is_coclique(g, members_of(y)))
                out.insert({members_of(x), members_of(y)});
            if (y == 0) break;
        }
        if (x == 0) break;
    }
    return out;
}

// Number of accepting runs by depth-first enumeration of every state
// sequence, following the transition list.
inline std::uint64_t enumerate_runs(const Nfa& nfa, const Word& w) {
    std::function<std::uint64_t(Index, std::size_t)> from = [&](Index q, std::size_t pos) -> std::uint64_t {
        if (pos == w.size()) return nfa.final_states().test(q) ? 1 : 0;
        std::uint64_t total = 0;
        for (const Transition& t : nfa.transitions())
            if (t.source == q && t.symbol == w[pos]) total += from(t.target, pos + 1);
        return total;
    };
    std::uint64_t total = 0;
    for (Index q = 0; q < nfa.state_count(); ++q)
        if (nfa.initial().test(q)) total += from(q, 0);
    return total;
}

inline bool brute_accepts(const Nfa& nfa, const Word& w) { return enumerate_runs(nfa, w) > 0; }

// All words over {0..sigma-1} with length <= max_len, shortest first.
inline std::vector<Word> all_words(std::size_t sigma, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Index a = 0; a < sigma; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

// delta(S, w) from the transition list.
inline std::set<Index> naive_image(const Nfa& nfa, std::set<Index> s, const Word& w) {
    for (Index a : w) {
        std::set<Index> next;
        for (const Transition& t : nfa.transitions())
            if (t.symbol == a && s.contains(t.source)) next.insert(t.target);
        s = std::move(next);
    }
    return s;
}

inline std::set<Index> naive_preimage(const Nfa& nfa, const Word& w, std::set<Index> s) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::set<Index> prev;
        for (const Transition& t : nfa.transitions())
            if (t.symbol == *it && s.contains(t.target)) prev.insert(t.source);
        s = std::move(prev);
    }
    return s;
}

inline std::set<Index> to_std_set(const StateSet& s) {
    std::set<Index> out;
    for (Index q = 0; q < s.universe(); ++q)
        if (s.test(q)) out.insert(q);
    return out;
}

// { delta(I, w) } resp. { delta^{-1}(w, F) } grown one word length at a
// time until a length adds no new subset.
inline std::set<std::set<Index>> naive_reachable_subsets(const Nfa& nfa, bool forward) {
    std::set<std::set<Index>> seen;
    const auto start = to_std_set(forward ? nfa.initial() : nfa.final_states());
    std::vector<Word> level{Word{}};
    seen.insert(start);
    while (true) {
        std::vector<Word> next_level;
        bool grew = false;
        for (const Word& w : level)
            for (Index a = 0; a < nfa.alphabet_size(); ++a) {
                Word longer = w;
                if (forward)
                    longer.push_back(a);
                else
                    longer.insert(longer.begin(), a);
                const auto s = forward ? naive_image(nfa, start, longer) : naive_preimage(nfa, longer, start);
                if (seen.insert(s).second) {
                    grew = true;
                    next_level.push_back(std::move(longer));
                }
            }
        // Words whose subset was already seen cannot lead anywhere new.
        if (!grew) break;
        level = std::move(next_level);
    }
    return seen;
}

inline std::vector<std::string> letters(std::size_t sigma) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < sigma; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

// Each possible transition present with probability `density`; initial and
// final states with probability 0.4.
inline Nfa random_nfa(std::mt19937_64& rng, std::size_t n, std::size_t sigma, double density) {
    std::bernoulli_distribution edge(density), mark(0.4);
    std::vector<Transition> transitions;
    for (Index p = 0; p < n; ++p)
        for (Index a = 0; a < sigma; ++a)
            for (Index q = 0; q < n; ++q)
                if (edge(rng)) transitions.push_back({p, a, q});
    std::vector<Index> initial, final_states;
    for (Index q = 0; q < n; ++q) {
        if (mark(rng)) initial.push_back(q);
        if (mark(rng)) final_states.push_back(q);
    }
    return Nfa(n, letters(sigma), std::move(transitions), initial, final_states);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (edge(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

// Random unambiguous automata, drawn until `count` are found.
inline std::vector<Nfa> random_ufas(std::mt19937_64& rng, std::size_t count, std::size_t attempts) {
    std::vector<Nfa> out;
    std::uniform_int_distribution<std::size_t> states(0, 6), symbols(1, 3);
    for (std::size_t i = 0; i < attempts && out.size() < count; ++i) {
        Nfa a = random_nfa(rng, states(rng), symbols(rng), 0.3);
        if (is_unambiguous(a)) out.push_back(std::move(a));
    }
    return out;
}

}  // namespace ufa::testing
