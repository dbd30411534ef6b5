#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ufa/automata.hpp"
#include "ufa/graph.hpp"
#include "ufa/nfa.hpp"

namespace ufa {

// Letter of graph_to_ufa's alphabet: a clique (tag 1) or a coclique (tag 2).
struct CompositeSymbol {
    enum class Tag { clique = 1, coclique = 2 };
    Tag tag;
    VertexSet set;

    // "c{0,2}" for cliques, "i{1}" for cocliques, "c{}" for the empty clique.
    std::string label() const;
    static std::optional<CompositeSymbol> parse(std::string_view label, std::size_t vertex_count);
};

// Graph on the UFA's states: {q, q'} is an edge when some word leads from
// initial states to both q and q' (q != q'). Throws AmbiguousInput.
Graph extract_graph(const Nfa& ufa);

// UFA on the graph's vertices with I = F = {0}: clique letters go from 0 to
// every member, coclique letters from every member to 0. Alphabet lists all
// cliques, then all cocliques, each in enumerate_cliques order.
Nfa graph_to_ufa(const Graph& g);

// graph_to_ufa(extremal_split_graph(n)).
Nfa witness_ufa(std::size_t n);

struct TightnessReport {
    std::size_t n = 0;
    std::size_t k = 0;  // forward determinization size
    std::size_t l = 0;  // backward determinization size
    std::size_t alphabet_size = 0;
    double lower = 0.0;  // sqrt(n+1) * 2^(n/2) / 2
    double upper = 0.0;  // sqrt(n+1) * 2^(n/2)
    Count upper_sq;      // (n+1) * 2^n; lower^2 is upper_sq / 4
    bool holds_lower = false;
    bool holds_upper = false;
    bool holds() const { return holds_lower && holds_upper; }
};

// Determinizes witness_ufa(n) both ways and checks the bounds by comparing
// squares exactly. Throws StateLimitExceeded.
TightnessReport verify_tightness(std::size_t n, std::size_t cap = kDefaultCap);

}  // namespace ufa
