#pragma once

#include <string>
#include <string_view>

#include "ufa/graph.hpp"
#include "ufa/nfa.hpp"

namespace ufa {

// Line-oriented automaton format:
//
//   nfa <state_count>
//   alphabet <sym> ...
//   initial <state> ...
//   final <state> ...
//   trans <src> <sym> <dst>
//
// Blank lines and lines starting with '#' are ignored. The header comes
// first; alphabet, initial and final appear at most once each (missing means
// empty) and the alphabet precedes any trans line. Throws ParseError.
Nfa parse_automaton(std::string_view text);

// Canonical form: transitions sorted by (source, symbol index, target).
std::string serialize_automaton(const Nfa& nfa);

// "graph <n>" followed by "edge <u> <v>" lines.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace ufa
