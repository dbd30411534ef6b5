#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ufa/graph.hpp"

namespace ufa::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,     // a checked bound failed; unreachable if the theory holds
    kPrecondition = 2,  // unreadable/ambiguous input, bad arguments
    kResourceCap = 3,   // determinization exceeded --cap
};

// Entry point shared by the `ufa` binary and the tests. `args` excludes the
// program name. Output documents go to --output when given, else to `out`
// after the summary line.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Default cap: UFA_CAP when set to a positive integer, else kDefaultCap.
std::size_t default_cap();

// The labeled graph on n vertices whose edge set is given by the bits of
// `mask`, bit i standing for the i-th pair (u, v), u < v, in lexicographic order.
Graph labeled_graph(std::size_t n, std::uint64_t mask);

struct GraphSweep {
    std::size_t n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t violations = 0;
};

// Checks every labeled graph on n vertices (n <= 6): the clique/coclique
// product bound, the min-side bound, |P_S| <= |S|+1 and |R_S| <= 2|S|+1 for
// every S, and that the |R_S| sum to cliques * cocliques.
GraphSweep sweep_graphs(std::size_t n, const std::function<void(const Graph&, const std::string&)>& on_violation = {});

}  // namespace ufa::cli
