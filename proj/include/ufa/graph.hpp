#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ufa/automata.hpp"
#include "ufa/bitset.hpp"

namespace ufa {

struct Edge {
    Index u;
    Index v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    explicit Graph(std::size_t vertex_count = 0);
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    static Graph complete(std::size_t n);

    std::size_t vertex_count() const { return adjacency_.size(); }
    bool adjacent(Index u, Index v) const { return adjacency_[u].test(v); }
    const VertexSet& neighbors(Index v) const { return adjacency_[v]; }
    // Each edge once with u < v, sorted.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adjacency_;
};

bool is_clique(const Graph& g, const VertexSet& x);
bool is_coclique(const Graph& g, const VertexSet& x);

Graph complement_graph(const Graph& g);

// Number of cliques, the empty set included.
Count count_cliques(const Graph& g);
Count count_cocliques(const Graph& g);

// Every clique exactly once, smaller sets first, then lexicographic.
std::vector<VertexSet> enumerate_cliques(const Graph& g);
std::vector<VertexSet> enumerate_cocliques(const Graph& g);

// P_S: subsets X of S with X a clique and S \ X a coclique. At most |S|+1.
std::vector<VertexSet> clique_coclique_partitions(const Graph& g, const VertexSet& s);

struct CliqueCocliqueCover {
    VertexSet clique;
    VertexSet coclique;
    friend bool operator==(const CliqueCocliqueCover&, const CliqueCocliqueCover&) = default;
};

// R_S: pairs (X, Y) with X u Y = S, X a clique, Y a coclique. At most 2|S|+1.
std::vector<CliqueCocliqueCover> clique_coclique_covers(const Graph& g, const VertexSet& s);

struct ProductBoundReport {
    std::size_t n = 0;
    Count cliques;
    Count cocliques;
    Count product;
    Count bound;  // (n+1) * 2^n
    bool holds = false;           // product <= bound
    bool min_side_holds = false;  // min(cliques, cocliques)^2 <= bound
};

ProductBoundReport verify_product_bound(const Graph& g);

// Nearest integer to n/2 + log2((n+1)/2)/2, halves rounded up. n >= 1.
std::size_t nearest_k(std::size_t n);

// K_k on vertices 0..k-1 plus n-k isolated vertices, k = nearest_k(n).
Graph extremal_split_graph(std::size_t n);

}  // namespace ufa
