#include "ufa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ufa {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count, VertexSet(vertex_count)) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        adjacency_[e.u].set(e.v);
        adjacency_[e.v].set(e.u);
    }
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Index v = 0; v < n; ++v) {
        g.adjacency_[v] = VertexSet::full(n);
        g.adjacency_[v].reset(v);
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Index u = 0; u < vertex_count(); ++u)
        adjacency_[u].for_each([&](Index v) {
            if (u < v) out.push_back({u, v});
        });
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const VertexSet& row : adjacency_) twice += row.count();
    return twice / 2;
}

bool is_clique(const Graph& g, const VertexSet& x) {
    const std::size_t size = x.count();
    bool ok = true;
    x.for_each([&](Index v) { ok = ok && g.neighbors(v).intersection_count(x) + 1 == size; });
    return ok;
}

bool is_coclique(const Graph& g, const VertexSet& x) {
    bool ok = true;
    x.for_each([&](Index v) { ok = ok && !g.neighbors(v).intersects(x); });
    return ok;
}

Graph complement_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.push_back({u, v});
    return Graph(n, edges);
}

namespace {

// Cliques contained in `candidates` whose members all extend the current
// clique; include/exclude recursion in ascending vertex order.
template <typename Acc>
Acc count_extensions(const Graph& g, const VertexSet& candidates) {
    const std::size_t size = candidates.count();
    if (size == 0) return Acc(1);

    bool all_adjacent = true, none_adjacent = true;
    candidates.for_each([&](Index v) {
        const std::size_t inside = g.neighbors(v).intersection_count(candidates);
        all_adjacent = all_adjacent && inside + 1 == size;
        none_adjacent = none_adjacent && inside == 0;
    });
    if (all_adjacent) return Acc(1) << size;
    if (none_adjacent) return Acc(size + 1);

    Acc total(1);
    VertexSet rest = candidates;
    candidates.for_each([&](Index v) {
        rest.reset(v);
        total += count_extensions<Acc>(g, rest & g.neighbors(v));
    });
    return total;
}

void collect_cliques(const Graph& g, VertexSet& current, const VertexSet& candidates, std::vector<VertexSet>& out) {
    out.push_back(current);
    VertexSet rest = candidates;
    candidates.for_each([&](Index v) {
        rest.reset(v);
        current.set(v);
        collect_cliques(g, current, rest & g.neighbors(v), out);
        current.reset(v);
    });
}

}  // namespace

Count count_cliques(const Graph& g) {
    const VertexSet all = VertexSet::full(g.vertex_count());
    if (g.vertex_count() < 63) return Count(count_extensions<std::uint64_t>(g, all));
    return count_extensions<Count>(g, all);
}

Count count_cocliques(const Graph& g) { return count_cliques(complement_graph(g)); }

std::vector<VertexSet> enumerate_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet current(g.vertex_count());
    collect_cliques(g, current, VertexSet::full(g.vertex_count()), out);
    std::sort(out.begin(), out.end(), &VertexSet::shortlex_less);
    return out;
}

std::vector<VertexSet> enumerate_cocliques(const Graph& g) { return enumerate_cliques(complement_graph(g)); }

std::vector<VertexSet> clique_coclique_partitions(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    if (s.universe() != n) throw std::invalid_argument("vertex set does not belong to this graph");

    // Grow S one vertex at a time; each X in P_S extends to at most two
    // members of P_{S+v}, and both only when X = N(v) within S.
    std::vector<VertexSet> current{VertexSet(n)};
    VertexSet seen(n);
    s.for_each([&](Index v) {
        const VertexSet nbrs = g.neighbors(v) & seen;
        std::vector<VertexSet> next;
        for (const VertexSet& x : current) {
            if (nbrs.is_subset_of(x)) next.push_back(x);
            if (x.is_subset_of(nbrs)) {
                VertexSet with_v = x;
                with_v.set(v);
                next.push_back(std::move(with_v));
            }
        }
        current = std::move(next);
        seen.set(v);
    });
    std::sort(current.begin(), current.end(), &VertexSet::shortlex_less);
    return current;
}

std::vector<CliqueCocliqueCover> clique_coclique_covers(const Graph& g, const VertexSet& s) {
    std::vector<CliqueCocliqueCover> out;
    for (const VertexSet& x : clique_coclique_partitions(g, s)) out.push_back({x, s - x});
    // Overlapping at v forces X = N_S(v) + v and Y = S \ N_S(v).
    s.for_each([&](Index v) {
        VertexSet x = g.neighbors(v) & s;
        VertexSet y = s - x;
        x.set(v);
        if (is_clique(g, x) && is_coclique(g, y)) out.push_back({std::move(x), std::move(y)});
    });
    std::sort(out.begin(), out.end(), [](const CliqueCocliqueCover& a, const CliqueCocliqueCover& b) {
        if (a.clique != b.clique) return VertexSet::shortlex_less(a.clique, b.clique);
        return VertexSet::shortlex_less(a.coclique, b.coclique);
    });
    return out;
}

ProductBoundReport verify_product_bound(const Graph& g) {
    ProductBoundReport r;
    r.n = g.vertex_count();
    r.cliques = count_cliques(g);
    r.cocliques = count_cocliques(g);
    r.product = r.cliques * r.cocliques;
    r.bound = complement_bound_sq(r.n);
    r.holds = r.product <= r.bound;
    const Count& smaller = r.cliques < r.cocliques ? r.cliques : r.cocliques;
    r.min_side_holds = smaller * smaller <= r.bound;
    return r;
}

std::size_t nearest_k(std::size_t n) {
    if (n == 0) throw std::invalid_argument("nearest_k requires n >= 1");
    // With m = 2k - n, rounding half up means 2^m <= n+1 < 2^(m+2), so m is
    // whichever of floor(log2(n+1)) - 1 and floor(log2(n+1)) has n's parity.
    const auto log_floor = static_cast<std::ptrdiff_t>(std::bit_width(n + 1)) - 1;
    const std::ptrdiff_t m = ((log_floor - static_cast<std::ptrdiff_t>(n)) % 2 == 0) ? log_floor : log_floor - 1;
    const std::ptrdiff_t k = (m + static_cast<std::ptrdiff_t>(n)) / 2;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(n)));
}

Graph extremal_split_graph(std::size_t n) {
    if (n == 0) return Graph(0);
    const std::size_t k = nearest_k(n);
    std::vector<Edge> edges;
    for (Index u = 0; u < k; ++u)
        for (Index v = u + 1; v < k; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace ufa
