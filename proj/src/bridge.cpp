#include "ufa/bridge.hpp"

#include <charconv>
#include <deque>

namespace ufa {

std::string CompositeSymbol::label() const { return (tag == Tag::clique ? "c" : "i") + set.to_string(); }

std::optional<CompositeSymbol> CompositeSymbol::parse(std::string_view label, std::size_t vertex_count) {
    if (label.size() < 3 || (label[0] != 'c' && label[0] != 'i') || label[1] != '{' || label.back() != '}')
        return std::nullopt;
    CompositeSymbol out{label[0] == 'c' ? Tag::clique : Tag::coclique, VertexSet(vertex_count)};
    std::string_view body = label.substr(2, label.size() - 3);
    std::optional<Index> last;
    while (!body.empty()) {
        Index v = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc() || v >= vertex_count || (last && v <= *last)) return std::nullopt;
        out.set.set(v);
        last = v;
        body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
        if (body.empty()) break;
        if (body.front() != ',' || body.size() == 1) return std::nullopt;
        body.remove_prefix(1);
    }
    return out;
}

Graph extract_graph(const Nfa& ufa) {
    if (auto amb = check_unambiguous(ufa); !amb.unambiguous) throw AmbiguousInput(*amb.witness, ufa.render(*amb.witness));

    const std::size_t n = ufa.state_count();
    std::vector<bool> reached(n * n, false);
    std::deque<std::pair<Index, Index>> queue;
    ufa.initial().for_each([&](Index p) {
        ufa.initial().for_each([&](Index q) {
            if (p <= q) {
                reached[p * n + q] = true;
                queue.emplace_back(p, q);
            }
        });
    });
    // Unordered pairs, stored with p <= q.
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        for (Index a = 0; a < ufa.alphabet_size(); ++a) {
            const StateSet& sq = ufa.successors(q, a);
            ufa.successors(p, a).for_each([&](Index p2) {
                sq.for_each([&](Index q2) {
                    const Index lo = std::min(p2, q2), hi = std::max(p2, q2);
                    if (reached[lo * n + hi]) return;
                    reached[lo * n + hi] = true;
                    queue.emplace_back(lo, hi);
                });
            });
        }
    }

    std::vector<Edge> edges;
    for (Index p = 0; p < n; ++p)
        for (Index q = p + 1; q < n; ++q)
            if (reached[p * n + q]) edges.push_back({p, q});
    return Graph(n, edges);
}

Nfa graph_to_ufa(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::vector<VertexSet> cliques = enumerate_cliques(g);
    const std::vector<VertexSet> cocliques = enumerate_cocliques(g);

    std::vector<std::string> alphabet;
    alphabet.reserve(cliques.size() + cocliques.size());
    std::vector<Transition> transitions;
    constexpr Index v0 = 0;
    for (const VertexSet& x : cliques) {
        const auto letter = static_cast<Index>(alphabet.size());
        alphabet.push_back(CompositeSymbol{CompositeSymbol::Tag::clique, x}.label());
        x.for_each([&](Index v) { transitions.push_back({v0, letter, v}); });
    }
    for (const VertexSet& y : cocliques) {
        const auto letter = static_cast<Index>(alphabet.size());
        alphabet.push_back(CompositeSymbol{CompositeSymbol::Tag::coclique, y}.label());
        y.for_each([&](Index v) { transitions.push_back({v, letter, v0}); });
    }

    StateSet ends(n);
    if (n > 0) ends.set(v0);
    return Nfa(n, std::move(alphabet), std::move(transitions), ends, ends);
}

Nfa witness_ufa(std::size_t n) { return graph_to_ufa(extremal_split_graph(n)); }

TightnessReport verify_tightness(std::size_t n, std::size_t cap) {
    const Nfa ufa = witness_ufa(n);
    TightnessReport r;
    r.n = n;
    r.alphabet_size = ufa.alphabet_size();
    r.k = forward_determinize(ufa, cap).size();
    r.l = backward_determinize(ufa, cap).size();
    r.upper = complement_bound(n);
    r.lower = r.upper / 2.0;
    r.upper_sq = complement_bound_sq(n);
    const Count k(r.k), l(r.l);
    r.holds_lower = 4 * k * k >= r.upper_sq && 4 * l * l >= r.upper_sq;
    const Count& smaller = k < l ? k : l;
    r.holds_upper = smaller * smaller <= r.upper_sq;
    return r;
}

}  // namespace ufa
