#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "ufa/cli/commands.hpp"
#include "ufa/graph.hpp"

using namespace ufa;
using testing::members_of;

namespace {

Graph path3() {
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    return Graph(3, e);
}

VertexSet vs(std::size_t n, std::initializer_list<Index> m) { return VertexSet(n, m); }

std::vector<Index> to_vec(const VertexSet& s) { return s.members(); }

}  // namespace

TEST_CASE("graph construction") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
    const std::vector<Edge> far{{0, 2}};
    CHECK_THROWS_AS(Graph(2, far), std::out_of_range);
    const std::vector<Edge> twice{{1, 0}, {0, 1}};
    const Graph g(2, twice);
    CHECK(g.edge_count() == 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    CHECK(Graph::complete(4).edge_count() == 6);
}

TEST_CASE("is_clique") {
    CHECK(is_clique(path3(), vs(3, {})));
    CHECK(is_clique(path3(), vs(3, {0, 1})));
    CHECK_FALSE(is_clique(path3(), vs(3, {0, 2})));
    CHECK(is_clique(Graph::complete(3), vs(3, {0, 1, 2})));
    CHECK(is_coclique(path3(), vs(3, {0, 2})));
    CHECK_FALSE(is_coclique(path3(), vs(3, {0, 1})));
}

TEST_CASE("complement_graph") {
    CHECK(complement_graph(Graph::complete(3)) == Graph(3));
    CHECK(complement_graph(Graph(4)) == Graph::complete(4));
    const std::vector<Edge> e{{0, 2}};
    CHECK(complement_graph(path3()) == Graph(3, e));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Graph g = testing::random_graph(rng, rng() % 70, 0.5);
        CHECK(complement_graph(complement_graph(g)) == g);
    }
}

TEST_CASE("count_cliques on named graphs") {
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(count_cliques(Graph::complete(n)) == Count(1) << n);
        CHECK(count_cocliques(Graph::complete(n)) == n + 1);
    }
    CHECK(count_cliques(Graph(0)) == 1);
    CHECK(count_cliques(path3()) == 6);
    CHECK(count_cocliques(path3()) == 5);
    // Arbitrary precision beyond 64 bits.
    CHECK(count_cliques(Graph::complete(100)) == Count(1) << 100);
    CHECK(count_cocliques(Graph::complete(100)) == 101);
}

TEST_CASE("count_cliques matches subset enumeration") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = rng() % 13;
        const Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        CAPTURE(n);
        CHECK(count_cliques(g) == testing::naive_count_cliques(g));
        CHECK(count_cocliques(g) == testing::naive_count_cocliques(g));
    }
}

TEST_CASE("enumerate_cliques") {
    const auto single = enumerate_cliques(Graph(1));
    REQUIRE(single.size() == 2);
    CHECK(single[0].empty());
    CHECK(to_vec(single[1]) == std::vector<Index>{0});

    const auto k2 = enumerate_cliques(Graph::complete(2));
    REQUIRE(k2.size() == 4);
    CHECK(to_vec(k2[1]) == std::vector<Index>{0});
    CHECK(to_vec(k2[2]) == std::vector<Index>{1});
    CHECK(to_vec(k2[3]) == std::vector<Index>{0, 1});

    const auto p = enumerate_cliques(path3());
    std::vector<std::string> rendered;
    for (const auto& c : p) rendered.push_back(c.to_string());
    CHECK(rendered == std::vector<std::string>{"{}", "{0}", "{1}", "{2}", "{0,1}", "{1,2}"});

    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const Graph g = testing::random_graph(rng, rng() % 10, 0.5);
        const auto all = enumerate_cliques(g);
        CHECK(all.size() == count_cliques(g));
        std::set<std::vector<Index>> distinct;
        for (const auto& c : all) {
            CHECK(testing::naive_is_clique(g, c.members()));
            distinct.insert(c.members());
        }
        CHECK(distinct.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end(), &VertexSet::shortlex_less));
    }
}

TEST_CASE("clique_coclique_partitions") {
    const auto empty = clique_coclique_partitions(path3(), vs(3, {}));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    const Graph edge = Graph::complete(2);
    const auto split = clique_coclique_partitions(edge, vs(2, {0, 1}));
    std::vector<std::string> rendered;
    for (const auto& x : split) rendered.push_back(x.to_string());
    CHECK(rendered == std::vector<std::string>{"{0}", "{1}", "{0,1}"});

    for (std::size_t n = 1; n <= 6; ++n) {
        const auto all = clique_coclique_partitions(Graph::complete(n), VertexSet::full(n));
        CHECK(all.size() == n + 1);
        for (const auto& x : all) CHECK(x.count() + 1 >= n);
    }
}

TEST_CASE("clique_coclique_covers") {
    const auto empty = clique_coclique_covers(Graph(2), vs(2, {}));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].clique.empty());
    CHECK(empty[0].coclique.empty());

    const auto single = clique_coclique_covers(Graph(1), vs(1, {0}));
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& c : single) got.insert({c.clique.to_string(), c.coclique.to_string()});
    CHECK(got == std::set<std::pair<std::string, std::string>>{{"{0}", "{}"}, {"{}", "{0}"}, {"{0}", "{0}"}});

    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(clique_coclique_covers(Graph::complete(n), VertexSet::full(n)).size() == 2 * n + 1);
}

TEST_CASE("partitions and covers equal brute force on all graphs with n <= 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n ? n - 1 : 0) / 2)); ++mask) {
            const Graph g = cli::labeled_graph(n, mask);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                const VertexSet set(n, members_of(s));
                std::set<std::vector<Index>> parts;
                for (const auto& x : clique_coclique_partitions(g, set)) parts.insert(x.members());
                CHECK(parts == testing::naive_partitions(g, s));
                CHECK(parts.size() <= set.count() + 1);

                std::set<std::pair<std::vector<Index>, std::vector<Index>>> covers;
                for (const auto& c : clique_coclique_covers(g, set)) covers.insert({c.clique.members(), c.coclique.members()});
                CHECK(covers == testing::naive_covers(g, s));
                CHECK(covers.size() <= 2 * set.count() + 1);
            }
        }
    }
}

TEST_CASE("cover sizes sum to the clique-coclique product") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = rng() % 9;
        const Graph g = testing::random_graph(rng, n, 0.5);
        Count total = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            total += clique_coclique_covers(g, VertexSet(n, members_of(s))).size();
        CHECK(total == count_cliques(g) * count_cocliques(g));
    }
}

TEST_CASE("verify_product_bound") {
    const auto k3 = verify_product_bound(Graph::complete(3));
    CHECK(k3.cliques == 8);
    CHECK(k3.cocliques == 4);
    CHECK(k3.product == 32);
    CHECK(k3.bound == 32);
    CHECK(k3.holds);
    CHECK(k3.min_side_holds);

    const auto empty = verify_product_bound(Graph(0));
    CHECK(empty.product == 1);
    CHECK(empty.bound == 1);
    CHECK(empty.holds);

    const auto p = verify_product_bound(path3());
    CHECK(p.product == 30);
    CHECK(p.bound == 32);
    CHECK(p.holds);
}

TEST_CASE("nearest_k") {
    CHECK(nearest_k(2) == 1);
    CHECK(nearest_k(4) == 3);
    CHECK(nearest_k(7) == 5);
    CHECK(nearest_k(1) == 1);  // target exactly 0.5
    CHECK_THROWS_AS(nearest_k(0), std::invalid_argument);

    // Floating-point reference, skipping targets within 1e-9 of a half.
    for (std::size_t n = 1; n <= 5000; ++n) {
        const double target = n / 2.0 + 0.5 * std::log2((n + 1) / 2.0);
        const double frac = target - std::floor(target);
        if (std::abs(frac - 0.5) < 1e-9) {
            CHECK(nearest_k(n) == static_cast<std::size_t>(std::ceil(target)));
        } else {
            CHECK(nearest_k(n) == static_cast<std::size_t>(std::llround(target)));
        }
    }
}

TEST_CASE("extremal_split_graph") {
    const Graph g4 = extremal_split_graph(4);
    const std::vector<Edge> k3{{0, 1}, {0, 2}, {1, 2}};
    CHECK(g4 == Graph(4, k3));
    CHECK(count_cliques(g4) == 9);
    CHECK(count_cocliques(g4) == 8);

    CHECK(extremal_split_graph(0) == Graph(0));
    CHECK(count_cliques(extremal_split_graph(0)) == 1);

    CHECK(extremal_split_graph(2) == Graph(2));
    CHECK(count_cliques(extremal_split_graph(2)) == 3);
    CHECK(count_cocliques(extremal_split_graph(2)) == 4);

    for (std::size_t n = 0; n <= 24; ++n) {
        const Graph g = extremal_split_graph(n);
        const Count c = count_cliques(g), d = count_cocliques(g);
        const Count bound = Count(n + 1) << n;
        CAPTURE(n);
        CHECK(4 * c * c >= bound);
        CHECK(4 * d * d >= bound);
        if (n > 0) {
            const std::size_t k = nearest_k(n);
            CHECK(c >= Count(1) << k);
            CHECK(d == Count(k + 1) << (n - k));
        }
    }
}
