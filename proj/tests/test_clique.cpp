#include <algorithm>

#include "doctest.h"
#include "muwm/clique.hpp"
#include "muwm/error.hpp"
#include "support.hpp"

using namespace muwm;

namespace {

BitGraph random_graph(testing::Rng& rng, std::size_t n, double density) {
    BitGraph g(n);
    std::bernoulli_distribution edge(density);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// Every vertex subset, as bit masks.
std::vector<std::uint32_t> all_cliques(const BitGraph& g) {
    std::vector<std::uint32_t> out;
    const std::size_t n = g.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            if (mask >> u & 1U)
                for (std::size_t v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1U) && !g.adjacent(u, v)) ok = false;
        if (ok) out.push_back(mask);
    }
    return out;
}

std::vector<std::size_t> bits_of(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < 32; ++v)
        if (mask >> v & 1U) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("BitGraph basics") {
    BitGraph g(70);
    g.add_edge(0, 69);
    g.add_edge(3, 64);
    CHECK(g.adjacent(69, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_edge(5, 5), Error);
    CHECK(g.is_clique({3, 64}));
    CHECK_FALSE(g.is_clique({0, 3}));
}

TEST_CASE("complete and empty graphs") {
    BitGraph k(9);
    for (std::size_t u = 0; u < 9; ++u)
        for (std::size_t v = u + 1; v < 9; ++v) k.add_edge(u, v);
    const auto r = max_clique(k);
    CHECK(r.size == 9);
    CHECK(r.exact);
    CHECK(enumerate_cliques(k, 4).cliques.size() == 126);

    const BitGraph e(5);
    CHECK(max_clique(e).size == 1);
    CHECK(max_clique(BitGraph(0)).size == 0);
    CHECK(enumerate_cliques(e, 2).cliques.empty());
}

TEST_CASE("engine agrees with brute force on 50 random graphs") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 20));
        const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const auto g = random_graph(rng, n, density);
        const auto cliques = all_cliques(g);
        std::size_t best = 0;
        for (auto m : cliques) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(m)));
        CAPTURE(trial);
        const auto r = max_clique(g);
        CHECK(r.size == best);
        CHECK(r.exact);
        CHECK(g.is_clique(r.witness));
        CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));

        const auto size = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<int>(best) + 1));
        std::vector<std::vector<std::size_t>> expect;
        for (auto m : cliques)
            if (static_cast<std::size_t>(std::popcount(m)) == size) expect.push_back(bits_of(m));
        std::sort(expect.begin(), expect.end());
        const auto got = enumerate_cliques(g, size);
        CHECK(got.complete);
        CHECK(got.cliques == expect);
    }
}

TEST_CASE("limits, budgets and determinism") {
    testing::Rng rng(32);
    const auto g = random_graph(rng, 60, 0.5);
    const auto all = enumerate_cliques(g, 4);
    REQUIRE(all.cliques.size() > 10);
    const auto some = enumerate_cliques(g, 4, 10);
    CHECK(some.cliques.size() == 10);
    CHECK_FALSE(some.complete);
    CHECK(enumerate_cliques(g, 4, 10).cliques == some.cliques);
    CHECK(max_clique(g).witness == max_clique(g).witness);

    const auto dense = random_graph(rng, 400, 0.9);
    const auto r = max_clique(dense, std::chrono::duration<double>(0.0));
    CHECK_FALSE(r.exact);
    CHECK(dense.is_clique(r.witness));
}
