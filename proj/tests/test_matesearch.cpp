#include <set>

#include "doctest.h"
#include "muwm/construct.hpp"
#include "muwm/error.hpp"
#include "muwm/matesearch.hpp"
#include "support.hpp"

using namespace muwm;

namespace {

WeighingMatrix member(const std::string& id, std::size_t i) {
    return WeighingMatrix::make(testing::family(id).members[i], 9);
}

// Gamma's vertex set straight from the definition: every {0,+-1} vector of
// weight k with leading +1 whose inner products with the rows of w lie in
// {0, +-sqrt(k)}. No codes involved.
std::set<std::vector<std::int8_t>> brute_gamma(const WeighingMatrix& w) {
    const std::size_t n = w.order();
    const int k = w.weight(), root = exact_sqrt(k);
    std::set<std::vector<std::int8_t>> out;
    std::vector<std::int8_t> x(n, -1);
    // Odometer over {-1, 0, 1}^n.
    while (true) {
        std::size_t wt = 0, lead = n;
        for (std::size_t j = 0; j < n; ++j)
            if (x[j] != 0) {
                ++wt;
                if (lead == n) lead = j;
            }
        if (static_cast<int>(wt) == k && x[lead] == 1) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                int ip = 0;
                for (std::size_t j = 0; j < n; ++j) ip += w.matrix()(i, j) * x[j];
                ok = ip == 0 || ip == root || ip == -root;
            }
            if (ok) out.insert(x);
        }
        std::size_t j = 0;
        while (j < n && x[j] == 1) x[j++] = -1;
        if (j == n) break;
        ++x[j];
    }
    return out;
}

}  // namespace

TEST_CASE("Gamma for the order-13 base matches the definition") {
    const auto w = member("W13_5", 0);
    const auto g = build_gamma(w);
    const auto expect = brute_gamma(w);
    std::set<std::vector<std::int8_t>> got;
    for (std::size_t v = 0; v < g.vertices.rows(); ++v) {
        const auto r = g.vertices.row(v);
        got.emplace(r.begin(), r.end());
        if (v > 0) CHECK(row_less(g.vertices.row(v - 1), r));
    }
    CHECK(got == expect);
    // Regression constants from an independent numpy/networkx enumeration.
    CHECK(g.dual_dimension == 7);
    CHECK(g.vertices.rows() == 78);
    CHECK(g.graph.edge_count() == 1443);
}

TEST_CASE("mates of the order-13 base") {
    const auto w = member("W13_5", 0);
    const auto search = find_mates(w);
    CHECK(search.complete);
    CHECK(search.mates.size() == 2);
    for (const auto& m : search.mates) {
        CHECK(is_weighing(m.matrix.matrix(), 9));
        CHECK(are_unbiased(m.matrix, w));
        CHECK(normalize_rows(m.matrix) == m.matrix);
    }
    for (std::size_t j : {1, 2}) {
        const auto loc = locate_in_gamma(search.gamma, testing::family("W13_5").members[j]);
        REQUIRE(loc.has_value());
        bool found = false;
        for (const auto& m : search.mates) found = found || m.vertex_set == *loc;
        CHECK(found);
    }
    const auto mg = build_mate_graph(w, search);
    CHECK(mg.size() == 2);
    CHECK(mg.edge_count() == 1);
    CHECK(mg.adjacent(0, 1));
}

TEST_CASE("lower bound for the order-13 base") {
    const auto lb = muwm_lower_bound(member("W13_5", 0));
    CHECK(lb.size == 3);
    CHECK(lb.exact);
    CHECK(lb.family.size() == 3);
    CHECK(verify_family(lb.family).valid());
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(build_gamma(example_w43()), Error);  // weight 3 is not a square
    CHECK_THROWS_AS(build_gamma(WeighingMatrix::make(IntMatrix::identity(4), 1)), Error);
    CHECK_THROWS_AS(build_gamma(member("W13_5", 0), 3), CapExceeded);
}

TEST_CASE("a base with an empty Gamma has no mates") {
    // Computed: no weight-9 word of the dual of the Paley W(10, 9) code
    // meets every row in {0, +-3}.
    const auto w = paley_weighing(9);
    const auto s = find_mates(w);
    CHECK(s.gamma.vertices.rows() == brute_gamma(w).size());
    CHECK(s.gamma.vertices.rows() < 10);
    CHECK(s.mates.empty());
    CHECK(s.complete);
    CHECK(muwm_lower_bound(w).size == 1);
}

TEST_CASE("order-15 pipeline regression") {
    const auto w = member("W15_12", 0);
    const auto s = find_mates(w);
    // Frozen from the independent numpy/networkx enumeration.
    CHECK(s.gamma.dual_dimension == 9);
    CHECK(s.gamma.vertices.rows() == 1006);
    CHECK(s.gamma.graph.edge_count() == 105414);
    CHECK(s.mates.size() == 260);
    CHECK(build_mate_graph(w, s).edge_count() == 520);
    for (std::size_t j = 1; j < 7; ++j) {
        const auto loc = locate_in_gamma(s.gamma, testing::family("W15_12").members[j]);
        REQUIRE(loc.has_value());
        bool found = false;
        for (const auto& m : s.mates) found = found || m.vertex_set == *loc;
        CHECK(found);
    }
    const auto again = find_mates(w);
    REQUIRE(again.mates.size() == s.mates.size());
    for (std::size_t i = 0; i < s.mates.size(); ++i) CHECK(again.mates[i].vertex_set == s.mates[i].vertex_set);
}
