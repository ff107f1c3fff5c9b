#include <set>

#include "doctest.h"
#include "muwm/error.hpp"
#include "muwm/gf3.hpp"
#include "support.hpp"

using namespace muwm;
using gf3::Vector;

namespace {

// All codewords by brute force over message vectors, independent of the
// Gray-code walk.
std::set<std::vector<int>> brute_codewords(const gf3::Code& c) {
    std::set<std::vector<int>> out;
    const std::size_t k = c.dimension();
    std::vector<int> msg(k, 0);
    while (true) {
        std::vector<int> w(c.length(), 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < c.length(); ++j) w[j] = (w[j] + msg[i] * c.generator()[i][j]) % 3;
        out.insert(w);
        std::size_t i = 0;
        while (i < k && msg[i] == 2) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
    }
    return out;
}

std::vector<int> entries(const Vector& v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

gf3::Code random_code(testing::Rng& rng, std::size_t len, std::size_t rows) {
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < rows; ++r) {
        Vector v(len);
        for (std::size_t j = 0; j < len; ++j) v.set(j, testing::uniform(rng, 0, 2));
        gens.push_back(v);
    }
    return gf3::rref(len, gens);
}

}  // namespace

TEST_CASE("vector arithmetic") {
    Vector a{1, 2, 0, 1};
    Vector b{2, 2, 1, 0};
    CHECK(a.weight() == 3);
    CHECK(gf3::dot(a, b) == (2 + 4 + 0 + 0) % 3);
    a.axpy(1, b);
    CHECK(a == Vector{0, 1, 1, 1});
    a.scale(2);
    CHECK(a == Vector{0, 2, 2, 2});
    CHECK(a.leading_index() == 1);
    CHECK(Vector(5).is_zero());
    CHECK(Vector{2, 1}.to_signed() == std::vector<std::int8_t>{-1, 1});
    CHECK(Vector{3, -1} == Vector{0, 2});
}

TEST_CASE("rref canonical form and dual") {
    // Repetition code of length 3 and its dual.
    std::vector<Vector> rows{Vector{2, 2, 2}};
    const auto c = gf3::rref(rows);
    CHECK(c.dimension() == 1);
    CHECK(c.generator()[0] == Vector{1, 1, 1});
    const auto d = gf3::dual_code(c);
    CHECK(d.dimension() == 2);
    for (const auto& g : d.generator()) CHECK(gf3::dot(g, Vector{1, 1, 1}) == 0);
    CHECK(gf3::dual_code(d) == c);
    CHECK_THROWS_AS(gf3::rref(std::span<const Vector>{}), Error);
}

TEST_CASE("ternary Golay code is self-dual with minimum weight 6") {
    // Extended ternary Golay code from its standard generator [I | A].
    const int a[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
                         {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
    std::vector<Vector> rows;
    for (int i = 0; i < 6; ++i) {
        Vector v(12);
        v.set(i, 1);
        for (int j = 0; j < 6; ++j) v.set(6 + j, a[i][j]);
        rows.push_back(v);
    }
    const auto g = gf3::rref(rows);
    CHECK(g.dimension() == 6);
    CHECK(gf3::is_self_dual(g));
    CHECK(gf3::min_weight(g) == 6);
    CHECK(gf3::enumerate_codewords(g, 6, false).size() == 264);
}

TEST_CASE("enumeration matches brute force on random codes") {
    testing::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto len = static_cast<std::size_t>(testing::uniform(rng, 1, 12));
        const auto c = random_code(rng, len, static_cast<std::size_t>(testing::uniform(rng, 1, 7)));
        const auto all = brute_codewords(c);
        std::set<std::vector<int>> walked;
        gf3::for_each_codeword(c, [&](const Vector& w) { walked.insert(entries(w)); });
        CHECK(walked == all);

        const auto w = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(len)));
        std::vector<std::vector<int>> expect;
        for (const auto& x : all) {
            const auto wt = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](int e) { return e != 0; }));
            const auto lead = std::find_if(x.begin(), x.end(), [](int e) { return e != 0; });
            if (wt == w && lead != x.end() && *lead == 1) expect.push_back(x);
        }
        std::vector<std::vector<int>> got;
        for (const auto& v : gf3::enumerate_codewords(c, w, true)) got.push_back(entries(v));
        CHECK(got == expect);

        // Dual: every generator pair orthogonal, dimensions add up.
        const auto d = gf3::dual_code(c);
        CHECK(c.dimension() + d.dimension() == len);
        for (const auto& x : c.generator())
            for (const auto& y : d.generator()) CHECK(gf3::dot(x, y) == 0);
        for (const auto& x : all) {
            Vector v(len);
            for (std::size_t j = 0; j < len; ++j) v.set(j, x[j]);
            CHECK(c.contains(v));
        }
    }
}

TEST_CASE("enumeration cap") {
    testing::Rng rng(22);
    const auto c = random_code(rng, 20, 20);
    REQUIRE(c.dimension() > 3);
    CHECK_THROWS_AS(gf3::enumerate_codewords(c, 5, true, 3), CapExceeded);
    CHECK_THROWS_AS(gf3::min_weight(c, 3), CapExceeded);
}

TEST_CASE("self-orthogonality") {
    std::vector<Vector> rows{Vector{1, 1, 1, 0}};
    CHECK(gf3::is_self_orthogonal(gf3::rref(rows)));
    CHECK_FALSE(gf3::is_self_dual(gf3::rref(rows)));
    std::vector<Vector> bad{Vector{1, 1, 0, 0}};
    CHECK_FALSE(gf3::is_self_orthogonal(gf3::rref(bad)));
}
