#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "muwm/bounds.hpp"
#include "muwm/clique.hpp"
#include "muwm/construct.hpp"
#include "muwm/corpus.hpp"
#include "muwm/error.hpp"
#include "muwm/latin.hpp"
#include "muwm/matesearch.hpp"
#include "muwm/simd.hpp"
#include "muwm/spherical.hpp"
#include "support.hpp"

using namespace muwm;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first failure message of a criterion.
struct Gate {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome run(int id, double limit_s, const std::function<void(Gate&)>& body) {
    Gate g;
    const auto t0 = Clock::now();
    try {
        body(g);
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0) g.require(s < limit_s, "runtime " + std::to_string(s) + " s over " + std::to_string(limit_s) + " s");
    std::printf("criterion %d: %s (%.2f s)%s%s\n", id, g.ok ? "PASS" : "FAIL", s, g.ok ? "" : " ", g.why.c_str());
    std::fflush(stdout);
    return {g.ok, g.why};
}

DenseInt dense(std::initializer_list<std::initializer_list<int>> rows) {
    DenseInt d(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (int x : r) d(i, j++) = x;
        ++i;
    }
    return d;
}

// Places literal blocks according to a literal square.
IntMatrix block_layout(const std::vector<DenseInt>& c, const std::vector<std::vector<int>>& sq) {
    const std::size_t n = c[0].rows, t = sq.size();
    IntMatrix m(n * t, n * t);
    for (std::size_t bi = 0; bi < t; ++bi)
        for (std::size_t bj = 0; bj < t; ++bj) {
            const auto& blk = c[static_cast<std::size_t>(sq[bi][bj] - 1)];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(bi * n + i, bj * n + j, static_cast<int>(blk(i, j)));
        }
    return m;
}

const CorpusFamily& fam(const std::string& id) { return testing::family(id); }

void criterion1(Gate& g) {
    const auto corpus = load_corpus();
    const std::vector<std::pair<std::string, std::size_t>> sizes = {
        {"W13_5", 3}, {"W15_12", 7}, {"W16_46", 15}, {"W16_562", 15}, {"W16_569", 15}, {"W16_695", 15}, {"W17_33", 5},
        {"W18_15", 4}, {"W19", 6},   {"W21", 3},     {"W22", 9},      {"W23", 2},      {"W24", 6}};
    g.require(corpus.size() == sizes.size(), "family count " + std::to_string(corpus.size()));
    for (const auto& [id, size] : sizes) {
        const CorpusFamily* f = nullptr;
        for (const auto& c : corpus)
            if (c.entry.id == id) f = &c;
        g.require(f != nullptr, "missing " + id);
        if (!f) continue;
        g.require(f->members.size() == size, id + " has " + std::to_string(f->members.size()) + " members");
        for (const auto& m : f->members) g.require(is_weighing(m, 9), id + " member not W(n,9)");
        for (std::size_t a = 0; a < f->members.size(); ++a)
            for (std::size_t b = a + 1; b < f->members.size(); ++b)
                g.require(unbiased_product(f->members[a], f->members[b], 9), id + " pair not unbiased");
    }
}

void criterion2(Gate& g) {
    const std::vector<long> table = {5, 6, 7, 9, 10, 12, 15, 18, 21, 27, 34, 45, 63, 99, 107, 116, 125, 134, 144, 154, 164};
    for (int n = 10; n <= 30; ++n) {
        const long got = lp_bound_closed(n, 9);
        g.require(got == table[static_cast<std::size_t>(n - 10)], "n=" + std::to_string(n) + " gives " + std::to_string(got));
    }
}

void criterion3(Gate& g) {
    const auto r = lp_bound_delsarte(11, DistanceSet::muwm9(), 5);
    g.require(std::abs(r.family_bound.get_d() - 6.42857) < 1e-4, "n=11 gives " + to_string(r.family_bound));
    const std::vector<long> table = {5, 6, 7, 9, 10, 12, 15, 18, 21, 27, 34, 45, 63, 99};
    for (int n = 10; n <= 23; ++n) {
        const auto b = lp_bound_delsarte(n, DistanceSet::muwm9(), 5);
        const long fl = muwm::floor(b.family_bound).get_si();
        g.require(fl == table[static_cast<std::size_t>(n - 10)], "floor at n=" + std::to_string(n) + " is " + std::to_string(fl));
    }
}

void criterion4(Gate& g) {
    const std::vector<DenseInt> c = {
        dense({{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}}),
        dense({{1, 0, -1, 1}, {0, 0, 0, 0}, {-1, 0, 1, -1}, {1, 0, -1, 1}}),
        dense({{1, 1, 0, -1}, {1, 1, 0, -1}, {0, 0, 0, 0}, {-1, -1, 0, 1}}),
        dense({{1, -1, 1, 0}, {-1, 1, -1, 0}, {1, -1, 1, 0}, {0, 0, 0, 0}}),
        DenseInt(4, 4),
    };
    const std::vector<std::vector<int>> l1 = {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}};
    const std::vector<std::vector<int>> l2 = {{1, 3, 5, 2, 4}, {2, 4, 1, 3, 5}, {3, 5, 2, 4, 1}, {4, 1, 3, 5, 2}, {5, 2, 4, 1, 3}};

    const auto w = example_w43();
    const auto blocks = column_blocks(w, 5);
    for (std::size_t i = 0; i < 5; ++i) g.require(blocks.blocks[i] == c[i], "C" + std::to_string(i + 1) + " differs");

    const auto squares = msls_family(5);
    g.require(squares[0].cells() == l1 && squares[1].cells() == l2, "msls_family(5) does not start with L1, L2");
    const auto w1 = assemble(blocks, LatinSquare::make(l1));
    const auto w2 = assemble(blocks, LatinSquare::make(l2));
    g.require(w1.matrix() == block_layout(c, l1), "W~1 differs");
    g.require(w2.matrix() == block_layout(c, l2), "W~2 differs");
    g.require(are_unbiased(w1, w2), "W~1, W~2 not unbiased");

    const auto f20 = muwm_from_msls(w, squares);
    g.require(f20.size() == 4 && f20.order == 20 && f20.weight == 9, "msls_family(5) family has the wrong shape");
    g.require(verify_family(f20).valid(), "order-20 family fails verification");

    const auto f16 = muwm_from_msls_with_companion(w, msls_family(4));
    g.require(f16.size() == 4 && f16.order == 16 && f16.weight == 9, "companion family has the wrong shape");
    g.require(verify_family(f16).valid(), "order-16 companion family fails verification");
}

void criterion5(Gate& g) {
    for (const auto& [id, want] : {std::pair<std::string, std::size_t>{"W13_5", 3}, {"W15_12", 7}}) {
        const auto& f = fam(id);
        const auto lb = muwm_lower_bound(WeighingMatrix::make(f.members[0], 9), std::chrono::duration<double>(600.0));
        g.require(lb.exact, id + " search not exact");
        g.require(lb.size == want, id + " gives " + std::to_string(lb.size));
        g.require(verify_family(lb.family).valid(), id + " witness family invalid");
    }
}

void stretch() {
    if (std::getenv("MUWM_SKIP_STRETCH")) {
        std::printf("stretch W16_46: SKIPPED (MUWM_SKIP_STRETCH set)\n");
        return;
    }
    const auto t0 = Clock::now();
    const auto& f = fam("W16_46");
    const auto lb = muwm_lower_bound(WeighingMatrix::make(f.members[0], 9), std::chrono::duration<double>(7200.0));
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = lb.size >= 15 && verify_family(lb.family).valid();
    std::printf("stretch W16_46 (non-gating): %s (%.2f s) size=%zu exact=%s mates=%zu\n", ok ? "PASS" : "FAIL", s, lb.size,
                lb.exact ? "true" : "false", lb.mate_count);
    std::fflush(stdout);
}

void criterion6(Gate& g) {
    for (const std::string id : {"W13_5", "W15_12"}) {
        const auto& f = fam(id);
        const auto code = code_of(f.members[0]);
        for (std::size_t j = 1; j < f.members.size(); ++j)
            g.require(rows_in_dual(WeighingMatrix::make(f.members[j], 9), code), id + " member " + std::to_string(j) + " not in dual");
    }
}

void criterion7(Gate& g) {
    for (const std::string id : {"W16_46", "W16_562", "W16_569", "W16_695"}) {
        const auto& f = fam(id);
        const auto vs = vector_system(f.family());
        const auto srg = orthogonality_srg(vs);
        g.require(srg.params.has_value(), id + ": " + srg.diagnostic);
        if (srg.params) {
            const auto& p = *srg.params;
            g.require(p.v == 256 && p.k == 120 && p.lambda == 56 && p.mu == 56, id + " has the wrong SRG parameters");
        }
        const auto doubled = antipodal_double(vs);
        g.require(doubled.size() == 512, id + " doubled system is not 512 points");
        for (auto mode : {SchemeMode::FourClass, SchemeMode::FiveClass}) {
            const auto s = is_association_scheme(relation_partition(doubled, mode));
            g.require(s.is_scheme, id + (mode == SchemeMode::FourClass ? " 4-class: " : " 5-class: ") + s.diagnostic);
        }
    }
}

void criterion8(Gate& g) {
    for (const std::string id : {"W16_46", "W16_562", "W16_569", "W16_695"}) {
        const auto& f = fam(id);
        const auto code = code_of(f.members[0]);
        g.require(is_self_dual(code), id + " code not self-dual");
        g.require(code.dimension() == 8, id + " code dimension " + std::to_string(code.dimension()));
        g.require(gf3::min_weight(code) == 6, id + " min weight differs");
        for (std::size_t j = 1; j < f.members.size(); ++j)
            g.require(code_of(f.members[j]) == code, id + " member " + std::to_string(j) + " has a different code");
    }
}

void lemma_identities(Gate& g) {
    testing::Rng rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        const auto w = testing::random_corpus_member(rng, testing::corpus());
        const std::size_t n = w.order();
        const auto t = n + static_cast<std::size_t>(testing::uniform(rng, 0, 3));
        const auto b = column_blocks(w, t);
        DenseInt sum(n, n);
        for (std::size_t i = 0; i < t; ++i) {
            const auto& ci = b.blocks[i];
            g.require(ci.symmetric(), "C_i not symmetric");
            g.require(multiply(ci, ci) == scaled(ci, w.weight()), "C_i^2 != k C_i");
            for (std::size_t j = i + 1; j < t; ++j) g.require(multiply(ci, b.blocks[j]).is_zero(), "C_i C_j != 0");
            for (std::size_t x = 0; x < n * n; ++x) sum.values[x] += ci.values[x];
        }
        DenseInt kid(n, n);
        for (std::size_t i = 0; i < n; ++i) kid(i, i) = w.weight();
        g.require(sum == kid, "sum of C_i != kI");
    }
}

void signed_permutations(Gate& g) {
    testing::Rng rng(92);
    const auto& corpus = testing::corpus();
    for (int trial = 0; trial < 200; ++trial) {
        const auto& f = corpus[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(corpus.size()) - 1))];
        const auto a = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(f.members.size()) - 1));
        auto b = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(f.members.size()) - 2));
        if (b >= a) ++b;
        const auto pa = testing::signed_row_permutation(rng, f.members[a]);
        const auto pb = testing::signed_row_permutation(rng, f.members[b]);
        g.require(is_weighing(pa, 9) && unbiased_product(pa, pb, 9), "unbiasedness lost under a signed row permutation");
    }
}

void msls_suitability(Gate& g) {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = msls_family(q);
        g.require(f.size() == static_cast<std::size_t>(q - 1), "q=" + std::to_string(q) + " family size");
        for (std::size_t a = 0; a < f.size(); ++a) {
            g.require(is_latin(f[a].cells()), "q=" + std::to_string(q) + " square not Latin");
            for (std::size_t b = a + 1; b < f.size(); ++b)
                g.require(are_suitable(f[a], f[b]), "q=" + std::to_string(q) + " pair not suitable");
        }
    }
}

void clique_vs_brute(Gate& g) {
    testing::Rng rng(93);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 20));
        const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        BitGraph gr(n);
        std::bernoulli_distribution edge(density);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (edge(rng)) gr.add_edge(u, v);
        std::size_t best = 0;
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
            if (size <= best) continue;
            bool clique = true;
            for (std::size_t u = 0; u < n && clique; ++u)
                if (mask >> u & 1U)
                    for (std::size_t v = u + 1; v < n && clique; ++v)
                        if ((mask >> v & 1U) && !gr.adjacent(u, v)) clique = false;
            if (clique) best = size;
        }
        const auto r = max_clique(gr);
        g.require(r.exact && r.size == best && gr.is_clique(r.witness), "max clique differs on trial " + std::to_string(trial));
    }
}

void criterion9(Gate& g) {
    lemma_identities(g);
    signed_permutations(g);
    msls_suitability(g);
    clique_vs_brute(g);
}

}  // namespace

int main() {
    std::printf("kernel backend: %s\n", std::string(simd::backend_name(simd::active_backend())).c_str());
    std::vector<Outcome> out;
    out.push_back(run(1, 5, criterion1));
    out.push_back(run(2, 1, criterion2));
    out.push_back(run(3, 10, criterion3));
    out.push_back(run(4, 5, criterion4));
    out.push_back(run(5, 600, criterion5));
    out.push_back(run(6, 5, criterion6));
    out.push_back(run(7, 120, criterion7));
    out.push_back(run(8, 30, criterion8));
    out.push_back(run(9, 0, criterion9));
    stretch();
    std::size_t passed = 0;
    for (const auto& o : out) passed += o.pass;
    std::printf("%zu/%zu criteria passed\n", passed, out.size());
    return passed == out.size() ? 0 : 1;
}
