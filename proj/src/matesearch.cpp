#include "muwm/matesearch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "muwm/error.hpp"
#include "muwm/simd.hpp"

namespace muwm {

namespace {

int checked_root(int k) {
    const int s = exact_sqrt(k);
    if (k % 3 != 0 || s < 0)
        throw Error("mate search needs a weight divisible by 3 that is a perfect square, got " + std::to_string(k));
    return s;
}

}  // namespace

Gamma build_gamma(const WeighingMatrix& w1, std::size_t cap) {
    const int k = w1.weight();
    const int root = checked_root(k);
    const std::size_t n = w1.order();
    const auto dual = gf3::dual_code(code_of(w1));
    if (dual.dimension() > cap)
        throw CapExceeded("dual code dimension " + std::to_string(dual.dimension()) + " exceeds the cap " +
                          std::to_string(cap));
    const auto words = gf3::enumerate_codewords(dual, static_cast<std::size_t>(k), true, cap);

    const auto& m = w1.matrix();
    const auto& kern = simd::kernels();
    std::vector<std::vector<std::int8_t>> keep;
    std::vector<std::int32_t> prods(n);
    IntMatrix probe(1, n);
    for (const auto& c : words) {
        for (std::size_t j = 0; j < n; ++j) probe.set(0, j, c[j] == 2 ? -1 : c[j]);
        kern.dot_rows(probe.row_data(0), m.data(), n, m.stride(), prods.data());
        if (std::all_of(prods.begin(), prods.end(), [root](std::int32_t p) { return p == 0 || p == root || p == -root; }))
            keep.emplace_back(probe.row_data(0), probe.row_data(0) + n);
    }
    std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) { return row_less(a, b); });

    Gamma g;
    g.dual_dimension = dual.dimension();
    g.vertices = IntMatrix(keep.size(), n);
    for (std::size_t i = 0; i < keep.size(); ++i)
        std::copy(keep[i].begin(), keep[i].end(), g.vertices.row_data(i));
    g.graph = BitGraph(keep.size());
    std::vector<std::int32_t> row_prods(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        kern.dot_rows(g.vertices.row_data(i), g.vertices.data(), keep.size(), g.vertices.stride(), row_prods.data());
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (row_prods[j] == 0) g.graph.add_edge(i, j);
    }
    return g;
}

MateSearch find_mates(const WeighingMatrix& w1, std::optional<std::size_t> limit, Budget budget) {
    MateSearch out{build_gamma(w1), {}, true};
    const std::size_t n = w1.order();
    const auto cliques = enumerate_cliques(out.gamma.graph, n, limit, budget);
    out.complete = cliques.complete;
    out.mates.reserve(cliques.cliques.size());
    for (const auto& vs : cliques.cliques) {
        IntMatrix rows(n, n);
        for (std::size_t i = 0; i < n; ++i)
            std::copy_n(out.gamma.vertices.row_data(vs[i]), n, rows.row_data(i));
        // n pairwise orthogonal rows of squared norm k: checked, not assumed.
        if (!is_weighing(rows, w1.weight())) throw Error("find_mates: clique rows do not form a weighing matrix");
        auto mate = WeighingMatrix::make(std::move(rows), w1.weight());
        if (!are_unbiased(mate, w1)) throw Error("find_mates: mate is not unbiased with the base");
        out.mates.push_back(Mate{std::move(mate), vs});
    }
    return out;
}

std::optional<std::vector<std::size_t>> locate_in_gamma(const Gamma& gamma, const IntMatrix& a) {
    const auto norm = normalize_rows(a);
    const std::size_t count = gamma.vertices.rows();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < norm.rows(); ++i) {
        std::size_t lo = 0, hi = count;
        const auto target = norm.row(i);
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (row_less(gamma.vertices.row(mid), target))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == count || !std::ranges::equal(gamma.vertices.row(lo), target)) return std::nullopt;
        out.push_back(lo);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BitGraph build_mate_graph(const WeighingMatrix& w1, const MateSearch& search) {
    const int root = checked_root(w1.weight());
    const auto& verts = search.gamma.vertices;
    const std::size_t nv = verts.rows();
    const std::size_t words = (nv + 63) / 64;
    const auto& kern = simd::kernels();

    // compat[v]: vertices whose inner product with v lies in {0, +-sqrt(k)}.
    std::vector<std::uint64_t> compat(nv * words, 0);
    std::vector<std::int32_t> prods(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        kern.dot_rows(verts.row_data(i), verts.data(), nv, verts.stride(), prods.data());
        for (std::size_t j = 0; j < nv; ++j)
            if (prods[j] == 0 || prods[j] == root || prods[j] == -root)
                compat[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    const auto& mates = search.mates;
    const std::size_t nm = mates.size();
    // For each mate: its vertex bitset and the vertices compatible with all of it.
    std::vector<std::uint64_t> members(nm * words, 0), reach(nm * words, ~std::uint64_t{0});
    for (std::size_t m = 0; m < nm; ++m) {
        std::uint64_t* r = reach.data() + m * words;
        for (auto v : mates[m].vertex_set) {
            members[m * words + v / 64] |= std::uint64_t{1} << (v % 64);
            kern.and_into(r, r, compat.data() + v * words, words);
        }
    }
    // A neighbour's smallest vertex must itself be compatible with all of
    // mate a, so only those buckets are scanned.
    std::vector<std::vector<std::size_t>> by_first(nv);
    for (std::size_t m = 0; m < nm; ++m)
        if (!mates[m].vertex_set.empty()) by_first[mates[m].vertex_set.front()].push_back(m);
    BitGraph g(nm);
    for (std::size_t a = 0; a < nm; ++a) {
        const std::uint64_t* r = reach.data() + a * words;
        for (std::size_t w = 0; w < words; ++w)
            for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                for (auto b : by_first[v])
                    if (b > a && kern.and_count(members.data() + b * words, r, words) == mates[b].vertex_set.size())
                        g.add_edge(a, b);
            }
    }
    return g;
}

LowerBound muwm_lower_bound(const WeighingMatrix& w1, Budget budget, std::optional<std::size_t> mate_limit) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    auto search = find_mates(w1, mate_limit, budget);
    const auto graph = build_mate_graph(w1, search);

    Budget rest = std::nullopt;
    if (budget) {
        const std::chrono::duration<double> used = Clock::now() - start;
        rest = std::max(std::chrono::duration<double>(0), *budget - used);
    }
    const auto clique = max_clique(graph, rest);

    LowerBound out;
    out.size = 1 + clique.size;
    out.exact = clique.exact && search.complete;
    out.mate_count = search.mates.size();
    out.mate_graph_edges = graph.edge_count();
    std::vector<IntMatrix> members{w1.matrix()};
    std::vector<std::string> labels{"W1"};
    for (auto m : clique.witness) {
        members.push_back(search.mates[m].matrix.matrix());
        labels.push_back("mate" + std::to_string(m));
    }
    out.family = make_family(std::move(members), w1.weight(), std::move(labels));
    return out;
}

}  // namespace muwm
