#include "muwm/spherical.hpp"

#include <algorithm>
#include <set>

#include "muwm/error.hpp"
#include "muwm/simd.hpp"

namespace muwm {

std::vector<int> ScaledVectorSet::vector(std::size_t v) const {
    std::vector<int> out(dimension);
    for (std::size_t j = 0; j < dimension; ++j) out[j] = multiplier[v] * rows(v, j);
    return out;
}

std::int64_t ScaledVectorSet::inner(std::size_t a, std::size_t b) const {
    const auto d = simd::kernels().dot_ternary(rows.row_data(a), rows.row_data(b), rows.stride());
    return static_cast<std::int64_t>(multiplier[a]) * multiplier[b] * d;
}

std::vector<std::int64_t> ScaledVectorSet::gram() const {
    const auto raw = multiply_transpose(rows, rows);
    const std::size_t n = size();
    std::vector<std::int64_t> g(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g[a * n + b] = static_cast<std::int64_t>(multiplier[a]) * multiplier[b] * raw(a, b);
    return g;
}

ScaledVectorSet vector_system(const MuwmFamily& fam) {
    const int scale = exact_sqrt(fam.weight);
    if (scale < 0) throw Error("vector_system: weight " + std::to_string(fam.weight) + " is not a perfect square");
    const std::size_t n = fam.order;
    ScaledVectorSet vs;
    vs.dimension = n;
    vs.scale = scale;
    vs.rows = IntMatrix(n * (fam.size() + 1), n);
    for (std::size_t i = 0; i < n; ++i) {
        vs.rows.set(i, i, 1);
        vs.multiplier.push_back(scale);
        vs.fibre.push_back(0);
    }
    for (std::size_t m = 0; m < fam.size(); ++m) {
        const auto& w = fam.members[m].matrix();
        if (w.rows() != n) throw Error("vector_system: member order mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            std::copy_n(w.row_data(i), n, vs.rows.row_data(vs.fibre.size()));
            vs.multiplier.push_back(1);
            vs.fibre.push_back(m + 1);
        }
    }
    const auto g = vs.gram();
    const std::int64_t s = scale, s2 = static_cast<std::int64_t>(scale) * scale;
    const std::size_t total = vs.size();
    for (std::size_t a = 0; a < total; ++a) {
        if (g[a * total + a] != s2) throw Error("vector_system: vector " + std::to_string(a) + " has the wrong norm");
        for (std::size_t b = a + 1; b < total; ++b) {
            const auto ip = g[a * total + b];
            if (ip != 0 && ip != s && ip != -s)
                throw Error("vector_system: vectors " + std::to_string(a) + " and " + std::to_string(b) +
                            " have inner product " + std::to_string(ip));
        }
    }
    return vs;
}

ScaledVectorSet antipodal_double(const ScaledVectorSet& vs) {
    ScaledVectorSet out;
    out.dimension = vs.dimension;
    out.scale = vs.scale;
    const std::size_t n = vs.size();
    out.rows = IntMatrix(2 * n, vs.dimension);
    for (std::size_t v = 0; v < n; ++v) {
        std::copy_n(vs.rows.row_data(v), vs.dimension, out.rows.row_data(v));
        std::copy_n(vs.rows.row_data(v), vs.dimension, out.rows.row_data(n + v));
        out.rows.negate_row(n + v);
    }
    out.multiplier = vs.multiplier;
    out.multiplier.insert(out.multiplier.end(), vs.multiplier.begin(), vs.multiplier.end());
    out.fibre = vs.fibre;
    out.fibre.insert(out.fibre.end(), vs.fibre.begin(), vs.fibre.end());
    return out;
}

std::vector<std::int64_t> inner_product_spectrum(const ScaledVectorSet& vs) {
    const auto g = vs.gram();
    const std::size_t n = vs.size();
    std::set<std::int64_t> seen;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) seen.insert(g[a * n + b]);
    return {seen.begin(), seen.end()};
}

namespace {

struct Bitsets {
    std::size_t n, words;
    std::vector<std::uint64_t> bits;

    Bitsets(std::size_t count, std::size_t points) : n(points), words((points + 63) / 64), bits(count * words, 0) {}
    std::uint64_t* row(std::size_t r) { return bits.data() + r * words; }
    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
};

}  // namespace

SrgResult orthogonality_srg(const ScaledVectorSet& vs) {
    const std::size_t n = vs.size();
    SrgResult out;
    if (n == 0) {
        out.diagnostic = "empty vector set";
        return out;
    }
    const auto g = vs.gram();
    Bitsets adj(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && g[a * n + b] == 0) adj.set(a, b);
    const auto& k = simd::kernels();
    const std::size_t deg = k.and_count(adj.row(0), adj.row(0), adj.words);
    for (std::size_t a = 1; a < n; ++a)
        if (k.and_count(adj.row(a), adj.row(a), adj.words) != deg) {
            out.diagnostic = "not regular: vertex " + std::to_string(a) + " has a different degree";
            return out;
        }
    std::optional<std::size_t> lambda, mu;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t common = k.and_count(adj.row(a), adj.row(b), adj.words);
            const bool edge = g[a * n + b] == 0;
            auto& slot = edge ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                out.diagnostic = std::string(edge ? "lambda" : "mu") + " not constant at pair (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ")";
                return out;
            }
        }
    if (!mu) {
        out.diagnostic = "no non-edges";
        return out;
    }
    if (!lambda) {
        out.diagnostic = "no edges";
        return out;
    }
    out.params = SrgParameters{n, deg, *lambda, *mu};
    return out;
}

RelationPartition make_partition(std::size_t points, std::vector<std::uint8_t> relation) {
    if (relation.size() != points * points) throw Error("relation matrix has the wrong size");
    RelationPartition rp{points, 0, std::move(relation)};
    std::size_t top = 0;
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y) {
            const auto c = rp(x, y);
            if ((c == 0) != (x == y)) throw Error("class 0 must be exactly the diagonal");
            if (c != rp(y, x)) throw Error("relation classes must be symmetric");
            top = std::max<std::size_t>(top, c);
        }
    rp.classes = top + 1;
    return rp;
}

RelationPartition relation_partition(const ScaledVectorSet& vs, SchemeMode mode) {
    const std::size_t n = vs.size();
    const auto g = vs.gram();
    const std::int64_t s = vs.scale, s2 = s * s;
    std::vector<std::uint8_t> rel(n * n, 0);
    const bool five = mode == SchemeMode::FiveClass;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto ip = g[a * n + b];
            std::uint8_t c;
            if (ip == s)
                c = 1;
            else if (ip == 0)
                c = five ? (vs.fibre[a] == vs.fibre[b] ? 2 : 3) : 2;
            else if (ip == -s)
                c = five ? 4 : 3;
            else if (ip == -s2)
                c = five ? 5 : 4;
            else
                throw Error("relation_partition: unexpected inner product " + std::to_string(ip) + " at (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
            rel[a * n + b] = c;
        }
    auto rp = make_partition(n, std::move(rel));
    rp.classes = five ? 6 : 5;
    return rp;
}

SchemeCheck is_association_scheme(const RelationPartition& rp) {
    const std::size_t n = rp.points;
    if (n > kSchemePointCap)
        throw CapExceeded("association scheme check limited to " + std::to_string(kSchemePointCap) + " points");
    const std::size_t c = rp.classes;
    Bitsets cls(c * n, n);  // row (i * n + x) = {z : (x, z) in R_i}
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) cls.set(static_cast<std::size_t>(rp(x, z)) * n + x, z);

    SchemeCheck out;
    out.p.assign(c, std::vector<std::vector<std::size_t>>(c, std::vector<std::size_t>(c, 0)));
    std::vector<std::vector<bool>> seen(c, std::vector<bool>(c * c, false));
    std::vector<bool> class_seen(c, false);
    const auto& k = simd::kernels();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t h = rp(x, y);
            class_seen[h] = true;
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    // (z, y) in R_j iff (y, z) in R_j by symmetry.
                    const std::size_t cnt = k.and_count(cls.row(i * n + x), cls.row(j * n + y), cls.words);
                    if (!seen[h][i * c + j]) {
                        seen[h][i * c + j] = true;
                        out.p[h][i][j] = cnt;
                    } else if (out.p[h][i][j] != cnt) {
                        out.diagnostic = "p^" + std::to_string(h) + "_{" + std::to_string(i) + "," +
                                         std::to_string(j) + "} not constant at pair (" + std::to_string(x) + ", " +
                                         std::to_string(y) + ")";
                        out.p.clear();
                        return out;
                    }
                }
        }
    for (std::size_t h = 0; h < c; ++h)
        if (!class_seen[h]) {
            out.diagnostic = "class " + std::to_string(h) + " is empty";
            out.p.clear();
            return out;
        }
    out.is_scheme = true;
    return out;
}

}  // namespace muwm
