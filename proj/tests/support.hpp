#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <random>
#include <vector>

#include "muwm/corpus.hpp"
#include "muwm/error.hpp"
#include "muwm/wmatrix.hpp"

namespace muwm::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<std::int8_t> random_ternary(Rng& rng, std::size_t n) {
    std::vector<std::int8_t> v(n);
    for (auto& x : v) x = static_cast<std::int8_t>(uniform(rng, -1, 1));
    return v;
}

/// P * D * m: rows permuted and negated at random.
inline IntMatrix signed_row_permutation(Rng& rng, const IntMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const int sign = uniform(rng, 0, 1) ? 1 : -1;
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, sign * m(perm[i], j));
    }
    return out;
}

/// A random corpus member as a weighing matrix.
inline WeighingMatrix random_corpus_member(Rng& rng, const std::vector<CorpusFamily>& corpus) {
    const auto& fam = corpus[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(corpus.size()) - 1))];
    const auto& m = fam.members[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fam.members.size()) - 1))];
    return WeighingMatrix::make(m, fam.entry.weight);
}

inline const std::vector<CorpusFamily>& corpus() {
    static const auto c = load_corpus();
    return c;
}

inline const CorpusFamily& family(const std::string& id) {
    for (const auto& f : corpus())
        if (f.entry.id == id) return f;
    throw Error("missing family " + id);
}

}  // namespace muwm::testing
