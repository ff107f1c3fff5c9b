#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "muwm/clique.hpp"
#include "muwm/gf3.hpp"
#include "muwm/wmatrix.hpp"

namespace muwm {

/// Vertices are the leading-one weight-k words of C_3(W1)^perp, as {0, +-1}
/// vectors, whose inner product with every row of W1 lies in {0, +-sqrt(k)}.
/// Vertices are in lexicographic order (-1 < 0 < +1); edges join orthogonal
/// vertices.
struct Gamma {
    IntMatrix vertices;
    BitGraph graph;
    std::size_t dual_dimension = 0;
};

/// Throws if the weight is not a multiple of 3 and a perfect square, or if
/// the dual dimension exceeds the enumeration cap.
Gamma build_gamma(const WeighingMatrix& w1, std::size_t cap = gf3::kDefaultEnumerationCap);

struct Mate {
    WeighingMatrix matrix;               // rows in vertex order, so row-normalized
    std::vector<std::size_t> vertex_set; // sorted Gamma indices
};

struct MateSearch {
    Gamma gamma;
    std::vector<Mate> mates;  // sorted by vertex_set
    bool complete = true;
};

MateSearch find_mates(const WeighingMatrix& w1, std::optional<std::size_t> limit = std::nullopt,
                      Budget budget = std::nullopt);

/// Gamma vertex indices of the rows of normalize_rows(a), or nullopt if some
/// row is not a vertex.
std::optional<std::vector<std::size_t>> locate_in_gamma(const Gamma& gamma, const IntMatrix& a);

/// Mates adjacent when unbiased.
BitGraph build_mate_graph(const WeighingMatrix& w1, const MateSearch& search);

struct LowerBound {
    std::size_t size = 0;   // 1 + max clique of the mate graph
    MuwmFamily family;      // w1 followed by the witness mates
    bool exact = true;
    std::size_t mate_count = 0;
    std::size_t mate_graph_edges = 0;
};

LowerBound muwm_lower_bound(const WeighingMatrix& w1, Budget budget = std::nullopt,
                            std::optional<std::size_t> mate_limit = std::nullopt);

}  // namespace muwm
