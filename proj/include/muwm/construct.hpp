#pragma once

#include <cstddef>
#include <vector>

#include "muwm/latin.hpp"
#include "muwm/wmatrix.hpp"

namespace muwm {

/// C_i = w_i w_i^T for the columns w_i of a base W(n, k), padded with zero
/// blocks up to t.
struct BlockFamily {
    WeighingMatrix base;
    std::vector<DenseInt> blocks;

    std::size_t order() const { return base.order(); }
    std::size_t count() const { return blocks.size(); }
};

/// Throws muwm::Error if t < order(w).
BlockFamily column_blocks(const WeighingMatrix& w, std::size_t t);

/// The t x t block matrix whose (i, j) block is C_{sq(i, j)}. Weight k^2.
WeighingMatrix assemble(const BlockFamily& blocks, const LatinSquare& sq);

/// One assembled matrix per square. Throws if the squares differ in side,
/// the side is below order(w), or some pair is not suitable.
MuwmFamily muwm_from_msls(const WeighingMatrix& w, const std::vector<LatinSquare>& squares);

/// The n x n block matrix with (i, j) block w_j w_i^T.
WeighingMatrix companion(const WeighingMatrix& w);

/// muwm_from_msls plus the companion as the last member. Throws unless the
/// square side equals order(w).
MuwmFamily muwm_from_msls_with_companion(const WeighingMatrix& w, const std::vector<LatinSquare>& squares);

/// A W(p + 1, p) from the Jacobsthal matrix of GF(p), bordered. Symmetric
/// for p = 1 mod 4, skew for p = 3 mod 4. Throws for unsupported p.
WeighingMatrix paley_weighing(int p);

/// The W(4, 3) used throughout as the default base:
///   0  1  1  1 / -1  0  1 -1 / -1 -1  0  1 / -1  1 -1  0
WeighingMatrix example_w43();

}  // namespace muwm
