#include "muwm/construct.hpp"

#include "muwm/error.hpp"

namespace muwm {

BlockFamily column_blocks(const WeighingMatrix& w, std::size_t t) {
    const std::size_t n = w.order();
    if (t < n) throw Error("column_blocks: t=" + std::to_string(t) + " is below the order " + std::to_string(n));
    BlockFamily out{w, {}};
    out.blocks.reserve(t);
    const auto& m = w.matrix();
    for (std::size_t c = 0; c < t; ++c) {
        DenseInt block(n, n);
        if (c < n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) block(i, j) = m(i, c) * m(j, c);
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

WeighingMatrix assemble(const BlockFamily& blocks, const LatinSquare& sq) {
    const std::size_t t = blocks.count();
    const std::size_t n = blocks.order();
    if (sq.side() != t)
        throw Error("assemble: square side " + std::to_string(sq.side()) + " differs from block count " +
                    std::to_string(t));
    IntMatrix out(t * n, t * n);
    for (std::size_t bi = 0; bi < t; ++bi)
        for (std::size_t bj = 0; bj < t; ++bj) {
            const DenseInt& c = blocks.blocks[static_cast<std::size_t>(sq(bi, bj) - 1)];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.set(bi * n + i, bj * n + j, static_cast<int>(c(i, j)));
        }
    const int k = blocks.base.weight();
    return WeighingMatrix::make(std::move(out), k * k);
}

namespace {

void check_squares(const WeighingMatrix& w, const std::vector<LatinSquare>& squares) {
    if (squares.empty()) throw Error("muwm_from_msls: no Latin squares given");
    const std::size_t t = squares.front().side();
    for (const auto& s : squares)
        if (s.side() != t) throw Error("muwm_from_msls: squares of different sides");
    if (t < w.order())
        throw Error("muwm_from_msls: side " + std::to_string(t) + " is below the order " + std::to_string(w.order()));
    for (std::size_t a = 0; a < squares.size(); ++a)
        for (std::size_t b = a + 1; b < squares.size(); ++b)
            if (!are_suitable(squares[a], squares[b]))
                throw Error("muwm_from_msls: squares " + std::to_string(a) + " and " + std::to_string(b) +
                            " are not suitable");
}

}  // namespace

MuwmFamily muwm_from_msls(const WeighingMatrix& w, const std::vector<LatinSquare>& squares) {
    check_squares(w, squares);
    const auto blocks = column_blocks(w, squares.front().side());
    MuwmFamily fam;
    fam.order = blocks.count() * w.order();
    fam.weight = w.weight() * w.weight();
    for (std::size_t m = 0; m < squares.size(); ++m) {
        fam.members.push_back(assemble(blocks, squares[m]));
        fam.labels.push_back("L" + std::to_string(m + 1));
    }
    return fam;
}

WeighingMatrix companion(const WeighingMatrix& w) {
    const std::size_t n = w.order();
    const auto& m = w.matrix();
    IntMatrix out(n * n, n * n);
    // Block (bi, bj) = w_bj w_bi^T, so entry (i, j) = m(i, bj) * m(j, bi).
    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.set(bi * n + i, bj * n + j, m(i, bj) * m(j, bi));
    return WeighingMatrix::make(std::move(out), w.weight() * w.weight());
}

MuwmFamily muwm_from_msls_with_companion(const WeighingMatrix& w, const std::vector<LatinSquare>& squares) {
    if (!squares.empty() && squares.front().side() != w.order())
        throw Error("companion requires square side " + std::to_string(squares.front().side()) +
                    " to equal the base order " + std::to_string(w.order()));
    auto fam = muwm_from_msls(w, squares);
    fam.members.push_back(companion(w));
    fam.labels.push_back("companion");
    return fam;
}

WeighingMatrix paley_weighing(int p) {
    if (p < 3 || p % 2 == 0 || !FiniteField::supported(p))
        throw Error("paley_weighing: " + std::to_string(p) + " is not a supported odd prime power");
    const auto f = FiniteField::make(p);
    const bool skew = f.chi(f.neg(1)) == -1;
    const std::size_t n = static_cast<std::size_t>(p) + 1;
    IntMatrix m(n, n);
    for (std::size_t j = 1; j < n; ++j) {
        m.set(0, j, 1);
        m.set(j, 0, skew ? -1 : 1);
    }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) m.set(a + 1, b + 1, f.chi(f.sub(b, a)));
    return WeighingMatrix::make(std::move(m), p);
}

WeighingMatrix example_w43() {
    return WeighingMatrix::make(IntMatrix::from_rows({{0, 1, 1, 1}, {-1, 0, 1, -1}, {-1, -1, 0, 1}, {-1, 1, -1, 0}}),
                                3);
}

}  // namespace muwm
