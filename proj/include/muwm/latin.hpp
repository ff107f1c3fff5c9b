#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace muwm {

/// GF(q) on the element indices 0..q-1. Prime fields use residues; for
/// q = p^e the index of c_0 + c_1 x + ... + c_{e-1} x^{e-1} is
/// sum c_i p^i, reduced modulo a fixed irreducible polynomial.
class FiniteField {
public:
    /// Supported: every prime, and 4, 8, 9, 16, 25, 27, 32, 49.
    /// Throws muwm::Error otherwise.
    static FiniteField make(int q);
    static bool supported(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;
    /// Quadratic character: 0, +1 for nonzero squares, -1 otherwise.
    int chi(int a) const;

private:
    FiniteField() = default;
    void verify_axioms() const;

    int q_ = 0;
    int p_ = 0;
    int e_ = 1;
    // Tables only for extension fields; prime fields use modular arithmetic.
    std::vector<std::int16_t> add_;
    std::vector<std::int16_t> mul_;
    std::vector<std::int16_t> neg_;
    std::vector<std::int16_t> inv_;
    std::vector<std::int8_t> chi_;
};

/// Symbols 1..t.
class LatinSquare {
public:
    /// Throws muwm::Error if cells are not t x t over 1..t or not Latin.
    static LatinSquare make(std::vector<std::vector<int>> cells);

    std::size_t side() const { return cells_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return cells_[i][j]; }
    const std::vector<std::vector<int>>& cells() const { return cells_; }

    /// t lines of t space-separated integers.
    std::string to_text() const;
    static LatinSquare parse(const std::string& text);

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    explicit LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {}
    std::vector<std::vector<int>> cells_;
};

/// Throws muwm::Error for a non-square array or a symbol outside 1..t.
bool is_latin(const std::vector<std::vector<int>>& cells);

/// Every row of a superimposed on every row of b agrees in exactly one column.
bool are_suitable(const LatinSquare& a, const LatinSquare& b);

/// Every ordered symbol pair occurs exactly once.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// The q-1 squares L_m(i, j) = (i + m*j) + 1 for nonzero m in index order.
std::vector<LatinSquare> msls_family(int q);

/// ((i + j) mod t) + 1.
LatinSquare cyclic_square(std::size_t t);

}  // namespace muwm
