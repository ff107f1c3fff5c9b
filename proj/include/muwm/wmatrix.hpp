#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "muwm/gf3.hpp"

namespace muwm {

/// Dense matrix with entries in {0, 1, -1}. Rows are zero padded to the SIMD
/// lane width.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Throws muwm::Error on ragged input or entries outside {0, 1, -1}.
    static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    bool square() const { return rows_ == cols_; }

    int operator()(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
    void set(std::size_t i, std::size_t j, int value);

    std::span<const std::int8_t> row(std::size_t i) const { return {row_data(i), cols_}; }
    const std::int8_t* row_data(std::size_t i) const { return data_.data() + i * stride_; }
    std::int8_t* row_data(std::size_t i) { return data_.data() + i * stride_; }
    const std::int8_t* data() const { return data_.data(); }

    std::vector<std::int8_t> column(std::size_t j) const;
    void negate_row(std::size_t i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::int8_t> data_;
};

/// Integer matrix for products and block identities.
struct DenseInt {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> values;

    DenseInt() = default;
    DenseInt(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0) {}
    static DenseInt from(const IntMatrix& m);

    std::int64_t& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    bool is_zero() const;
    bool symmetric() const;
    friend bool operator==(const DenseInt&, const DenseInt&) = default;
};

DenseInt multiply(const DenseInt& a, const DenseInt& b);
DenseInt transpose(const DenseInt& a);
DenseInt scaled(const DenseInt& a, std::int64_t s);

/// a * b^T computed with the ternary dot-product kernel.
DenseInt multiply_transpose(const IntMatrix& a, const IntMatrix& b);

/// True iff m is square and m * m^T == k * I exactly. Entries are already
/// restricted to {0, 1, -1} by IntMatrix.
bool is_weighing(const IntMatrix& m, int k);

/// Integer square root of k if k is a perfect square, else -1.
int exact_sqrt(int k);

/// A verified W(n, k).
class WeighingMatrix {
public:
    /// Throws muwm::Error unless m * m^T == k * I.
    static WeighingMatrix make(IntMatrix m, int k);

    std::size_t order() const { return m_.rows(); }
    int weight() const { return k_; }
    const IntMatrix& matrix() const { return m_; }

    friend bool operator==(const WeighingMatrix&, const WeighingMatrix&) = default;

private:
    WeighingMatrix(IntMatrix m, int k) : m_(std::move(m)), k_(k) {}
    IntMatrix m_;
    int k_ = 0;
};

/// Entrywise test a * b^T in {0, +-sqrt(k)} on raw matrices of equal order.
bool unbiased_product(const IntMatrix& a, const IntMatrix& b, int k);

/// Throws on mismatched order or weight, or when the weight is not a square.
bool are_unbiased(const WeighingMatrix& a, const WeighingMatrix& b);

struct MuwmFamily {
    std::size_t order = 0;
    int weight = 0;
    std::vector<WeighingMatrix> members;
    std::vector<std::string> labels;

    std::size_t size() const { return members.size(); }
};

struct MatrixCheck {
    std::size_t index;
    bool pass;
    std::string detail;
};

struct PairCheck {
    std::size_t first;
    std::size_t second;
    bool pass;
    std::string detail;
};

struct FamilyReport {
    std::vector<MatrixCheck> matrices;
    std::vector<PairCheck> pairs;
    bool valid() const;
};

/// Checks every candidate for W(n, k) and every distinct pair for
/// unbiasedness. Failures are reported, never thrown.
FamilyReport verify_family(std::span<const IntMatrix> members, int weight);
FamilyReport verify_family(const MuwmFamily& family);

/// Builds a family after verify_family passes; throws otherwise.
MuwmFamily make_family(std::vector<IntMatrix> members, int weight, std::vector<std::string> labels = {});

/// Rows negated so their first nonzero entry is +1, then sorted with
/// -1 < 0 < +1.
WeighingMatrix normalize_rows(const WeighingMatrix& w);
IntMatrix normalize_rows(const IntMatrix& m);

/// Lexicographic comparison of ternary rows with -1 < 0 < +1.
bool row_less(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

/// The ternary code generated by the rows (0, 1, -1 -> 0, 1, 2).
gf3::Code code_of(const WeighingMatrix& w);
gf3::Code code_of(const IntMatrix& m);

/// True iff every row of b lies in the dual of c.
bool rows_in_dual(const WeighingMatrix& b, const gf3::Code& c);

}  // namespace muwm
