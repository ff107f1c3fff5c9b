#include "muwm/wmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "muwm/error.hpp"
#include "muwm/simd.hpp"

namespace muwm {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(simd::padded(cols)), data_(rows * stride_, 0) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntMatrix::set(std::size_t i, std::size_t j, int value) {
    if (value < -1 || value > 1)
        throw Error("IntMatrix: entry " + std::to_string(value) + " outside {0, 1, -1}");
    data_[i * stride_ + j] = static_cast<std::int8_t>(value);
}

std::vector<std::int8_t> IntMatrix::column(std::size_t j) const {
    std::vector<std::int8_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * stride_ + j];
    return c;
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) data_[i * stride_ + j] = static_cast<std::int8_t>(-data_[i * stride_ + j]);
}

DenseInt DenseInt::from(const IntMatrix& m) {
    DenseInt d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j);
    return d;
}

bool DenseInt::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

bool DenseInt::symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

DenseInt multiply(const DenseInt& a, const DenseInt& b) {
    if (a.cols != b.rows) throw Error("multiply: shape mismatch");
    DenseInt c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            const auto x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(l, j);
        }
    return c;
}

DenseInt transpose(const DenseInt& a) {
    DenseInt t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

DenseInt scaled(const DenseInt& a, std::int64_t s) {
    DenseInt r = a;
    for (auto& v : r.values) v *= s;
    return r;
}

DenseInt multiply_transpose(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw Error("multiply_transpose: column count mismatch");
    DenseInt c(a.rows(), b.rows());
    std::vector<std::int32_t> buf(b.rows());
    const auto& k = simd::kernels();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        k.dot_rows(a.row_data(i), b.data(), b.rows(), b.stride(), buf.data());
        for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = buf[j];
    }
    return c;
}

bool is_weighing(const IntMatrix& m, int k) {
    if (!m.square()) throw Error("is_weighing: matrix is not square");
    const auto& kern = simd::kernels();
    std::vector<std::int32_t> buf(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        kern.dot_rows(m.row_data(i), m.data(), m.rows(), m.stride(), buf.data());
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (buf[j] != (i == j ? k : 0)) return false;
    }
    return true;
}

int exact_sqrt(int k) {
    if (k < 0) return -1;
    int r = 0;
    while ((r + 1) * (r + 1) <= k) ++r;
    return r * r == k ? r : -1;
}

WeighingMatrix WeighingMatrix::make(IntMatrix m, int k) {
    if (!is_weighing(m, k))
        throw Error("not a weighing matrix W(" + std::to_string(m.rows()) + ", " + std::to_string(k) + ")");
    return WeighingMatrix(std::move(m), k);
}

bool unbiased_product(const IntMatrix& a, const IntMatrix& b, int k) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("unbiased: order mismatch");
    const int s = exact_sqrt(k);
    if (s < 0) throw Error("unbiased: weight " + std::to_string(k) + " is not a perfect square");
    const auto& kern = simd::kernels();
    std::vector<std::int32_t> buf(b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        kern.dot_rows(a.row_data(i), b.data(), b.rows(), b.stride(), buf.data());
        for (auto v : buf)
            if (v != 0 && v != s && v != -s) return false;
    }
    return true;
}

bool are_unbiased(const WeighingMatrix& a, const WeighingMatrix& b) {
    if (a.weight() != b.weight()) throw Error("are_unbiased: weight mismatch");
    return unbiased_product(a.matrix(), b.matrix(), a.weight());
}

bool FamilyReport::valid() const {
    return std::all_of(matrices.begin(), matrices.end(), [](const auto& c) { return c.pass; }) &&
           std::all_of(pairs.begin(), pairs.end(), [](const auto& c) { return c.pass; });
}

FamilyReport verify_family(std::span<const IntMatrix> members, int weight) {
    FamilyReport rep;
    const std::size_t order = members.empty() ? 0 : members.front().rows();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& m = members[i];
        if (!m.square() || m.rows() != order) {
            rep.matrices.push_back({i, false, "shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols())});
        } else if (!is_weighing(m, weight)) {
            rep.matrices.push_back({i, false, "W W^T != " + std::to_string(weight) + " I"});
        } else {
            rep.matrices.push_back({i, true, "ok"});
        }
    }
    const bool square_weight = exact_sqrt(weight) >= 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& a = members[i];
            const auto& b = members[j];
            if (!square_weight) {
                rep.pairs.push_back({i, j, false, "weight is not a perfect square"});
            } else if (a.rows() != b.rows() || a.cols() != b.cols()) {
                rep.pairs.push_back({i, j, false, "order mismatch"});
            } else if (!unbiased_product(a, b, weight)) {
                rep.pairs.push_back({i, j, false, "product has an entry outside {0, +-sqrt(k)}"});
            } else {
                rep.pairs.push_back({i, j, true, "ok"});
            }
        }
    return rep;
}

FamilyReport verify_family(const MuwmFamily& family) {
    std::vector<IntMatrix> ms;
    ms.reserve(family.members.size());
    for (const auto& w : family.members) ms.push_back(w.matrix());
    return verify_family(ms, family.weight);
}

MuwmFamily make_family(std::vector<IntMatrix> members, int weight, std::vector<std::string> labels) {
    auto rep = verify_family(members, weight);
    if (!rep.valid()) throw Error("make_family: members are not mutually unbiased weighing matrices");
    MuwmFamily fam;
    fam.order = members.empty() ? 0 : members.front().rows();
    fam.weight = weight;
    for (auto& m : members) fam.members.push_back(WeighingMatrix::make(std::move(m), weight));
    fam.labels = std::move(labels);
    return fam;
}

bool row_less(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntMatrix normalize_rows(const IntMatrix& m) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (r(i, j) == 0) continue;
            if (r(i, j) < 0) r.negate_row(i);
            break;
        }
    }
    std::vector<std::size_t> order(r.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return row_less(r.row(x), r.row(y)); });
    IntMatrix out(r.rows(), r.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
        std::copy_n(r.row_data(order[i]), r.stride(), out.row_data(i));
    return out;
}

WeighingMatrix normalize_rows(const WeighingMatrix& w) {
    return WeighingMatrix::make(normalize_rows(w.matrix()), w.weight());
}

gf3::Code code_of(const IntMatrix& m) {
    std::vector<gf3::Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(gf3::Vector::from_signed(m.row(i)));
    return gf3::rref(m.cols(), rows);
}

gf3::Code code_of(const WeighingMatrix& w) { return code_of(w.matrix()); }

bool rows_in_dual(const WeighingMatrix& b, const gf3::Code& c) {
    if (c.length() != b.order()) throw Error("rows_in_dual: length mismatch");
    // v is in the dual iff it is orthogonal to every generator row.
    for (std::size_t i = 0; i < b.order(); ++i) {
        auto v = gf3::Vector::from_signed(b.matrix().row(i));
        for (const auto& g : c.generator())
            if (gf3::dot(v, g) != 0) return false;
    }
    return true;
}

}  // namespace muwm
