#include "muwm/gf3.hpp"

#include <algorithm>
#include <limits>

#include "muwm/simd.hpp"

namespace muwm::gf3 {

Vector::Vector(std::size_t n) : n_(n), data_(simd::padded(n), 0) {}

Vector::Vector(std::initializer_list<int> entries) : Vector(entries.size()) {
    std::size_t i = 0;
    for (int e : entries) set(i++, e);
}

Vector Vector::from_entries(std::span<const int> entries) {
    Vector v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, entries[i]);
    return v;
}

Vector Vector::from_signed(std::span<const std::int8_t> entries) {
    Vector v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, entries[i]);
    return v;
}

void Vector::set(std::size_t i, int value) {
    data_[i] = static_cast<std::uint8_t>(((value % 3) + 3) % 3);
}

std::size_t Vector::weight() const { return simd::kernels().count_nonzero(data_.data(), data_.size()); }

std::size_t Vector::leading_index() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (data_[i] != 0) return i;
    return n_;
}

void Vector::axpy(std::uint8_t c, const Vector& other) {
    c %= 3;
    if (c == 0) return;
    simd::kernels().gf3_axpy(data_.data(), other.data_.data(), c, data_.size());
}

void Vector::scale(std::uint8_t c) {
    c %= 3;
    for (std::size_t i = 0; i < n_; ++i) data_[i] = static_cast<std::uint8_t>((data_[i] * c) % 3);
}

std::vector<std::int8_t> Vector::to_signed() const {
    std::vector<std::int8_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = data_[i] == 2 ? std::int8_t{-1} : static_cast<std::int8_t>(data_[i]);
    return out;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.n_; ++i)
        if (auto c = a.data_[i] <=> b.data_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

int dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error("gf3::dot: length mismatch");
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s % 3;
}

Code rref(std::span<const Vector> rows) {
    if (rows.empty()) throw Error("gf3::rref: no rows given (use the explicit-length overload)");
    return rref(rows.front().size(), rows);
}

Code rref(std::size_t length, std::span<const Vector> rows) {
    if (length == 0) throw Error("gf3::rref: length must be positive");
    std::vector<Vector> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != length) throw Error("gf3::rref: inconsistent row lengths");
        m.push_back(r);
    }

    Code code(length);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < length && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        if (m[rank][col] == 2) m[rank].scale(2);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            // m[i] -= m[i][col] * m[rank]
            m[i].axpy(static_cast<std::uint8_t>(3 - m[i][col]), m[rank]);
        }
        code.pivots_.push_back(col);
        ++rank;
    }
    m.resize(rank);
    code.generator_ = std::move(m);
    return code;
}

bool Code::contains(const Vector& v) const {
    if (v.size() != length_) throw Error("gf3::Code::contains: length mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < generator_.size(); ++i) {
        std::uint8_t x = r[pivots_[i]];
        if (x != 0) r.axpy(static_cast<std::uint8_t>(3 - x), generator_[i]);
    }
    return r.is_zero();
}

Code dual_code(const Code& c) {
    const std::size_t n = c.length();
    const auto& piv = c.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;

    // For G = RREF, each free column f gives the dual vector with a 1 at f and
    // -G[i][f] at pivot column i.
    std::vector<Vector> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v.set(f, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) v.set(piv[i], -static_cast<int>(c.generator()[i][f]));
        rows.push_back(std::move(v));
    }
    return rref(n, rows);
}

bool is_self_orthogonal(const Code& c) {
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (dot(g[i], g[j]) != 0) return false;
    return true;
}

bool is_self_dual(const Code& c) { return 2 * c.dimension() == c.length() && is_self_orthogonal(c); }

std::vector<Vector> enumerate_codewords(const Code& c, std::size_t target_weight, bool leading_one, int cap) {
    std::vector<Vector> out;
    for_each_codeword(
        c,
        [&](const Vector& w) {
            if (w.weight() != target_weight) return;
            if (leading_one) {
                auto lead = w.leading_index();
                if (lead == w.size() || w[lead] != 1) return;
            }
            out.push_back(w);
        },
        cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t min_weight(const Code& c, int cap) {
    if (c.dimension() == 0) throw Error("gf3::min_weight: zero code has no nonzero codeword");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_codeword(
        c,
        [&](const Vector& w) {
            auto wt = w.weight();
            if (wt != 0 && wt < best) best = wt;
        },
        cap);
    return best;
}

}  // namespace muwm::gf3
