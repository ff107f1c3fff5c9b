#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace muwm::gf3 {

inline constexpr int kDefaultEnumerationCap = 16;

/// Vector over GF(3) with entries stored as 0, 1, 2. Storage is zero padded
/// to the SIMD lane width so the kernels can run on whole lanes.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n);
    Vector(std::initializer_list<int> entries);
    static Vector from_entries(std::span<const int> entries);
    /// 0, 1, -1 in the integers map to 0, 1, 2.
    static Vector from_signed(std::span<const std::int8_t> entries);

    std::size_t size() const { return n_; }
    std::uint8_t operator[](std::size_t i) const { return data_[i]; }
    void set(std::size_t i, int value);

    std::size_t weight() const;
    /// Index of the first nonzero entry, or size() for the zero vector.
    std::size_t leading_index() const;
    bool is_zero() const { return leading_index() == n_; }

    /// *this += c * other (mod 3).
    void axpy(std::uint8_t c, const Vector& other);
    void scale(std::uint8_t c);

    /// 2 maps to -1.
    std::vector<std::int8_t> to_signed() const;

    const std::uint8_t* raw() const { return data_.data(); }
    std::uint8_t* raw() { return data_.data(); }
    std::size_t stride() const { return data_.size(); }

    friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_ && a.n_ == b.n_; }
    friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Standard inner product mod 3.
int dot(const Vector& a, const Vector& b);

/// A linear code over GF(3) kept in reduced row-echelon form, so two codes
/// are equal exactly when their generators are.
class Code {
public:
    explicit Code(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }
    std::size_t dimension() const { return generator_.size(); }
    const std::vector<Vector>& generator() const { return generator_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.length_ == b.length_ && a.generator_ == b.generator_;
    }

private:
    friend Code rref(std::span<const Vector> rows);
    friend Code rref(std::size_t length, std::span<const Vector> rows);
    std::size_t length_;
    std::vector<Vector> generator_;
    std::vector<std::size_t> pivots_;
};

/// Code spanned by the rows. Throws on inconsistent lengths or an empty list.
Code rref(std::span<const Vector> rows);
/// Same, with the length given explicitly so an empty list is allowed.
Code rref(std::size_t length, std::span<const Vector> rows);

Code dual_code(const Code& c);
bool is_self_orthogonal(const Code& c);
bool is_self_dual(const Code& c);

/// Codewords of the given weight, sorted lexicographically (0 < 1 < 2).
/// With leading_one only words whose first nonzero entry is 1 are kept.
/// Throws CapExceeded when dimension > cap.
std::vector<Vector> enumerate_codewords(const Code& c, std::size_t target_weight, bool leading_one,
                                        int cap = kDefaultEnumerationCap);

/// Minimum weight over nonzero codewords. Throws for dimension 0 or above cap.
std::size_t min_weight(const Code& c, int cap = kDefaultEnumerationCap);

/// Calls visit(word) for all 3^dim codewords, changing one generator
/// coefficient per step. Throws CapExceeded when dimension > cap.
template <typename Visit>
void for_each_codeword(const Code& c, Visit&& visit, int cap = kDefaultEnumerationCap);

}  // namespace muwm::gf3

#include "muwm/gf3_impl.hpp"
