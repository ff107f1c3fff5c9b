#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muwm/wmatrix.hpp"

namespace muwm {

/// Integer vectors of squared norm scale^2: scale * e_i, then the rows of
/// each member. True inner products are the integer ones over scale^2.
/// Vector v is multiplier[v] * rows.row(v) with a ternary row.
struct ScaledVectorSet {
    std::size_t dimension = 0;
    int scale = 0;
    IntMatrix rows;
    std::vector<int> multiplier;
    /// Orthonormal basis of each vector: 0 for the identity, m for member m.
    std::vector<std::size_t> fibre;

    std::size_t size() const { return fibre.size(); }
    std::vector<int> vector(std::size_t v) const;
    std::int64_t inner(std::size_t a, std::size_t b) const;
    /// All inner products, row-major.
    std::vector<std::int64_t> gram() const;
};

/// Throws muwm::Error if the weight is not a perfect square or some off
/// diagonal inner product lies outside {0, +-scale}.
ScaledVectorSet vector_system(const MuwmFamily& fam);

/// Every vector followed by its negation (negations appended after all
/// originals); fibres are kept.
ScaledVectorSet antipodal_double(const ScaledVectorSet& vs);

/// Sorted distinct off-diagonal integer inner products.
std::vector<std::int64_t> inner_product_spectrum(const ScaledVectorSet& vs);

struct SrgParameters {
    std::size_t v = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

struct SrgResult {
    std::optional<SrgParameters> params;
    std::string diagnostic;  // empty when params is set
};

/// The graph joining orthogonal vectors.
SrgResult orthogonality_srg(const ScaledVectorSet& vs);

enum class SchemeMode { FourClass, FiveClass };

/// Class 0 is the identity.
struct RelationPartition {
    std::size_t points = 0;
    std::size_t classes = 0;  // including the identity
    std::vector<std::uint8_t> relation;

    std::uint8_t operator()(std::size_t x, std::size_t y) const { return relation[x * points + y]; }
};

/// FourClass: inner products scale, 0, -scale, -scale^2 give classes 1..4.
/// FiveClass: the 0 class split into same fibre (class 2) and different
/// fibre (class 3); -scale and -scale^2 move to 4 and 5. Throws on any
/// other inner product.
RelationPartition relation_partition(const ScaledVectorSet& vs, SchemeMode mode);

/// Arbitrary partition from a class matrix; checks class 0 is the diagonal
/// and every class is symmetric.
RelationPartition make_partition(std::size_t points, std::vector<std::uint8_t> relation);

struct SchemeCheck {
    bool is_scheme = false;
    std::string diagnostic;
    /// p[h][i][j] when is_scheme.
    std::vector<std::vector<std::vector<std::size_t>>> p;
};

inline constexpr std::size_t kSchemePointCap = 1024;

/// Checks that |{z : (x,z) in R_i, (z,y) in R_j}| depends only on the class
/// of (x, y). Throws for more than kSchemePointCap points.
SchemeCheck is_association_scheme(const RelationPartition& rp);

}  // namespace muwm
