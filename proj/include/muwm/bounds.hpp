#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace muwm {

/// GMP rationals are kept canonical by every arithmetic operation.
using Rational = mpq_class;

/// num/den in lowest terms. Throws muwm::Error for den == 0.
Rational rat(long num, long den = 1);
/// Parses "p/q", "p" or a finite decimal such as "-0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
mpz_class floor(const Rational& r);

/// G_k^n(x) by the three-term recurrence. Throws for n < 2.
Rational gegenbauer(int n, int k, const Rational& x);
/// Coefficients c_0..c_k of G_k^n in the monomial basis.
std::vector<Rational> gegenbauer_coefficients(int n, int k);

/// floor(min((n-1)(n+4)/6, k(n-1)/(3k-(n+2)))), the second term only when
/// its denominator is positive.
long lp_bound_closed(int n, int k);

/// Distinct rationals in (-1, 1).
class DistanceSet {
public:
    static DistanceSet make(std::vector<Rational> values);
    /// {1/3, -1/3, 0}, the weight-9 inner products.
    static DistanceSet muwm9();
    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    explicit DistanceSet(std::vector<Rational> v) : values_(std::move(v)) {}
    std::vector<Rational> values_;
};

struct LpBound {
    Rational set_bound;     // 1 + sum a_i, bounds |X|
    Rational family_bound;  // set_bound / n - 1, bounds the family size f
    std::vector<Rational> a;
};

/// Exact optimum of max 1 + sum a_i subject to a >= 0 and
/// sum_i a_i G_k^n(d_i) >= -1 for k = 1..p_lp. Throws muwm::Unbounded.
LpBound lp_bound_delsarte(int n, const DistanceSet& d, int p_lp);

struct RationalMatrix {
    std::size_t size = 0;
    std::vector<Rational> values;

    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t s) : size(s), values(s * s) {}
    Rational& operator()(std::size_t i, std::size_t j) { return values[i * size + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return values[i * size + j]; }
    bool symmetric() const;
    bool is_zero() const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

/// The 13 (u, v, t) argument triples for x_1..x_13.
std::vector<std::array<Rational, 3>> sdp_triples(const DistanceSet& d);

/// Y_k^n(u, v, t) of size p_sdp - k + 1, evaluated in the homogenised form
/// u^i v^j sum_m c_m (t - uv)^m ((1-u^2)(1-v^2))^((k-m)/2), which is rational
/// for rational arguments.
RationalMatrix sdp_y(int n, int k, int p_sdp, const Rational& u, const Rational& v, const Rational& t);
/// Average of Y over the six permutations of (u, v, t); zero at (1,1,1) for k >= 1.
RationalMatrix sdp_s(int n, int k, int p_sdp, const Rational& u, const Rational& v, const Rational& t);

struct SdpBlock {
    std::string label;
    std::size_t size = 0;
    bool diagonal = false;
    RationalMatrix constant;                 // F_0
    std::vector<RationalMatrix> coefficient; // F_1..F_13
};

/// Constraints F_0 + sum x_i F_i >= 0 (psd) for every block; maximise
/// offset + sum objective_i x_i.
struct SdpProblem {
    int n = 0;
    DistanceSet d = DistanceSet::muwm9();
    int p_lp = 0;
    int p_sdp = 0;
    std::vector<SdpBlock> blocks;
    std::vector<Rational> objective;  // 13 entries
    Rational offset;

    static constexpr std::size_t kVariables = 13;
};

/// Throws muwm::Error unless d has 3 values and p_lp, p_sdp >= 1.
SdpProblem sdp_assemble(int n, const DistanceSet& d, int p_lp, int p_sdp);

/// SDPA sparse text: minimise c.x subject to sum_i x_i F_i - F_0 psd, so
/// the constant matrix is written negated and c = -objective.
std::string sdpa_text(const SdpProblem& p);
/// Sidecar JSON: parameters, block layout and the report transforms.
std::string sdp_sidecar_json(const SdpProblem& p);
/// Writes <path> and <path>.json. Throws muwm::Error on I/O failure.
void sdp_export(const SdpProblem& p, const std::filesystem::path& path);

struct SdpaEntry {
    int var, block, row, col;
    double value;
};

struct SdpaFile {
    int variables = 0;
    std::vector<int> block_sizes;
    std::vector<double> c;
    std::vector<SdpaEntry> entries;
};

/// Reads SDPA sparse text. Lines starting with '"' or '*' are comments.
SdpaFile parse_sdpa(const std::string& text);

}  // namespace muwm
