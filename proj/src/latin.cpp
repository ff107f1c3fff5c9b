#include "muwm/latin.hpp"

#include <array>
#include <sstream>

#include "muwm/error.hpp"

namespace muwm {
namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct ExtensionSpec {
    int q, p, e;
    // Monic irreducible, low coefficients c_0..c_{e-1} of x^e + ... .
    std::array<int, 5> low;
};

constexpr std::array<ExtensionSpec, 8> kExtensions{{
    {4, 2, 2, {1, 1}},           // x^2 + x + 1
    {8, 2, 3, {1, 1, 0}},        // x^3 + x + 1
    {16, 2, 4, {1, 1, 0, 0}},    // x^4 + x + 1
    {32, 2, 5, {1, 0, 1, 0, 0}}, // x^5 + x^2 + 1
    {9, 3, 2, {1, 0}},           // x^2 + 1
    {27, 3, 3, {1, 2, 0}},       // x^3 + 2x + 1
    {25, 5, 2, {2, 0}},          // x^2 + 2
    {49, 7, 2, {4, 0}},          // x^2 + 4
}};

const ExtensionSpec* find_extension(int q) {
    for (const auto& s : kExtensions)
        if (s.q == q) return &s;
    return nullptr;
}

std::vector<int> digits(int idx, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int idx = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
    return idx;
}

}  // namespace

bool FiniteField::supported(int q) { return is_prime(q) || find_extension(q) != nullptr; }

FiniteField FiniteField::make(int q) {
    FiniteField f;
    f.q_ = q;
    if (is_prime(q)) {
        f.p_ = q;
        f.e_ = 1;
        // Prime fields are small enough in practice to cache the character.
        if (q <= 1 << 15) {
            f.chi_.assign(q, -1);
            f.chi_[0] = 0;
            for (long long x = 1; x < q; ++x) f.chi_[(x * x) % q] = 1;
        }
        if (q <= 64) f.verify_axioms();
        return f;
    }
    const auto* spec = find_extension(q);
    if (spec == nullptr) throw Error("unsupported finite field order " + std::to_string(q));
    f.p_ = spec->p;
    f.e_ = spec->e;
    const int p = f.p_, e = f.e_;
    f.add_.resize(q * q);
    f.mul_.resize(q * q);
    f.neg_.resize(q);
    f.inv_.assign(q, 0);
    f.chi_.assign(q, -1);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p, e);
        std::vector<int> dn(e);
        for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
        f.neg_[a] = static_cast<std::int16_t>(undigits(dn, p));
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p, e);
            std::vector<int> ds(e);
            for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
            f.add_[a * q + b] = static_cast<std::int16_t>(undigits(ds, p));
            // Schoolbook product, then reduce x^k for k >= e using
            // x^e = -(c_0 + ... + c_{e-1} x^{e-1}).
            std::vector<int> prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int k = 2 * e - 2; k >= e; --k) {
                const int c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (int i = 0; i < e; ++i)
                    prod[k - e + i] = ((prod[k - e + i] - c * spec->low[i]) % p + p) % p;
            }
            prod.resize(e);
            f.mul_[a * q + b] = static_cast<std::int16_t>(undigits(prod, p));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<std::int16_t>(b);
        f.chi_[f.mul_[a * q + a]] = 1;
    }
    f.chi_[0] = 0;
    f.verify_axioms();
    return f;
}

int FiniteField::add(int a, int b) const {
    if (add_.empty()) return (a + b) % q_;
    return add_[a * q_ + b];
}

int FiniteField::mul(int a, int b) const {
    if (mul_.empty()) return static_cast<int>((static_cast<long long>(a) * b) % q_);
    return mul_[a * q_ + b];
}

int FiniteField::neg(int a) const {
    if (neg_.empty()) return (q_ - a) % q_;
    return neg_[a];
}

int FiniteField::inv(int a) const {
    if (a == 0) throw Error("FiniteField::inv: zero has no inverse");
    if (inv_.empty()) {
        // Fermat: a^(p-2).
        long long r = 1, b = a, ex = q_ - 2;
        while (ex > 0) {
            if (ex & 1) r = r * b % q_;
            b = b * b % q_;
            ex >>= 1;
        }
        return static_cast<int>(r);
    }
    return inv_[a];
}

int FiniteField::chi(int a) const {
    if (!chi_.empty()) return chi_[a];
    if (a == 0) return 0;
    // Euler's criterion for large primes.
    long long r = 1, b = a, ex = (q_ - 1) / 2;
    while (ex > 0) {
        if (ex & 1) r = r * b % q_;
        b = b * b % q_;
        ex >>= 1;
    }
    return r == 1 ? 1 : -1;
}

void FiniteField::verify_axioms() const {
    auto fail = [this](const char* what) {
        throw Error("field tables for q=" + std::to_string(q_) + " violate " + what);
    };
    for (int a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) fail("identities");
        if (add(a, neg(a)) != 0) fail("additive inverse");
        if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverse");
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
            if (a != 0 && b != 0 && mul(a, b) == 0) fail("no zero divisors");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
}

bool is_latin(const std::vector<std::vector<int>>& cells) {
    const std::size_t t = cells.size();
    for (const auto& row : cells) {
        if (row.size() != t) throw Error("is_latin: array is not square");
        for (int s : row)
            if (s < 1 || static_cast<std::size_t>(s) > t)
                throw Error("is_latin: symbol " + std::to_string(s) + " outside 1.." + std::to_string(t));
    }
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<bool> in_row(t + 1, false), in_col(t + 1, false);
        for (std::size_t j = 0; j < t; ++j) {
            if (in_row[cells[i][j]] || in_col[cells[j][i]]) return false;
            in_row[cells[i][j]] = true;
            in_col[cells[j][i]] = true;
        }
    }
    return true;
}

LatinSquare LatinSquare::make(std::vector<std::vector<int>> cells) {
    if (cells.empty()) throw Error("LatinSquare: empty array");
    if (!is_latin(cells)) throw Error("LatinSquare: not a Latin square");
    return LatinSquare(std::move(cells));
}

std::string LatinSquare::to_text() const {
    std::ostringstream out;
    for (const auto& row : cells_) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

LatinSquare LatinSquare::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<int>> cells;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw Error("LatinSquare::parse: non-integer token");
        if (!row.empty()) cells.push_back(std::move(row));
    }
    return make(std::move(cells));
}

namespace {
void check_sides(const LatinSquare& a, const LatinSquare& b) {
    if (a.side() != b.side()) throw Error("Latin squares of different sides");
}
}  // namespace

bool are_suitable(const LatinSquare& a, const LatinSquare& b) {
    check_sides(a, b);
    const std::size_t t = a.side();
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t s = 0; s < t; ++s) {
            std::size_t hits = 0;
            for (std::size_t c = 0; c < t; ++c) hits += a(r, c) == b(s, c);
            if (hits != 1) return false;
        }
    return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    check_sides(a, b);
    const std::size_t t = a.side();
    std::vector<bool> seen(t * t, false);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            auto key = static_cast<std::size_t>(a(i, j) - 1) * t + static_cast<std::size_t>(b(i, j) - 1);
            if (seen[key]) return false;
            seen[key] = true;
        }
    return true;
}

std::vector<LatinSquare> msls_family(int q) {
    if (q < 2) throw Error("msls_family: q must be at least 2");
    const auto field = FiniteField::make(q);
    std::vector<LatinSquare> out;
    out.reserve(q - 1);
    for (int m = 1; m < q; ++m) {
        std::vector<std::vector<int>> cells(q, std::vector<int>(q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) cells[i][j] = field.add(i, field.mul(m, j)) + 1;
        out.push_back(LatinSquare::make(std::move(cells)));
    }
    return out;
}

LatinSquare cyclic_square(std::size_t t) {
    std::vector<std::vector<int>> cells(t, std::vector<int>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) cells[i][j] = static_cast<int>((i + j) % t) + 1;
    return LatinSquare::make(std::move(cells));
}

}  // namespace muwm
