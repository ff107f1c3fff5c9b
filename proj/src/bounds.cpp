#include "muwm/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <optional>
#include <sstream>

#include "muwm/error.hpp"

namespace muwm {

Rational rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw ParseError("not a rational number: '" + text + "'"); };
    if (text.empty()) fail();
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r;
        try {
            if (r.set_str(text, 10) != 0) fail();
        } catch (const std::invalid_argument&) {
            fail();
        }
        if (r.get_den() == 0) fail();
        r.canonicalize();
        return r;
    }
    // Finite decimal: integer digits and fraction digits, optional sign.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    if (places == 0 || digits.empty() || digits == "-" || digits == "+") fail();
    const std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (!std::all_of(digits.begin() + static_cast<long>(start), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail();
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

mpz_class floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational gegenbauer(int n, int k, const Rational& x) {
    if (n < 2) throw Error("gegenbauer: dimension must be at least 2");
    if (k < 0) throw Error("gegenbauer: negative degree");
    if (k == 0) return 1;
    Rational prev = 1, cur = x;
    for (int j = 2; j <= k; ++j) {
        Rational next = (Rational(2 * j + n - 4) * x * cur - Rational(j - 1) * prev) / Rational(j + n - 3);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> gegenbauer_coefficients(int n, int k) {
    if (n < 2) throw Error("gegenbauer: dimension must be at least 2");
    if (k < 0) throw Error("gegenbauer: negative degree");
    std::vector<Rational> prev{1};
    if (k == 0) return prev;
    std::vector<Rational> cur{0, 1};
    for (int j = 2; j <= k; ++j) {
        std::vector<Rational> next(j + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += Rational(2 * j + n - 4) * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= Rational(j - 1) * prev[i];
        for (auto& c : next) c /= Rational(j + n - 3);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

long lp_bound_closed(int n, int k) {
    if (n < 2 || k < 1) throw Error("lp_bound_closed: needs n >= 2 and k >= 1");
    Rational best = Rational((n - 1) * (n + 4), 6);
    best.canonicalize();
    const int den = 3 * k - (n + 2);
    if (den > 0) {
        Rational second(static_cast<long>(k) * (n - 1), den);
        second.canonicalize();
        best = std::min(best, second);
    }
    return floor(best).get_si();
}

DistanceSet DistanceSet::make(std::vector<Rational> values) {
    if (values.empty()) throw Error("distance set is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (abs(values[i]) >= 1) throw Error("distance " + to_string(values[i]) + " is not inside (-1, 1)");
        for (std::size_t j = 0; j < i; ++j)
            if (values[i] == values[j]) throw Error("distance " + to_string(values[i]) + " repeated");
    }
    return DistanceSet(std::move(values));
}

DistanceSet DistanceSet::muwm9() { return make({rat(1, 3), rat(-1, 3), rat(0)}); }

namespace {

using RowVec = std::vector<Rational>;

// Unique solution of the square system m x = b, or nullopt if singular.
std::optional<RowVec> solve(std::vector<RowVec> m, RowVec b) {
    const std::size_t s = b.size();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && m[piv][col] == 0) ++piv;
        if (piv == s) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < s; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < s; ++c) m[r][c] -= f * m[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < s; ++r) b[r] /= m[r][r];
    return b;
}

template <typename Visit>
void for_each_subset(std::size_t m, std::size_t r, Visit&& visit) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    if (r > m) return;
    while (true) {
        visit(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Rational dot(const RowVec& a, const RowVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

LpBound lp_bound_delsarte(int n, const DistanceSet& d, int p_lp) {
    if (n < 2) throw Error("lp_bound_delsarte: n must be at least 2");
    if (p_lp < 1) throw Error("lp_bound_delsarte: p_lp must be at least 1");
    const std::size_t s = d.size();
    // Rows A a >= b: the Gegenbauer rows then a_i >= 0.
    std::vector<RowVec> rows;
    RowVec rhs;
    for (int k = 1; k <= p_lp; ++k) {
        RowVec row;
        for (const auto& di : d.values()) row.push_back(gegenbauer(n, k, di));
        rows.push_back(std::move(row));
        rhs.emplace_back(-1);
    }
    for (std::size_t i = 0; i < s; ++i) {
        RowVec row(s, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    const std::size_t m = rows.size();

    // A ray r >= 0 with G r >= 0 and sum r = 1 makes the LP unbounded.
    bool unbounded = false;
    const RowVec ones(s, 1);
    for_each_subset(m, s - 1, [&](const std::vector<std::size_t>& pick) {
        if (unbounded) return;
        std::vector<RowVec> sys{ones};
        RowVec b{1};
        for (auto i : pick) {
            sys.push_back(rows[i]);
            b.emplace_back(0);
        }
        auto r = solve(std::move(sys), std::move(b));
        if (!r) return;
        for (std::size_t i = 0; i < m; ++i)
            if (dot(rows[i], *r) < 0) return;
        unbounded = true;
    });
    if (unbounded)
        throw Unbounded("Delsarte LP unbounded for n=" + std::to_string(n) + " with p_lp=" + std::to_string(p_lp));

    std::optional<RowVec> best;
    Rational best_obj;
    for_each_subset(m, s, [&](const std::vector<std::size_t>& pick) {
        std::vector<RowVec> sys;
        RowVec b;
        for (auto i : pick) {
            sys.push_back(rows[i]);
            b.push_back(rhs[i]);
        }
        auto a = solve(std::move(sys), std::move(b));
        if (!a) return;
        for (std::size_t i = 0; i < m; ++i)
            if (dot(rows[i], *a) < rhs[i]) return;
        const Rational obj = dot(ones, *a);
        if (!best || obj > best_obj) {
            best = std::move(a);
            best_obj = obj;
        }
    });
    // a = 0 is always feasible and a vertex, so best is set.
    LpBound out;
    out.a = std::move(*best);
    out.set_bound = 1 + best_obj;
    out.family_bound = out.set_bound / n - 1;
    return out;
}

bool RationalMatrix::symmetric() const {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& r) { return r == 0; });
}

std::vector<std::array<Rational, 3>> sdp_triples(const DistanceSet& d) {
    if (d.size() != 3) throw Error("the SDP needs exactly three distances");
    const auto& v = d.values();
    const Rational one = 1;
    return {{v[0], v[0], one}, {v[1], v[1], one}, {v[2], v[2], one}, {v[0], v[0], v[0]}, {v[1], v[1], v[1]},
            {v[2], v[2], v[2]}, {v[0], v[0], v[1]}, {v[0], v[0], v[2]}, {v[1], v[1], v[0]}, {v[1], v[1], v[2]},
            {v[2], v[2], v[0]}, {v[2], v[2], v[1]}, {v[0], v[1], v[2]}};
}

namespace {

Rational power(const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

void check_levels(int n, int k, int p_sdp) {
    if (n < 3) throw Error("SDP blocks need n >= 3");
    if (k < 0 || k > p_sdp) throw Error("SDP level k outside 0..p_sdp");
}

}  // namespace

RationalMatrix sdp_y(int n, int k, int p_sdp, const Rational& u, const Rational& v, const Rational& t) {
    check_levels(n, k, p_sdp);
    const auto c = gegenbauer_coefficients(n - 1, k);
    const Rational p = (1 - u * u) * (1 - v * v);
    const Rational z = t - u * v;
    Rational val = 0;
    for (int m = k; m >= 0; m -= 2) val += c[m] * power(z, m) * power(p, (k - m) / 2);
    const std::size_t size = static_cast<std::size_t>(p_sdp - k + 1);
    RationalMatrix y(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            y(i, j) = power(u, static_cast<int>(i)) * power(v, static_cast<int>(j)) * val;
    return y;
}

RationalMatrix sdp_s(int n, int k, int p_sdp, const Rational& u, const Rational& v, const Rational& t) {
    check_levels(n, k, p_sdp);
    const std::size_t size = static_cast<std::size_t>(p_sdp - k + 1);
    RationalMatrix s(size);
    if (u == 1 && v == 1 && t == 1) {
        if (k == 0)
            for (auto& x : s.values) x = 1;
        return s;
    }
    std::array<Rational, 3> args{u, v, t};
    std::array<int, 3> perm{0, 1, 2};
    do {
        const auto y = sdp_y(n, k, p_sdp, args[perm[0]], args[perm[1]], args[perm[2]]);
        for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] += y.values[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& x : s.values) x /= 6;
    return s;
}

SdpProblem sdp_assemble(int n, const DistanceSet& d, int p_lp, int p_sdp) {
    if (p_lp < 1 || p_sdp < 1) throw Error("sdp_assemble: p_lp and p_sdp must be at least 1");
    if (n < 3) throw Error("sdp_assemble: n must be at least 3");
    const auto triples = sdp_triples(d);
    constexpr std::size_t nv = SdpProblem::kVariables;

    SdpProblem prob;
    prob.n = n;
    prob.d = d;
    prob.p_lp = p_lp;
    prob.p_sdp = p_sdp;
    prob.objective.assign(nv, 0);
    for (std::size_t i = 0; i < 3; ++i) prob.objective[i] = rat(1, 3);
    prob.offset = 1;

    auto empty_block = [&](std::string label, std::size_t size, bool diagonal) {
        SdpBlock b{std::move(label), size, diagonal, RationalMatrix(size),
                   std::vector<RationalMatrix>(nv, RationalMatrix(size))};
        return b;
    };

    auto two = empty_block("moment", 2, false);
    two.constant(0, 0) = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        two.coefficient[i](0, 1) = rat(1, 3);
        two.coefficient[i](1, 0) = rat(1, 3);
        two.coefficient[i](1, 1) = rat(1, 3);
    }
    for (std::size_t i = 3; i < nv; ++i) two.coefficient[i](1, 1) = 1;
    prob.blocks.push_back(std::move(two));

    auto lp = empty_block("lp", static_cast<std::size_t>(p_lp), true);
    for (int k = 1; k <= p_lp; ++k) {
        const std::size_t r = static_cast<std::size_t>(k - 1);
        lp.constant(r, r) = 3;
        for (std::size_t i = 0; i < 3; ++i) lp.coefficient[i](r, r) = gegenbauer(n, k, d.values()[i]);
    }
    prob.blocks.push_back(std::move(lp));

    for (int k = 0; k <= p_sdp; ++k) {
        auto b = empty_block("S" + std::to_string(k), static_cast<std::size_t>(p_sdp - k + 1), false);
        b.constant = sdp_s(n, k, p_sdp, 1, 1, 1);
        for (std::size_t i = 0; i < nv; ++i) {
            const auto& [u, v, t] = triples[i];
            b.coefficient[i] = sdp_s(n, k, p_sdp, u, v, t);
        }
        prob.blocks.push_back(std::move(b));
    }

    auto nonneg = empty_block("nonneg", nv, true);
    for (std::size_t i = 0; i < nv; ++i) nonneg.coefficient[i](i, i) = 1;
    prob.blocks.push_back(std::move(nonneg));
    return prob;
}

namespace {

std::string num(const Rational& r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r.get_d());
    return buf;
}

void write_matrix(std::ostringstream& out, int var, std::size_t block, const RationalMatrix& m, bool negate) {
    for (std::size_t i = 0; i < m.size; ++i)
        for (std::size_t j = i; j < m.size; ++j) {
            if (m(i, j) == 0) continue;
            out << var << ' ' << block << ' ' << i + 1 << ' ' << j + 1 << ' '
                << num(negate ? Rational(-m(i, j)) : m(i, j)) << '\n';
        }
}

}  // namespace

std::string sdpa_text(const SdpProblem& p) {
    std::ostringstream out;
    out << "\"muwm SDP n=" << p.n << " p_lp=" << p.p_lp << " p_sdp=" << p.p_sdp << " d=";
    for (std::size_t i = 0; i < p.d.size(); ++i) out << (i ? "," : "") << to_string(p.d.values()[i]);
    out << '\n';
    out << "\"minimise c.x subject to sum x_i F_i - F_0 psd; bound = 1 - c.x\n";
    out << SdpProblem::kVariables << '\n' << p.blocks.size() << '\n';
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& blk = p.blocks[b];
        out << (b ? " " : "") << (blk.diagonal ? -static_cast<long>(blk.size) : static_cast<long>(blk.size));
    }
    out << '\n';
    for (std::size_t i = 0; i < p.objective.size(); ++i) out << (i ? " " : "") << num(-p.objective[i]);
    out << '\n';
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& blk = p.blocks[b];
        write_matrix(out, 0, b + 1, blk.constant, true);
        for (std::size_t i = 0; i < blk.coefficient.size(); ++i)
            write_matrix(out, static_cast<int>(i + 1), b + 1, blk.coefficient[i], false);
    }
    return out.str();
}

std::string sdp_sidecar_json(const SdpProblem& p) {
    nlohmann::json j;
    j["format"] = "muwm-sdp/1";
    j["n"] = p.n;
    std::vector<std::string> ds;
    for (const auto& d : p.d.values()) ds.push_back(to_string(d));
    j["d"] = ds;
    j["p_lp"] = p.p_lp;
    j["p_sdp"] = p.p_sdp;
    j["variables"] = SdpProblem::kVariables;
    j["convention"] = "sdpa: minimise c.x subject to sum_i x_i F_i - F_0 psd";
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks)
        blocks.push_back({{"label", b.label}, {"size", b.size}, {"diagonal", b.diagonal}});
    j["blocks"] = blocks;
    j["transforms"] = {
        {"set_bound", "1 + (1/3)(x1 + x2 + x3) = 1 - objective"},
        {"family_bound", "set_bound / n - 1"},
    };
    try {
        const auto lp = lp_bound_delsarte(p.n, p.d, p.p_lp);
        j["lp_set_bound"] = lp.set_bound.get_d();
        j["lp_family_bound"] = lp.family_bound.get_d();
    } catch (const Unbounded&) {
        j["lp_set_bound"] = nullptr;
        j["lp_family_bound"] = nullptr;
    }
    return j.dump(2) + "\n";
}

void sdp_export(const SdpProblem& p, const std::filesystem::path& path) {
    auto write = [](const std::filesystem::path& target, const std::string& body) {
        std::ofstream out(target, std::ios::binary);
        if (!out) throw Error("cannot open " + target.string() + " for writing");
        out << body;
        out.close();
        if (!out) throw Error("failed writing " + target.string());
    };
    write(path, sdpa_text(p));
    auto meta = path;
    meta += ".json";
    write(meta, sdp_sidecar_json(p));
}

SdpaFile parse_sdpa(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '"' || line[first] == '*') continue;
        for (auto& ch : line)
            if (ch == ',' || ch == '{' || ch == '}' || ch == '(' || ch == ')') ch = ' ';
        lines.push_back(line);
    }
    if (lines.size() < 4) throw ParseError("SDPA file: header incomplete");
    SdpaFile f;
    auto ints_of = [](const std::string& l) {
        std::istringstream ls(l);
        std::vector<long> out;
        long v;
        while (ls >> v) out.push_back(v);
        return out;
    };
    const auto m = ints_of(lines[0]);
    const auto nb = ints_of(lines[1]);
    if (m.empty() || nb.empty() || m[0] < 1 || nb[0] < 1) throw ParseError("SDPA file: bad variable or block count");
    f.variables = static_cast<int>(m[0]);
    const auto sizes = ints_of(lines[2]);
    if (sizes.size() < static_cast<std::size_t>(nb[0])) throw ParseError("SDPA file: block sizes missing");
    for (long i = 0; i < nb[0]; ++i) f.block_sizes.push_back(static_cast<int>(sizes[static_cast<std::size_t>(i)]));
    {
        std::istringstream ls(lines[3]);
        double v;
        while (static_cast<int>(f.c.size()) < f.variables && ls >> v) f.c.push_back(v);
        if (static_cast<int>(f.c.size()) != f.variables) throw ParseError("SDPA file: objective vector incomplete");
    }
    for (std::size_t i = 4; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        SdpaEntry e{};
        if (!(ls >> e.var >> e.block >> e.row >> e.col >> e.value))
            throw ParseError("SDPA file: malformed entry line " + std::to_string(i + 1));
        if (e.var < 0 || e.var > f.variables || e.block < 1 || e.block > static_cast<int>(f.block_sizes.size()))
            throw ParseError("SDPA file: entry index out of range");
        const int size = std::abs(f.block_sizes[static_cast<std::size_t>(e.block - 1)]);
        if (e.row < 1 || e.col < e.row || e.col > size) throw ParseError("SDPA file: entry position out of range");
        if (f.block_sizes[static_cast<std::size_t>(e.block - 1)] < 0 && e.row != e.col)
            throw ParseError("SDPA file: off-diagonal entry in a diagonal block");
        f.entries.push_back(e);
    }
    return f;
}

}  // namespace muwm
