#include "muwm/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "muwm/error.hpp"
#include "muwm/simd.hpp"

namespace muwm {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw Error("BitGraph: self-loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) throw Error("BitGraph: vertex out of range");
    adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t BitGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(adj_[v * words_ + w]));
    return d;
}

std::size_t BitGraph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

bool BitGraph::is_clique(const std::vector<std::size_t>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        if (vs[a] >= n_) return false;
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!adjacent(vs[a], vs[b])) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// The graph relabelled so that position i holds the i-th vertex of the
// degree-descending order.
struct Ordered {
    std::size_t n;
    std::size_t words;
    std::vector<std::uint64_t> adj;
    std::vector<std::size_t> original;

    const std::uint64_t* row(std::size_t v) const { return adj.data() + v * words; }
};

Ordered reorder(const BitGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    Ordered o{n, g.words(), std::vector<std::uint64_t>(n * g.words(), 0), order};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* row = g.neighbours(order[i]);
        std::uint64_t* out = o.adj.data() + i * o.words;
        for (std::size_t w = 0; w < o.words; ++w)
            for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
                const std::size_t j = pos[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
                out[j / 64] |= std::uint64_t{1} << (j % 64);
            }
    }
    return o;
}

class Search {
public:
    Search(const Ordered& g, Budget budget) : g_(g) {
        if (budget) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget);
    }

    bool timed_out() {
        if (!deadline_) return false;
        if (stopped_) return true;
        if ((++ticks_ & 0x3FF) == 0 && Clock::now() >= *deadline_) stopped_ = true;
        return stopped_;
    }

    // Greedy sequential colouring of p. Fills verts/colours in colour order.
    void colour(std::vector<std::uint64_t> p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) {
        const std::size_t words = g_.words;
        std::vector<std::uint64_t> q(words);
        std::size_t c = 0;
        auto any = [&](const std::vector<std::uint64_t>& s) {
            return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
        };
        while (any(p)) {
            ++c;
            q = p;
            for (std::size_t w = 0; w < words; ++w) {
                while (q[w] != 0) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                    q[w] &= q[w] - 1;
                    p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    verts.push_back(v);
                    colours.push_back(c);
                    // q &= ~N(v): later words only; the current word is masked too.
                    const std::uint64_t* nv = g_.row(v);
                    for (std::size_t x = w; x < words; ++x) q[x] &= ~nv[x];
                }
            }
        }
    }

protected:
    const Ordered& g_;
    std::optional<Clock::time_point> deadline_;
    std::size_t ticks_ = 0;
    bool stopped_ = false;
};

class MaxSearch : public Search {
public:
    using Search::Search;

    void run() {
        std::vector<std::uint64_t> p(g_.words, 0);
        for (std::size_t v = 0; v < g_.n; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
        expand(p);
    }

    std::vector<std::size_t> best;
    bool complete() const { return !stopped_; }

private:
    void expand(std::vector<std::uint64_t>& p) {
        if (timed_out()) return;
        std::vector<std::size_t> verts, colours;
        colour(p, verts, colours);
        std::vector<std::uint64_t> np(g_.words);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colours[i] <= best.size()) return;
            const std::size_t v = verts[i];
            current_.push_back(v);
            const std::size_t cnt = simd::kernels().and_into(np.data(), p.data(), g_.row(v), g_.words);
            if (cnt == 0) {
                if (current_.size() > best.size()) best = current_;
            } else {
                expand(np);
                if (stopped_) {
                    current_.pop_back();
                    return;
                }
            }
            current_.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    std::vector<std::size_t> current_;
};

class SizeSearch : public Search {
public:
    SizeSearch(const Ordered& g, Budget budget, std::size_t target, std::optional<std::size_t> limit)
        : Search(g, budget), target_(target), limit_(limit) {}

    void run() {
        std::vector<std::uint64_t> p(g_.words, 0);
        for (std::size_t v = 0; v < g_.n; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
        expand(p);
    }

    std::vector<std::vector<std::size_t>> found;
    bool complete() const { return !stopped_ && !limited_; }

private:
    bool done() const { return stopped_ || limited_; }

    void expand(std::vector<std::uint64_t>& p) {
        if (timed_out()) return;
        std::vector<std::size_t> verts, colours;
        colour(p, verts, colours);
        std::vector<std::uint64_t> np(g_.words);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colours[i] < target_) return;
            const std::size_t v = verts[i];
            current_.push_back(v);
            if (current_.size() == target_) {
                found.push_back(current_);
                if (limit_ && found.size() >= *limit_) limited_ = true;
            } else {
                const std::size_t cnt = simd::kernels().and_into(np.data(), p.data(), g_.row(v), g_.words);
                if (current_.size() + cnt >= target_) expand(np);
            }
            current_.pop_back();
            if (done()) return;
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    std::size_t target_;
    std::optional<std::size_t> limit_;
    bool limited_ = false;
    std::vector<std::size_t> current_;
};

std::vector<std::size_t> to_original(const Ordered& o, const std::vector<std::size_t>& vs) {
    std::vector<std::size_t> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(o.original[v]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CliqueResult max_clique(const BitGraph& g, Budget budget) {
    CliqueResult r;
    if (g.size() == 0) return r;
    const auto o = reorder(g);
    MaxSearch s(o, budget);
    s.run();
    r.witness = to_original(o, s.best);
    r.size = r.witness.size();
    r.exact = s.complete();
    if (!g.is_clique(r.witness)) throw Error("max_clique: witness failed verification");
    return r;
}

CliqueList enumerate_cliques(const BitGraph& g, std::size_t size, std::optional<std::size_t> limit, Budget budget) {
    CliqueList out;
    if (size == 0) {
        out.cliques.push_back({});
        return out;
    }
    if (g.size() < size) return out;
    if (limit && *limit == 0) {
        out.complete = false;
        return out;
    }
    const auto o = reorder(g);
    SizeSearch s(o, budget, size, limit);
    s.run();
    out.complete = s.complete();
    out.cliques.reserve(s.found.size());
    for (const auto& c : s.found) out.cliques.push_back(to_original(o, c));
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

}  // namespace muwm
