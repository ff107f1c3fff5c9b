#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace muwm {

/// Undirected graph with one adjacency bitset per vertex.
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }

    /// Self-loops are rejected with muwm::Error.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const {
        return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    const std::uint64_t* neighbours(std::size_t v) const { return adj_.data() + v * words_; }
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    bool is_clique(const std::vector<std::size_t>& vs) const;

    friend bool operator==(const BitGraph&, const BitGraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
};

using Budget = std::optional<std::chrono::duration<double>>;

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // sorted
    bool exact = true;
};

/// Branch and bound with greedy colouring bounds over bitset candidate sets.
/// Vertices are processed in degree-descending order, ties by index. When the
/// budget runs out the best clique so far is returned with exact = false.
CliqueResult max_clique(const BitGraph& g, Budget budget = std::nullopt);

struct CliqueList {
    std::vector<std::vector<std::size_t>> cliques;  // each sorted, list sorted
    bool complete = true;  // false if the limit or budget stopped the search
};

/// All cliques of exactly `size` vertices, up to `limit`.
CliqueList enumerate_cliques(const BitGraph& g, std::size_t size, std::optional<std::size_t> limit = std::nullopt,
                             Budget budget = std::nullopt);

}  // namespace muwm
