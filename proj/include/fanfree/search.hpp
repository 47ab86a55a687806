#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fanfree/bitset.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

inline constexpr std::size_t exhaustive_order_cap = 9;
inline constexpr std::size_t hill_climb_order_cap = 2000;

struct SearchReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string objective;  // "edges" or "lambda1"
    double best_value = 0.0;
    std::vector<std::string> witnesses;  // graph6; canonical when order permits
    long long graphs_examined = 0;
    bool exhaustive = false;

    // max of best values, union of witnesses at the max, summed stats;
    // associative, so shard reports can combine in any grouping
    void merge(const SearchReport& other);
};

// Scan every isomorphism class on n vertices (edge-by-edge augmentation
// with canonical-form dedup), skip anything with a k-fan, and keep the
// objective maximizers.  Since fans survive edge additions, branches
// are pruned as soon as a fan appears.  Witnesses are canonical graph6.
SearchReport exhaustive_extremal(std::size_t n, std::size_t k, const std::string& objective);

// Randomized local search over fan-free graphs: add / delete / rotate
// an edge, keep strict improvements, restart from scratch `restarts`
// times.  Restart 0 starts from the closed-form construction when one
// fits (so the best value never falls below it); later restarts start
// from random balanced bipartite graphs.  Deterministic given seed.
SearchReport hill_climb_extremal(std::size_t n, std::size_t k, const std::string& objective,
                                 std::size_t restarts, std::uint64_t seed);

struct CutResult {
    long long value = 0;
    bitset side_s;  // contains vertex 0
    bitset side_t;
    bool exact = false;
};

// Maximum cut: exact up to 24 vertices (Gray-code sweep over one side),
// local-search heuristic beyond (greedy + seeded restarts, single-vertex
// moves).  Either way the returned partition satisfies the exchange
// property: every vertex has at least half its neighbors across.
CutResult max_cut(const Graph& g);

}  // namespace fanfree
