#pragma once

#include <cstddef>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

struct MatchingResult {
    std::vector<edge> edges;  // u < v within each pair, sorted by u
    std::size_t size() const { return edges.size(); }
};

// Maximum matching in an arbitrary graph: repeated augmenting-path
// search with blossom contraction, O(V^3).  Scans run in ascending
// vertex/edge order, so the returned matching is reproducible.
// Maximality is certified by the absence of an augmenting path from
// every remaining free vertex.
MatchingResult maximum_matching(const Graph& g);

std::size_t matching_number(const Graph& g);

// Early-exit variant: stops augmenting as soon as `want` edges exist.
bool has_matching_of_size(const Graph& g, std::size_t want);

// Like has_matching_of_size but hands back the matching found (size
// >= want) so callers can extract witnesses.
bool matching_of_size(const Graph& g, std::size_t want, MatchingResult* out);

}  // namespace fanfree
