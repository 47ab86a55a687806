#pragma once

#include <cstddef>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

// A k-fan at `center`: k triangles meeting exactly there, recorded as k
// vertex-disjoint edges inside the center's neighborhood.
struct FanWitness {
    vertex center = 0;
    std::vector<edge> pairs;
};

// Does g contain k triangles sharing one common vertex?  Equivalent to
// some neighborhood having a k-edge matching, so each candidate center
// costs one (early-exit) matching computation.  Centers are tried in
// descending degree order; a witness, when requested, is the first one
// found in that order.
bool contains_fan(const Graph& g, std::size_t k, FanWitness* witness = nullptr);

// Reference implementation for cross-checking: enumerate centers and
// all ways to pick k disjoint neighborhood edges.  Exponential; capped.
inline constexpr std::size_t naive_fan_order_cap = 12;
inline constexpr std::size_t naive_fan_k_cap = 3;
bool contains_fan_naive(const Graph& g, std::size_t k);

bool verify_fan_witness(const Graph& g, std::size_t k, const FanWitness& w);

// After adding edge (u,v) to a previously fan-free graph, only u, v and
// their common neighbors can have gained a k-matching in their
// neighborhood; checking just those makes search moves cheap.
bool fan_created_by_edge(const Graph& g_after, std::size_t k, vertex u, vertex v);

}  // namespace fanfree
