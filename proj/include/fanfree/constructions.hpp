#pragma once

#include <cstddef>
#include <cstdint>

#include "fanfree/graph.hpp"

namespace fanfree {

// floor(n^2/4) + k^2-k (k odd) or k^2-3k/2 (k even).  The closed form
// is proved only for n >= 50k^2; below that the value is still the
// formula but in_proven_range is off so callers can tell.
struct ExFanValue {
    long long value;
    bool in_proven_range;
};
ExFanValue ex_fan(long long n, long long k);

// Maximum edge count with matching number <= beta and max degree <=
// delta: delta*beta + floor(delta/2)*floor(beta/ceil(delta/2)).
long long f_chvatal_hanson(long long beta, long long delta);

// Order of the certified extremal witness built below; enumerating up
// to this many vertices is enough to reproduce f by brute force.
std::size_t chvatal_hanson_order_bound(long long beta, long long delta);

// Complete bipartite graph with sides ceil(n/2) (vertices 0..) and
// floor(n/2) (the rest).
Graph turan_bipartite(std::size_t n);

// k odd, n >= 4k-1: bipartite Turan graph plus two disjoint K_k on the
// first 2k vertices of the larger side.  Certified fan-free on first
// construction (cached per (n,k)).
Graph extremal_g1(std::size_t n, std::size_t k);

// k even, n >= 4k-3: bipartite Turan graph plus a maximizer of
// f(k-1,k-1) on 2k-1 vertices embedded in the larger side.
Graph extremal_g2(std::size_t n, std::size_t k);

// The embedded graph above: 2k-1 vertices, k^2-3k/2 edges, max degree
// k-1.  Optimums are not unique; this returns a fixed representative
// (lexicographically least over the exhaustive search space for k <= 4,
// a certified near-regular circulant completion for larger k), cached.
Graph hstar(std::size_t k);

// A graph attaining f(beta,delta), certified against the matching
// module before return.  Built from the classical pieces (cliques or
// near-regular blocks plus stars); beta*delta must stay within budget.
Graph chvatal_hanson_extremal_graph(long long beta, long long delta, long long budget = 25);

}  // namespace fanfree
