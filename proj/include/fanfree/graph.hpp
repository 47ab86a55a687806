#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanfree/bitset.hpp"
#include "fanfree/errors.hpp"

namespace fanfree {

using vertex = std::size_t;
using edge = std::pair<vertex, vertex>;

// Default guard when building graphs from untrusted text; callers that
// know better (constructions, big experiments) pass a larger bound.
inline constexpr std::size_t default_order_cap = 512;
// Nothing in this codebase needs more vertices than this.
inline constexpr std::size_t hard_order_cap = 4096;
// Canonical labelling is a permutation search; past this it is hopeless.
inline constexpr std::size_t canonical_order_cap = 10;

// Undirected simple graph on vertices 0..n-1, dense bitset adjacency.
// Row symmetry and an empty diagonal are maintained by the two mutators
// and asserted there; treat instances as values (copy, then edit).
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), m_(0), rows_(n, bitset(n)) {}

    std::size_t order() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(vertex u, vertex v) const {
        assert(u < n_ && v < n_);
        return rows_[u].test(v);
    }
    void add_edge(vertex u, vertex v) {
        assert(u < n_ && v < n_ && u != v);
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
        }
        assert(rows_[u].test(v) && rows_[v].test(u) && !rows_[u].test(u));
    }
    void remove_edge(vertex u, vertex v) {
        assert(u < n_ && v < n_ && u != v);
        if (rows_[u].test(v)) {
            rows_[u].reset(v);
            rows_[v].reset(u);
            --m_;
        }
        assert(!rows_[u].test(v) && !rows_[v].test(u));
    }

    const bitset& neighbors(vertex v) const {
        assert(v < n_);
        return rows_[v];
    }
    std::size_t degree(vertex v) const { return neighbors(v).count(); }

    std::vector<edge> edges() const;

    // full O(n^2) consistency sweep, used by tests
    bool invariants_hold() const;

    bool operator==(const Graph&) const = default;

  private:
    std::size_t n_ = 0;
    long long m_ = 0;
    std::vector<bitset> rows_;
};

// Validating constructor: rejects out-of-range endpoints, loops and
// duplicate edges.  max_order guards against runaway inputs.
Graph make_graph(std::size_t n, const std::vector<edge>& edges,
                 std::size_t max_order = default_order_cap);

std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

// subgraph induced on the set bits of s; vertices are relabelled to
// 0..|s|-1 in increasing original order
Graph induced_subgraph(const Graph& g, const bitset& s);

// induced subgraph on N(v); the returned map gives original labels
Graph neighborhood_graph(const Graph& g, vertex v, std::vector<vertex>* labels = nullptr);

// each triangle counted once (sum of codegrees over edges, divided by 3)
long long triangle_count(const Graph& g);

bool is_connected(const Graph& g);
// connected components as vertex sets, ordered by smallest member
std::vector<bitset> components(const Graph& g);

// --- graph6 ---------------------------------------------------------------
// Standard printable encoding of undirected graphs: the order, then the
// upper triangle x(i,j) (i<j, column-major) packed six bits per byte,
// each byte offset by 63.  Encode emits no header; decode tolerates the
// ">>graph6<<" prefix.  Malformed input raises parse_error with the
// offending byte offset.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text, std::size_t max_order = default_order_cap);

// --- plain adjacency list (for hand-written fixtures) ----------------------
// One "u v" pair per line, 0-indexed; '#' starts a comment.  An optional
// first line with a single integer fixes the order, otherwise it is
// max endpoint + 1.
Graph adjlist_decode(std::string_view text, std::size_t max_order = default_order_cap);
std::string adjlist_encode(const Graph& g);

std::string dot_encode(const Graph& g);

// --- canonical form ---------------------------------------------------------
// Label-independent key: the lexicographically least adjacency bit
// string over all vertex labellings, returned as the graph6 encoding of
// the minimising labelling.  Branch-and-bound over label positions with
// prefix pruning; candidate order is steered by degree so the bound
// tightens early.  Only sized for small graphs (cap above).
std::string canonical_form(const Graph& g, std::size_t cap = canonical_order_cap);
Graph canonical_graph(const Graph& g, std::size_t cap = canonical_order_cap);

// The same minimal bit string packed into one word (pair (i,j), i<j,
// colex index b at weight 2^(pairs-1-b)); cheap dedup key for
// enumeration.  Graphs of equal order collide iff isomorphic.
std::uint64_t canonical_key(const Graph& g, std::size_t cap = canonical_order_cap);
// inverse of canonical_key for a given order
Graph graph_from_key(std::size_t n, std::uint64_t key);

}  // namespace fanfree
