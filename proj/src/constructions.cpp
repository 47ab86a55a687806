#include "fanfree/constructions.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "fanfree/fan.hpp"
#include "fanfree/matching.hpp"

namespace fanfree {

namespace {

constexpr long long max_ex_fan_n = 1'000'000'000;  // keeps n^2 inside int64

std::mutex cache_mutex;

void require(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

// single-writer certification cache so repeated construction calls
// don't redo the fan scan
void certify_fan_free(const Graph& g, std::size_t k, const char* what) {
    static std::map<std::pair<std::size_t, std::size_t>, bool> done;
    std::pair<std::size_t, std::size_t> key{g.order(), k};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = done.find(key);
        if (it != done.end() && it->second) return;
    }
    if (contains_fan(g, k))
        throw construction_error(std::string(what) + " failed its fan-freeness certificate");
    std::lock_guard<std::mutex> lock(cache_mutex);
    done[key] = true;
}

}  // namespace

ExFanValue ex_fan(long long n, long long k) {
    require(k >= 1, "ex_fan: k must be >= 1");
    require(n >= 0, "ex_fan: n must be >= 0");
    if (n > max_ex_fan_n || k > max_ex_fan_n)
        throw capability_error("ex_fan: arguments exceed integer-safe range");
    long long excess = (k % 2 == 1) ? k * k - k : k * k - 3 * k / 2;
    return {n * n / 4 + excess, n >= 50 * k * k};
}

long long f_chvatal_hanson(long long beta, long long delta) {
    require(beta >= 0 && delta >= 0, "f_chvatal_hanson: arguments must be >= 0");
    if (beta == 0 || delta == 0) return 0;
    long long half_up = (delta + 1) / 2;
    return delta * beta + (delta / 2) * (beta / half_up);
}

namespace {

struct ch_plan {
    long long blocks;      // near-regular blocks of matching weight ceil(delta/2)
    long long stars;       // leftover budget as K_{1,delta} stars
    std::size_t block_order;
};

ch_plan plan_chvatal_hanson(long long beta, long long delta) {
    ch_plan p{};
    long long half_up = (delta + 1) / 2;
    p.blocks = beta / half_up;
    p.stars = beta - p.blocks * half_up;
    // even delta: K_{delta+1}; odd delta: near-regular on delta+2 vertices
    p.block_order = static_cast<std::size_t>(delta % 2 == 0 ? delta + 1 : delta + 2);
    return p;
}

// near-delta-regular graph on an odd number of vertices nn: circulant
// with offsets 1..(delta-1)/2 plus a matching at distance > that,
// leaving exactly one vertex one short
void add_near_regular(Graph& g, std::size_t base, std::size_t nn, std::size_t delta) {
    assert(nn % 2 == 1 && delta % 2 == 1 && delta < nn);
    for (std::size_t off = 1; off <= (delta - 1) / 2; ++off)
        for (std::size_t i = 0; i < nn; ++i)
            g.add_edge(base + i, base + (i + off) % nn);
    std::size_t half = nn / 2;
    for (std::size_t i = 0; i < half; ++i) g.add_edge(base + i, base + i + half);
}

}  // namespace

std::size_t chvatal_hanson_order_bound(long long beta, long long delta) {
    if (beta <= 0 || delta <= 0) return 1;
    ch_plan p = plan_chvatal_hanson(beta, delta);
    return static_cast<std::size_t>(p.blocks) * p.block_order +
           static_cast<std::size_t>(p.stars) * static_cast<std::size_t>(delta + 1);
}

Graph chvatal_hanson_extremal_graph(long long beta, long long delta, long long budget) {
    require(beta >= 1 && delta >= 1, "chvatal_hanson_extremal_graph: beta, delta must be >= 1");
    if (beta * delta > budget)
        throw capability_error("chvatal_hanson_extremal_graph: beta*delta = " +
                               std::to_string(beta * delta) + " exceeds budget " +
                               std::to_string(budget));
    ch_plan p = plan_chvatal_hanson(beta, delta);
    Graph g(chvatal_hanson_order_bound(beta, delta));
    std::size_t at = 0;
    for (long long b = 0; b < p.blocks; ++b, at += p.block_order) {
        if (delta % 2 == 0) {
            for (std::size_t i = 0; i < p.block_order; ++i)
                for (std::size_t j = i + 1; j < p.block_order; ++j)
                    g.add_edge(at + i, at + j);
        } else {
            add_near_regular(g, at, p.block_order, static_cast<std::size_t>(delta));
        }
    }
    for (long long s = 0; s < p.stars; ++s, at += static_cast<std::size_t>(delta + 1))
        for (long long leaf = 1; leaf <= delta; ++leaf)
            g.add_edge(at, at + static_cast<std::size_t>(leaf));

    // drop isolated vertices (delta = 1 blocks carry one)
    bitset live(g.order());
    for (vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) live.set(v);
    if (live.count() < g.order()) g = induced_subgraph(g, live);

    long long want = f_chvatal_hanson(beta, delta);
    if (g.edge_count() != want)
        throw construction_error("chvatal_hanson_extremal_graph: built " +
                                 std::to_string(g.edge_count()) + " edges, wanted " +
                                 std::to_string(want));
    if (static_cast<long long>(max_degree(g)) > delta)
        throw construction_error("chvatal_hanson_extremal_graph: max degree exceeds delta");
    if (static_cast<long long>(matching_number(g)) > beta)
        throw construction_error("chvatal_hanson_extremal_graph: matching number exceeds beta");
    return g;
}

Graph turan_bipartite(std::size_t n) {
    if (n > hard_order_cap)
        throw capability_error("turan_bipartite: order exceeds cap " +
                               std::to_string(hard_order_cap));
    Graph g(n);
    std::size_t left = (n + 1) / 2;
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = left; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph extremal_g1(std::size_t n, std::size_t k) {
    require(k >= 1 && k % 2 == 1, "extremal_g1: k must be odd and >= 1");
    require(n >= 4 * k - 1, "extremal_g1: requires n >= 4k-1");
    Graph g = turan_bipartite(n);
    assert(2 * k <= (n + 1) / 2);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t i = c * k; i < (c + 1) * k; ++i)
            for (std::size_t j = i + 1; j < (c + 1) * k; ++j) g.add_edge(i, j);
    long long want = ex_fan(static_cast<long long>(n), static_cast<long long>(k)).value;
    if (g.edge_count() != want)
        throw construction_error("extremal_g1: edge count mismatch");
    certify_fan_free(g, k, "extremal_g1");
    return g;
}

Graph hstar(std::size_t k) {
    require(k >= 2 && k % 2 == 0, "hstar: k must be even and >= 2");
    static std::map<std::size_t, Graph> fixtures;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = fixtures.find(k);
        if (it != fixtures.end()) return it->second;
    }

    const std::size_t nn = 2 * k - 1;
    const std::size_t d = k - 1;  // odd
    const long long want = f_chvatal_hanson(static_cast<long long>(k) - 1,
                                            static_cast<long long>(k) - 1);
    Graph g(nn);
    if (k <= 4) {
        // small enough to take the lexicographically least maximizer
        // over every labelled graph (bit b of mask = pair with colex
        // index b; smaller reversed value = earlier bit string)
        const int pairs = static_cast<int>(nn * (nn - 1) / 2);
        std::vector<std::pair<int, int>> pair_of(pairs);
        for (int j = 1, idx = 0; j < static_cast<int>(nn); ++j)
            for (int i = 0; i < j; ++i) pair_of[idx++] = {i, j};
        long long best_edges = -1;
        std::uint64_t best_key = 0;
        std::uint32_t best_mask = 0;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            int deg[9] = {0};
            bool ok = true;
            long long edges = 0;
            for (int b = 0; b < pairs && ok; ++b)
                if (mask & (1u << b)) {
                    ++edges;
                    ok = ++deg[pair_of[b].first] <= static_cast<int>(d) &&
                         ++deg[pair_of[b].second] <= static_cast<int>(d);
                }
            if (!ok) continue;
            std::uint64_t key = 0;
            for (int b = 0; b < pairs; ++b)
                key = (key << 1) | ((mask >> b) & 1u);
            if (edges > best_edges || (edges == best_edges && key < best_key)) {
                best_edges = edges;
                best_key = key;
                best_mask = mask;
            }
        }
        for (int b = 0; b < pairs; ++b)
            if (best_mask & (1u << b)) g.add_edge(pair_of[b].first, pair_of[b].second);
    } else {
        // the near-regular completion already meets the degree-sum
        // ceiling floor(nn*d/2), so greedy ascent stops immediately
        add_near_regular(g, 0, nn, d);
        for (vertex u = 0; u < nn; ++u)
            for (vertex v = u + 1; v < nn; ++v)
                if (!g.has_edge(u, v) && g.degree(u) < d && g.degree(v) < d) g.add_edge(u, v);
    }

    if (g.edge_count() != want || static_cast<long long>(max_degree(g)) > static_cast<long long>(d))
        throw construction_error("hstar: certificate failed (edges or degree)");
    if (matching_number(g) > d) throw construction_error("hstar: matching number too large");

    std::lock_guard<std::mutex> lock(cache_mutex);
    return fixtures.emplace(k, std::move(g)).first->second;
}

Graph extremal_g2(std::size_t n, std::size_t k) {
    require(k >= 2 && k % 2 == 0, "extremal_g2: k must be even and >= 2");
    require(n >= 4 * k - 3, "extremal_g2: requires n >= 4k-3");
    Graph g = turan_bipartite(n);
    Graph h = hstar(k);
    assert(h.order() <= (n + 1) / 2);
    for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
    long long want = ex_fan(static_cast<long long>(n), static_cast<long long>(k)).value;
    if (g.edge_count() != want)
        throw construction_error("extremal_g2: edge count mismatch");
    certify_fan_free(g, k, "extremal_g2");
    return g;
}

}  // namespace fanfree
