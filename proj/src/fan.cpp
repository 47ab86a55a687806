#include "fanfree/fan.hpp"

#include <algorithm>
#include <numeric>

#include "fanfree/matching.hpp"

namespace fanfree {

namespace {

bool neighborhood_has_k_matching(const Graph& g, vertex center, std::size_t k,
                                 FanWitness* witness) {
    if (g.degree(center) < 2 * k) return false;
    std::vector<vertex> labels;
    Graph nh = neighborhood_graph(g, center, &labels);
    if (!witness) return has_matching_of_size(nh, k);
    MatchingResult m;
    if (!matching_of_size(nh, k, &m)) return false;
    witness->center = center;
    witness->pairs.clear();
    for (std::size_t i = 0; i < k; ++i)
        witness->pairs.emplace_back(labels[m.edges[i].first], labels[m.edges[i].second]);
    return true;
}

}  // namespace

bool contains_fan(const Graph& g, std::size_t k, FanWitness* witness) {
    if (k == 0) throw input_error("fan parameter k must be >= 1");
    if (g.order() < 2 * k + 1) return false;
    std::vector<vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
    for (vertex v : order) {
        if (g.degree(v) < 2 * k) break;  // sorted: nobody later has room
        if (neighborhood_has_k_matching(g, v, k, witness)) return true;
    }
    return false;
}

bool contains_fan_naive(const Graph& g, std::size_t k) {
    if (k == 0) throw input_error("fan parameter k must be >= 1");
    if (g.order() > naive_fan_order_cap || k > naive_fan_k_cap)
        throw capability_error("naive fan search capped at n <= " +
                               std::to_string(naive_fan_order_cap) +
                               ", k <= " + std::to_string(naive_fan_k_cap));
    for (vertex c = 0; c < g.order(); ++c) {
        std::vector<edge> inside;
        const bitset& nb = g.neighbors(c);
        nb.for_each([&](std::size_t u) {
            nb.for_each([&](std::size_t v) {
                if (u < v && g.has_edge(u, v)) inside.emplace_back(u, v);
            });
        });
        // pick k pairwise disjoint edges by explicit search
        std::vector<std::size_t> chosen;
        auto disjoint = [&](const edge& e) {
            for (std::size_t idx : chosen) {
                const edge& f = inside[idx];
                if (e.first == f.first || e.first == f.second || e.second == f.first ||
                    e.second == f.second)
                    return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, std::size_t from) -> bool {
            if (chosen.size() == k) return true;
            for (std::size_t i = from; i < inside.size(); ++i) {
                if (!disjoint(inside[i])) continue;
                chosen.push_back(i);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return true;
    }
    return false;
}

bool verify_fan_witness(const Graph& g, std::size_t k, const FanWitness& w) {
    if (k == 0) throw input_error("fan parameter k must be >= 1");
    if (w.center >= g.order() || w.pairs.size() != k) return false;
    bitset used(g.order());
    for (const auto& [u, v] : w.pairs) {
        if (u >= g.order() || v >= g.order() || u == v) return false;
        if (u == w.center || v == w.center) return false;
        if (used.test(u) || used.test(v)) return false;
        used.set(u);
        used.set(v);
        if (!g.has_edge(u, v) || !g.has_edge(w.center, u) || !g.has_edge(w.center, v))
            return false;
    }
    return true;
}

bool fan_created_by_edge(const Graph& g_after, std::size_t k, vertex u, vertex v) {
    if (k == 0) throw input_error("fan parameter k must be >= 1");
    if (neighborhood_has_k_matching(g_after, u, k, nullptr)) return true;
    if (neighborhood_has_k_matching(g_after, v, k, nullptr)) return true;
    bitset common = g_after.neighbors(u) & g_after.neighbors(v);
    for (std::size_t w = common.find_first(); w != bitset::npos; w = common.find_next(w))
        if (neighborhood_has_k_matching(g_after, w, k, nullptr)) return true;
    return false;
}

}  // namespace fanfree
