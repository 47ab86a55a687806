#include "fanfree/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "fanfree/constructions.hpp"
#include "fanfree/fan.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree {

namespace {

constexpr double lambda_tie_tol = 1e-9;

void check_objective(const std::string& objective) {
    if (objective != "edges" && objective != "lambda1")
        throw input_error("objective must be \"edges\" or \"lambda1\", got \"" + objective + "\"");
}

double evaluate(const Graph& g, const std::string& objective) {
    if (objective == "edges") return static_cast<double>(g.edge_count());
    return g.order() == 0 ? 0.0 : spectral_radius(g).lambda1;
}

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

std::string witness_string(const Graph& g) {
    return g.order() <= canonical_order_cap ? canonical_form(g) : graph6_encode(g);
}

}  // namespace

void SearchReport::merge(const SearchReport& other) {
    graphs_examined += other.graphs_examined;
    exhaustive = exhaustive && other.exhaustive;
    double tol = objective == "lambda1" ? lambda_tie_tol : 0.0;
    if (other.best_value > best_value + tol) {
        best_value = other.best_value;
        witnesses = other.witnesses;
    } else if (other.best_value >= best_value - tol) {
        best_value = std::max(best_value, other.best_value);
        witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    }
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
}

SearchReport exhaustive_extremal(std::size_t n, std::size_t k, const std::string& objective) {
    check_objective(objective);
    if (k == 0) throw input_error("exhaustive_extremal: k must be >= 1");
    if (n < 1 || n > exhaustive_order_cap)
        throw capability_error("exhaustive_extremal: n must be in 1.." +
                               std::to_string(exhaustive_order_cap));

    SearchReport rep;
    rep.n = n;
    rep.k = k;
    rep.objective = objective;
    rep.exhaustive = true;

    const bool fan_possible = 2 * k + 1 <= n;
    double best = -1.0;
    const double tol = objective == "lambda1" ? lambda_tie_tol : 0.0;
    std::vector<std::pair<double, std::uint64_t>> leaders;

    // classes with m+1 edges all arise from classes with m edges, so a
    // level sweep with canonical dedup visits each class exactly once
    std::set<std::uint64_t> level{canonical_key(Graph(n))};
    while (!level.empty()) {
        std::set<std::uint64_t> next;
        for (std::uint64_t key : level) {
            Graph g = graph_from_key(n, key);
            ++rep.graphs_examined;
            double value = evaluate(g, objective);
            if (value > best + tol) {
                best = value;
                leaders.clear();
            }
            if (value >= best - tol) leaders.emplace_back(value, key);
            for (vertex j = 1; j < n; ++j)
                for (vertex i = 0; i < j; ++i) {
                    if (g.has_edge(i, j)) continue;
                    g.add_edge(i, j);
                    if (!fan_possible || !fan_created_by_edge(g, k, i, j))
                        next.insert(canonical_key(g));
                    g.remove_edge(i, j);
                }
        }
        level.swap(next);
    }

    rep.best_value = best;
    for (const auto& [value, key] : leaders)
        if (value >= best - tol)
            rep.witnesses.push_back(graph6_encode(graph_from_key(n, key)));
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    rep.witnesses.erase(std::unique(rep.witnesses.begin(), rep.witnesses.end()),
                        rep.witnesses.end());
    return rep;
}

namespace {

Graph climb_start(std::size_t n, std::size_t k, std::size_t restart, std::mt19937_64& rng) {
    if (restart == 0) {
        if (k % 2 == 1 && n >= 4 * k - 1) return extremal_g1(n, k);
        if (k % 2 == 0 && k >= 2 && n >= 4 * k - 3) return extremal_g2(n, k);
        return Graph(n);
    }
    // random balanced bipartite: triangle-free, hence fan-free
    Graph g(n);
    std::size_t left = (n + 1) / 2;
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = left; b < n; ++b)
            if (rng() & 1u) g.add_edge(a, b);
    return g;
}

}  // namespace

SearchReport hill_climb_extremal(std::size_t n, std::size_t k, const std::string& objective,
                                 std::size_t restarts, std::uint64_t seed) {
    check_objective(objective);
    if (k == 0) throw input_error("hill_climb_extremal: k must be >= 1");
    if (restarts == 0) throw input_error("hill_climb_extremal: need at least one restart");
    if (n < 1 || n > hill_climb_order_cap)
        throw capability_error("hill_climb_extremal: n must be in 1.." +
                               std::to_string(hill_climb_order_cap));

    constexpr std::size_t stall_limit = 300;
    constexpr std::size_t proposal_cap = 20000;
    const bool fan_possible = 2 * k + 1 <= n;

    SearchReport total;
    total.n = n;
    total.k = k;
    total.objective = objective;
    total.exhaustive = false;
    bool first = true;

    for (std::size_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL * (r + 1));
        Graph g = climb_start(n, k, r, rng);
        double value = evaluate(g, objective);
        SearchReport rep;
        rep.n = n;
        rep.k = k;
        rep.objective = objective;
        rep.graphs_examined = 1;

        std::size_t stall = 0;
        for (std::size_t prop = 0; prop < proposal_cap && stall < stall_limit; ++prop) {
            std::uint64_t dice = rng_below(rng, 10);
            bool changed = false;
            double candidate = value;
            vertex ru = 0, rv = 0, rw = 0;
            bool rotated = false;
            if (dice < 6) {  // add
                for (int t = 0; t < 30; ++t) {
                    vertex u = rng_below(rng, n), v = rng_below(rng, n);
                    if (u == v || g.has_edge(u, v)) continue;
                    g.add_edge(u, v);
                    if (fan_possible && fan_created_by_edge(g, k, u, v)) {
                        g.remove_edge(u, v);
                        break;
                    }
                    ru = u;
                    rv = v;
                    changed = true;
                    break;
                }
            } else if (dice < 9) {  // rotate: move one endpoint of an edge
                vertex u = 0, v = 0;
                bool found = false;
                for (int t = 0; t < 50 && !found; ++t) {
                    u = rng_below(rng, n);
                    v = rng_below(rng, n);
                    found = u != v && g.has_edge(u, v);
                }
                if (found) {
                    for (int t = 0; t < 30; ++t) {
                        vertex w = rng_below(rng, n);
                        if (w == u || w == v || g.has_edge(u, w)) continue;
                        g.remove_edge(u, v);
                        g.add_edge(u, w);
                        if (fan_possible && fan_created_by_edge(g, k, u, w)) {
                            g.remove_edge(u, w);
                            g.add_edge(u, v);
                            break;
                        }
                        ru = u;
                        rv = v;
                        rw = w;
                        changed = true;
                        rotated = true;
                        break;
                    }
                }
            }
            // deletions (dice 9) never raise either objective, so they
            // are proposed and immediately rejected: strict ascent only

            if (!changed) {
                ++stall;
                continue;
            }
            ++rep.graphs_examined;
            if (objective == "edges")
                candidate = static_cast<double>(g.edge_count());
            else
                candidate = spectral_radius(g).lambda1;
            if (candidate > value + 1e-12) {
                value = candidate;
                stall = 0;
            } else {  // undo
                if (rotated) {
                    g.remove_edge(ru, rw);
                    g.add_edge(ru, rv);
                } else {
                    g.remove_edge(ru, rv);
                }
                ++stall;
            }
        }

        rep.best_value = value;
        rep.witnesses.push_back(witness_string(g));
        if (first) {
            total = rep;
            first = false;
        } else {
            total.merge(rep);
        }
    }
    return total;
}

CutResult max_cut(const Graph& g) {
    const std::size_t n = g.order();
    CutResult out;
    out.side_s = bitset(n);
    out.side_t = bitset(n);

    if (n <= 1) {
        if (n == 1) out.side_s.set(0);
        out.exact = true;
        return out;
    }

    if (n <= 24) {
        std::vector<std::uint32_t> adj(n, 0);
        for (vertex u = 0; u < n; ++u)
            g.neighbors(u).for_each([&](std::size_t v) { adj[u] |= 1u << v; });
        std::uint32_t cur = 0;  // vertices 0..n-2 may enter S; n-1 stays in T
        long long cut = 0, best = 0;
        std::uint32_t best_mask = 0;
        const std::uint64_t limit = std::uint64_t{1} << (n - 1);
        for (std::uint64_t i = 1; i < limit; ++i) {
            int v = std::countr_zero(i);
            int deg = std::popcount(adj[v]);
            int a = std::popcount(adj[v] & cur);
            cut += (cur >> v) & 1u ? 2 * a - deg : deg - 2 * a;
            cur ^= 1u << v;
            if (cut > best) {
                best = cut;
                best_mask = cur;
            }
        }
        if (!(best_mask & 1u)) best_mask = ~best_mask;  // put vertex 0 in S
        for (vertex v = 0; v < n; ++v)
            (best_mask >> v) & 1u ? out.side_s.set(v) : out.side_t.set(v);
        out.value = best;
        out.exact = true;
    } else {
        // greedy seeding plus single-vertex exchanges; several seeded
        // random restarts guard against weak local optima
        auto local_opt = [&](bitset s) {
            bool moved = true;
            while (moved) {
                moved = false;
                for (vertex v = 0; v < n; ++v) {
                    std::size_t same_s = g.neighbors(v).intersect_count(s);
                    std::size_t same =
                        s.test(v) ? same_s : g.degree(v) - same_s;
                    if (2 * same > g.degree(v)) {
                        s.test(v) ? s.reset(v) : s.set(v);
                        moved = true;
                    }
                }
            }
            return s;
        };
        auto cut_of = [&](const bitset& s) {
            long long c = 0;
            for (vertex v = 0; v < n; ++v)
                if (s.test(v)) c += static_cast<long long>(g.degree(v)) -
                                    static_cast<long long>(g.neighbors(v).intersect_count(s));
            return c;
        };

        bitset greedy(n);
        for (vertex v = 0; v < n; ++v) {
            std::size_t in_s = g.neighbors(v).intersect_count(greedy);
            std::size_t assigned = 0;
            for (vertex u = 0; u < v; ++u)
                if (g.has_edge(u, v)) ++assigned;
            if (in_s <= assigned - in_s || assigned == 0) greedy.set(v);
        }
        bitset best_s = local_opt(greedy);
        long long best = cut_of(best_s);
        std::mt19937_64 rng(0x5eedf00dULL);
        for (int r = 0; r < 8; ++r) {
            bitset s(n);
            for (vertex v = 0; v < n; ++v)
                if (rng() & 1u) s.set(v);
            bitset cand = local_opt(s);
            long long c = cut_of(cand);
            if (c > best) {
                best = c;
                best_s = cand;
            }
        }
        if (!best_s.test(0)) {  // normalise: vertex 0 sits in S
            bitset flipped(n);
            for (vertex v = 0; v < n; ++v)
                if (!best_s.test(v)) flipped.set(v);
            best_s = flipped;
        }
        out.side_s = best_s;
        for (vertex v = 0; v < n; ++v)
            if (!best_s.test(v)) out.side_t.set(v);
        out.value = best;
        out.exact = false;
    }

    // exchange property: nobody keeps a majority of neighbors beside them
    for (vertex v = 0; v < n; ++v) {
        std::size_t in_s = g.neighbors(v).intersect_count(out.side_s);
        std::size_t same = out.side_s.test(v) ? in_s : g.degree(v) - in_s;
        assert(2 * same <= g.degree(v));
        (void)same;
    }
    return out;
}

}  // namespace fanfree
