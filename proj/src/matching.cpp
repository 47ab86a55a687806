#include "fanfree/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace fanfree {

namespace {

// Classic array-based blossom algorithm.  `base[v]` is the vertex each
// contracted blossom is identified with; `p` stores the alternating
// forest.  One call to grow() either augments along an exposed path
// from `root` or proves no augmenting path from it exists.
struct blossom_solver {
    const Graph& g;
    std::size_t n;
    std::vector<int> match, p, base;
    std::vector<char> used, in_blossom;

    explicit blossom_solver(const Graph& graph)
        : g(graph),
          n(graph.order()),
          match(n, -1),
          p(n, -1),
          base(n, 0),
          used(n, 0),
          in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        while (true) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    bool grow(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (std::size_t toi = g.neighbors(v).find_first(); toi != bitset::npos;
                 toi = g.neighbors(v).find_next(toi)) {
                int to = static_cast<int>(toi);
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // odd cycle: contract the blossom through lca(v,to)
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(static_cast<int>(i));
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        // exposed vertex: flip matched/unmatched along the path
                        int u = to;
                        while (u != -1) {
                            int pv = p[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }

    // cheap deterministic warm start
    void greedy_init() {
        for (std::size_t v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (std::size_t u = g.neighbors(v).find_first(); u != bitset::npos;
                 u = g.neighbors(v).find_next(u)) {
                if (match[u] == -1) {
                    match[v] = static_cast<int>(u);
                    match[u] = static_cast<int>(v);
                    break;
                }
            }
        }
    }

    std::size_t solve(std::size_t stop_at) {
        greedy_init();
        std::size_t size = matched_pairs();
        for (std::size_t v = 0; v < n && size < stop_at; ++v)
            if (match[v] == -1 && grow(static_cast<int>(v))) ++size;
        return size;
    }

    std::size_t matched_pairs() const {
        std::size_t c = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (match[v] != -1) ++c;
        return c / 2;
    }

    MatchingResult result() const {
        MatchingResult r;
        for (std::size_t v = 0; v < n; ++v)
            if (match[v] != -1 && static_cast<std::size_t>(match[v]) > v)
                r.edges.emplace_back(v, static_cast<std::size_t>(match[v]));
        return r;
    }
};

}  // namespace

MatchingResult maximum_matching(const Graph& g) {
    blossom_solver s(g);
    s.solve(g.order());  // no early stop: runs to proven maximality
    return s.result();
}

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_matching_of_size(const Graph& g, std::size_t want) {
    if (want == 0) return true;
    if (g.order() < 2 * want) return false;
    blossom_solver s(g);
    return s.solve(want) >= want;
}

bool matching_of_size(const Graph& g, std::size_t want, MatchingResult* out) {
    if (g.order() < 2 * want && want > 0) return false;
    blossom_solver s(g);
    std::size_t size = s.solve(want);
    if (size < want) return false;
    if (out) *out = s.result();
    return true;
}

}  // namespace fanfree
