#include "fanfree/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

namespace fanfree {

std::vector<edge> Graph::edges() const {
    std::vector<edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (vertex u = 0; u < n_; ++u)
        for (vertex v = rows_[u].find_next(u); v != bitset::npos; v = rows_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

bool Graph::invariants_hold() const {
    long long seen = 0;
    for (vertex u = 0; u < n_; ++u) {
        if (rows_[u].size() != n_) return false;
        if (rows_[u].test(u)) return false;
        for (vertex v = u + 1; v < n_; ++v) {
            if (rows_[u].test(v) != rows_[v].test(u)) return false;
            if (rows_[u].test(v)) ++seen;
        }
    }
    return seen == m_;
}

Graph make_graph(std::size_t n, const std::vector<edge>& edges, std::size_t max_order) {
    if (n > hard_order_cap || n > max_order)
        throw capability_error("graph order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(std::min(max_order, hard_order_cap)));
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw input_error("loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw input_error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::size_t min_degree(const Graph& g) {
    std::size_t d = g.order() == 0 ? 0 : std::numeric_limits<std::size_t>::max();
    for (vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph induced_subgraph(const Graph& g, const bitset& s) {
    assert(s.size() == g.order());
    std::vector<vertex> keep;
    s.for_each([&](std::size_t v) { keep.push_back(v); });
    std::vector<std::size_t> pos(g.order(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        bitset row = g.neighbors(keep[i]) & s;
        row.for_each([&](std::size_t v) {
            if (pos[v] > i) h.add_edge(i, pos[v]);
        });
    }
    return h;
}

Graph neighborhood_graph(const Graph& g, vertex v, std::vector<vertex>* labels) {
    if (labels) {
        labels->clear();
        g.neighbors(v).for_each([&](std::size_t u) { labels->push_back(u); });
    }
    return induced_subgraph(g, g.neighbors(v));
}

long long triangle_count(const Graph& g) {
    long long sum = 0;
    for (vertex u = 0; u < g.order(); ++u)
        for (vertex v = g.neighbors(u).find_next(u); v != bitset::npos;
             v = g.neighbors(u).find_next(v))
            sum += static_cast<long long>(g.neighbors(u).intersect_count(g.neighbors(v)));
    assert(sum % 3 == 0);
    return sum / 3;
}

std::vector<bitset> components(const Graph& g) {
    std::vector<bitset> out;
    bitset seen(g.order());
    for (vertex s = 0; s < g.order(); ++s) {
        if (seen.test(s)) continue;
        bitset comp(g.order());
        std::vector<vertex> stack{s};
        comp.set(s);
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            g.neighbors(u).for_each([&](std::size_t w) {
                if (!comp.test(w)) {
                    comp.set(w);
                    stack.push_back(w);
                }
            });
        }
        comp.for_each([&](std::size_t w) { seen.set(w); });
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return components(g).front().count() == g.order();
}

// --- graph6 -----------------------------------------------------------------

namespace {

void append_bigendian6(std::string& out, std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bigendian6(out, n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_bigendian6(out, n, 6);
    }
    unsigned buf = 0;
    int used = 0;
    for (vertex j = 1; j < n; ++j) {
        for (vertex i = 0; i < j; ++i) {
            buf = (buf << 1) | unsigned(g.has_edge(i, j));
            if (++used == 6) {
                out.push_back(static_cast<char>(buf + 63));
                buf = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((buf << (6 - used)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text, std::size_t max_order) {
    std::size_t at = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) at = header.size();

    auto byte = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw parse_error("truncated graph6 input", i);
        unsigned c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", i);
        return c - 63;
    };

    std::uint64_t n = 0;
    if (byte(at) != 63) {
        n = byte(at++);
    } else if (at + 1 < text.size() && byte(at + 1) != 63) {
        ++at;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte(at++);
    } else {
        at += 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | byte(at++);
    }
    if (n > max_order || n > hard_order_cap)
        throw capability_error("graph6 order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(std::min(max_order, hard_order_cap)));

    Graph g(static_cast<std::size_t>(n));
    unsigned buf = 0;
    int avail = 0;
    for (vertex j = 1; j < n; ++j) {
        for (vertex i = 0; i < j; ++i) {
            if (avail == 0) {
                buf = byte(at++);
                avail = 6;
            }
            if ((buf >> --avail) & 1) g.add_edge(i, j);
        }
    }
    if (avail > 0 && (buf & ((1u << avail) - 1)) != 0)
        throw parse_error("nonzero padding bits", at - 1);
    if (at != text.size()) throw parse_error("trailing data after graph6 body", at);
    return g;
}

// --- adjacency list ---------------------------------------------------------

Graph adjlist_decode(std::string_view text, std::size_t max_order) {
    std::vector<edge> edges;
    bool have_order = false;
    std::size_t order = 0;
    std::size_t max_seen = 0;
    bool first_data_line = true;

    std::size_t line_start = 0;
    std::size_t lineno = 0;
    while (line_start <= text.size()) {
        std::size_t eol = text.find('\n', line_start);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(line_start, eol - line_start);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream ss{std::string(line)};
        long long a, b;
        if (ss >> a) {
            if (a < 0) throw parse_error("negative vertex on line " + std::to_string(lineno), line_start);
            if (ss >> b) {
                if (b < 0)
                    throw parse_error("negative vertex on line " + std::to_string(lineno), line_start);
                edges.emplace_back(static_cast<vertex>(a), static_cast<vertex>(b));
                max_seen = std::max({max_seen, static_cast<std::size_t>(a) + 1,
                                     static_cast<std::size_t>(b) + 1});
            } else if (first_data_line) {
                have_order = true;
                order = static_cast<std::size_t>(a);
            } else {
                throw parse_error("expected \"u v\" on line " + std::to_string(lineno), line_start);
            }
            std::string rest;
            if (ss >> rest)
                throw parse_error("trailing tokens on line " + std::to_string(lineno), line_start);
            first_data_line = false;
        }
        if (eol == text.size()) break;
        line_start = eol + 1;
    }
    return make_graph(have_order ? order : max_seen, edges, max_order);
}

std::string adjlist_encode(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string dot_encode(const Graph& g) {
    std::string out = "graph g {\n";
    for (vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// --- canonical form ---------------------------------------------------------

namespace {

// Branch-and-bound search for the labelling whose column-major adjacency
// bit string is lexicographically least.  Bits fit one word for n <= 10
// (45 pairs), so prefixes compare as integers: pair (i,j) sits at weight
// 2^(total-1-idx) with idx = j(j-1)/2 + i.
struct canon_search {
    std::size_t n;
    int total_bits;
    std::array<std::uint16_t, canonical_order_cap> adj{};
    std::array<std::size_t, canonical_order_cap> degree{};

    std::uint64_t best = ~std::uint64_t{0};
    std::array<vertex, canonical_order_cap> best_perm{};

    std::array<vertex, canonical_order_cap> perm{};
    std::uint16_t used = 0;

    explicit canon_search(const Graph& g) : n(g.order()) {
        total_bits = static_cast<int>(n * (n - 1) / 2);
        for (vertex v = 0; v < n; ++v) {
            degree[v] = g.degree(v);
            for (vertex u = 0; u < n; ++u)
                if (u != v && g.has_edge(u, v)) adj[v] |= std::uint16_t(1u << u);
        }
        descend(0, 0, 0);
        assert(best != ~std::uint64_t{0} || n <= 1);
        if (n <= 1) best = 0;
    }

    void descend(std::size_t depth, std::uint64_t prefix, int bits) {
        if (depth == n) {
            if (prefix < best) {
                best = prefix;
                best_perm = perm;
            }
            return;
        }
        // column bits contributed by placing v at this depth
        struct option {
            std::uint64_t col;
            std::size_t deg;
            vertex v;
            bool operator<(const option& o) const {
                return std::tie(col, deg, v) < std::tie(o.col, o.deg, o.v);
            }
        };
        std::array<option, canonical_order_cap> opts;
        std::size_t nopts = 0;
        for (vertex v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint64_t col = 0;
            for (std::size_t i = 0; i < depth; ++i)
                col = (col << 1) | ((adj[v] >> perm[i]) & 1u);
            opts[nopts++] = {col, degree[v], v};
        }
        std::sort(opts.begin(), opts.begin() + nopts);
        for (std::size_t oi = 0; oi < nopts; ++oi) {
            const auto& [col, deg, v] = opts[oi];
            int nbits = bits + static_cast<int>(depth);
            std::uint64_t next = (prefix << depth) | col;
            std::uint64_t bound = best >> (total_bits - nbits);
            if (next > bound) break;  // options are sorted; the rest are worse
            // skip v if an already-tried twin makes the same subtree
            bool twin = false;
            for (std::size_t pi = 0; pi < oi && !twin; ++pi) {
                vertex u = opts[pi].v;
                twin = opts[pi].col == col &&
                       (adj[u] & ~std::uint16_t(1u << v)) == (adj[v] & ~std::uint16_t(1u << u));
            }
            if (twin) continue;
            perm[depth] = v;
            used |= std::uint16_t(1u << v);
            descend(depth + 1, next, nbits);
            used &= std::uint16_t(~(1u << v));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g, std::size_t cap) {
    const std::size_t n = g.order();
    if (cap > canonical_order_cap) cap = canonical_order_cap;
    if (n > cap)
        throw capability_error("canonical form capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n));
    if (n <= 1) return g;
    canon_search s(g);
    Graph h(n);
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i)
            if (g.has_edge(s.best_perm[i], s.best_perm[j])) h.add_edge(i, j);
    return h;
}

std::string canonical_form(const Graph& g, std::size_t cap) {
    return graph6_encode(canonical_graph(g, cap));
}

std::uint64_t canonical_key(const Graph& g, std::size_t cap) {
    if (cap > canonical_order_cap) cap = canonical_order_cap;
    if (g.order() > cap)
        throw capability_error("canonical form capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(g.order()));
    if (g.order() <= 1) return 0;
    return canon_search(g).best;
}

Graph graph_from_key(std::size_t n, std::uint64_t key) {
    assert(n <= canonical_order_cap);
    Graph g(n);
    const int total = static_cast<int>(n * (n - 1) / 2);
    int b = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i, ++b)
            if ((key >> (total - 1 - b)) & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace fanfree
