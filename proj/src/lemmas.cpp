#include "fanfree/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fanfree/constructions.hpp"
#include "fanfree/fan.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/search.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree {

namespace {

constexpr double slack = 1e-7;  // for comparisons against float lambda1

const char* kExtremalNote =
    "extremal-conditional (a failed conclusion marks the input as non-extremal, not the claim)";

// Extremal-conditional reports can verify every concrete hypothesis and
// still rest on unverifiable extremality.  When such a conclusion
// fails, the input simply was not extremal, so hypotheses_hold drops.
void close_extremal_report(LemmaReport& rep, bool concrete_hyps) {
    rep.hypotheses_hold = concrete_hyps && rep.conclusion_holds;
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += kExtremalNote;
}

}  // namespace

LemmaReport check_triangle_edge_bound(const Graph& g) {
    if (g.order() == 0) throw input_error("check_triangle_edge_bound: empty graph");
    LemmaReport rep;
    rep.id = "triangle-edge-bound";
    rep.hypotheses_hold = is_connected(g);
    if (!rep.hypotheses_hold) rep.notes = "input not connected";

    const double n = static_cast<double>(g.order());
    const double e = static_cast<double>(g.edge_count());
    const double t = static_cast<double>(triangle_count(g));
    const double lam = spectral_radius(g).lambda1;
    const double main_bound = lam > 0 ? lam * lam - 3.0 * t / lam : 0.0;
    rep.conclusion_holds = e + slack >= main_bound;
    rep.quantities = {{"n", n},       {"e", e},
                      {"t", t},       {"lambda1", lam},
                      {"bound", main_bound}};
    if (lam >= n / 2.0) {
        const double half_bound = lam * lam - 6.0 * t / n;
        rep.conclusion_holds = rep.conclusion_holds && e + slack >= half_bound;
        rep.quantities["bound_half_n"] = half_bound;
    }
    return rep;
}

LemmaReport check_matching_edge_bound(const Graph& g, std::size_t k) {
    if (k == 0) throw input_error("check_matching_edge_bound: k must be >= 1");
    LemmaReport rep;
    rep.id = "matching-edge-bound";
    const std::size_t nu = matching_number(g);
    rep.hypotheses_hold = nu <= k - 1;
    if (!rep.hypotheses_hold) rep.notes = "matching number exceeds k-1";
    const long long bound = static_cast<long long>(k) * static_cast<long long>(g.order());
    rep.conclusion_holds = g.edge_count() <= bound;
    rep.quantities = {{"n", static_cast<double>(g.order())},
                      {"e", static_cast<double>(g.edge_count())},
                      {"nu", static_cast<double>(nu)},
                      {"k", static_cast<double>(k)},
                      {"bound", static_cast<double>(bound)}};
    return rep;
}

LemmaReport check_set_intersection(const std::vector<bitset>& sets) {
    if (sets.empty()) throw input_error("check_set_intersection: need at least one set");
    for (const auto& s : sets)
        if (s.size() != sets[0].size())
            throw input_error("check_set_intersection: sets must share one universe");
    bitset inter = sets[0], uni = sets[0];
    long long sum = 0;
    for (const auto& s : sets) {
        inter = inter & s;
        uni = uni | s;
        sum += static_cast<long long>(s.count());
    }
    const long long p = static_cast<long long>(sets.size());
    const long long lower = sum - (p - 1) * static_cast<long long>(uni.count());
    LemmaReport rep;
    rep.id = "set-intersection";
    rep.hypotheses_hold = true;
    rep.conclusion_holds = static_cast<long long>(inter.count()) >= lower;
    rep.quantities = {{"p", static_cast<double>(p)},
                      {"sum_sizes", static_cast<double>(sum)},
                      {"union", static_cast<double>(uni.count())},
                      {"intersection", static_cast<double>(inter.count())},
                      {"lower_bound", static_cast<double>(lower)}};
    return rep;
}

LemmaReport check_fanfree_triangle_budget(const Graph& g, std::size_t k) {
    if (k == 0) throw input_error("check_fanfree_triangle_budget: k must be >= 1");
    LemmaReport rep;
    rep.id = "fanfree-triangle-budget";
    rep.hypotheses_hold = !contains_fan(g, k);
    if (!rep.hypotheses_hold) rep.notes = "input contains a k-fan";

    const long long n = static_cast<long long>(g.order());
    const long long t = triangle_count(g);
    long long neighborhood_sum = 0;
    long long worst = 0;
    bool per_vertex_ok = true;
    for (vertex v = 0; v < g.order(); ++v) {
        long long inside = induced_subgraph(g, g.neighbors(v)).edge_count();
        neighborhood_sum += inside;
        worst = std::max(worst, inside);
        if (inside > static_cast<long long>(k) * static_cast<long long>(g.degree(v)))
            per_vertex_ok = false;
    }
    assert(neighborhood_sum == 3 * t);
    rep.conclusion_holds = per_vertex_ok && 3 * t <= static_cast<long long>(k) * n * n;
    rep.quantities = {{"n", static_cast<double>(n)},
                      {"t", static_cast<double>(t)},
                      {"k", static_cast<double>(k)},
                      {"triangle_budget", static_cast<double>(k) * static_cast<double>(n) *
                                              static_cast<double>(n) / 3.0},
                      {"max_neighborhood_edges", static_cast<double>(worst)}};
    return rep;
}

namespace {

struct trace_context {
    const Graph& g;
    std::size_t k;
    double delta, eps;
    std::size_t n;
    long long e;
    bool connected, fan_free;
    SpectralResult spec;
    CutResult cut;
    long long size_s, size_t_;
    long long inside_edges;
    bitset low_set;   // degree at most (1/2 - 1/(4(k+1)))n, exact test
    bitset dense_set;  // >= delta*n neighbors on the own cut side
    long long f_val;
};

trace_context build_trace(const Graph& g, std::size_t k, double delta, double eps) {
    trace_context c{g,
                    k,
                    delta,
                    eps,
                    g.order(),
                    g.edge_count(),
                    is_connected(g),
                    !contains_fan(g, k),
                    spectral_radius(g),
                    max_cut(g),
                    0,
                    0,
                    0,
                    bitset(g.order()),
                    bitset(g.order()),
                    f_chvatal_hanson(static_cast<long long>(k) - 1,
                                     static_cast<long long>(k) - 1)};
    c.size_s = static_cast<long long>(c.cut.side_s.count());
    c.size_t_ = static_cast<long long>(c.cut.side_t.count());
    c.inside_edges = c.e - c.cut.value;

    const long long n = static_cast<long long>(c.n);
    for (vertex v = 0; v < c.n; ++v) {
        // d(v) <= (1/2 - 1/(4(k+1)))n  <=>  4(k+1)d(v) <= (2k+1)n
        if (4 * (static_cast<long long>(k) + 1) * static_cast<long long>(g.degree(v)) <=
            (2 * static_cast<long long>(k) + 1) * n)
            c.low_set.set(v);
        const bitset& own = c.cut.side_s.test(v) ? c.cut.side_s : c.cut.side_t;
        double inside_deg = static_cast<double>(g.neighbors(v).intersect_count(own));
        if (inside_deg >= delta * static_cast<double>(n)) c.dense_set.set(v);
    }
    return c;
}

}  // namespace

std::vector<LemmaReport> check_proof_trace(const Graph& g, std::size_t k,
                                           const LemmaOptions& opt) {
    if (k == 0) throw input_error("check_proof_trace: k must be >= 1");
    if (g.order() == 0) throw input_error("check_proof_trace: empty graph");
    const double kk = static_cast<double>(k);
    double delta = opt.delta > 0 ? opt.delta : 1.0 / (8.0 * kk);
    double eps = opt.epsilon > 0 ? opt.epsilon : delta * delta / 6.0;
    if (delta >= 1.0 / (4.0 * kk))
        throw input_error("check_proof_trace: delta must be below 1/(4k)");
    if (eps >= delta * delta / 3.0)
        throw input_error("check_proof_trace: epsilon must be below delta^2/3");

    trace_context c = build_trace(g, k, delta, eps);
    const bool base = c.connected && c.fan_free;
    std::string base_note;
    if (!c.connected) base_note = "input not connected";
    if (!c.fan_free) base_note += std::string(base_note.empty() ? "" : "; ") + "input contains a k-fan";
    const double n = static_cast<double>(c.n);
    const double e = static_cast<double>(c.e);
    const double lam = c.spec.lambda1;

    std::vector<LemmaReport> out;

    {  // cut sides differ by at most one vertex
        LemmaReport rep;
        rep.id = "balance";
        rep.notes = base_note;
        rep.conclusion_holds = std::llabs(c.size_s - c.size_t_) <= 1;
        rep.quantities = {{"size_s", static_cast<double>(c.size_s)},
                          {"size_t", static_cast<double>(c.size_t_)}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // lambda1 >= 2(ceil(n/2)floor(n/2) + f(k-1,k-1))/n, itself above n/2
        LemmaReport rep;
        rep.id = "eq1";
        rep.notes = base_note;
        const double product = static_cast<double>((c.n + 1) / 2) * static_cast<double>(c.n / 2);
        const double target = 2.0 * (product + static_cast<double>(c.f_val)) / n;
        rep.conclusion_holds = lam + slack >= target;
        if (k >= 2) rep.conclusion_holds = rep.conclusion_holds && target > n / 2.0;
        else rep.notes += std::string(rep.notes.empty() ? "" : "; ") +
                          "k=1: the target only reaches n/2, strictness not required";
        rep.quantities = {{"lambda1", lam}, {"target", target}, {"half_n", n / 2.0}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // Perron entries stay near 1 once n is large
        LemmaReport rep;
        rep.id = "evector";
        rep.notes = base_note;
        double xmin = 1.0;
        for (double x : c.spec.vector) xmin = std::min(xmin, x);
        const double bound = 1.0 - 116.0 * kk * kk / n;
        rep.conclusion_holds = xmin + slack >= bound;
        rep.quantities = {{"x_min", xmin}, {"bound", bound}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // few edges survive inside the two sides
        LemmaReport rep;
        rep.id = "inside-edges";
        rep.notes = base_note;
        rep.conclusion_holds = c.inside_edges <= 2 * c.f_val;
        rep.quantities = {{"inside_edges", static_cast<double>(c.inside_edges)},
                          {"bound", static_cast<double>(2 * c.f_val)}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // the low-degree set is tiny
        LemmaReport rep;
        rep.id = "l-bound";
        rep.notes = base_note;
        if (k < 2)
            rep.notes += std::string(rep.notes.empty() ? "" : "; ") + "stated for k >= 2";
        rep.conclusion_holds =
            static_cast<double>(c.low_set.count()) <= 16.0 * kk * kk;
        rep.quantities = {{"low_count", static_cast<double>(c.low_set.count())},
                          {"bound", 16.0 * kk * kk},
                          {"degree_threshold", (0.5 - 1.0 / (4.0 * (kk + 1.0))) * n}};
        close_extremal_report(rep, base && k >= 2);
        out.push_back(std::move(rep));
    }
    {  // and eventually empty
        LemmaReport rep;
        rep.id = "l-empty";
        rep.notes = base_note;
        rep.conclusion_holds = c.low_set.none();
        rep.quantities = {{"low_count", static_cast<double>(c.low_set.count())}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // near-optimal cut with near-equal sides
        LemmaReport rep;
        rep.id = "maxcut";
        rep.notes = c.cut.exact ? base_note
                                : base_note.empty() ? "cut from local search"
                                                    : base_note + "; cut from local search";
        const double cut_lower = (0.25 - eps) * n * n;
        const double spread = std::sqrt(eps) * n;
        const double lo = 0.5 * n - spread, hi = 0.5 * n + spread;
        const double ss = static_cast<double>(c.size_s), tt = static_cast<double>(c.size_t_);
        rep.conclusion_holds = static_cast<double>(c.cut.value) + slack >= cut_lower &&
                               ss >= lo - slack && ss <= hi + slack && tt >= lo - slack &&
                               tt <= hi + slack;
        rep.quantities = {{"cut", static_cast<double>(c.cut.value)},
                          {"cut_lower", cut_lower},
                          {"size_s", ss},
                          {"size_t", tt},
                          {"size_lower", lo},
                          {"size_upper", hi}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // degree window, with lambda1 sandwiched
        LemmaReport rep;
        rep.id = "refine-degree";
        rep.notes = base_note;
        const long long dmin = static_cast<long long>(min_degree(g));
        const long long dmax = static_cast<long long>(max_degree(g));
        const long long nn = static_cast<long long>(c.n);
        rep.conclusion_holds =
            2 * dmin >= nn - 28 * static_cast<long long>(k) * static_cast<long long>(k) &&
            2 * dmax <= nn + 10 * static_cast<long long>(k) &&
            static_cast<double>(dmin) <= lam + slack && lam <= static_cast<double>(dmax) + slack;
        rep.quantities = {{"min_degree", static_cast<double>(dmin)},
                          {"max_degree", static_cast<double>(dmax)},
                          {"lambda1", lam},
                          {"degree_lower", (n - 28.0 * kk * kk) / 2.0},
                          {"degree_upper", (n + 10.0 * kk) / 2.0}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // edge count almost quadratic
        LemmaReport rep;
        rep.id = "refine-edges";
        rep.notes = base_note;
        const long long nn = static_cast<long long>(c.n);
        rep.conclusion_holds =
            4 * c.e >= nn * nn - 48 * static_cast<long long>(k) * static_cast<long long>(k);
        rep.quantities = {{"e", e}, {"bound", (n * n - 48.0 * kk * kk) / 4.0}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // side sizes within 4k of n/2
        LemmaReport rep;
        rep.id = "refine-sides";
        rep.notes = base_note;
        const long long nn = static_cast<long long>(c.n);
        const long long kk8 = 8 * static_cast<long long>(k);
        rep.conclusion_holds = 2 * c.size_s >= nn - kk8 && 2 * c.size_s <= nn + kk8 &&
                               2 * c.size_t_ >= nn - kk8 && 2 * c.size_t_ <= nn + kk8;
        rep.quantities = {{"size_s", static_cast<double>(c.size_s)},
                          {"size_t", static_cast<double>(c.size_t_)},
                          {"side_lower", (n - 8.0 * kk) / 2.0},
                          {"side_upper", (n + 8.0 * kk) / 2.0}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }
    {  // vertices dense towards their own side are rare and low-degree
        LemmaReport rep;
        rep.id = "w-bound";
        rep.notes = base_note;
        const double w_bound = 2.0 * eps * n / delta + 2.0 * kk * kk / (delta * n);
        const double w_count = static_cast<double>(c.dense_set.count());
        const bool outside_low = c.dense_set.minus(c.low_set).none();
        rep.conclusion_holds = w_count < w_bound && outside_low;
        rep.quantities = {{"dense_count", w_count},
                          {"bound", w_bound},
                          {"dense_outside_low", static_cast<double>(
                                                    c.dense_set.minus(c.low_set).count())},
                          {"inside_degree_threshold", delta * n}};
        close_extremal_report(rep, base);
        out.push_back(std::move(rep));
    }

    std::sort(out.begin(), out.end(),
              [](const LemmaReport& a, const LemmaReport& b) { return a.id < b.id; });
    return out;
}

namespace {

// pick two disjoint k-cliques (or best-effort vertex sets) inside the
// chosen side, preferring vertices that already carry same-side edges
// so that E- stays as small as the input allows
std::vector<std::vector<vertex>> greedy_clique_pair(const Graph& g,
                                                    const std::vector<vertex>& side,
                                                    std::size_t k) {
    Graph inside = induced_subgraph(g, [&] {
        bitset s(g.order());
        for (vertex v : side) s.set(v);
        return s;
    }());
    std::vector<char> used(side.size(), 0);
    std::vector<std::vector<vertex>> cliques;
    for (int c = 0; c < 2; ++c) {
        std::vector<std::size_t> members;
        auto pick = [&](auto&& admissible) {
            std::size_t best = side.size();
            for (std::size_t v = 0; v < side.size(); ++v) {
                if (used[v] || !admissible(v)) continue;
                if (best == side.size() || inside.degree(v) > inside.degree(best)) best = v;
            }
            return best;
        };
        while (members.size() < k) {
            std::size_t v = pick([&](std::size_t cand) {
                for (std::size_t m : members)
                    if (!inside.has_edge(cand, m)) return false;
                return true;
            });
            if (v == side.size()) v = pick([](std::size_t) { return true; });
            assert(v != side.size());
            used[v] = 1;
            members.push_back(v);
        }
        std::vector<vertex> mapped;
        for (std::size_t m : members) mapped.push_back(side[m]);
        cliques.push_back(std::move(mapped));
    }
    return cliques;
}

}  // namespace

LemmaReport check_perturbation_step(const Graph& g, std::size_t k) {
    if (k == 0) throw input_error("check_perturbation_step: k must be >= 1");
    if (g.order() == 0) throw input_error("check_perturbation_step: empty graph");

    LemmaReport rep;
    rep.id = "perturbation";
    const std::size_t n = g.order();
    const bool connected = is_connected(g);
    const bool fan_free = !contains_fan(g, k);
    const long long target = ex_fan(static_cast<long long>(n), static_cast<long long>(k)).value;
    const bool below = g.edge_count() < target;

    std::string note;
    if (!connected) note = "input not connected";
    if (!fan_free) note += std::string(note.empty() ? "" : "; ") + "input contains a k-fan";
    if (!below) note += std::string(note.empty() ? "" : "; ") + "input already has extremal edge count";

    CutResult cut = max_cut(g);
    std::vector<vertex> big, small;
    cut.side_s.for_each([&](std::size_t v) { big.push_back(v); });
    cut.side_t.for_each([&](std::size_t v) { small.push_back(v); });
    if (big.size() < small.size()) std::swap(big, small);

    std::size_t need = k % 2 == 1 ? 2 * k : 2 * k - 1;
    if (k == 1) need = 0;
    const bool fits = big.size() >= need;
    if (!fits) note += std::string(note.empty() ? "" : "; ") + "larger cut side cannot hold the embedded block";
    rep.notes = note;

    if (!fits) {
        rep.conclusion_holds = false;
        close_extremal_report(rep, false);
        return rep;
    }

    // assemble H on g's own cut sides
    Graph h(n);
    for (vertex a : big)
        for (vertex b : small) h.add_edge(a, b);
    if (k % 2 == 1 && k >= 3) {
        for (const auto& clique : greedy_clique_pair(g, big, k))
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    h.add_edge(clique[i], clique[j]);
    } else if (k >= 2) {
        Graph block = hstar(k);
        // densest same-side vertices host the block, aligned by degree
        Graph inside = induced_subgraph(g, [&] {
            bitset s(g.order());
            for (vertex v : big) s.set(v);
            return s;
        }());
        std::vector<std::size_t> host(big.size());
        std::iota(host.begin(), host.end(), 0);
        std::stable_sort(host.begin(), host.end(), [&](std::size_t a, std::size_t b) {
            return inside.degree(a) > inside.degree(b);
        });
        std::vector<vertex> block_order(block.order());
        std::iota(block_order.begin(), block_order.end(), 0);
        std::stable_sort(block_order.begin(), block_order.end(),
                         [&](vertex a, vertex b) { return block.degree(a) > block.degree(b); });
        std::vector<vertex> where(block.order());
        for (std::size_t i = 0; i < block.order(); ++i) where[block_order[i]] = big[host[i]];
        for (const auto& [u, v] : block.edges()) h.add_edge(where[u], where[v]);
    }
    assert(!contains_fan(h, k));

    SpectralResult sg = spectral_radius(g);
    SpectralResult sh = spectral_radius(h);

    double gain = 0.0, loss = 0.0, xtx = 0.0;
    long long e_plus = 0, e_minus = 0;
    for (double x : sg.vector) xtx += x * x;
    for (const auto& [u, v] : h.edges())
        if (!g.has_edge(u, v)) {
            ++e_plus;
            gain += sg.vector[u] * sg.vector[v];
        }
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(u, v)) {
            ++e_minus;
            loss += sg.vector[u] * sg.vector[v];
        }
    const double delta_rayleigh = 2.0 * (gain - loss) / xtx;

    rep.conclusion_holds = sh.lambda1 > sg.lambda1 + 1e-9;
    rep.quantities = {{"lambda_g", sg.lambda1},
                      {"lambda_h", sh.lambda1},
                      {"rayleigh_delta", delta_rayleigh},
                      {"e_plus", static_cast<double>(e_plus)},
                      {"e_minus", static_cast<double>(e_minus)},
                      {"e_g", static_cast<double>(g.edge_count())},
                      {"e_h", static_cast<double>(h.edge_count())},
                      {"cut", static_cast<double>(cut.value)}};
    close_extremal_report(rep, connected && fan_free && below);
    return rep;
}

}  // namespace fanfree
