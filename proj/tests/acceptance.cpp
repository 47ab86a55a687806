// Acceptance battery: one pass/fail line per criterion, nonzero exit on
// any failure.  Each criterion recomputes its expected values through a
// route independent of the code under test (closed forms written out
// again, brute-force oracles, exhaustive enumeration).

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/fan.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/lemmas.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/search.hpp"
#include "fanfree/spectral.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (detail.empty()) {
        std::printf("PASS criterion %2d: %s (%lld ms)\n", id, label.c_str(),
                    static_cast<long long>(ms));
    } else {
        ++failures;
        std::printf("FAIL criterion %2d: %s (%lld ms)\n    %s\n", id, label.c_str(),
                    static_cast<long long>(ms), detail.c_str());
    }
    std::fflush(stdout);
}

std::string fmt(const char* f, long long a, long long b = 0, long long c = 0, long long d = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

// ---- criterion 1: closed-form tables ------------------------------

// the two formulas, written out a second time from scratch
long long expected_excess(long long k) {
    if (k % 2 == 1) return k * (k - 1);
    return k * k - (3 * k) / 2;
}

long long expected_f(long long beta, long long delta) {
    if (beta == 0 || delta == 0) return 0;
    long long ceil_half = delta / 2 + delta % 2;
    return delta * beta + (delta / 2) * (beta / ceil_half);
}

std::string run_formula_tables() {
    for (long long beta = 0; beta <= 20; ++beta)
        for (long long delta = 0; delta <= 20; ++delta)
            if (f_chvatal_hanson(beta, delta) != expected_f(beta, delta))
                return fmt("f(%lld,%lld) disagrees with the closed form", beta, delta);
    const long long ns[] = {0, 1, 2, 3, 7, 48, 49, 50, 100, 999, 1000, 1000000};
    for (long long k = 1; k <= 50; ++k) {
        for (long long n : ns) {
            ExFanValue v = ex_fan(n, k);
            long long quarter = (n / 2) * (n - n / 2);
            if (v.value != quarter + expected_excess(k))
                return fmt("ex(%lld,%lld) disagrees with floor(n^2/4) + excess", n, k);
            if (v.in_proven_range != (n >= 50 * k * k))
                return fmt("proven-range flag wrong at n=%lld k=%lld", n, k);
        }
        // excess equals f(k-1,k-1): the reduction behind the formula
        if (f_chvatal_hanson(k - 1, k - 1) != expected_excess(k))
            return fmt("f(k-1,k-1) != excess at k=%lld", k, 0);
    }
    return {};
}

// ---- criterion 2: brute-forced Chvatal-Hanson maxima --------------

std::string run_ch_brute_force() {
    // The maximum is attained on chvatal_hanson_order_bound(beta, delta)
    // vertices; 8 is not enough for e.g. (3,2), which needs three
    // disjoint triangles.  Enumerate every class up to the bound.
    for (long long beta = 1; beta <= 3; ++beta)
        for (long long delta = 1; delta <= 3; ++delta) {
            std::size_t bound = chvatal_hanson_order_bound(beta, delta);
            long long best = 0;
            auto keep = [&](const Graph& h, vertex, vertex) {
                return max_degree(h) <= static_cast<std::size_t>(delta) &&
                       static_cast<long long>(oracle::matching_number(h)) <= beta;
            };
            for (const Graph& g : testutil::enumerate_classes(bound, keep))
                best = std::max(best, g.edge_count());
            if (best != f_chvatal_hanson(beta, delta))
                return fmt("brute force on <=%lld vertices found %lld edges for (beta,delta)=",
                           static_cast<long long>(bound), best) +
                       fmt("(%lld,%lld)", beta, delta);
        }
    return {};
}

// ---- criterion 3: fan detection vs naive --------------------------

std::string run_fan_equivalence() {
    std::vector<Graph> classes = testutil::all_classes(7);
    if (classes.size() != 1044)
        return fmt("expected 1044 classes on 7 vertices, got %lld",
                   static_cast<long long>(classes.size()));
    for (const Graph& g : classes)
        for (std::size_t k = 1; k <= 2; ++k)
            if (contains_fan(g, k) != contains_fan_naive(g, k))
                return "disagreement on a 7-vertex class, k=" + std::to_string(k) + ": " +
                       graph6_encode(g);
    std::mt19937_64 rng(40961);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 2 + rng() % 11;
        Graph g = oracle::random_graph(rng, n, 0.15 + 0.07 * static_cast<double>(rng() % 10));
        for (std::size_t k = 1; k <= 3; ++k)
            if (contains_fan(g, k) != contains_fan_naive(g, k))
                return "disagreement on random graph, k=" + std::to_string(k) + ": " +
                       graph6_encode(g);
    }
    return {};
}

// ---- criterion 4: matching vs brute force -------------------------

std::string run_matching_oracle() {
    // every smaller graph appears padded with isolated vertices, and
    // padding does not move the matching number
    std::vector<Graph> classes = testutil::all_classes(8);
    if (classes.size() != 12346)
        return fmt("expected 12346 classes on 8 vertices, got %lld",
                   static_cast<long long>(classes.size()), 0);
    for (const Graph& g : classes)
        if (static_cast<long long>(matching_number(g)) !=
            static_cast<long long>(oracle::matching_number(g)))
            return "matching disagreement on " + graph6_encode(g);
    return {};
}

// ---- criterion 5: the k=1 desk check ------------------------------

std::string run_mantel_nosal() {
    for (std::size_t n = 3; n <= 8; ++n) {
        std::string turan = canonical_form(turan_bipartite(n));
        SearchReport edges = exhaustive_extremal(n, 1, "edges");
        long long quarter = static_cast<long long>((n / 2) * (n - n / 2));
        if (static_cast<long long>(edges.best_value) != quarter)
            return fmt("edge maximum %lld != floor(n^2/4) at n=%lld",
                       static_cast<long long>(edges.best_value), static_cast<long long>(n));
        if (edges.witnesses.size() != 1 || edges.witnesses[0] != turan)
            return fmt("edge witness not the unique balanced bipartite graph at n=%lld",
                       static_cast<long long>(n), 0);
        SearchReport spec = exhaustive_extremal(n, 1, "lambda1");
        double turan_lambda = spectral_radius(turan_bipartite(n)).lambda1;
        if (std::abs(spec.best_value - turan_lambda) > 1e-8)
            return fmt("spectral maximum off at n=%lld", static_cast<long long>(n), 0);
        if (spec.witnesses.size() != 1 || spec.witnesses[0] != turan)
            return fmt("spectral witness not the balanced bipartite graph at n=%lld",
                       static_cast<long long>(n), 0);
    }
    return {};
}

// ---- criterion 6: constructions hit the formula -------------------

std::string run_constructions() {
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t n : {4 * k, std::size_t{50}, std::size_t{100}, std::size_t{200}}) {
            Graph g = (k % 2 == 1) ? extremal_g1(n, k) : extremal_g2(n, k);
            if (g.edge_count() != ex_fan(static_cast<long long>(n), static_cast<long long>(k)).value)
                return fmt("edge count off at n=%lld k=%lld", static_cast<long long>(n),
                           static_cast<long long>(k));
            if (contains_fan(g, k))
                return fmt("construction contains a %lld-fan at n=%lld",
                           static_cast<long long>(k), static_cast<long long>(n));
        }
    return {};
}

// ---- criterion 7: exact quotient vs floating iteration ------------

std::string run_quotient_agreement() {
    for (std::size_t k : {std::size_t{1}, std::size_t{3}, std::size_t{5}})
        for (std::size_t n : {std::size_t{50}, std::size_t{200}, std::size_t{1000}}) {
            Graph g = extremal_g1(n, k);
            std::size_t half = (n + 1) / 2;
            std::vector<std::vector<vertex>> classes(3);
            for (vertex v = 0; v < static_cast<vertex>(n); ++v)
                classes[v < 2 * k ? 0 : (v < half ? 1 : 2)].push_back(v);
            double exact = charpoly_root(quotient_matrix(g, classes).b);
            double iter = spectral_radius(g).lambda1;
            if (std::abs(exact - iter) > 1e-8)
                return fmt("quotient gap at n=%lld k=%lld", static_cast<long long>(n),
                           static_cast<long long>(k)) +
                       " = " + std::to_string(std::abs(exact - iter));
        }
    return {};
}

// ---- criterion 8: inequality suites -------------------------------

std::string run_inequality_suites() {
    std::mt19937_64 rng(555007);
    for (int t = 0; t < 1000; ++t) {
        Graph g = oracle::random_connected_graph(rng, 2 + rng() % 29,
                                                 0.1 + 0.08 * static_cast<double>(rng() % 10));
        LemmaReport r = check_triangle_edge_bound(g);
        if (!r.hypotheses_hold || !r.conclusion_holds)
            return "triangle edge bound failed on " + graph6_encode(g);
    }
    for (long long n = 2; n <= 1000000; ++n) {
        double gap = floor_ceiling_gap(n);
        if (!(gap >= 0.0 && gap < 1.0 / static_cast<double>(n)))
            return fmt("floor/ceiling gap out of [0,1/n) at n=%lld", n, 0);
    }
    for (int t = 0; t < 10000; ++t) {
        std::size_t universe = 2 + rng() % 39;
        std::size_t p = 2 + rng() % 3;
        std::vector<bitset> sets(p, bitset(universe));
        for (auto& s : sets)
            for (std::size_t i = 0; i < universe; ++i)
                if (rng() & 1u) s.set(i);
        LemmaReport r = check_set_intersection(sets);
        if (!r.conclusion_holds) return fmt("set intersection bound failed, trial %lld", t, 0);
    }
    for (int t = 0; t < 500; ++t) {
        std::size_t n = 1 + rng() % 30;
        Graph g = oracle::random_graph(rng, n, 0.05 + 0.09 * static_cast<double>(rng() % 10));
        SpectralResult s = spectral_radius(g);
        double lower = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
        if (s.lambda1 + 1e-9 < lower ||
            s.lambda1 > static_cast<double>(max_degree(g)) + 1e-9)
            return "Rayleigh sandwich violated on " + graph6_encode(g);
    }
    return {};
}

// ---- criterion 9: proof trace on the constructions ----------------

std::string run_proof_trace() {
    for (int even = 0; even <= 1; ++even) {
        std::size_t k = even ? 4 : 3;
        Graph g = even ? extremal_g2(200, k) : extremal_g1(200, k);
        std::vector<LemmaReport> reports = check_proof_trace(g, k);
        if (reports.size() != 11)
            return fmt("expected 11 reports, got %lld",
                       static_cast<long long>(reports.size()), 0);
        for (const LemmaReport& r : reports) {
            if (!r.hypotheses_hold)
                return "hypotheses demoted for '" + r.id + "' on the k=" + std::to_string(k) +
                       " construction";
            if (!r.conclusion_holds)
                return "conclusion failed for '" + r.id + "' on the k=" + std::to_string(k) +
                       " construction";
        }
    }
    return {};
}

// ---- criterion 10: perturbation restores the construction ---------

std::string run_perturbation() {
    std::mt19937_64 rng(90017);
    for (int t = 0; t < 50; ++t) {
        Graph g = extremal_g1(100, 3);
        vertex a = static_cast<vertex>(rng() % 50);
        vertex b = static_cast<vertex>(50 + rng() % 50);
        g.remove_edge(a, b);
        LemmaReport r = check_perturbation_step(g, 3);
        if (!r.hypotheses_hold || !r.conclusion_holds)
            return fmt("step not strictly improving after deleting (%lld,%lld)",
                       static_cast<long long>(a), static_cast<long long>(b));
        if (!(r.quantities.at("lambda_h") > r.quantities.at("lambda_g")))
            return fmt("lambda did not increase after deleting (%lld,%lld)",
                       static_cast<long long>(a), static_cast<long long>(b));
    }
    return {};
}

// ---- criterion 11: codec round trips and CLI determinism ----------

struct cli_run {
    int exit_code;
    std::string out;
};

cli_run run_cli(const std::string& args) {
    std::string cmd = std::string(FANFREE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string run_determinism() {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 10000; ++t) {
        // sizes hug the 62/63 encoding boundary every eighth draw
        std::size_t n = (t % 8 == 0) ? 60 + rng() % 20 : rng() % 63;
        Graph g = oracle::random_graph(rng, n, 0.02 + 0.096 * static_cast<double>(rng() % 10));
        std::string s = graph6_encode(g);
        Graph h = graph6_decode(s);
        if (h.order() != g.order() || graph6_encode(h) != s)
            return fmt("round trip failed at trial %lld (n=%lld)", t, static_cast<long long>(n));
    }
    std::string search_args = "--seed 20260814 --workers 1 search --n 18 --k 2 "
                              "--objective edges --restarts 4";
    cli_run a = run_cli(search_args), b = run_cli(search_args);
    if (a.exit_code != 0 || a.out != b.out || a.out.empty())
        return "search output differed between identical seeded runs";
    std::string pipeline = "construct g1 --n 30 --k 3 | " + std::string(FANFREE_CLI_PATH) +
                           " --workers 1 verify --k 3";
    cli_run c = run_cli(pipeline), d = run_cli(pipeline);
    if (c.exit_code != 0 || c.out != d.out || c.out.empty())
        return "verify output differed between identical runs";
    return {};
}

}  // namespace

int main() {
    criterion(1, "closed-form tables (k <= 50, beta,delta <= 20, special-case identity)",
              run_formula_tables);
    criterion(2, "brute-force edge maxima match f for (beta,delta) in {1,2,3}^2",
              run_ch_brute_force);
    criterion(3, "fan detection agrees with naive search (1044 classes + 300 random)",
              run_fan_equivalence);
    criterion(4, "blossom matching agrees with brute force on every class up to 8 vertices",
              run_matching_oracle);
    criterion(5, "exhaustive k=1 extremum is the balanced bipartite graph, 3 <= n <= 8",
              run_mantel_nosal);
    criterion(6, "constructions meet the edge formula and are fan-free, k <= 5",
              run_constructions);
    criterion(7, "quotient charpoly root matches power iteration within 1e-8",
              run_quotient_agreement);
    criterion(8, "inequality suites (triangle bound, gap < 1/n to 1e6, sets, sandwich)",
              run_inequality_suites);
    criterion(9, "proof trace holds on both 200-vertex constructions",
              run_proof_trace);
    criterion(10, "single-edge perturbation strictly raises lambda1 (50 trials)",
              run_perturbation);
    criterion(11, "graph6 round trips (1e4) and byte-identical seeded CLI runs",
              run_determinism);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
