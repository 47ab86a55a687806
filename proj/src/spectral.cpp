#include "fanfree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fanfree {

namespace {

struct component_run {
    double lambda = 0.0;
    std::vector<double> x;  // indexed by local vertex
    std::size_t iterations = 0;
    double residual = 0.0;
};

component_run power_iterate(const Graph& g, double tol, std::size_t max_iter) {
    const std::size_t n = g.order();
    component_run r;
    r.x.assign(n, 1.0);
    if (g.edge_count() == 0) return r;  // lambda 0, exact

    // flat adjacency: the bitset rows are too slow for the hot loop
    std::vector<std::size_t> offset(n + 1, 0), adj(2 * g.edge_count());
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + g.degree(i);
    {
        std::vector<std::size_t> at(offset.begin(), offset.end() - 1);
        for (std::size_t i = 0; i < n; ++i)
            g.neighbors(i).for_each([&](std::size_t j) { adj[at[i]++] = j; });
    }

    std::vector<double> y(n, 0.0);
    double best_residual = std::numeric_limits<double>::infinity();
    std::size_t since_progress = 0;
    double shift = 1.0;

    for (std::size_t it = 1; it <= max_iter; ++it) {
        double xy = 0.0, xx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t a = offset[i]; a < offset[i + 1]; ++a) s += r.x[adj[a]];
            y[i] = s;
            xy += r.x[i] * s;
            xx += r.x[i] * r.x[i];
        }
        r.lambda = xy / xx;
        r.iterations = it;
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            res = std::max(res, std::abs(y[i] - r.lambda * r.x[i]));
        r.residual = res;
        if (res <= tol) return r;

        if (res < best_residual * 0.999999) {
            best_residual = res;
            since_progress = 0;
        } else if (++since_progress > 3000) {
            // stuck (can happen when leading eigenvalues nearly tie):
            // deterministic nudge off the symmetric subspace
            for (std::size_t i = 0; i < n; ++i)
                r.x[i] += 1e-8 * static_cast<double>((i * 2654435761u) % 1009) / 1009.0;
            since_progress = 0;
        }

        // shifted step x <- (A+cI)x, renormalised to max entry 1.  Any
        // c > 0 keeps the Perron direction dominant; c near lambda/2
        // also damps the -lambda tail that bipartite-like spectra have.
        shift = std::max(1.0, 0.5 * r.lambda);
        double top = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += shift * r.x[i];
            top = std::max(top, y[i]);
        }
        for (std::size_t i = 0; i < n; ++i) r.x[i] = y[i] / top;
    }
    SpectralResult best;
    best.lambda1 = r.lambda;
    best.vector = r.x;
    best.iterations = r.iterations;
    best.residual = r.residual;
    throw convergence_error("power iteration did not reach tol " + std::to_string(tol) +
                                " within " + std::to_string(max_iter) + " iterations",
                            std::move(best));
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iter) {
    if (g.order() == 0) throw input_error("spectral_radius: graph must be non-empty");
    if (tol <= 0) throw input_error("spectral_radius: tol must be positive");

    SpectralResult out;
    out.vector.assign(g.order(), 0.0);
    std::vector<bitset> comps = components(g);
    std::size_t winner = 0;
    component_run winner_run;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        component_run r = power_iterate(induced_subgraph(g, comps[c]), tol, max_iter);
        out.iterations += r.iterations;
        if (c == 0 || r.lambda > winner_run.lambda) {
            winner = c;
            winner_run = std::move(r);
        }
    }
    out.lambda1 = winner_run.lambda;
    out.residual = winner_run.residual;
    std::size_t li = 0;
    comps[winner].for_each([&](std::size_t v) { out.vector[v] = winner_run.x[li++]; });
    out.positive = comps.size() == 1;
    for (double v : out.vector)
        if (!(v > 0.0)) out.positive = false;
    return out;
}

double rayleigh_lower_bound(const Graph& g) {
    if (g.order() == 0) throw input_error("rayleigh_lower_bound: graph must be non-empty");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.order());
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<vertex>>& classes) {
    if (classes.empty()) throw input_error("quotient_matrix: no classes given");
    std::vector<std::size_t> cls(g.order(), classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) throw input_error("quotient_matrix: class " + std::to_string(c) + " is empty");
        for (vertex v : classes[c]) {
            if (v >= g.order())
                throw input_error("quotient_matrix: vertex " + std::to_string(v) + " out of range");
            if (cls[v] != classes.size())
                throw input_error("quotient_matrix: vertex " + std::to_string(v) + " listed twice");
            cls[v] = c;
        }
    }
    for (vertex v = 0; v < g.order(); ++v)
        if (cls[v] == classes.size())
            throw input_error("quotient_matrix: vertex " + std::to_string(v) + " not covered");

    QuotientMatrix q;
    q.class_sizes.reserve(classes.size());
    for (const auto& c : classes) q.class_sizes.push_back(c.size());
    q.b.assign(classes.size(), std::vector<long long>(classes.size(), 0));

    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t vi = 0; vi < classes[c].size(); ++vi) {
            std::vector<long long> counts(classes.size(), 0);
            g.neighbors(classes[c][vi]).for_each([&](std::size_t u) { ++counts[cls[u]]; });
            if (vi == 0) {
                q.b[c] = counts;
            } else if (counts != q.b[c]) {
                for (std::size_t j = 0; j < classes.size(); ++j)
                    if (counts[j] != q.b[c][j])
                        throw equitability_error(
                            "partition not equitable: vertex " + std::to_string(classes[c][vi]) +
                                " in class " + std::to_string(c) + " has " +
                                std::to_string(counts[j]) + " neighbors in class " +
                                std::to_string(j) + ", class pattern says " +
                                std::to_string(q.b[c][j]),
                            classes[c][vi], c);
            }
        }
    }
    return q;
}

namespace {

constexpr std::size_t charpoly_dim_cap = 6;

using poly = std::vector<__int128>;  // ascending coefficients

poly poly_mul(const poly& a, const poly& b) {
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_add(poly& a, const poly& b, __int128 scale) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

// determinant of a polynomial matrix by first-row cofactor expansion
poly poly_det(const std::vector<std::vector<poly>>& m) {
    const std::size_t d = m.size();
    if (d == 1) return m[0][0];
    poly out{0};
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<poly>> minor;
        minor.reserve(d - 1);
        for (std::size_t r = 1; r < d; ++r) {
            std::vector<poly> row;
            row.reserve(d - 1);
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        poly term = poly_mul(m[0][j], poly_det(minor));
        poly_add(out, term, (j % 2 == 0) ? 1 : -1);
    }
    return out;
}

poly charpoly_exact(const std::vector<std::vector<long long>>& b) {
    const std::size_t d = b.size();
    if (d == 0 || d > charpoly_dim_cap)
        throw capability_error("charpoly: dimension must be in 1.." +
                               std::to_string(charpoly_dim_cap));
    for (const auto& row : b)
        if (row.size() != d) throw input_error("charpoly: matrix must be square");
    std::vector<std::vector<poly>> m(d, std::vector<poly>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            m[i][j] = poly{-static_cast<__int128>(b[i][j])};
            if (i == j) m[i][j].push_back(1);
        }
    return poly_det(m);
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

long double poly_eval(const std::vector<long double>& c, long double x) {
    long double v = 0.0L;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

// all real roots, ascending, via critical points of the derivative
std::vector<long double> real_roots(const std::vector<long double>& c) {
    const std::size_t deg = c.size() - 1;
    assert(c[deg] != 0.0L);
    if (deg == 1) return {-c[0] / c[1]};

    std::vector<long double> dc(deg);
    for (std::size_t i = 1; i <= deg; ++i) dc[i - 1] = c[i] * static_cast<long double>(i);
    std::vector<long double> crit = real_roots(dc);

    long double bound = 0.0L;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, fabsl(c[i] / c[deg]));
    bound += 1.0L;

    std::vector<long double> pts{-bound};
    for (long double r : crit)
        if (r > -bound && r < bound) pts.push_back(r);
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());

    std::vector<long double> roots;
    auto push_root = [&](long double r) {
        if (roots.empty() || fabsl(roots.back() - r) > 1e-12L * std::max(1.0L, fabsl(r)))
            roots.push_back(r);
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        long double a = pts[i], b = pts[i + 1];
        long double fa = poly_eval(c, a), fb = poly_eval(c, b);
        if (fa == 0.0L) push_root(a);
        if ((fa < 0) == (fb < 0) || fa == 0.0L || fb == 0.0L) {
            if (fb == 0.0L && i + 2 == pts.size()) push_root(b);
            continue;
        }
        for (int it = 0; it < 200; ++it) {
            long double mid = 0.5L * (a + b);
            long double fm = poly_eval(c, mid);
            if (fm == 0.0L) {
                a = b = mid;
                break;
            }
            if ((fm < 0) == (fa < 0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        push_root(0.5L * (a + b));
    }
    return roots;
}

}  // namespace

std::vector<std::string> charpoly(const std::vector<std::vector<long long>>& b) {
    poly p = charpoly_exact(b);
    std::vector<std::string> out;
    out.reserve(p.size());
    for (__int128 coef : p) out.push_back(int128_to_string(coef));
    return out;
}

double charpoly_root(const std::vector<std::vector<long long>>& b) {
    poly p = charpoly_exact(b);
    std::vector<long double> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(p[i]);
    std::vector<long double> roots = real_roots(c);
    if (roots.empty()) throw input_error("charpoly_root: no real root found");
    return static_cast<double>(roots.back());
}

double floor_ceiling_gap(long long n) {
    if (n < 1) throw input_error("floor_ceiling_gap: n must be >= 1");
    if (n % 2 == 0) return 0.0;
    // n/2 - sqrt((n^2-1)/4) rewritten without the cancelling subtraction
    long double nn = static_cast<long double>(n);
    return static_cast<double>(0.5L / (nn + sqrtl(nn * nn - 1.0L)));
}

}  // namespace fanfree
