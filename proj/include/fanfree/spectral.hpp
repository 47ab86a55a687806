#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> vector;  // entrywise >= 0, max entry 1
    std::size_t iterations = 0;
    double residual = 0.0;  // max_i |(A x)_i - lambda1 x_i|
    bool positive = false;  // Perron positivity; off for disconnected input
};

// Dominant adjacency eigenvalue by power iteration on A+cI (a positive
// shift breaks the +/-lambda oscillation on bipartite graphs; c tracks
// lambda/2 to damp it fast) from the all-ones vector, with
// Rayleigh-quotient estimates.  Deterministic.
// Disconnected input is handled per component, reporting the largest.
// Failure to reach `tol` within `max_iter` raises convergence_error.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10,
                               std::size_t max_iter = 200000);

struct convergence_error : std::runtime_error {
    SpectralResult best;  // last iterate, for diagnosis
    convergence_error(const std::string& msg, SpectralResult r)
        : std::runtime_error(msg), best(std::move(r)) {}
};

// 2e/n, the all-ones Rayleigh quotient; a lower bound for lambda1.
double rayleigh_lower_bound(const Graph& g);

// Equitable-partition quotient: b[i][j] = number of class-j neighbors
// of each class-i vertex.  Raises equitability_error (naming the
// vertex and class) if any vertex disagrees with its class.
struct QuotientMatrix {
    std::vector<std::size_t> class_sizes;
    std::vector<std::vector<long long>> b;
};
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<vertex>>& classes);

// det(xI - b) with exact integer arithmetic (dimension <= 6), ascending
// degree, each coefficient as a decimal string.
std::vector<std::string> charpoly(const std::vector<std::vector<long long>>& b);

// Largest real root of det(xI - b); for a quotient of a connected graph
// this equals the graph's lambda1.  Exact coefficients, then real-root
// isolation via derivative critical points and bisection.
double charpoly_root(const std::vector<std::vector<long long>>& b);

// n/2 - sqrt(ceil(n/2)*floor(n/2)), evaluated in the cancellation-free
// form; lies in [0, 1/n) for n >= 2.
double floor_ceiling_gap(long long n);

}  // namespace fanfree
