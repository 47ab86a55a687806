#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fanfree/bitset.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

// Outcome of checking one inequality/claim on a concrete graph.
// Conclusions are still evaluated when hypotheses fail; that is data,
// not an error.  Some claims assume the input is an extremal graph,
// which no checker can verify from the graph alone: those are marked
// "extremal-conditional" in notes, and a failed conclusion there
// flips hypotheses_hold off (the input was evidently not extremal)
// rather than indicting the claim.
struct LemmaReport {
    std::string id;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    std::map<std::string, double> quantities;
    std::string notes;
};

// Defaults delta = 1/(8k), epsilon = delta^2/6; explicit values must
// respect delta < 1/(4k) and epsilon < delta^2/3.
struct LemmaOptions {
    double delta = 0.0;    // 0 = default
    double epsilon = 0.0;  // 0 = default
};

// e(g) >= lambda1^2 - 3t/lambda1 (within 1e-7); when lambda1 >= n/2 the
// weaker e(g) >= lambda1^2 - 6t/n is checked too.
LemmaReport check_triangle_edge_bound(const Graph& g);

// If the matching number is at most k-1 then e(g) <= k*n.
LemmaReport check_matching_edge_bound(const Graph& g, std::size_t k);

// |A_1 cap ... cap A_p| >= sum|A_i| - (p-1)|A_1 cup ... cup A_p|,
// exact integer arithmetic.  All sets must share one universe size.
LemmaReport check_set_intersection(const std::vector<bitset>& sets);

// For fan-free g: every neighborhood spans at most k*n edges, and the
// triangle count obeys 3t <= k*n^2.
LemmaReport check_fanfree_triangle_budget(const Graph& g, std::size_t k);

// Replays the structural chain used to pin down extremal graphs on any
// concrete input: the Rayleigh edge bound, max-cut size and balance,
// the low-degree set L, the high-inside-degree set W, the refined
// side/edge/degree windows, and the eigenvector entry bound.  Returns
// one report per step, sorted by id.
std::vector<LemmaReport> check_proof_trace(const Graph& g, std::size_t k,
                                           const LemmaOptions& opt = {});

// For fan-free g with fewer than ex_fan(n,k) edges: build the closed-
// form extremal graph H on g's max-cut sides (reusing g's same-side
// edges where possible), evaluate the Rayleigh perturbation
// (2/x^T x) * (sum_{E+} x_i x_j - sum_{E-} x_i x_j) with x the Perron
// vector of g, and report whether lambda1(H) > lambda1(g).
LemmaReport check_perturbation_step(const Graph& g, std::size_t k);

}  // namespace fanfree
