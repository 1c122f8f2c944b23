#pragma once

#include <optional>
#include <utility>

#include "mwbis/instance.hpp"

namespace mwbis {

// Bipartite host built from an r-regular source graph (r = n-4, n > 11):
// one A-side vertex a_i per source edge e_i, one b_j per source vertex v_j,
// and r-3 pendants hanging off each a_i. a_i is adjacent to b_j exactly when
// e_i is incident on v_j, so A u beta induces the incidence graph of the
// source. Degrees: deg(a_i) = r-1, deg(b_j) = r, pendants 1.
struct ReductionInstance {
    Graph source;                          // r-regular, r = n-4
    int k = 0;                             // clique size sought, k < n/2
    int r = 0;
    Graph host;                            // bipartite H
    std::vector<std::pair<int, int>> edges;  // source edges e_1..e_m in index order
    std::vector<int> a_of_edge;            // edge index -> host id of a_i
    std::vector<int> b_of_vertex;          // source vertex -> host id of b_j
    std::vector<std::vector<int>> pendants;  // edge index -> host ids of p_{i,j}
    long long x = 0;                       // m - (k r - C(k,2))
    long long target = 0;                  // k r + x (r-1)
    int budget() const { return k + static_cast<int>(x); }
};

// (x, target) for source size n and clique size k. Rejects n <= 11, odd n*r,
// and k outside [1, n/2).
std::pair<long long, long long> coverage_target(int n, int k);

// Builds the host instance. Rejects non-(n-4)-regular sources and parameter
// violations, naming the failed precondition. Host vertex numbering: the A
// block first (edge index order), then beta, then pendants in (i, j) order.
ReductionInstance construct_bipartite(const Graph& g, int k);

// Maps a k-clique of the source to the witness set in the host: the a_i of
// every edge untouched by the clique plus the b_j of every clique vertex.
// The result is independent, has size exactly k + x, and covers exactly
// k r + x (r-1) edges. Rejects inputs that are not k-cliques.
std::vector<int> clique_to_solution(const ReductionInstance& ri, const std::vector<int>& clique);

// Value of the forced completion of a fixed beta-subset: all of it, then as
// many non-conflicting A vertices as the budget allows (r-1 each), then
// pendants of unchosen A vertices (1 each). Returns -1 when |beta_subset|
// exceeds the budget.
long long reduction_completion_value(const ReductionInstance& ri,
                                     const std::vector<int>& beta_subset, int budget);

// Exact MIVC optimum on the host: enumerates all 2^n subsets of beta and
// takes the best forced completion. Rejects sources with n > 24.
Solution exact_mivc_reduction(const ReductionInstance& ri, int budget);

// First k-clique in lexicographic order, by recursive extension with degree
// pruning, or nullopt. Intended for small graphs.
std::optional<std::vector<int>> has_k_clique(const Graph& g, int k);

struct EquivalenceReport {
    int n = 0, k = 0, r = 0;
    long long m = 0, x = 0, target = 0;
    bool clique_found = false;
    long long mivc_opt = 0;
    bool equivalent = false;  // clique_found == (mivc_opt >= target)
};

// Runs both oracles on one source graph and checks the reduction equivalence
// in both directions.
EquivalenceReport verify_equivalence(const Graph& g, int k);

}  // namespace mwbis
