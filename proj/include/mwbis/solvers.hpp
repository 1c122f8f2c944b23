#pragma once

#include <chrono>
#include <optional>

#include "mwbis/instance.hpp"

namespace mwbis {

struct SearchConfig {
    std::optional<long long> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct SearchStats {
    long long nodes = 0;
    bool aborted = false;  // a limit was hit; result is best-found only
};

// Branch and bound for the budgeted maximum-weight independent set. Branches
// on inclusion/exclusion of the heaviest remaining vertex; prunes with the
// bound "current value + sum of the top remaining-budget candidate weights"
// and by deleting neighbors of included vertices. proven_optimal is false
// only when a node or time limit stopped the search early.
Solution exact_mwbis(const WeightedInstance& inst, const SearchConfig& config = {},
                     SearchStats* stats = nullptr);

// Two-candidate greedy on a bipartite graph: the k heaviest vertices of each
// side (whole side when k exceeds it), returning the heavier set, ties to
// side A. Value is at least half the optimum.
Solution greedy_bipartite(const WeightedInstance& inst, const Bipartition& bip);

// Generalization over a proper coloring with p classes: best per-class top-k
// set. Value is at least optimum/p. With a bipartition as the coloring this
// coincides with greedy_bipartite.
Solution color_class_approx(const WeightedInstance& inst, const Coloring& coloring);

// Maximum-weight independent set (no budget) on a bipartite graph, as the
// complement of a minimum-weight vertex cover from a min cut on the standard
// source-A-B-sink network. Augmenting-path max-flow; weights must be
// strictly positive.
std::vector<int> mwis_bipartite_exact(const Graph& g, const std::vector<double>& weights,
                                      const Bipartition& bip);

// Keeps the k heaviest vertices of an independent set (ties to lower id).
// Retains at least a k/|set| fraction of the set's weight.
Solution truncate_to_budget(const std::vector<int>& set, const std::vector<double>& weights,
                            int k);

// The k heaviest of `ids` by (weight desc, id asc); all of them if k >= size.
// Repeated max selection, O(|ids| * k).
std::vector<int> top_k_by_weight(const std::vector<int>& ids, const std::vector<double>& weights,
                                 int k);

}  // namespace mwbis
