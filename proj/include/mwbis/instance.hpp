#pragma once

#include <string>
#include <vector>

#include "mwbis/graph.hpp"

namespace mwbis {

// One budgeted independent set problem: graph, positive vertex weights and a
// cardinality budget k. MIVC instances (weight = degree) may carry weight 0
// on isolated vertices; solvers never benefit from picking those.
struct WeightedInstance {
    Graph graph;
    std::vector<double> weights;
    int k = 0;
    bool integer_weights = false;  // enables exact integer arithmetic paths

    bool is_mivc() const;
};

// Validates weights.size() == n, every weight > 0, k >= 0.
WeightedInstance make_instance(Graph graph, std::vector<double> weights, int k);

// Degree weights. Weight 0 on isolated vertices is allowed here.
WeightedInstance make_mivc_instance(Graph graph, int k);

// Copy with a different budget.
WeightedInstance with_budget(const WeightedInstance& inst, int k);

// Sum of weights over `set`. Ids must be in range and distinct.
double set_weight(const WeightedInstance& inst, const std::vector<int>& set);

// Integer weight sum for integer-weight instances.
long long set_weight_int(const WeightedInstance& inst, const std::vector<int>& set);

enum class Method {
    Exact,
    Greedy,
    ColorClass,
    Truncate,
    MivcOracle,
};

const char* method_name(Method m);

struct Solution {
    std::vector<int> vertices;  // sorted ascending
    double value = 0.0;
    Method method = Method::Exact;
    bool proven_optimal = false;
};

// Re-checks a solution against its instance: independence, |S| <= k, and the
// stored value against the recomputed weight sum (exact for integer weights,
// 1e-12 relative otherwise). Returns an empty string when fine, a diagnostic
// otherwise.
std::string check_solution(const WeightedInstance& inst, const Solution& sol);

}  // namespace mwbis
