#include "mwbis/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace mwbis {

bool WeightedInstance::is_mivc() const {
    for (int v = 0; v < graph.n; ++v)
        if (weights[v] != static_cast<double>(graph.degree(v))) return false;
    return true;
}

namespace {

bool all_integral(const std::vector<double>& w) {
    for (double x : w)
        if (x != std::floor(x)) return false;
    return true;
}

}  // namespace

WeightedInstance make_instance(Graph graph, std::vector<double> weights, int k) {
    if (static_cast<int>(weights.size()) != graph.n)
        throw std::invalid_argument("make_instance: weight count != vertex count");
    for (int v = 0; v < graph.n; ++v)
        if (!(weights[v] > 0.0))
            throw std::invalid_argument("make_instance: weight of vertex " + std::to_string(v) +
                                        " is not positive");
    if (k < 0) throw std::invalid_argument("make_instance: negative budget");
    WeightedInstance inst;
    inst.integer_weights = all_integral(weights);
    inst.graph = std::move(graph);
    inst.weights = std::move(weights);
    inst.k = k;
    return inst;
}

WeightedInstance make_mivc_instance(Graph graph, int k) {
    if (k < 0) throw std::invalid_argument("make_mivc_instance: negative budget");
    WeightedInstance inst;
    inst.weights = degree_weights(graph);
    inst.graph = std::move(graph);
    inst.k = k;
    inst.integer_weights = true;
    return inst;
}

WeightedInstance with_budget(const WeightedInstance& inst, int k) {
    if (k < 0) throw std::invalid_argument("with_budget: negative budget");
    WeightedInstance out = inst;
    out.k = k;
    return out;
}

double set_weight(const WeightedInstance& inst, const std::vector<int>& set) {
    double total = 0.0;
    for (int v : set) {
        if (v < 0 || v >= inst.graph.n)
            throw std::out_of_range("set_weight: vertex id " + std::to_string(v) +
                                    " out of range");
        total += inst.weights[v];
    }
    return total;
}

long long set_weight_int(const WeightedInstance& inst, const std::vector<int>& set) {
    if (!inst.integer_weights)
        throw std::logic_error("set_weight_int: instance has non-integer weights");
    long long total = 0;
    for (int v : set) {
        if (v < 0 || v >= inst.graph.n)
            throw std::out_of_range("set_weight_int: vertex id " + std::to_string(v) +
                                    " out of range");
        total += std::llround(inst.weights[v]);
    }
    return total;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Greedy: return "greedy";
        case Method::ColorClass: return "color";
        case Method::Truncate: return "truncate";
        case Method::MivcOracle: return "mivc-oracle";
    }
    return "unknown";
}

std::string check_solution(const WeightedInstance& inst, const Solution& sol) {
    if (static_cast<int>(sol.vertices.size()) > inst.k)
        return "solution exceeds budget: |S| = " + std::to_string(sol.vertices.size()) +
               ", k = " + std::to_string(inst.k);
    if (!is_independent(inst.graph, sol.vertices)) return "solution is not an independent set";
    double recomputed = set_weight(inst, sol.vertices);
    if (inst.integer_weights) {
        if (recomputed != sol.value)
            return "value mismatch: stored " + std::to_string(sol.value) + ", recomputed " +
                   std::to_string(recomputed);
    } else {
        double scale = std::max({1.0, std::fabs(recomputed), std::fabs(sol.value)});
        if (std::fabs(recomputed - sol.value) > 1e-12 * scale)
            return "value mismatch: stored " + std::to_string(sol.value) + ", recomputed " +
                   std::to_string(recomputed);
    }
    return {};
}

}  // namespace mwbis
