#include "mwbis/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwbis {

std::pair<long long, long long> coverage_target(int n, int k) {
    if (n <= 11) throw std::invalid_argument("coverage_target: n must be greater than 11");
    long long r = n - 4;
    if ((n * r) % 2 != 0)
        throw std::invalid_argument("coverage_target: n*r is odd, no r-regular graph exists");
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("coverage_target: k must satisfy 1 <= k < n/2");
    long long m = n * r / 2;
    long long x = m - (k * r - static_cast<long long>(k) * (k - 1) / 2);
    long long target = k * r + x * (r - 1);
    return {x, target};
}

ReductionInstance construct_bipartite(const Graph& g, int k) {
    const int n = g.n;
    if (n <= 11) throw std::invalid_argument("construct_bipartite: n must be greater than 11");
    const int r = n - 4;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != r)
            throw std::invalid_argument("construct_bipartite: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(g.degree(v)) +
                                        ", source must be " + std::to_string(r) + "-regular");
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("construct_bipartite: k must satisfy 1 <= k < n/2");

    ReductionInstance ri;
    ri.source = g;
    ri.k = k;
    ri.r = r;
    ri.edges = g.edge_list();
    const int m = static_cast<int>(ri.edges.size());
    const int pend_per_a = r - 3;
    const int host_n = m + n + m * pend_per_a;

    ri.a_of_edge.resize(m);
    ri.b_of_vertex.resize(n);
    ri.pendants.assign(m, {});
    for (int i = 0; i < m; ++i) ri.a_of_edge[i] = i;
    for (int j = 0; j < n; ++j) ri.b_of_vertex[j] = m + j;

    std::vector<std::pair<int, int>> host_edges;
    host_edges.reserve(static_cast<std::size_t>(m) * (pend_per_a + 2));
    for (int i = 0; i < m; ++i) {
        host_edges.emplace_back(ri.a_of_edge[i], ri.b_of_vertex[ri.edges[i].first]);
        host_edges.emplace_back(ri.a_of_edge[i], ri.b_of_vertex[ri.edges[i].second]);
        for (int j = 0; j < pend_per_a; ++j) {
            int p = m + n + i * pend_per_a + j;
            ri.pendants[i].push_back(p);
            host_edges.emplace_back(ri.a_of_edge[i], p);
        }
    }
    ri.host = build_graph(host_n, host_edges);
    auto [x, target] = coverage_target(n, k);
    ri.x = x;
    ri.target = target;
    return ri;
}

std::vector<int> clique_to_solution(const ReductionInstance& ri, const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) != ri.k)
        throw std::invalid_argument("clique_to_solution: expected a clique of size " +
                                    std::to_string(ri.k) + ", got " +
                                    std::to_string(clique.size()));
    std::vector<char> in(ri.source.n, 0);
    for (int v : clique) {
        if (v < 0 || v >= ri.source.n)
            throw std::invalid_argument("clique_to_solution: vertex id out of range");
        if (in[v]) throw std::invalid_argument("clique_to_solution: repeated vertex");
        in[v] = 1;
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!ri.source.has_edge(clique[i], clique[j]))
                throw std::invalid_argument("clique_to_solution: vertices " +
                                            std::to_string(clique[i]) + " and " +
                                            std::to_string(clique[j]) + " are not adjacent");
    std::vector<int> witness;
    for (std::size_t i = 0; i < ri.edges.size(); ++i)
        if (!in[ri.edges[i].first] && !in[ri.edges[i].second])
            witness.push_back(ri.a_of_edge[i]);
    if (static_cast<long long>(witness.size()) != ri.x)
        throw std::logic_error("clique_to_solution: uncovered edge count != x");
    for (int v : clique) witness.push_back(ri.b_of_vertex[v]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

namespace {

long long completion_value(const ReductionInstance& ri, std::uint32_t beta_mask, int budget) {
    const int s = std::popcount(beta_mask);
    if (s > budget) return -1;
    const long long m = static_cast<long long>(ri.edges.size());
    long long value = static_cast<long long>(s) * ri.r;
    long long free_edges = 0;
    for (const auto& [u, v] : ri.edges)
        if (!((beta_mask >> u) & 1) && !((beta_mask >> v) & 1)) ++free_edges;
    long long t = std::min<long long>(budget - s, free_edges);
    value += t * (ri.r - 1);
    long long rem = budget - s - t;
    long long pendant_supply = (m - t) * (ri.r - 3);
    value += std::min(rem, pendant_supply);
    return value;
}

}  // namespace

long long reduction_completion_value(const ReductionInstance& ri,
                                     const std::vector<int>& beta_subset, int budget) {
    std::uint32_t mask = 0;
    for (int v : beta_subset) {
        if (v < 0 || v >= ri.source.n)
            throw std::out_of_range("reduction_completion_value: vertex id out of range");
        mask |= 1u << v;
    }
    return completion_value(ri, mask, budget);
}

Solution exact_mivc_reduction(const ReductionInstance& ri, int budget) {
    const int n = ri.source.n;
    if (n > 24)
        throw std::invalid_argument(
            "exact_mivc_reduction: source too large for 2^n enumeration; use the general "
            "exact solver on the host");
    if (budget < 0) throw std::invalid_argument("exact_mivc_reduction: negative budget");

    long long best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long long value = completion_value(ri, mask, budget);
        if (value > best) {
            best = value;
            best_mask = mask;
        }
    }

    Solution sol;
    sol.method = Method::MivcOracle;
    sol.proven_optimal = true;
    if (best < 0) return sol;  // budget smaller than any subset, i.e. never
    sol.value = static_cast<double>(best);

    // Rebuild the witness for the best mask: beta bits, then free A vertices
    // in edge-index order, then pendants of unchosen A vertices.
    int s = std::popcount(best_mask);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) sol.vertices.push_back(ri.b_of_vertex[v]);
    std::vector<char> a_chosen(ri.edges.size(), 0);
    int t = 0;
    for (std::size_t i = 0; i < ri.edges.size() && t < budget - s; ++i) {
        const auto& [u, v] = ri.edges[i];
        if (!((best_mask >> u) & 1) && !((best_mask >> v) & 1)) {
            a_chosen[i] = 1;
            sol.vertices.push_back(ri.a_of_edge[i]);
            ++t;
        }
    }
    long long rem = budget - s - t;
    for (std::size_t i = 0; i < ri.edges.size() && rem > 0; ++i) {
        if (a_chosen[i]) continue;
        for (int p : ri.pendants[i]) {
            sol.vertices.push_back(p);
            if (--rem == 0) break;
        }
    }
    std::sort(sol.vertices.begin(), sol.vertices.end());
    return sol;
}

namespace {

bool extend_clique(const Graph& g, int k, std::vector<int>& current,
                   const std::vector<int>& cands) {
    if (static_cast<int>(current.size()) == k) return true;
    if (static_cast<int>(current.size() + cands.size()) < k) return false;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        int v = cands[idx];
        if (g.degree(v) < k - 1) continue;
        std::vector<int> next;
        for (std::size_t j = idx + 1; j < cands.size(); ++j)
            if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
        current.push_back(v);
        if (extend_clique(g, k, current, next)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> has_k_clique(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("has_k_clique: negative k");
    if (k == 0) return std::vector<int>{};
    if (k > g.n) return std::nullopt;
    std::vector<int> cands(g.n);
    for (int v = 0; v < g.n; ++v) cands[v] = v;
    std::vector<int> current;
    if (extend_clique(g, k, current, cands)) return current;
    return std::nullopt;
}

EquivalenceReport verify_equivalence(const Graph& g, int k) {
    ReductionInstance ri = construct_bipartite(g, k);
    EquivalenceReport rep;
    rep.n = g.n;
    rep.k = k;
    rep.r = ri.r;
    rep.m = static_cast<long long>(ri.edges.size());
    rep.x = ri.x;
    rep.target = ri.target;
    rep.clique_found = has_k_clique(g, k).has_value();
    Solution opt = exact_mivc_reduction(ri, ri.budget());
    rep.mivc_opt = static_cast<long long>(opt.value);
    rep.equivalent = rep.clique_found == (rep.mivc_opt >= rep.target);
    return rep;
}

}  // namespace mwbis
