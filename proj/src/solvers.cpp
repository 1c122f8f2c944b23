#include "mwbis/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mwbis {

namespace {

// Sorted-descending weight order over vertices with positive weight.
// Weight-0 vertices (isolated vertices of MIVC instances) are never
// beneficial and are left out of the search entirely.
std::vector<int> weight_order(const Graph& g, const std::vector<double>& w) {
    std::vector<int> order;
    order.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        if (w[v] > 0.0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (w[a] != w[b]) return w[a] > w[b];
        return a < b;
    });
    return order;
}

class BranchAndBound {
  public:
    BranchAndBound(const WeightedInstance& inst, const SearchConfig& config)
        : graph_(inst.graph), weights_(inst.weights), config_(config) {
        order_ = weight_order(graph_, weights_);
        mark_.assign(graph_.n, 0);
        if (config_.time_limit) deadline_ = Clock::now() + *config_.time_limit;
    }

    Solution solve(int budget, SearchStats* stats) {
        std::vector<int> cands(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) cands[i] = static_cast<int>(i);
        dfs(cands, 0.0, std::min<int>(budget, static_cast<int>(order_.size())));
        Solution sol;
        sol.method = Method::Exact;
        sol.vertices = best_set_;
        std::sort(sol.vertices.begin(), sol.vertices.end());
        for (int v : sol.vertices) sol.value += weights_[v];
        sol.proven_optimal = !aborted_;
        if (stats) {
            stats->nodes = nodes_;
            stats->aborted = aborted_;
        }
        return sol;
    }

  private:
    using Clock = std::chrono::steady_clock;

    bool limits_hit() {
        if (config_.node_limit && nodes_ > *config_.node_limit) return true;
        if (config_.time_limit && (nodes_ & 1023) == 0 && Clock::now() > deadline_) return true;
        return false;
    }

    // cands holds indices into order_, ascending, so candidate weights are
    // non-increasing along the vector.
    void dfs(const std::vector<int>& cands, double value, int budget_left) {
        ++nodes_;
        if (limits_hit()) {
            aborted_ = true;
            return;
        }
        if (value > best_value_) {
            best_value_ = value;
            best_set_ = current_;
        }
        if (budget_left == 0 || cands.empty()) return;
        int take = std::min<int>(budget_left, static_cast<int>(cands.size()));
        double bound = value;
        for (int i = 0; i < take; ++i) bound += weights_[order_[cands[i]]];
        if (bound <= best_value_) return;

        int v = order_[cands[0]];
        // Include v: drop it and its neighbors from the candidate pool.
        for (int u : graph_.adj[v]) mark_[u] = 1;
        std::vector<int> kept;
        kept.reserve(cands.size());
        for (std::size_t i = 1; i < cands.size(); ++i)
            if (!mark_[order_[cands[i]]]) kept.push_back(cands[i]);
        for (int u : graph_.adj[v]) mark_[u] = 0;
        current_.push_back(v);
        dfs(kept, value + weights_[v], budget_left - 1);
        current_.pop_back();
        if (aborted_) return;
        // Exclude v.
        std::vector<int> rest(cands.begin() + 1, cands.end());
        dfs(rest, value, budget_left);
    }

    const Graph& graph_;
    const std::vector<double>& weights_;
    SearchConfig config_;
    Clock::time_point deadline_{};
    std::vector<int> order_;
    std::vector<char> mark_;
    std::vector<int> current_, best_set_;
    double best_value_ = 0.0;
    long long nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

Solution exact_mwbis(const WeightedInstance& inst, const SearchConfig& config,
                     SearchStats* stats) {
    BranchAndBound search(inst, config);
    return search.solve(inst.k, stats);
}

std::vector<int> top_k_by_weight(const std::vector<int>& ids, const std::vector<double>& weights,
                                 int k) {
    if (k < 0) throw std::invalid_argument("top_k_by_weight: negative k");
    std::vector<int> pool = ids;
    int take = std::min<int>(k, static_cast<int>(pool.size()));
    for (int t = 0; t < take; ++t) {
        int best = t;
        for (int i = t + 1; i < static_cast<int>(pool.size()); ++i) {
            if (weights[pool[i]] > weights[pool[best]] ||
                (weights[pool[i]] == weights[pool[best]] && pool[i] < pool[best]))
                best = i;
        }
        std::swap(pool[t], pool[best]);
    }
    pool.resize(take);
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

double sorted_weight_sum(const std::vector<int>& sorted_set, const std::vector<double>& w) {
    double total = 0.0;
    for (int v : sorted_set) total += w[v];
    return total;
}

}  // namespace

Solution greedy_bipartite(const WeightedInstance& inst, const Bipartition& bip) {
    if (!is_valid_bipartition(inst.graph, bip))
        throw std::invalid_argument("greedy_bipartite: not a valid bipartition of the graph");
    std::vector<int> set_a = top_k_by_weight(bip.side_a, inst.weights, inst.k);
    std::vector<int> set_b = top_k_by_weight(bip.side_b, inst.weights, inst.k);
    double wa = sorted_weight_sum(set_a, inst.weights);
    double wb = sorted_weight_sum(set_b, inst.weights);
    Solution sol;
    sol.method = Method::Greedy;
    if (wa >= wb) {
        sol.vertices = std::move(set_a);
        sol.value = wa;
    } else {
        sol.vertices = std::move(set_b);
        sol.value = wb;
    }
    return sol;
}

Solution color_class_approx(const WeightedInstance& inst, const Coloring& coloring) {
    std::vector<char> seen(inst.graph.n, 0);
    int covered = 0;
    for (const auto& cls : coloring.classes) {
        if (!is_independent(inst.graph, cls))
            throw std::invalid_argument("color_class_approx: a class is not independent");
        for (int v : cls) {
            if (seen[v]) throw std::invalid_argument("color_class_approx: classes overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != inst.graph.n)
        throw std::invalid_argument("color_class_approx: classes do not cover V");
    Solution sol;
    sol.method = Method::ColorClass;
    bool first = true;
    for (const auto& cls : coloring.classes) {
        std::vector<int> top = top_k_by_weight(cls, inst.weights, inst.k);
        double w = sorted_weight_sum(top, inst.weights);
        if (first || w > sol.value) {
            sol.vertices = std::move(top);
            sol.value = w;
            first = false;
        }
    }
    return sol;
}

namespace {

// Plain augmenting-path max-flow on a dense residual matrix; instances here
// are desk scale.
class MaxFlow {
  public:
    explicit MaxFlow(int nodes) : n_(nodes), cap_(nodes, std::vector<double>(nodes, 0.0)) {}

    void add_arc(int u, int v, double cap) { cap_[u][v] += cap; }

    void run(int s, int t, double eps) {
        std::vector<int> parent(n_);
        for (;;) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && parent[t] == -1) {
                int u = q.front();
                q.pop();
                for (int v = 0; v < n_; ++v)
                    if (parent[v] == -1 && cap_[u][v] > eps) {
                        parent[v] = u;
                        q.push(v);
                    }
            }
            if (parent[t] == -1) return;
            double push = std::numeric_limits<double>::infinity();
            for (int v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v]][v]);
            for (int v = t; v != s; v = parent[v]) {
                cap_[parent[v]][v] -= push;
                cap_[v][parent[v]] += push;
            }
        }
    }

    std::vector<char> reachable(int s, double eps) const {
        std::vector<char> seen(n_, 0);
        seen[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n_; ++v)
                if (!seen[v] && cap_[u][v] > eps) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        return seen;
    }

  private:
    int n_;
    std::vector<std::vector<double>> cap_;
};

}  // namespace

std::vector<int> mwis_bipartite_exact(const Graph& g, const std::vector<double>& weights,
                                      const Bipartition& bip) {
    if (static_cast<int>(weights.size()) != g.n)
        throw std::invalid_argument("mwis_bipartite_exact: weight count != vertex count");
    if (!is_valid_bipartition(g, bip))
        throw std::invalid_argument("mwis_bipartite_exact: not a valid bipartition");
    double max_w = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("mwis_bipartite_exact: weights must be positive");
        max_w = std::max(max_w, w);
    }
    const int source = g.n, sink = g.n + 1;
    const double inf = (max_w + 1.0) * (g.n + 1.0);
    const double eps = 1e-12 * (1.0 + max_w);
    MaxFlow flow(g.n + 2);
    std::vector<char> in_a(g.n, 0);
    for (int a : bip.side_a) in_a[a] = 1;
    for (int a : bip.side_a) {
        flow.add_arc(source, a, weights[a]);
        for (int b : g.adj[a]) flow.add_arc(a, b, inf);
    }
    for (int b : bip.side_b) flow.add_arc(b, sink, weights[b]);
    flow.run(source, sink, eps);
    // Min vertex cover = {a in A unreachable} + {b in B reachable};
    // the independent set is its complement.
    std::vector<char> seen = flow.reachable(source, eps);
    std::vector<int> mwis;
    for (int v = 0; v < g.n; ++v)
        if (in_a[v] ? seen[v] : !seen[v]) mwis.push_back(v);
    return mwis;
}

Solution truncate_to_budget(const std::vector<int>& set, const std::vector<double>& weights,
                            int k) {
    for (int v : set)
        if (v < 0 || v >= static_cast<int>(weights.size()))
            throw std::out_of_range("truncate_to_budget: vertex id out of range");
    Solution sol;
    sol.method = Method::Truncate;
    sol.vertices = top_k_by_weight(set, weights, k);
    sol.value = sorted_weight_sum(sol.vertices, weights);
    return sol;
}

}  // namespace mwbis
