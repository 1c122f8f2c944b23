#include "mwbis/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mwbis {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: zero bound");
    // OpenBSD-style rejection to keep the distribution unbiased.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

WeightedInstance gen_tight(int k, int x) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("gen_tight: k must be even and >= 2");
    if (x < 2) throw std::invalid_argument("gen_tight: x must be >= 2");
    const int hubs = k / 2;                 // degree-x vertices per copy
    const int half = hubs + hubs * (x - 1) + 1;  // vertices per copy
    auto hub_id = [&](int copy, int i) { return copy * half + i; };
    // Chain-shared spokes: b_{i,x} and b_{i+1,1} are the same vertex.
    auto spoke_id = [&](int copy, int i, int j) {
        return copy * half + hubs + i * (x - 1) + j;
    };
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 0; i < hubs; ++i)
            for (int j = 0; j < x; ++j)
                edges.emplace_back(hub_id(copy, i), spoke_id(copy, i, j));
    // Bridge between the first pendant spoke of each copy.
    edges.emplace_back(spoke_id(0, 0, 0), spoke_id(1, 0, 0));
    return make_mivc_instance(build_graph(2 * half, edges), k);
}

std::vector<int> tight_hub_vertices(int k, int x) {
    const int hubs = k / 2;
    const int half = hubs + hubs * (x - 1) + 1;
    std::vector<int> ids;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 0; i < hubs; ++i) ids.push_back(copy * half + i);
    return ids;
}

WeightedInstance gen_gap(int k) {
    if (k < 2) throw std::invalid_argument("gen_gap: k must be >= 2");
    const int p = k * (k - 1) + 1;
    const int n = 1 + p + p * (k - 1);
    auto b_id = [&](int i) { return 1 + i; };                          // i in [0,p)
    auto pendant_id = [&](int i, int j) { return 1 + p + i * (k - 1) + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i) {
        edges.emplace_back(0, b_id(i));
        for (int j = 0; j < k - 1; ++j) edges.emplace_back(pendant_id(i, j), b_id(i));
    }
    return make_mivc_instance(build_graph(n, edges), k);
}

namespace {

struct EdgeKey {
    long long key;
    EdgeKey(int n, int u, int v)
        : key(static_cast<long long>(std::min(u, v)) * n + std::max(u, v)) {}
};

// One stub-pairing pass. Draws uniform stub pairs, redrawing self-loops and
// duplicate edges; gives up (returns false) when the tail of the pairing is
// stuck so the caller can restart.
bool pair_stubs(int n, std::vector<int> stubs, std::unordered_set<long long> adj,
                std::vector<std::pair<int, int>>& edges, SplitMix64& rng) {
    while (!stubs.empty()) {
        int tries = 0;
        for (;;) {
            std::size_t sz = stubs.size();
            std::size_t i1 = static_cast<std::size_t>(rng.next_below(sz));
            std::swap(stubs[i1], stubs[sz - 1]);
            std::size_t i2 = static_cast<std::size_t>(rng.next_below(sz - 1));
            std::swap(stubs[i2], stubs[sz - 2]);
            int u = stubs[sz - 1], v = stubs[sz - 2];
            long long key = EdgeKey(n, u, v).key;
            if (u != v && !adj.count(key)) {
                adj.insert(key);
                edges.emplace_back(u, v);
                stubs.pop_back();
                stubs.pop_back();
                break;
            }
            if (++tries > 1000) return false;
        }
    }
    return true;
}

}  // namespace

Graph gen_random_regular(int n, int r, std::uint64_t seed, int max_attempts) {
    if (r < 0 || r >= n) throw std::invalid_argument("gen_random_regular: need 0 <= r < n");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw std::invalid_argument("gen_random_regular: n*r is odd, no such regular graph");
    SplitMix64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) stubs.push_back(v);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        if (pair_stubs(n, stubs, {}, edges, rng)) return build_graph(n, edges);
    }
    throw std::runtime_error("gen_random_regular: no simple pairing after " +
                             std::to_string(max_attempts) + " attempts (reseed and retry)");
}

std::optional<Graph> gen_planted_regular(int n, int r, int clique_size, std::uint64_t seed,
                                         int max_attempts) {
    if (r < 0 || r >= n) throw std::invalid_argument("gen_planted_regular: need 0 <= r < n");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw std::invalid_argument("gen_planted_regular: n*r is odd, no such regular graph");
    if (clique_size < 1 || clique_size > n || clique_size - 1 > r)
        throw std::invalid_argument("gen_planted_regular: clique does not fit degree r");
    std::vector<std::pair<int, int>> clique_edges;
    std::unordered_set<long long> adj;
    for (int u = 0; u < clique_size; ++u)
        for (int v = u + 1; v < clique_size; ++v) {
            clique_edges.emplace_back(u, v);
            adj.insert(EdgeKey(n, u, v).key);
        }
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
        int need = r - (v < clique_size ? clique_size - 1 : 0);
        for (int i = 0; i < need; ++i) stubs.push_back(v);
    }
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges = clique_edges;
        if (pair_stubs(n, stubs, adj, edges, rng)) return build_graph(n, edges);
    }
    return std::nullopt;
}

BipartiteSample gen_random_bipartite(int n_a, int n_b, double edge_prob, std::uint64_t seed,
                                     WeightMode mode, double lo, double hi) {
    if (n_a < 1 || n_b < 1) throw std::invalid_argument("gen_random_bipartite: empty side");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("gen_random_bipartite: edge_prob outside [0,1]");
    if (mode == WeightMode::Uniform && !(lo > 0.0 && hi > lo))
        throw std::invalid_argument("gen_random_bipartite: need 0 < lo < hi");
    SplitMix64 rng(seed);
    const int n = n_a + n_b;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n_a; ++a)
        for (int b = 0; b < n_b; ++b)
            if (rng.next_double() < edge_prob) edges.emplace_back(a, n_a + b);
    Graph g = build_graph(n, edges);
    BipartiteSample out;
    for (int v = 0; v < n_a; ++v) out.bipartition.side_a.push_back(v);
    for (int v = n_a; v < n; ++v) out.bipartition.side_b.push_back(v);
    if (mode == WeightMode::Degree) {
        out.instance = make_mivc_instance(std::move(g), 0);
    } else {
        std::vector<double> w(n);
        for (int v = 0; v < n; ++v) w[v] = lo + (hi - lo) * rng.next_double();
        out.instance = make_instance(std::move(g), std::move(w), 0);
    }
    return out;
}

WeightedInstance gen_random_mivc(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_random_mivc: negative n");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("gen_random_mivc: edge_prob outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < edge_prob) edges.emplace_back(u, v);
    return make_mivc_instance(build_graph(n, edges), 0);
}

}  // namespace mwbis
