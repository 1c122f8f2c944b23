#include "mwbis/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mwbis {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: vertex id out of range in edge (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.m = 0;
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
    }
    g.m /= 2;
    return g;
}

std::vector<double> degree_weights(const Graph& g) {
    std::vector<double> w(g.n);
    for (int v = 0; v < g.n; ++v) w[v] = static_cast<double>(g.degree(v));
    return w;
}

namespace {

void check_ids(const Graph& g, const std::vector<int>& set, const char* who) {
    for (int v : set)
        if (v < 0 || v >= g.n)
            throw std::out_of_range(std::string(who) + ": vertex id " + std::to_string(v) +
                                    " out of range");
}

}  // namespace

bool is_independent(const Graph& g, const std::vector<int>& set) {
    check_ids(g, set, "is_independent");
    std::vector<char> in(g.n, 0);
    for (int v : set) in[v] = 1;
    for (int u : set)
        for (int v : g.adj[u])
            if (in[v]) return false;
    return true;
}

long long covered_edges(const Graph& g, const std::vector<int>& set) {
    check_ids(g, set, "covered_edges");
    std::vector<char> in(g.n, 0);
    for (int v : set) in[v] = 1;
    long long count = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && (in[u] || in[v])) ++count;
    return count;
}

namespace {

// Walks parent pointers from the endpoints of a same-color edge up to their
// lowest common ancestor and stitches the odd cycle together.
std::vector<int> stitch_odd_cycle(const std::vector<int>& parent, int u, int v) {
    std::vector<int> pu{u}, pv{v};
    while (parent[pu.back()] != -1) pu.push_back(parent[pu.back()]);
    while (parent[pv.back()] != -1) pv.push_back(parent[pv.back()]);
    // Trim the shared tail above the LCA.
    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::vector<int> cycle(pu.begin(), pu.end());
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
    // Normalize: rotate smallest vertex to front, pick the lexicographically
    // smaller direction.
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle.size() >= 3 && cycle[1] > cycle.back()) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

}  // namespace

BipartitionResult find_bipartition(const Graph& g) {
    BipartitionResult res;
    std::vector<int> color(g.n, -1), parent(g.n, -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    res.odd_cycle = stitch_odd_cycle(parent, u, v);
                    return res;
                }
            }
        }
    }
    Bipartition bip;
    for (int v = 0; v < g.n; ++v)
        (color[v] == 0 ? bip.side_a : bip.side_b).push_back(v);
    res.parts = std::move(bip);
    return res;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& bip) {
    std::vector<int> side(g.n, -1);
    for (int v : bip.side_a) {
        if (v < 0 || v >= g.n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : bip.side_b) {
        if (v < 0 || v >= g.n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (side[v] == -1) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (side[u] == side[v]) return false;
    return true;
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("greedy_coloring: order is not a permutation of V");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || seen[v])
            throw std::invalid_argument("greedy_coloring: order is not a permutation of V");
        seen[v] = 1;
    }
    std::vector<int> color(g.n, -1);
    std::vector<char> used;
    Coloring col;
    for (int v : order) {
        used.assign(col.num_colors + 1, 0);
        for (int u : g.adj[v])
            if (color[u] >= 0) used[std::min(color[u], col.num_colors)] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        if (c == col.num_colors) {
            ++col.num_colors;
            col.classes.emplace_back();
        }
        col.classes[c].push_back(v);
    }
    for (auto& cls : col.classes) std::sort(cls.begin(), cls.end());
    return col;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    DegeneracyOrder out;
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    out.order.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        removed[best] = 1;
        out.order.push_back(best);
        for (int u : g.adj[best])
            if (!removed[u]) --deg[u];
    }
    return out;
}

Coloring degeneracy_coloring(const Graph& g) {
    auto peel = degeneracy_order(g);
    std::reverse(peel.order.begin(), peel.order.end());
    return greedy_coloring(g, peel.order);
}

}  // namespace mwbis
