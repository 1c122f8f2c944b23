#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace mwbis {

// Simple undirected graph. Vertices are 0..n-1, adjacency lists are kept
// sorted, no self-loops, no duplicate edges.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj[v]; }

    // Edges as (u,v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;
};

// Builds a simple graph from an edge list. Duplicate edges are collapsed.
// Throws std::invalid_argument on a self-loop or an out-of-range id,
// naming the offending edge.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// w(v) = deg(v). Isolated vertices get weight 0 (permitted in MIVC
// instances only, see make_mivc_instance).
std::vector<double> degree_weights(const Graph& g);

// True iff no edge of g joins two members of `set`. Ids must be in range,
// members distinct.
bool is_independent(const Graph& g, const std::vector<int>& set);

// Number of distinct edges with at least one endpoint in `set`.
long long covered_edges(const Graph& g, const std::vector<int>& set);

struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

struct BipartitionResult {
    std::optional<Bipartition> parts;  // engaged iff the graph is bipartite
    std::vector<int> odd_cycle;        // witness cycle otherwise
    bool bipartite() const { return parts.has_value(); }
};

// 2-colors the graph by BFS layering, components independently. Vertex 0 of
// each component lands on side A. Non-bipartite graphs are a normal outcome:
// the result carries an odd cycle, normalized to start at its smallest vertex.
BipartitionResult find_bipartition(const Graph& g);

// Checks that {side_a, side_b} partitions V and every edge crosses sides.
bool is_valid_bipartition(const Graph& g, const Bipartition& bip);

struct Coloring {
    std::vector<std::vector<int>> classes;
    int num_colors = 0;
};

// Proper coloring by first-fit along `order` (a permutation of V).
// Natural order uses at most max_degree+1 colors; the reverse of the
// degeneracy peeling order uses at most degeneracy+1.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

struct DegeneracyOrder {
    std::vector<int> order;  // peeling order: order[0] removed first
    int degeneracy = 0;      // max degree seen at removal time
};

// Repeated minimum-degree peeling, ties broken by lowest id. Color in the
// reverse of `order` for the degeneracy+1 bound.
DegeneracyOrder degeneracy_order(const Graph& g);

// Coloring from reversed peeling order; at most degeneracy+1 classes.
Coloring degeneracy_coloring(const Graph& g);

}  // namespace mwbis
