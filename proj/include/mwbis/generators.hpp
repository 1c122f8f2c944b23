#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "mwbis/instance.hpp"

namespace mwbis {

// SplitMix64: the repo-wide pseudo-random source. 64-bit state, portable,
// bit-reproducible across platforms; split() derives an independent stream
// per instance.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    // Unbiased integer in [0, bound), bound > 0; rejection sampling.
    std::uint64_t next_below(std::uint64_t bound);

    // Double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// The tight family for the bipartite greedy: two mirrored chains of k/2
// degree-x hub vertices joined by one bridge edge between pendants, degree
// weights, budget k. Exact optimum kx, greedy value kx/2 + k.
// Requires k even, k >= 2, x >= 2.
WeightedInstance gen_tight(int k, int x);

// Vertex ids of the degree-x hubs of gen_tight(k, x), for tests.
std::vector<int> tight_hub_vertices(int k, int x);

// The integrality-gap family: hub a_0 joined to p = k(k-1)+1 spokes b_i, each
// b_i carrying k-1 private pendants. Degree weights, budget k. Integral
// optimum k^2. Requires k >= 2.
WeightedInstance gen_gap(int k);

// Simple r-regular graph by configuration-model stub pairing. Invalid pair
// draws (self-loop or duplicate edge) are redrawn; a stuck pairing restarts.
// Requires n*r even and r < n; throws after `max_attempts` restarts.
Graph gen_random_regular(int n, int r, std::uint64_t seed, int max_attempts = 10000);

// r-regular graph containing the clique {0..clique_size-1}: clique edges are
// planted, remaining stubs paired as in gen_random_regular. Returns nullopt
// if no valid completion is found within `max_attempts` (not an error).
std::optional<Graph> gen_planted_regular(int n, int r, int clique_size, std::uint64_t seed,
                                         int max_attempts = 10000);

enum class WeightMode { Degree, Uniform };

struct BipartiteSample {
    WeightedInstance instance;  // budget starts at 0; set per use
    Bipartition bipartition;    // side A = 0..n_a-1, side B = n_a..n_a+n_b-1
};

// G(n_a, n_b, edge_prob) bipartite instance, reproducible from seed.
// Uniform mode draws weights from [lo, hi), lo > 0.
BipartiteSample gen_random_bipartite(int n_a, int n_b, double edge_prob, std::uint64_t seed,
                                     WeightMode mode = WeightMode::Degree, double lo = 0.5,
                                     double hi = 10.0);

// Erdos-Renyi G(n, edge_prob) with degree weights, for coloring/LP corpora.
WeightedInstance gen_random_mivc(int n, double edge_prob, std::uint64_t seed);

}  // namespace mwbis
