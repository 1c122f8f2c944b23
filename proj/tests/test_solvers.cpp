#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mwbis/generators.hpp"
#include "mwbis/solvers.hpp"
#include "oracles.hpp"

using namespace mwbis;

namespace {

Graph star3() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Bipartition detected(const Graph& g) {
    auto res = find_bipartition(g);
    REQUIRE(res.bipartite());
    return *res.parts;
}

}  // namespace

TEST_CASE("exact solver on stars") {
    auto k1 = make_mivc_instance(star3(), 1);
    Solution s1 = exact_mwbis(k1);
    CHECK(s1.proven_optimal);
    CHECK(s1.value == 3.0);
    CHECK(s1.vertices == std::vector<int>{0});

    // Center alone still beats any two leaves; brute force agrees.
    auto k2 = make_mivc_instance(star3(), 2);
    Solution s2 = exact_mwbis(k2);
    CHECK(s2.value == 3.0);
    CHECK(s2.value == oracle::best_budgeted(k2));
}

TEST_CASE("exact solver on the adversarial families") {
    Solution tight = exact_mwbis(gen_tight(4, 5));
    CHECK(tight.proven_optimal);
    CHECK(tight.value == 20.0);  // k*x
    CHECK(tight.vertices == tight_hub_vertices(4, 5));

    Solution gap = exact_mwbis(gen_gap(3));
    CHECK(gap.proven_optimal);
    CHECK(gap.value == 9.0);  // k^2
}

TEST_CASE("exact solver respects k = 0 and node limits") {
    auto inst = make_mivc_instance(star3(), 0);
    Solution empty = exact_mwbis(inst);
    CHECK(empty.proven_optimal);
    CHECK(empty.vertices.empty());
    CHECK(empty.value == 0.0);

    SearchConfig tiny;
    tiny.node_limit = 1;
    SearchStats stats;
    Solution cut = exact_mwbis(gen_tight(8, 10), tiny, &stats);
    CHECK(stats.aborted);
    CHECK_FALSE(cut.proven_optimal);
    CHECK(check_solution(gen_tight(8, 10), cut).empty());  // still feasible
}

TEST_CASE("exact solver matches subset enumeration on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto inst = gen_random_mivc(4 + static_cast<int>(seed % 11), 0.35, seed);
        auto best = oracle::best_for_all_budgets(inst.graph, inst.weights);
        for (int k = 0; k <= inst.graph.n; ++k) {
            Solution sol = exact_mwbis(with_budget(inst, k));
            REQUIRE(sol.proven_optimal);
            CHECK(sol.value == best[k]);
            CHECK(check_solution(with_budget(inst, k), sol).empty());
        }
    }
}

TEST_CASE("greedy on a single edge") {
    auto inst = make_mivc_instance(build_graph(2, {{0, 1}}), 1);
    Solution sol = greedy_bipartite(inst, detected(inst.graph));
    CHECK(sol.value == 1.0);
}

TEST_CASE("greedy on the tight example") {
    auto inst = gen_tight(4, 5);
    Solution sol = greedy_bipartite(inst, detected(inst.graph));
    CHECK(sol.value == 14.0);  // k*x/2 + k
}

TEST_CASE("greedy on the gap instance ties to side A") {
    auto inst = gen_gap(3);
    auto bip = detected(inst.graph);
    Solution sol = greedy_bipartite(inst, bip);
    CHECK(sol.value == 9.0);
    // Both sides score 9; the tie goes to the side holding the hub a_0.
    CHECK(std::find(sol.vertices.begin(), sol.vertices.end(), 0) != sol.vertices.end());
}

TEST_CASE("greedy equals the heavier of the two side sets and never drops below half") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto sample = gen_random_bipartite(1 + seed % 8, 1 + (seed / 2) % 8, 0.4, seed,
                                           seed % 2 ? WeightMode::Uniform : WeightMode::Degree);
        int n = sample.instance.graph.n;
        for (int k = 1; k <= n; ++k) {
            auto inst = with_budget(sample.instance, k);
            Solution sol = greedy_bipartite(inst, sample.bipartition);
            double wa = set_weight(inst, top_k_by_weight(sample.bipartition.side_a,
                                                         inst.weights, k));
            double wb = set_weight(inst, top_k_by_weight(sample.bipartition.side_b,
                                                         inst.weights, k));
            CHECK(sol.value == std::max(wa, wb));
            CHECK(check_solution(inst, sol).empty());
            double opt = oracle::best_budgeted(inst);
            CHECK(2.0 * sol.value >= opt - 1e-9);
            ++checked;
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("greedy takes the whole side when k exceeds it") {
    auto sample = gen_random_bipartite(2, 5, 1.0, 3);
    auto inst = with_budget(sample.instance, 4);
    Solution sol = greedy_bipartite(inst, sample.bipartition);
    // Side A has 2 vertices of degree 5 (weight 10 total); top-4 of side B
    // weigh 8; the whole of A wins.
    CHECK(sol.vertices == std::vector<int>{0, 1});
    CHECK(sol.value == 10.0);
}

TEST_CASE("greedy rejects an invalid bipartition") {
    auto inst = make_mivc_instance(star3(), 1);
    Bipartition bad{{0, 1}, {2}};  // vertex 3 missing
    CHECK_THROWS_AS(greedy_bipartite(inst, bad), std::invalid_argument);
}

TEST_CASE("color-class approximation on tiny graphs") {
    auto tri = make_mivc_instance(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 1);
    Solution s = color_class_approx(tri, greedy_coloring(tri.graph, {0, 1, 2}));
    CHECK(s.value == 2.0);

    auto p3 = make_mivc_instance(build_graph(3, {{0, 1}, {1, 2}}), 1);
    Solution s2 = color_class_approx(p3, greedy_coloring(p3.graph, {0, 1, 2}));
    CHECK(s2.value == 2.0);
}

TEST_CASE("color-class approximation meets the 1/p guarantee") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto base = gen_random_mivc(12, 0.4, seed);
        auto best = oracle::best_for_all_budgets(base.graph, base.weights);
        std::vector<int> natural(base.graph.n);
        for (int v = 0; v < base.graph.n; ++v) natural[v] = v;
        Coloring col = greedy_coloring(base.graph, natural);
        for (int k = 1; k <= base.graph.n; k += 3) {
            auto inst = with_budget(base, k);
            Solution sol = color_class_approx(inst, col);
            CHECK(col.num_colors * sol.value >= best[k] - 1e-9);
            CHECK(check_solution(inst, sol).empty());
        }
    }
}

TEST_CASE("color-class approximation with a bipartition-as-coloring matches greedy") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto sample = gen_random_bipartite(1 + seed % 7, 1 + (3 * seed) % 7, 0.5, seed);
        auto inst = with_budget(sample.instance, 1 + static_cast<int>(seed % 5));
        Coloring as_coloring;
        as_coloring.classes = {sample.bipartition.side_a, sample.bipartition.side_b};
        as_coloring.num_colors = 2;
        Solution a = greedy_bipartite(inst, sample.bipartition);
        Solution b = color_class_approx(inst, as_coloring);
        CHECK(a.value == b.value);
        CHECK(a.vertices == b.vertices);
    }
}

TEST_CASE("bipartite MWIS via min cut") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    auto bip = detected(p3);
    CHECK(mwis_bipartite_exact(p3, {1, 5, 1}, bip) == std::vector<int>{1});
    CHECK(mwis_bipartite_exact(p3, {2, 1, 2}, bip) == std::vector<int>{0, 2});

    Graph edge = build_graph(2, {{0, 1}});
    CHECK(mwis_bipartite_exact(edge, {2, 3}, detected(edge)) == std::vector<int>{1});

    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto sol = mwis_bipartite_exact(c4, {1, 1, 1, 1}, detected(c4));
    CHECK(sol.size() == 2);
    CHECK(is_independent(c4, sol));
}

TEST_CASE("bipartite MWIS matches brute force") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto sample = gen_random_bipartite(1 + seed % 6, 1 + (seed / 3) % 6, 0.45, seed,
                                           WeightMode::Uniform);
        const auto& g = sample.instance.graph;
        const auto& w = sample.instance.weights;
        auto sol = mwis_bipartite_exact(g, w, sample.bipartition);
        CHECK(is_independent(g, sol));
        double value = 0;
        for (int v : sol) value += w[v];
        CHECK(value == doctest::Approx(oracle::best_mwis(g, w)).epsilon(1e-9));
    }
}

TEST_CASE("truncation keeps the k heaviest") {
    std::vector<double> w{5, 3, 1};
    Solution t = truncate_to_budget({0, 1, 2}, w, 2);
    CHECK(t.vertices == std::vector<int>{0, 1});
    CHECK(t.value == 8.0);

    Solution all = truncate_to_budget({0, 1, 2}, w, 7);
    CHECK(all.vertices == std::vector<int>{0, 1, 2});  // k >= |S| leaves S alone

    // Composition with the exact bipartite MWIS.
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    auto mwis = mwis_bipartite_exact(p3, {1, 5, 1}, detected(p3));
    CHECK(truncate_to_budget(mwis, {1, 5, 1}, 1).value == 5.0);
}

TEST_CASE("truncation retains a k/|S| weight fraction") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        int size = 1 + static_cast<int>(rng.next_below(10));
        std::vector<double> w(size);
        std::vector<int> ids(size);
        for (int i = 0; i < size; ++i) {
            w[i] = 0.1 + 5 * rng.next_double();
            ids[i] = i;
        }
        double total = 0;
        for (double x : w) total += x;
        for (int k = 0; k <= size + 1; ++k) {
            Solution t = truncate_to_budget(ids, w, k);
            CHECK(static_cast<int>(t.vertices.size()) == std::min(k, size));
            CHECK(t.value >= static_cast<double>(std::min(k, size)) / size * total - 1e-9);
        }
    }
}
