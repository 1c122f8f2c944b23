#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mwbis/instance.hpp"
#include "mwbis/rational.hpp"

namespace mwbis {

inline constexpr std::size_t kDefaultCliqueCap = 200000;

// Thrown when maximal-clique enumeration exceeds its cap.
struct CliqueCapExceeded : std::runtime_error {
    explicit CliqueCapExceeded(std::size_t cap)
        : std::runtime_error("maximal clique enumeration exceeded cap of " +
                             std::to_string(cap)) {}
};

// All maximal cliques, each exactly once, sorted vertex lists. Bipartite
// graphs short-circuit to edges plus isolated singletons; general graphs run
// pivoting Bron-Kerbosch. Intended for small/sparse graphs.
std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g,
                                                        std::size_t cap = kDefaultCliqueCap);

// The relaxation: maximize w.x subject to one all-ones budget row (<= k),
// one indicator row per maximal clique (<= 1), x >= 0. No explicit x <= 1
// cap; clique rows already impose it everywhere it matters.
struct LpModel {
    struct Row {
        std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
        double rhs = 0.0;                            // relation is always <=
    };
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<Row> rows;  // rows[0] is the budget row
    bool integer_data = false;
};

LpModel build_lp(const WeightedInstance& inst, std::size_t clique_cap = kDefaultCliqueCap);

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
    std::vector<double> values;
    double objective = 0.0;
    LpStatus status = LpStatus::Optimal;
    long long iterations = 0;
    // Exact rational re-evaluation of the final basis, integer-data models
    // only. objective_exact is canonical "num/den" (or "num").
    bool certified = false;
    std::string objective_exact;
};

// Dense-tableau simplex from the all-slack basis. Dantzig pivoting, falling
// back to Bland's rule after a stall of 5*(rows+cols) iterations. Throws
// std::runtime_error with tableau diagnostics if the iteration cap is hit.
LpSolution solve_lp(const LpModel& model);

// IP optimum / LP optimum, in (0,1]. Uses the exact solver for the IP side.
double integrality_gap(const WeightedInstance& inst);

// Text dump in CPLEX LP format (Maximize / Subject To / Bounds / End),
// variables x1..xn, 1-based to match the graph file convention.
void write_lp_format(const LpModel& model, std::ostream& out);

}  // namespace mwbis
