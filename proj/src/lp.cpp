#include "mwbis/lp.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "mwbis/solvers.hpp"

namespace mwbis {

namespace {

class BronKerbosch {
  public:
    BronKerbosch(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

    std::vector<std::vector<int>> run() {
        std::vector<int> r, p(g_.n), x;
        for (int v = 0; v < g_.n; ++v) p[v] = v;
        expand(r, p, x);
        return std::move(out_);
    }

  private:
    std::vector<int> intersect_neighbors(const std::vector<int>& set, int v) const {
        std::vector<int> res;
        const auto& nb = g_.adj[v];
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(),
                              std::back_inserter(res));
        return res;
    }

    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            if (out_.size() >= cap_) throw CliqueCapExceeded(cap_);
            out_.push_back(r);
            return;
        }
        // Pivot on the vertex of P u X covering most of P.
        int pivot = -1;
        std::size_t best_cover = 0;
        for (const auto* side : {&p, &x})
            for (int u : *side) {
                std::size_t cover = intersect_neighbors(p, u).size();
                if (pivot == -1 || cover > best_cover) {
                    pivot = u;
                    best_cover = cover;
                }
            }
        std::vector<int> candidates;
        const auto& pn = g_.adj[pivot];
        std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(),
                            std::back_inserter(candidates));
        for (int v : candidates) {
            r.push_back(v);
            expand(r, intersect_neighbors(p, v), intersect_neighbors(x, v));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            auto pos = std::lower_bound(x.begin(), x.end(), v);
            x.insert(pos, v);
        }
    }

    const Graph& g_;
    std::size_t cap_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g, std::size_t cap) {
    auto bip = find_bipartition(g);
    if (bip.bipartite()) {
        // Triangle-free: maximal cliques are the edges, plus isolated
        // vertices as singletons.
        std::vector<std::vector<int>> cliques;
        for (const auto& [u, v] : g.edge_list()) cliques.push_back({u, v});
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == 0) cliques.push_back({v});
        if (cliques.size() > cap) throw CliqueCapExceeded(cap);
        return cliques;
    }
    return BronKerbosch(g, cap).run();
}

LpModel build_lp(const WeightedInstance& inst, std::size_t clique_cap) {
    LpModel model;
    model.num_vars = inst.graph.n;
    model.objective = inst.weights;
    model.integer_data = inst.integer_weights;
    LpModel::Row budget;
    budget.rhs = inst.k;
    for (int v = 0; v < inst.graph.n; ++v) budget.coeffs.emplace_back(v, 1.0);
    model.rows.push_back(std::move(budget));
    for (const auto& clique : enumerate_maximal_cliques(inst.graph, clique_cap)) {
        LpModel::Row row;
        row.rhs = 1.0;
        for (int v : clique) row.coeffs.emplace_back(v, 1.0);
        model.rows.push_back(std::move(row));
    }
    return model;
}

namespace {

constexpr double kTol = 1e-9;

class SimplexTableau {
  public:
    explicit SimplexTableau(const LpModel& model)
        : rows_(static_cast<int>(model.rows.size())),
          cols_(model.num_vars + static_cast<int>(model.rows.size())),
          structural_(model.num_vars) {
        tab_.assign(rows_ + 1, std::vector<double>(cols_ + 1, 0.0));
        basis_.resize(rows_);
        for (int r = 0; r < rows_; ++r) {
            for (const auto& [v, c] : model.rows[r].coeffs) tab_[r][v] = c;
            tab_[r][structural_ + r] = 1.0;
            tab_[r][cols_] = model.rows[r].rhs;
            basis_[r] = structural_ + r;
        }
        for (int j = 0; j < structural_; ++j) tab_[rows_][j] = -model.objective[j];
    }

    LpSolution solve(const LpModel& model) {
        LpSolution sol;
        const long long stall_switch = 5LL * (rows_ + cols_);
        const long long iteration_cap = 50000 + 200LL * (rows_ + cols_);
        bool bland = false;
        long long stalled = 0;
        double last_obj = objective_value();
        for (;; ++sol.iterations) {
            if (sol.iterations > iteration_cap)
                throw std::runtime_error(diagnostics("iteration cap exceeded", sol.iterations));
            int enter = entering_column(bland);
            if (enter < 0) break;  // optimal
            int leave = leaving_row(enter);
            if (leave < 0) {
                sol.status = LpStatus::Unbounded;
                sol.objective = std::numeric_limits<double>::infinity();
                return sol;
            }
            pivot(leave, enter);
            double obj = objective_value();
            if (obj > last_obj + kTol) {
                last_obj = obj;
                stalled = 0;
            } else if (!bland && ++stalled > stall_switch) {
                bland = true;  // degeneracy: guarantee termination
            }
        }
        sol.status = LpStatus::Optimal;
        sol.values.assign(structural_, 0.0);
        for (int r = 0; r < rows_; ++r)
            if (basis_[r] < structural_) sol.values[basis_[r]] = tab_[r][cols_];
        sol.objective = 0.0;
        for (int j = 0; j < structural_; ++j) sol.objective += model.objective[j] * sol.values[j];
        return sol;
    }

    const std::vector<int>& basis() const { return basis_; }

  private:
    double objective_value() const { return tab_[rows_][cols_]; }

    int entering_column(bool bland) const {
        int pick = -1;
        for (int j = 0; j < cols_; ++j) {
            if (tab_[rows_][j] < -kTol) {
                if (bland) return j;
                if (pick == -1 || tab_[rows_][j] < tab_[rows_][pick]) pick = j;
            }
        }
        return pick;
    }

    int leaving_row(int enter) const {
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int r = 0; r < rows_; ++r)
            if (tab_[r][enter] > kTol)
                best_ratio = std::min(best_ratio, tab_[r][cols_] / tab_[r][enter]);
        if (!std::isfinite(best_ratio)) return -1;
        // Among near-tied rows take the lowest basic variable (Bland-safe).
        int pick = -1;
        for (int r = 0; r < rows_; ++r) {
            if (tab_[r][enter] <= kTol) continue;
            double ratio = tab_[r][cols_] / tab_[r][enter];
            if (ratio <= best_ratio + kTol && (pick == -1 || basis_[r] < basis_[pick])) pick = r;
        }
        return pick;
    }

    void pivot(int r, int j) {
        double p = tab_[r][j];
        for (double& x : tab_[r]) x /= p;
        for (int i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            double f = tab_[i][j];
            if (f == 0.0) continue;
            for (int c = 0; c <= cols_; ++c) tab_[i][c] -= f * tab_[r][c];
        }
        basis_[r] = j;
    }

    std::string diagnostics(const char* what, long long iterations) const {
        std::ostringstream os;
        os << "solve_lp: " << what << " (" << iterations << " iterations, " << rows_
           << " rows, " << cols_ << " columns, objective " << objective_value() << ")";
        return os.str();
    }

    int rows_, cols_, structural_;
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;
};

// Re-evaluates the final basis in exact rational arithmetic: solves
// B y = b for the basic values and prices the objective, certifying the
// reported optimum for integer-data models.
bool certify_basis(const LpModel& model, const std::vector<int>& basis, LpSolution& sol) {
    const int r = static_cast<int>(model.rows.size());
    std::vector<std::vector<mpq_class>> mat(r, std::vector<mpq_class>(r + 1, 0));
    for (int row = 0; row < r; ++row) {
        for (int col = 0; col < r; ++col) {
            int var = basis[col];
            if (var < model.num_vars) {
                for (const auto& [v, c] : model.rows[row].coeffs)
                    if (v == var) mat[row][col] = mpq_class(static_cast<long>(std::llround(c)));
            } else if (var - model.num_vars == row) {
                mat[row][col] = 1;
            }
        }
        mat[row][r] = mpq_class(static_cast<long>(std::llround(model.rows[row].rhs)));
    }
    // Gaussian elimination with first-nonzero pivoting.
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row)
            if (mat[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;  // basis matrix singular
        std::swap(mat[col], mat[pivot]);
        mpq_class inv = mat[col][col];
        for (int c = col; c <= r; ++c) mat[col][c] /= inv;
        for (int row = 0; row < r; ++row) {
            if (row == col || mat[row][col] == 0) continue;
            mpq_class f = mat[row][col];
            for (int c = col; c <= r; ++c) mat[row][c] -= f * mat[col][c];
        }
    }
    mpq_class objective = 0;
    for (int col = 0; col < r; ++col) {
        int var = basis[col];
        if (var < model.num_vars)
            objective += mpq_class(static_cast<long>(std::llround(model.objective[var]))) *
                         mat[col][r];
    }
    objective.canonicalize();
    sol.objective_exact = objective.get_str();
    sol.certified = true;
    return true;
}

}  // namespace

LpSolution solve_lp(const LpModel& model) {
    SimplexTableau tableau(model);
    LpSolution sol = tableau.solve(model);
    if (sol.status == LpStatus::Optimal && model.integer_data)
        certify_basis(model, tableau.basis(), sol);
    return sol;
}

double integrality_gap(const WeightedInstance& inst) {
    Solution ip = exact_mwbis(inst);
    if (!ip.proven_optimal) throw std::runtime_error("integrality_gap: exact solve incomplete");
    LpSolution lp = solve_lp(build_lp(inst));
    if (lp.status != LpStatus::Optimal)
        throw std::runtime_error("integrality_gap: LP not solved to optimality");
    if (lp.objective <= 0.0) return 1.0;  // k = 0 or all-zero weights
    return ip.value / lp.objective;
}

namespace {

void write_number(std::ostream& out, double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        out << static_cast<long long>(v);
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    }
}

}  // namespace

void write_lp_format(const LpModel& model, std::ostream& out) {
    out << "\\ MWBIS LP relaxation: budget row + one row per maximal clique\n";
    out << "Maximize\n obj:";
    for (int j = 0; j < model.num_vars; ++j) {
        out << (j ? " + " : " ");
        write_number(out, model.objective[j]);
        out << " x" << j + 1;
    }
    out << "\nSubject To\n";
    for (std::size_t r = 0; r < model.rows.size(); ++r) {
        out << " " << (r == 0 ? std::string("budget") : "clique" + std::to_string(r)) << ":";
        bool first = true;
        for (const auto& [v, c] : model.rows[r].coeffs) {
            out << (first ? " " : " + ");
            if (c != 1.0) {
                write_number(out, c);
                out << " ";
            }
            out << "x" << v + 1;
            first = false;
        }
        out << " <= ";
        write_number(out, model.rows[r].rhs);
        out << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < model.num_vars; ++j) out << " x" << j + 1 << " >= 0\n";
    out << "End\n";
}

}  // namespace mwbis
