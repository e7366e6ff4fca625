#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emvkit/rational.hpp"

namespace emvkit::ratlp {

/// Linear system over exact rationals: equality rows plus optional
/// per-variable box bounds 0 <= v <= 1. Row order is insertion order and
/// pivoting is Bland's rule, so solves are deterministic.
class LinSystem {
public:
    int add_variable(std::string name, bool boxed01 = true);
    void add_equality(const std::vector<std::pair<int, Rat>>& terms, Rat rhs);

    int num_vars() const { return static_cast<int>(vars_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool boxed(int v) const { return vars_[v].boxed; }
    const std::string& var_name(int v) const { return vars_[v].name; }

    /// Dense coefficient row / rhs as given.
    const std::vector<Rat>& row_coeffs(int r) const { return rows_[r].coeffs; }
    const Rat& row_rhs(int r) const { return rows_[r].rhs; }

private:
    struct Variable {
        std::string name;
        bool boxed;
    };
    struct Row {
        std::vector<Rat> coeffs;  // dense over variables
        Rat rhs;
    };
    std::vector<Variable> vars_;
    std::vector<Row> rows_;

    friend struct Tableau;
};

/// Farkas-style infeasibility witness: multipliers for the equality rows
/// and for the implicit upper-bound rows (v <= 1) of boxed variables.
/// check_certificate verifies the derived contradiction exactly.
struct Certificate {
    std::vector<Rat> row_multipliers;    // one per equality row
    std::vector<Rat> bound_multipliers;  // one per variable (zero for free vars)
};

struct FeasOutcome {
    bool feasible = false;
    std::vector<Rat> assignment;  // per variable, when feasible
    Certificate certificate;      // when infeasible
    std::vector<std::pair<int, int>> pivots;  // (row, col) log, for determinism checks
};

enum class OptStatus { Optimal, Infeasible, Unbounded };

struct OptOutcome {
    OptStatus status = OptStatus::Infeasible;
    Rat value;
    std::vector<Rat> assignment;
    Certificate certificate;
    std::vector<std::pair<int, int>> pivots;
};

/// Exact feasibility via two-phase simplex, Bland's anti-cycling rule.
FeasOutcome solve(const LinSystem& sys);

/// Optimize a linear functional over the system. maximize=false minimizes.
OptOutcome solve(const LinSystem& sys, const std::vector<Rat>& objective, bool maximize);

/// Exact validation of an infeasibility certificate against its system.
bool check_certificate(const LinSystem& sys, const Certificate& cert);

/// True iff `point` satisfies the system exactly.
bool satisfies(const LinSystem& sys, const std::vector<Rat>& point);

/// Rank of the differences from the first point (exact elimination).
/// Empty or singleton input has affine rank 0. Throws on mixed dimensions.
int affine_rank(const std::vector<std::vector<Rat>>& points);

/// True iff the point is feasible and the active constraints (all equality
/// rows plus tight box bounds) have rank equal to the variable count.
bool vertex_test(const std::vector<Rat>& point, const LinSystem& sys);

/// Rank of a rational matrix (rows of equal length).
int matrix_rank(std::vector<std::vector<Rat>> rows);

}  // namespace emvkit::ratlp
