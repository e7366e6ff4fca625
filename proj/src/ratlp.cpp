#include "emvkit/ratlp.hpp"

#include <algorithm>

#include "emvkit/error.hpp"

namespace emvkit::ratlp {

int LinSystem::add_variable(std::string name, bool boxed01) {
    vars_.push_back({std::move(name), boxed01});
    for (auto& row : rows_) row.coeffs.emplace_back(0);
    return static_cast<int>(vars_.size()) - 1;
}

void LinSystem::add_equality(const std::vector<std::pair<int, Rat>>& terms, Rat rhs) {
    Row row;
    row.coeffs.assign(vars_.size(), Rat(0));
    for (const auto& [v, c] : terms) {
        if (v < 0 || v >= num_vars()) throw Error("BadInput", "equality references undeclared variable");
        row.coeffs[v] += c;
    }
    row.rhs = std::move(rhs);
    rows_.push_back(std::move(row));
}

namespace {

// Standard-form tableau: min c.x s.t. Ax = b, x >= 0, solved with Bland's
// rule. Columns: structural variables first, then one artificial per row.
struct Std {
    // column composition of an original variable
    struct VarCols {
        int pos = -1;  // x+ (or the single column for a boxed var)
        int neg = -1;  // x- for free vars
    };
    std::vector<VarCols> var_cols;
    std::vector<int> bound_row;          // per original var: index of its v+s=1 row, or -1
    std::vector<int> slack_col;          // per original var: slack column, or -1
    int n_struct = 0;                    // structural columns
    std::vector<std::vector<Rat>> a;     // row coefficients over structural columns
    std::vector<Rat> b;                  // rhs (made nonnegative)
    std::vector<int> row_sign;           // +1 kept, -1 negated vs. source row
    int n_user_rows = 0;                 // rows mirroring LinSystem equalities
};

Std standardize(const LinSystem& sys) {
    Std s;
    const int nv = sys.num_vars();
    s.var_cols.resize(nv);
    s.bound_row.assign(nv, -1);
    s.slack_col.assign(nv, -1);
    int col = 0;
    for (int v = 0; v < nv; ++v) {
        s.var_cols[v].pos = col++;
        if (!sys.boxed(v)) s.var_cols[v].neg = col++;
    }
    for (int v = 0; v < nv; ++v)
        if (sys.boxed(v)) s.slack_col[v] = col++;
    s.n_struct = col;

    const int nr = sys.num_rows();
    for (int r = 0; r < nr; ++r) {
        std::vector<Rat> row(s.n_struct, Rat(0));
        for (int v = 0; v < nv; ++v) {
            const Rat& c = sys.row_coeffs(r)[v];
            if (c == 0) continue;
            row[s.var_cols[v].pos] = c;
            if (s.var_cols[v].neg >= 0) row[s.var_cols[v].neg] = -c;
        }
        Rat rhs = sys.row_rhs(r);
        int sign = 1;
        if (rhs < 0) {
            for (auto& x : row) x = -x;
            rhs = -rhs;
            sign = -1;
        }
        s.a.push_back(std::move(row));
        s.b.push_back(std::move(rhs));
        s.row_sign.push_back(sign);
    }
    s.n_user_rows = nr;
    for (int v = 0; v < nv; ++v) {
        if (!sys.boxed(v)) continue;
        std::vector<Rat> row(s.n_struct, Rat(0));
        row[s.var_cols[v].pos] = 1;
        row[s.slack_col[v]] = 1;
        s.bound_row[v] = static_cast<int>(s.a.size());
        s.a.push_back(std::move(row));
        s.b.emplace_back(1);
        s.row_sign.push_back(1);
    }
    return s;
}

struct Tableau {
    int m, n;                       // rows, total columns (struct + artificial)
    int n_struct;
    std::vector<std::vector<Rat>> t;  // m rows of n coeffs
    std::vector<Rat> rhs;
    std::vector<Rat> obj;           // reduced costs, length n
    Rat obj_value;                  // current objective value
    std::vector<int> basis;         // per row: basic column
    std::vector<std::pair<int, int>> pivots;

    void pivot(int pr, int pc) {
        pivots.emplace_back(pr, pc);
        const Rat inv = Rat(1) / t[pr][pc];
        for (auto& x : t[pr]) x *= inv;
        rhs[pr] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rat f = t[i][pc];
            for (int j = 0; j < n; ++j) t[i][j] -= f * t[pr][j];
            rhs[i] -= f * rhs[pr];
        }
        if (obj[pc] != 0) {
            const Rat f = obj[pc];
            for (int j = 0; j < n; ++j) obj[j] -= f * t[pr][j];
            obj_value -= f * rhs[pr];
        }
        basis[pr] = pc;
    }

    // Bland: entering column = least index with negative reduced cost among
    // allowed columns; leaving row = min ratio, ties by least basis column.
    // Returns false when unbounded.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < n; ++j) {
                if (allowed[j] && obj[j] < 0) { pc = j; break; }
            }
            if (pc < 0) return true;  // optimal
            int pr = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (t[i][pc] <= 0) continue;
                Rat ratio = rhs[i] / t[i][pc];
                if (pr < 0 || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr < 0) return false;  // unbounded
            pivot(pr, pc);
        }
    }
};

Tableau phase1(const Std& s) {
    Tableau tb;
    tb.m = static_cast<int>(s.a.size());
    tb.n_struct = s.n_struct;
    tb.n = s.n_struct + tb.m;
    tb.t.assign(tb.m, std::vector<Rat>(tb.n, Rat(0)));
    tb.rhs = s.b;
    tb.basis.resize(tb.m);
    for (int i = 0; i < tb.m; ++i) {
        for (int j = 0; j < s.n_struct; ++j) tb.t[i][j] = s.a[i][j];
        tb.t[i][s.n_struct + i] = 1;
        tb.basis[i] = s.n_struct + i;
    }
    // phase-1 costs: 1 on artificials; reduced costs start as -sum of rows.
    // obj_value stores the negated objective so the pivot update is uniform.
    tb.obj.assign(tb.n, Rat(0));
    tb.obj_value = 0;
    for (int i = 0; i < tb.m; ++i) {
        for (int j = 0; j < s.n_struct; ++j) tb.obj[j] -= tb.t[i][j];
        tb.obj_value -= tb.rhs[i];
    }
    std::vector<bool> allowed(tb.n, true);
    tb.run(allowed);  // min of a sum of nonnegatives cannot be unbounded
    return tb;
}

Certificate extract_certificate(const LinSystem& sys, const Std& s, const Tableau& tb) {
    // Dual y_i = 1 - redcost(artificial_i), flipped back for negated rows.
    Certificate cert;
    cert.row_multipliers.assign(sys.num_rows(), Rat(0));
    cert.bound_multipliers.assign(sys.num_vars(), Rat(0));
    auto dual = [&](int row) { return (Rat(1) - tb.obj[tb.n_struct + row]) * s.row_sign[row]; };
    for (int r = 0; r < s.n_user_rows; ++r) cert.row_multipliers[r] = dual(r);
    for (int v = 0; v < sys.num_vars(); ++v)
        if (s.bound_row[v] >= 0) cert.bound_multipliers[v] = dual(s.bound_row[v]);
    return cert;
}

// Pivot zero-value artificials out of the basis where possible so phase 2
// never touches them; rows that stay artificial-basic are redundant.
void purge_artificials(Tableau& tb) {
    for (int i = 0; i < tb.m; ++i) {
        if (tb.basis[i] < tb.n_struct) continue;
        int pc = -1;
        for (int j = 0; j < tb.n_struct; ++j) {
            if (tb.t[i][j] != 0) { pc = j; break; }
        }
        if (pc >= 0) tb.pivot(i, pc);
    }
}

std::vector<Rat> read_assignment(const LinSystem& sys, const Std& s, const Tableau& tb) {
    std::vector<Rat> col_val(tb.n_struct, Rat(0));
    for (int i = 0; i < tb.m; ++i)
        if (tb.basis[i] < tb.n_struct) col_val[tb.basis[i]] = tb.rhs[i];
    std::vector<Rat> out(sys.num_vars());
    for (int v = 0; v < sys.num_vars(); ++v) {
        out[v] = col_val[s.var_cols[v].pos];
        if (s.var_cols[v].neg >= 0) out[v] -= col_val[s.var_cols[v].neg];
    }
    return out;
}

}  // namespace

FeasOutcome solve(const LinSystem& sys) {
    Std s = standardize(sys);
    Tableau tb = phase1(s);
    FeasOutcome out;
    out.pivots = tb.pivots;
    if (tb.obj_value != 0) {
        out.feasible = false;
        out.certificate = extract_certificate(sys, s, tb);
        return out;
    }
    purge_artificials(tb);
    out.feasible = true;
    out.assignment = read_assignment(sys, s, tb);
    out.pivots = tb.pivots;
    return out;
}

OptOutcome solve(const LinSystem& sys, const std::vector<Rat>& objective, bool maximize) {
    if (static_cast<int>(objective.size()) != sys.num_vars())
        throw Error("DimensionMismatch", "objective length does not match variable count");
    Std s = standardize(sys);
    Tableau tb = phase1(s);
    OptOutcome out;
    if (tb.obj_value != 0) {
        out.status = OptStatus::Infeasible;
        out.certificate = extract_certificate(sys, s, tb);
        out.pivots = tb.pivots;
        return out;
    }
    purge_artificials(tb);

    // phase 2: install the real costs (minimization internally)
    std::vector<Rat> cost(tb.n, Rat(0));
    for (int v = 0; v < sys.num_vars(); ++v) {
        Rat c = objective[v];
        if (maximize) c = -c;
        cost[s.var_cols[v].pos] = c;
        if (s.var_cols[v].neg >= 0) cost[s.var_cols[v].neg] = -c;
    }
    tb.obj = cost;
    tb.obj_value = 0;
    for (int i = 0; i < tb.m; ++i) {
        const int bc = tb.basis[i];
        if (cost[bc] == 0) continue;
        const Rat f = cost[bc];
        for (int j = 0; j < tb.n; ++j) tb.obj[j] -= f * tb.t[i][j];
        tb.obj_value -= f * tb.rhs[i];
    }
    std::vector<bool> allowed(tb.n, true);
    for (int j = tb.n_struct; j < tb.n; ++j) allowed[j] = false;
    const bool bounded = tb.run(allowed);
    out.pivots = tb.pivots;
    if (!bounded) {
        out.status = OptStatus::Unbounded;
        return out;
    }
    out.status = OptStatus::Optimal;
    out.assignment = read_assignment(sys, s, tb);
    out.value = 0;
    for (int v = 0; v < sys.num_vars(); ++v) out.value += objective[v] * out.assignment[v];
    return out;
}

bool check_certificate(const LinSystem& sys, const Certificate& cert) {
    const int nv = sys.num_vars();
    if (static_cast<int>(cert.row_multipliers.size()) != sys.num_rows()) return false;
    if (static_cast<int>(cert.bound_multipliers.size()) != nv) return false;
    std::vector<Rat> w(nv, Rat(0));
    Rat rhs(0);
    for (int r = 0; r < sys.num_rows(); ++r) {
        const Rat& y = cert.row_multipliers[r];
        if (y == 0) continue;
        for (int v = 0; v < nv; ++v) w[v] += y * sys.row_coeffs(r)[v];
        rhs += y * sys.row_rhs(r);
    }
    for (int v = 0; v < nv; ++v) {
        const Rat& u = cert.bound_multipliers[v];
        if (!sys.boxed(v)) {
            if (u != 0) return false;
            if (w[v] != 0) return false;  // free var: combination must cancel
            continue;
        }
        if (u > 0) return false;          // slack column condition
        if (w[v] + u > 0) return false;   // variable column condition
        rhs += u;
    }
    // With 0 <= v (boxed) the combination yields rhs <= 0; rhs > 0 is absurd.
    return rhs > 0;
}

bool satisfies(const LinSystem& sys, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != sys.num_vars()) return false;
    for (int v = 0; v < sys.num_vars(); ++v) {
        if (sys.boxed(v) && (point[v] < 0 || point[v] > 1)) return false;
    }
    for (int r = 0; r < sys.num_rows(); ++r) {
        Rat acc(0);
        for (int v = 0; v < sys.num_vars(); ++v) acc += sys.row_coeffs(r)[v] * point[v];
        if (acc != sys.row_rhs(r)) return false;
    }
    return true;
}

int matrix_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw Error("DimensionMismatch", "ragged matrix");
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        const Rat inv = Rat(1) / rows[row][col];
        for (auto& x : rows[row]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<std::vector<Rat>>& points) {
    if (points.size() < 2) return 0;
    const std::size_t dim = points[0].size();
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != dim) throw Error("DimensionMismatch", "points of mixed dimension");
        std::vector<Rat> d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

bool vertex_test(const std::vector<Rat>& point, const LinSystem& sys) {
    if (!satisfies(sys, point)) return false;
    std::vector<std::vector<Rat>> active;
    for (int r = 0; r < sys.num_rows(); ++r) active.push_back(sys.row_coeffs(r));
    for (int v = 0; v < sys.num_vars(); ++v) {
        if (!sys.boxed(v)) continue;
        if (point[v] == 0 || point[v] == 1) {
            std::vector<Rat> unit(sys.num_vars(), Rat(0));
            unit[v] = 1;
            active.push_back(std::move(unit));
        }
    }
    return matrix_rank(std::move(active)) == sys.num_vars();
}

}  // namespace emvkit::ratlp
