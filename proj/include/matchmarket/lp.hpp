#pragma once

#include <optional>
#include <vector>

#include "matchmarket/rational.hpp"

namespace matchmarket {

enum class Relation { le, eq, ge };

/// max objective.x  s.t. rows, lb <= x (<= ub), over exact rationals.
/// Missing objective means pure feasibility. Lower bounds default to 0.
struct LinearProgram {
    struct Row {
        std::vector<Rat> coeffs;
        Relation rel = Relation::le;
        Rat rhs = 0;
    };

    int num_vars = 0;
    std::optional<std::vector<Rat>> objective;
    std::vector<Row> rows;
    std::vector<std::optional<Rat>> lower_bounds; // empty = all zero
    std::vector<std::optional<Rat>> upper_bounds; // empty = none

    LinearProgram() = default;
    explicit LinearProgram(int vars) : num_vars(vars) {}

    void add_row(std::vector<Rat> coeffs, Relation rel, Rat rhs) {
        if (static_cast<int>(coeffs.size()) != num_vars)
            fail(Errc::dimension_mismatch, "LP row width");
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
    void maximize(std::vector<Rat> c) {
        if (static_cast<int>(c.size()) != num_vars) fail(Errc::dimension_mismatch, "LP objective width");
        objective = std::move(c);
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

/// When optimal: a vertex primal solution, exact objective value, and the
/// dual value of every input row (signed for the row as written: <= rows
/// get nonnegative duals, >= rows nonpositive, = rows free).
struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rat value = 0;
    std::vector<Rat> solution;
    std::vector<Rat> duals;
};

namespace detail {

/// Dense rational simplex tableau, two phases, Bland's rule throughout.
class SimplexTableau {
public:
    // columns: structural vars, then slack/surplus vars, then artificials
    std::vector<std::vector<Rat>> a; // row-major coefficient matrix
    std::vector<Rat> b;              // rhs, kept nonnegative
    std::vector<int> basis;          // basic column per row
    int cols = 0;

    int add_column() {
        ++cols;
        for (auto& row : a) row.emplace_back(0);
        return cols - 1;
    }

    void pivot(int prow, int pcol) {
        const Rat inv = 1 / a[prow][pcol];
        for (int j = 0; j < cols; ++j) a[prow][j] *= inv;
        b[prow] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == prow) continue;
            if (a[i][pcol] == 0) continue;
            const Rat f = a[i][pcol];
            for (int j = 0; j < cols; ++j)
                if (a[prow][j] != 0) a[i][j] -= f * a[prow][j];
            a[i][pcol] = 0; // exact, but keep it tidy against drift in the loop above
            b[i] -= f * b[prow];
        }
        basis[prow] = pcol;
    }

    /// Bland entering/leaving loop for max c.x with the given reduced-cost
    /// row maintained externally. Returns false when unbounded.
    template <typename Eligible>
    bool optimize(std::vector<Rat>& zrow, Rat& zval, Eligible eligible) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j) {
                if (!eligible(j)) continue;
                if (zrow[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio;
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i][enter] <= 0) continue;
                Rat ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            // update reduced costs with the pivot row before transforming it
            const Rat zf = zrow[enter] / a[leave][enter];
            for (int j = 0; j < cols; ++j)
                if (a[leave][j] != 0) zrow[j] -= zf * a[leave][j];
            zrow[enter] = 0;
            zval -= zf * b[leave];
            pivot(leave, enter);
        }
    }
};

} // namespace detail

/// Exact two-phase simplex. Deterministic for fixed input; terminates by
/// Bland's rule. Instances in this library are tiny, so the tableau is dense.
inline LpOutcome lp_solve(const LinearProgram& program) {
    const int n = program.num_vars;
    if (n < 0) fail(Errc::dimension_mismatch, "negative variable count");

    // Shift lower bounds to zero and fold upper bounds in as extra rows.
    std::vector<Rat> shift(n, Rat(0));
    if (!program.lower_bounds.empty()) {
        if (static_cast<int>(program.lower_bounds.size()) != n)
            fail(Errc::dimension_mismatch, "lower bound count");
        for (int j = 0; j < n; ++j)
            if (program.lower_bounds[j]) shift[j] = *program.lower_bounds[j];
    }

    struct NormRow {
        std::vector<Rat> coeffs;
        Relation rel;
        Rat rhs;
    };
    std::vector<NormRow> norm;
    for (const auto& row : program.rows) {
        Rat rhs = row.rhs;
        for (int j = 0; j < n; ++j) rhs -= row.coeffs[j] * shift[j];
        norm.push_back({row.coeffs, row.rel, rhs});
    }
    if (!program.upper_bounds.empty()) {
        if (static_cast<int>(program.upper_bounds.size()) != n)
            fail(Errc::dimension_mismatch, "upper bound count");
        for (int j = 0; j < n; ++j) {
            if (!program.upper_bounds[j]) continue;
            std::vector<Rat> coeffs(n, Rat(0));
            coeffs[j] = 1;
            norm.push_back({std::move(coeffs), Relation::le, *program.upper_bounds[j] - shift[j]});
        }
    }
    const int user_rows = static_cast<int>(program.rows.size());
    const int rows = static_cast<int>(norm.size());

    detail::SimplexTableau t;
    t.a.assign(rows, std::vector<Rat>());
    t.b.assign(rows, Rat(0));
    t.basis.assign(rows, -1);
    t.cols = 0;
    for (int i = 0; i < rows; ++i) t.a[i].assign(n, Rat(0));
    t.cols = n;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = norm[i].coeffs[j];
        t.b[i] = norm[i].rhs;
    }

    // slack/surplus columns, then sign-normalize rhs, then artificials
    std::vector<int> flip(rows, 1);
    std::vector<int> id_col(rows, -1);   // column that reads off this row's dual
    std::vector<int> slack_col(rows, -1);
    std::vector<bool> artificial_col;
    artificial_col.assign(t.cols, false);

    for (int i = 0; i < rows; ++i) {
        if (norm[i].rel != Relation::eq) {
            int col = t.add_column();
            artificial_col.push_back(false);
            t.a[i][col] = (norm[i].rel == Relation::le) ? Rat(1) : Rat(-1);
            slack_col[i] = col;
        }
    }
    for (int i = 0; i < rows; ++i) {
        if (t.b[i] < 0) {
            flip[i] = -1;
            for (int j = 0; j < t.cols; ++j) t.a[i][j] = -t.a[i][j];
            t.b[i] = -t.b[i];
        }
    }
    for (int i = 0; i < rows; ++i) {
        if (slack_col[i] >= 0 && t.a[i][slack_col[i]] == 1) {
            t.basis[i] = slack_col[i];
            id_col[i] = slack_col[i];
        } else {
            int col = t.add_column();
            artificial_col.push_back(true);
            t.a[i][col] = 1;
            t.basis[i] = col;
            id_col[i] = col;
        }
    }

    // Phase I: maximize -(sum of artificials).
    bool any_artificial = false;
    for (int i = 0; i < rows; ++i) any_artificial = any_artificial || artificial_col[t.basis[i]];
    std::vector<bool> row_redundant(rows, false);
    if (any_artificial) {
        std::vector<Rat> zrow(t.cols, Rat(0));
        Rat zval = 0;
        // z_j - c_j with c = -1 on artificials, and basis cost folded in
        for (int j = 0; j < t.cols; ++j)
            if (artificial_col[j]) zrow[j] = 1;
        for (int i = 0; i < rows; ++i) {
            if (!artificial_col[t.basis[i]]) continue;
            for (int j = 0; j < t.cols; ++j) zrow[j] -= t.a[i][j];
            zval -= t.b[i];
        }
        bool ok = t.optimize(zrow, zval, [](int) { return true; });
        (void)ok; // phase I is bounded above by 0
        if (zval != 0) return {LpStatus::infeasible, Rat(0), {}, {}};
        // drive surviving artificials out of the basis (degenerate pivots)
        for (int i = 0; i < rows; ++i) {
            if (!artificial_col[t.basis[i]]) continue;
            int piv = -1;
            for (int j = 0; j < t.cols; ++j)
                if (!artificial_col[j] && t.a[i][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv >= 0)
                t.pivot(i, piv);
            else
                row_redundant[i] = true; // all-zero row; artificial stays basic at 0
        }
    }

    // Phase II.
    std::vector<Rat> cost(t.cols, Rat(0));
    Rat const_shift = 0;
    if (program.objective) {
        for (int j = 0; j < n; ++j) {
            cost[j] = (*program.objective)[j];
            const_shift += cost[j] * shift[j];
        }
    }
    std::vector<Rat> zrow(t.cols, Rat(0));
    Rat zval = 0;
    for (int j = 0; j < t.cols; ++j) zrow[j] = -cost[j];
    for (int i = 0; i < rows; ++i) {
        const Rat cb = cost[t.basis[i]];
        if (cb == 0) continue;
        for (int j = 0; j < t.cols; ++j)
            if (t.a[i][j] != 0) zrow[j] += cb * t.a[i][j];
        zval += cb * t.b[i];
        zrow[t.basis[i]] = 0;
    }
    bool bounded = t.optimize(zrow, zval, [&](int j) { return !artificial_col[j]; });
    if (!bounded) return {LpStatus::unbounded, Rat(0), {}, {}};

    LpOutcome out;
    out.status = LpStatus::optimal;
    out.value = zval + const_shift;
    out.solution.assign(n, Rat(0));
    for (int i = 0; i < rows; ++i)
        if (t.basis[i] < n) out.solution[t.basis[i]] = t.b[i];
    for (int j = 0; j < n; ++j) out.solution[j] += shift[j];
    out.duals.assign(user_rows, Rat(0));
    for (int i = 0; i < user_rows; ++i) {
        if (row_redundant[i]) continue;
        // reduced cost under this row's initial identity column equals the
        // dual of the sign-normalized row
        out.duals[i] = Rat(flip[i]) * zrow[id_col[i]];
    }
    return out;
}

} // namespace matchmarket
