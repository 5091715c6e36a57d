#pragma once

// Test-only LP reference: dense enumeration of candidate vertices for
// programs with at most 3 variables. Entirely independent of the simplex
// code path it is used to check.

#include <optional>
#include <vector>

#include "matchmarket/lp.hpp"

namespace mmtest {

using matchmarket::LinearProgram;
using matchmarket::Rat;
using matchmarket::Relation;

struct BruteResult {
    bool feasible = false;
    Rat value = 0;
    std::vector<Rat> point;
};

namespace detail {

// Solve a k x k rational system by Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
    const int k = static_cast<int>(b.size());
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(k);
    for (int i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace detail

// Assumes a bounded feasible region (callers add box constraints), so a
// nonempty region has an optimal vertex among the enumerated candidates.
inline BruteResult brute_force_lp(const LinearProgram& lp) {
    const int k = lp.num_vars;
    // halfspace list: every row plus x_j >= 0
    struct H {
        std::vector<Rat> a;
        Relation rel;
        Rat b;
    };
    std::vector<H> hs;
    for (const auto& row : lp.rows) hs.push_back({row.coeffs, row.rel, row.rhs});
    for (int j = 0; j < k; ++j) {
        std::vector<Rat> a(k, Rat(0));
        a[j] = 1;
        hs.push_back({a, Relation::ge, Rat(0)});
        if (!lp.upper_bounds.empty() && lp.upper_bounds[j])
            hs.push_back({a, Relation::le, *lp.upper_bounds[j]});
    }
    const int h = static_cast<int>(hs.size());

    auto satisfied = [&](const std::vector<Rat>& x) {
        for (const auto& c : hs) {
            Rat lhs = 0;
            for (int j = 0; j < k; ++j) lhs += c.a[j] * x[j];
            if (c.rel == Relation::le && lhs > c.b) return false;
            if (c.rel == Relation::ge && lhs < c.b) return false;
            if (c.rel == Relation::eq && lhs != c.b) return false;
        }
        return true;
    };

    BruteResult best;
    auto consider = [&](const std::vector<Rat>& x) {
        if (!satisfied(x)) return;
        Rat v = 0;
        if (lp.objective)
            for (int j = 0; j < k; ++j) v += (*lp.objective)[j] * x[j];
        if (!best.feasible || v > best.value) {
            best.feasible = true;
            best.value = v;
            best.point = x;
        }
    };

    std::vector<int> pick(k);
    auto recurse = [&](auto&& self, int depth, int from) -> void {
        if (depth == k) {
            std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
            std::vector<Rat> b(k);
            for (int t = 0; t < k; ++t) {
                a[t] = hs[pick[t]].a;
                b[t] = hs[pick[t]].b;
            }
            if (auto x = detail::solve_square(a, b)) consider(*x);
            return;
        }
        for (int i = from; i < h; ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    if (k == 0) {
        std::vector<Rat> empty;
        consider(empty);
    } else {
        recurse(recurse, 0, 0);
    }
    return best;
}

} // namespace mmtest
