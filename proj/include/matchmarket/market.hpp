#pragma once

#include <string>
#include <vector>

#include "matchmarket/scalar.hpp"

namespace matchmarket {

/// A matching-market instance: n agents with additive values over m
/// divisible items, capacities summing exactly to n, one unit of
/// artificial money per agent. Immutable after validation.
struct Market {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Rat>> values; // n x m, v[i][j] >= 0
    std::vector<Rat> capacities;          // m, sum == n

    // filled by validate_market
    std::vector<int> top_item;     // lowest argmax_j v[i][j]
    std::vector<bool> unique_top;  // is that argmax a singleton

    const Rat& value(int i, int j) const { return values[i][j]; }

    Rat top_value(int i) const { return values[i][top_item[i]]; }

    bool all_unique_tops() const {
        for (bool u : unique_top)
            if (!u) return false;
        return true;
    }

    bool unit_capacities() const {
        for (const Rat& c : capacities)
            if (c != 1) return false;
        return true;
    }
};

/// Checks every instance invariant and computes the per-agent top-item
/// data the fixed-agents solver depends on. Idempotent.
inline Market validate_market(Market raw) {
    if (raw.n < 1 || raw.m < 1) fail(Errc::empty_market, "need n >= 1 and m >= 1");
    if (static_cast<int>(raw.values.size()) != raw.n)
        fail(Errc::dimension_mismatch, "values has wrong row count");
    if (static_cast<int>(raw.capacities.size()) != raw.m)
        fail(Errc::dimension_mismatch, "capacities has wrong length");

    Rat cap_total = 0;
    for (int j = 0; j < raw.m; ++j) {
        if (raw.capacities[j] < 0) fail(Errc::negative_value, "capacity of item " + std::to_string(j + 1));
        cap_total += raw.capacities[j];
    }
    if (cap_total != raw.n)
        fail(Errc::capacity_mismatch,
             "sum of capacities is " + format_rational(cap_total) + ", expected " + std::to_string(raw.n));

    raw.top_item.assign(raw.n, 0);
    raw.unique_top.assign(raw.n, true);
    for (int i = 0; i < raw.n; ++i) {
        if (static_cast<int>(raw.values[i].size()) != raw.m)
            fail(Errc::dimension_mismatch, "values row " + std::to_string(i + 1));
        int best = 0;
        int ties = 1;
        for (int j = 0; j < raw.m; ++j) {
            const Rat& v = raw.values[i][j];
            if (v < 0) fail(Errc::negative_value,
                            "value of agent " + std::to_string(i + 1) + " for item " + std::to_string(j + 1));
            if (j > 0) {
                if (v > raw.values[i][best]) {
                    best = j;
                    ties = 1;
                } else if (v == raw.values[i][best]) {
                    ++ties;
                }
            }
        }
        raw.top_item[i] = best;
        raw.unique_top[i] = (ties == 1);
    }
    return raw;
}

/// Item prices, one Scalar per item, all certifiably nonnegative.
struct PriceVector {
    std::vector<Scalar> p;

    PriceVector() = default;
    explicit PriceVector(std::vector<Scalar> prices) : p(std::move(prices)) {
        for (const Scalar& q : p)
            if (q.sign_or_throw() < 0) fail(Errc::negative_value, "negative price");
    }
    static PriceVector from_rats(const std::vector<Rat>& q) {
        std::vector<Scalar> s;
        s.reserve(q.size());
        for (const Rat& v : q) s.push_back(Scalar::exact(v));
        return PriceVector(std::move(s));
    }

    int size() const { return static_cast<int>(p.size()); }
    const Scalar& operator[](int j) const { return p[j]; }

    bool all_exact() const {
        for (const Scalar& q : p)
            if (!q.is_exact()) return false;
        return true;
    }
    /// Exact values; throws on certified entries.
    std::vector<Rat> exact_values() const {
        std::vector<Rat> out;
        out.reserve(p.size());
        for (const Scalar& q : p) out.push_back(q.value());
        return out;
    }
    std::vector<Rat> midpoints() const {
        std::vector<Rat> out;
        out.reserve(p.size());
        for (const Scalar& q : p) out.push_back(q.midpoint());
        return out;
    }
};

/// Fractional allocation matrix; rows are agents.
struct Allocation {
    std::vector<std::vector<Scalar>> x; // n rows of length m

    Allocation() = default;
    Allocation(int n, int m) : x(n, std::vector<Scalar>(m, Scalar::exact(Rat(0)))) {}

    static Allocation from_rats(const std::vector<std::vector<Rat>>& rows) {
        Allocation a;
        a.x.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<Scalar> r;
            r.reserve(row.size());
            for (const Rat& v : row) r.push_back(Scalar::exact(v));
            a.x.push_back(std::move(r));
        }
        return a;
    }

    int agents() const { return static_cast<int>(x.size()); }
    int items() const { return x.empty() ? 0 : static_cast<int>(x[0].size()); }

    bool all_exact() const {
        for (const auto& row : x)
            for (const Scalar& v : row)
                if (!v.is_exact()) return false;
        return true;
    }
    std::vector<std::vector<Rat>> exact_rows() const {
        std::vector<std::vector<Rat>> out(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            for (const Scalar& v : x[i]) out[i].push_back(v.value());
        return out;
    }
};

/// Sum_j v_ij x_ij for agent i; exact when the allocation row is exact.
inline Scalar allocation_value(const Market& market, const Allocation& allocation, int agent) {
    if (allocation.agents() != market.n || allocation.items() != market.m)
        fail(Errc::dimension_mismatch, "allocation shape does not match market");
    if (agent < 0 || agent >= market.n) fail(Errc::dimension_mismatch, "agent index");
    Scalar total = Scalar::exact(Rat(0));
    for (int j = 0; j < market.m; ++j)
        total += market.values[agent][j] * allocation.x[agent][j];
    return total;
}

} // namespace matchmarket
