#pragma once

#include <optional>
#include <string>
#include <utility>

#include "matchmarket/rational.hpp"

namespace matchmarket {

/// Default target width for certified computations: 2^-64.
inline const Rat& default_epsilon() {
    static const Rat eps = pow2(-64);
    return eps;
}

/// An exact rational or a certified interval with rational endpoints.
/// All arithmetic is closed: exact op exact stays exact, anything touching
/// an interval yields an interval that contains the true result.
class Scalar {
public:
    Scalar() : lo_(0), hi_(0), exact_(true) {}

    static Scalar exact(Rat v) {
        Scalar s;
        s.lo_ = std::move(v);
        s.hi_ = s.lo_;
        s.exact_ = true;
        return s;
    }

    static Scalar interval(Rat lo, Rat hi) {
        if (lo > hi) fail(Errc::internal_error, "interval endpoints out of order");
        Scalar s;
        s.exact_ = (lo == hi);
        s.lo_ = std::move(lo);
        s.hi_ = std::move(hi);
        return s;
    }

    bool is_exact() const { return exact_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }

    /// Exact value; misuse on a non-degenerate interval.
    const Rat& value() const {
        if (!exact_) fail(Errc::indeterminate_sign, "value() on a non-exact scalar");
        return lo_;
    }

    bool contains(const Rat& q) const { return lo_ <= q && q <= hi_; }

    /// Sign if certifiable, nullopt when the interval straddles zero.
    std::optional<int> sign() const {
        if (exact_) return sgn(lo_);
        if (lo_ > 0) return 1;
        if (hi_ < 0) return -1;
        if (lo_ == 0 && hi_ == 0) return 0;
        return std::nullopt;
    }

    int sign_or_throw() const {
        auto s = sign();
        if (!s) fail(Errc::indeterminate_sign, "sign query on interval containing 0");
        return *s;
    }

    Scalar operator-() const { return interval(-hi_, -lo_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return exact(a.lo_ * b.lo_);
        Rat p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return interval(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                        rat_max(rat_max(p1, p2), rat_max(p3, p4)));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.exact_) {
            if (b.lo_ == 0) fail(Errc::indeterminate_sign, "division by zero");
            if (a.exact_) return exact(a.lo_ / b.lo_);
            Rat q1 = a.lo_ / b.lo_, q2 = a.hi_ / b.lo_;
            return interval(rat_min(q1, q2), rat_max(q1, q2));
        }
        if (b.lo_ <= 0 && b.hi_ >= 0)
            fail(Errc::indeterminate_sign, "division by interval containing 0");
        Rat q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_, q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
        return interval(rat_min(rat_min(q1, q2), rat_min(q3, q4)),
                        rat_max(rat_max(q1, q2), rat_max(q3, q4)));
    }

    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    /// Both exact and equal. Interval equality is not decidable and is
    /// deliberately not an operator==.
    bool identical(const Scalar& other) const {
        return exact_ == other.exact_ && lo_ == other.lo_ && hi_ == other.hi_;
    }

    /// Widen endpoints outward to the dyadic grid 2^-bits. Keeps long
    /// certified computations from growing unbounded denominators.
    Scalar outward_rounded(unsigned bits) const {
        if (exact_) return *this;
        Rat step = pow2(-static_cast<int>(bits));
        Rat lo = Rat(rat_floor(lo_ * pow2(static_cast<int>(bits)))) * step;
        Rat hi = -(Rat(rat_floor(-hi_ * pow2(static_cast<int>(bits)))) * step);
        return interval(lo, hi);
    }

    std::string str() const {
        if (exact_) return format_rational(lo_);
        return "[" + format_rational(lo_) + ", " + format_rational(hi_) + "]";
    }

private:
    Rat lo_, hi_;
    bool exact_;
};

inline Scalar operator*(const Rat& a, const Scalar& b) { return Scalar::exact(a) * b; }
inline Scalar operator+(const Rat& a, const Scalar& b) { return Scalar::exact(a) + b; }

} // namespace matchmarket
