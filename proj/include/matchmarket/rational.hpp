#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "matchmarket/errors.hpp"

namespace matchmarket {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// 2^k for any integer k (k may be negative).
inline Rat pow2(int k) {
    Rat q;
    if (k >= 0) {
        mpz_ui_pow_ui(q.get_num().get_mpz_t(), 2u, static_cast<unsigned long>(k));
    } else {
        q.get_num() = 1;
        mpz_ui_pow_ui(q.get_den().get_mpz_t(), 2u, static_cast<unsigned long>(-k));
    }
    return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline int sign_of(const Rat& q) { return sgn(q); }

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

/// Round to the nearest multiple of 2^-bits (ties toward +inf). Used to
/// keep iterative numeric paths from growing unbounded denominators.
inline Rat dyadic_round(const Rat& q, unsigned bits) {
    Rat scaled = q * pow2(static_cast<int>(bits));
    Int nearest = rat_floor(scaled + Rat(1, 2));
    return Rat(nearest) * pow2(-static_cast<int>(bits));
}

inline double to_double(const Rat& q) { return q.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

namespace detail {

inline bool parse_integer(std::string_view s, Int& out) {
    if (s.empty()) return false;
    std::string buf(s);
    return mpz_set_str(out.get_mpz_t(), buf.c_str(), 10) == 0;
}

} // namespace detail

/// Exact parse of "p/q", "p", or a plain decimal like "-1.25".
/// Never goes through binary floating point.
inline Rat parse_rational(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) fail(Errc::parse_error, "empty rational literal");
    std::string_view s = text.substr(a, b - a + 1);

    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        Int num, den;
        if (!detail::parse_integer(s.substr(0, slash), num) ||
            !detail::parse_integer(s.substr(slash + 1), den) || den == 0)
            fail(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    if (size_t dot = s.find('.'); dot != std::string_view::npos) {
        bool neg = !s.empty() && s[0] == '-';
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (neg) ip = ip.substr(1);
        if (ip.empty() && fp.empty())
            fail(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.empty())
            fail(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
        Int num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            fail(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
        Int den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10u, fp.size());
        Rat q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }
    Int num;
    if (!detail::parse_integer(s, num))
        fail(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
    return Rat(num);
}

/// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string format_vector(const std::vector<Rat>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    return out + ")";
}

} // namespace matchmarket
