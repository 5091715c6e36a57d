#pragma once

#include <map>
#include <vector>

#include "matchmarket/scalar.hpp"

namespace matchmarket {

/// Sparse multivariate polynomial over Q with a fixed variable universe.
/// Everything in this library that needs symbolic algebra is tiny, so the
/// representation favors clarity over speed.
class Poly {
public:
    using Exponents = std::vector<int>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, Rat c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Exponents(nvars, 0)] = std::move(c);
        return p;
    }
    static Poly var(int nvars, int idx, Rat coeff = Rat(1)) {
        Poly p(nvars);
        Exponents e(nvars, 0);
        e[idx] = 1;
        if (coeff != 0) p.terms_[std::move(e)] = std::move(coeff);
        return p;
    }
    /// c0 + sum coeffs[i] * x_i
    static Poly affine(int nvars, const std::vector<Rat>& coeffs, const Rat& c0) {
        Poly p = constant(nvars, c0);
        for (int i = 0; i < nvars; ++i)
            if (coeffs[i] != 0) p.terms_[unit(nvars, i)] = coeffs[i];
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
    }
    Rat constant_value() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int k : e) d += k;
            deg = std::max(deg, d);
        }
        return deg;
    }
    int degree_in(int v) const {
        int deg = 0;
        for (const auto& [e, c] : terms_) deg = std::max(deg, e[v]);
        return deg;
    }
    std::vector<int> vars_present() const {
        std::vector<bool> seen(nvars_, false);
        for (const auto& [e, c] : terms_)
            for (int v = 0; v < nvars_; ++v)
                if (e[v] > 0) seen[v] = true;
        std::vector<int> out;
        for (int v = 0; v < nvars_; ++v)
            if (seen[v]) out.push_back(v);
        return out;
    }

    Poly operator-() const {
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        Poly out(a.nvars_);
        if (s == 0) return out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = s * c;
        return out;
    }
    Poly& operator+=(const Poly& other) { return *this = *this + other; }
    Poly& operator-=(const Poly& other) { return *this = *this - other; }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }
    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly pow(int k) const {
        Poly out = constant(nvars_, 1);
        for (int t = 0; t < k; ++t) out *= *this;
        return out;
    }

    Rat eval(const std::vector<Rat>& x) const {
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) t *= x[v];
            total += t;
        }
        return total;
    }
    Scalar eval_scalar(const std::vector<Scalar>& x) const {
        Scalar total = Scalar::exact(Rat(0));
        for (const auto& [e, c] : terms_) {
            Scalar t = Scalar::exact(c);
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) t *= x[v];
            total += t;
        }
        return total;
    }

    /// x_v := replacement (over the same variable universe; replacement
    /// must not itself contain x_v).
    Poly substituted(int v, const Poly& replacement) const {
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            int k = rest[v];
            rest[v] = 0;
            Poly term(nvars_);
            term.terms_[rest] = c;
            if (k > 0) term *= replacement.pow(k);
            out += term;
        }
        return out;
    }

    Poly partial(int v) const {
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exponents d = e;
            d[v] -= 1;
            out.add_term(d, c * e[v]);
        }
        return out;
    }

    /// If total degree <= 1, write as coeffs.x + c0.
    bool linear_form(std::vector<Rat>& coeffs, Rat& c0) const {
        coeffs.assign(nvars_, Rat(0));
        c0 = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0, where = -1;
            for (int v = 0; v < nvars_; ++v) {
                d += e[v];
                if (e[v] > 0) where = v;
            }
            if (d > 1) return false;
            if (d == 0)
                c0 = c;
            else
                coeffs[where] = c;
        }
        return true;
    }

    /// Coefficient of x_v^k with all other variables required absent.
    /// Valid only when the poly is univariate in v.
    Rat univariate_coeff(int v, int k) const {
        for (const auto& [e, c] : terms_) {
            bool match = true;
            for (int w = 0; w < nvars_; ++w) {
                int want = (w == v) ? k : 0;
                if (e[w] != want) match = false;
            }
            if (match) return c;
        }
        return Rat(0);
    }

    /// Divide out the gcd of numerators/denominators to keep coefficients
    /// small; the zero set is unchanged. Sign is normalized so the leading
    /// (lexicographically largest) term is positive.
    Poly normalized_for_equation() const {
        if (terms_.empty()) return *this;
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat scale = Rat(den_lcm) / Rat(num_gcd);
        if (terms_.rbegin()->second < 0) scale = -scale;
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = c * scale;
        return out;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += format_rational(c);
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k)
                    out += "*" + (v < static_cast<int>(names.size()) ? names[v]
                                                                     : "x" + std::to_string(v));
        }
        return out;
    }

private:
    static Exponents unit(int nvars, int idx) {
        Exponents e(nvars, 0);
        e[idx] = 1;
        return e;
    }
    void add_term(const Exponents& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    int nvars_;
    std::map<Exponents, Rat> terms_;
};

/// num / den with the sign of den structurally fixed (a solver cell pins
/// every denominator's sign before any formula is built). Keeping the sign
/// beside the polynomials lets inequalities clear denominators soundly.
struct RatFn {
    Poly num;
    Poly den;
    int den_sign = 1; // sign of den everywhere in the cell: +1 or -1

    static RatFn from_poly(Poly p) {
        int nv = p.nvars();
        return {std::move(p), Poly::constant(nv, 1), 1};
    }
    static RatFn constant(int nvars, Rat c) { return from_poly(Poly::constant(nvars, std::move(c))); }

    bool is_polynomial() const { return den.is_constant(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den, a.den_sign * b.den_sign};
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den, a.den_sign * b.den_sign};
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return {a.num * b.num, a.den * b.den, a.den_sign * b.den_sign};
    }
    /// b.num must itself have fixed sign in the cell; caller passes it.
    static RatFn divide(const RatFn& a, const RatFn& b, int b_num_sign) {
        return {a.num * b.den, a.den * b.num, a.den_sign * b_num_sign};
    }

    /// den * (this - c), sign-corrected so ">= 0" is preserved.
    Poly cleared_minus(const Rat& c) const {
        Poly diff = num - c * den;
        return den_sign > 0 ? diff : -diff;
    }
    /// Clears denominators of (this - other); ">= 0" is preserved.
    Poly cleared_minus(const RatFn& other) const {
        Poly diff = num * other.den - other.num * den;
        int s = den_sign * other.den_sign;
        return s > 0 ? diff : -diff;
    }

    Rat eval(const std::vector<Rat>& x) const { return num.eval(x) / den.eval(x); }
};

} // namespace matchmarket
