#pragma once
// Rational functions: reduced fractions of multivariate polynomials over Q.
// Canonical form: gcd(num, den) = 1, coefficients of num and den are integers
// with collective gcd 1, and den's leading coefficient (graded lex) positive.

#include "gcd.hpp"

#include <map>

namespace daha {

class RatFn {
public:
    Poly num, den;

    RatFn() = default;
    explicit RatFn(VarsPtr vars)
        : num(vars), den(Poly::constant(vars, Rat(1))) {}
    RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error("RatFn: zero denominator");
        reduce();
    }
    static RatFn constant(VarsPtr vars, const Rat& c) {
        RatFn r(vars);
        r.num = Poly::constant(vars, c);
        r.normalize_scale();
        return r;
    }
    static RatFn from_poly(Poly p) {
        RatFn r(p.vars);
        r.num = std::move(p);
        r.normalize_scale();
        return r;
    }
    static RatFn variable(VarsPtr vars, size_t idx, int e = 1) {
        RatFn r(vars);
        if (e >= 0) {
            r.num = Poly::variable(vars, idx, e);
        } else {
            r.num = Poly::constant(vars, Rat(1));
            r.den = Poly::variable(vars, idx, -e);
        }
        return r;
    }

    VarsPtr vars() const { return num.vars; }
    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num == den; }

    void reduce() {
        if (num.is_zero()) {
            den = Poly::constant(den.vars, Rat(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
        normalize_scale();
    }

    void normalize_scale() {
        if (num.is_zero()) {
            den = Poly::constant(den.vars, Rat(1));
            return;
        }
        // scale so all coefficients are coprime integers, den lead positive
        mpz_class L(1), G(0);
        auto visit = [&](const Poly& p) {
            for (auto& [m, c] : p.terms) {
                mpz_lcm(L.get_mpz_t(), L.get_mpz_t(),
                        c.get_den().get_mpz_t());
                mpz_gcd(G.get_mpz_t(), G.get_mpz_t(),
                        c.get_num().get_mpz_t());
            }
        };
        visit(num);
        visit(den);
        Rat scale(L, G);
        scale.canonicalize();
        if (den.lead_coeff() < 0) scale = -scale;
        if (scale != 1) {
            num = num.scaled(scale);
            den = den.scaled(scale);
        }
    }

    RatFn operator-() const {
        RatFn r = *this;
        r.num = -r.num;
        if (!r.num.is_zero()) r.normalize_scale(); // keep integer-gcd sign rule
        return r;
    }
    // addition keeping lowest terms: with inputs reduced, the only common
    // factors of the cross-multiplied numerator and the lcm denominator lie
    // in g = gcd(den_a, den_b)
    static RatFn add_impl(const RatFn& a, const RatFn& b, bool subtract) {
        if (a.is_zero()) return subtract ? -b : b;
        if (b.is_zero()) return a;
        Poly g = poly_gcd(a.den, b.den);
        Poly da = g.is_constant() ? a.den : divide_exact(a.den, g);
        Poly db = g.is_constant() ? b.den : divide_exact(b.den, g);
        Poly t = subtract ? a.num * db - b.num * da : a.num * db + b.num * da;
        if (t.is_zero()) return RatFn(a.vars());
        RatFn r;
        if (g.is_constant()) {
            r.num = std::move(t);
            r.den = da * b.den;
        } else {
            Poly h = poly_gcd(t, g);
            if (h.is_constant()) {
                r.num = std::move(t);
                r.den = da * g * db;
            } else {
                r.num = divide_exact(t, h);
                r.den = da * divide_exact(g, h) * db;
            }
        }
        r.normalize_scale();
        return r;
    }
    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return add_impl(a, b, false);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return add_impl(a, b, true);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        if (a.is_zero() || b.is_zero()) return RatFn(a.vars());
        // cross-reduce before multiplying to keep intermediates small
        Poly g1 = poly_gcd(a.num, b.den), g2 = poly_gcd(b.num, a.den);
        Poly n1 = g1.is_constant() ? a.num : divide_exact(a.num, g1);
        Poly d2 = g1.is_constant() ? b.den : divide_exact(b.den, g1);
        Poly n2 = g2.is_constant() ? b.num : divide_exact(b.num, g2);
        Poly d1 = g2.is_constant() ? a.den : divide_exact(a.den, g2);
        RatFn r;
        r.num = n1 * n2;
        r.den = d1 * d2;
        r.normalize_scale();
        return r;
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw Error("RatFn: division by zero");
        RatFn binv;
        binv.num = b.den;
        binv.den = b.num;
        binv.normalize_scale();
        return a * binv;
    }
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

    bool operator==(const RatFn& o) const {
        return num == o.num && den == o.den; // canonical form
    }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn pow(long e) const {
        if (e == 0) return constant(vars(), Rat(1));
        if (e < 0) {
            if (is_zero()) throw Error("RatFn::pow: zero to negative power");
            RatFn inv;
            inv.num = den;
            inv.den = num;
            inv.normalize_scale();
            return inv.pow(-e);
        }
        RatFn r = constant(vars(), Rat(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    // substitute variables by rational functions (vars not listed map to
    // themselves); throws if a denominator vanishes
    RatFn substitute(const std::map<size_t, RatFn>& binds) const {
        auto eval = [&](const Poly& p) {
            RatFn acc(p.vars);
            for (auto& [m, c] : p.terms) {
                RatFn t = RatFn::constant(p.vars, c);
                for (size_t i = 0; i < m.size(); ++i) {
                    if (m[i] == 0) continue;
                    auto it = binds.find(i);
                    RatFn v = (it != binds.end())
                                  ? it->second
                                  : RatFn::variable(p.vars, i);
                    t *= v.pow(m[i]);
                }
                acc += t;
            }
            return acc;
        };
        RatFn dn = eval(den);
        if (dn.is_zero())
            throw Error("RatFn::substitute: denominator vanishes");
        return eval(num) / dn;
    }

    // coefficient substitution X_i -> q^{shift'} X_{perm(i)}: monomial map,
    // preserves gcd-reduced form up to a power of q and scaling
    RatFn shift_permute(size_t qidx, size_t xbase, size_t n,
                        const std::vector<int>& perm,
                        const std::vector<int>& qshift) const {
        long mn = num.shift_permute_minq(qidx, xbase, n, perm, qshift);
        long md = den.shift_permute_minq(qidx, xbase, n, perm, qshift);
        long clear = std::min({mn, md, (long)0});
        RatFn r;
        r.num = num.shift_permute(qidx, xbase, n, perm, qshift, -clear);
        r.den = den.shift_permute(qidx, xbase, n, perm, qshift, -clear);
        // only a common power of q can have been introduced
        long strip = std::min(mn, md) - clear;
        if (strip > 0) {
            Poly qp = Poly::variable(r.num.vars, qidx, (int)strip);
            r.num = divide_exact(r.num, qp);
            r.den = divide_exact(r.den, qp);
        }
        r.normalize_scale();
        return r;
    }

    RatFn shift_permute_const(size_t xbase, size_t n,
                              const std::vector<int>& perm,
                              const std::vector<int>& qshift,
                              const Rat& qval) const {
        RatFn r;
        r.num = num.shift_permute_const(xbase, n, perm, qshift, qval);
        r.den = den.shift_permute_const(xbase, n, perm, qshift, qval);
        r.normalize_scale();
        return r;
    }

    std::string str() const {
        if (den.is_constant() && den.constant_value() == 1) return num.str();
        std::string n = num.str(), d = den.str();
        bool natom = num.terms.size() <= 1;
        bool datom = den.terms.size() <= 1 && den.lead_coeff() == 1;
        std::string out = natom ? n : "(" + n + ")";
        out += "/";
        out += datom ? d : "(" + d + ")";
        return out;
    }
};

inline std::string canonical_string(const RatFn& f) { return f.str(); }

} // namespace daha
