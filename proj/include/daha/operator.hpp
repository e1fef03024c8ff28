#pragma once
// Difference-reflection operators on Laurent polynomials in X_1..X_n with
// coefficients in Q(q, tau, params).
//
// A term keyed by (perm w, shift s) with coefficient g(X) acts as
//   f  |->  g(X) * f[ X_i -> q^{s_{w(i)}} X_{w(i)} ].

#include "ratfn.hpp"

#include <cassert>

namespace daha {

using Perm = std::vector<int>;  // 1-based images: w[i-1] = w(i)
using Shift = std::vector<int>; // integer vector in Z^n

inline Perm perm_id(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}
inline bool perm_is_id(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int)i + 1) return false;
    return true;
}
// (a*b)(i) = a(b(i))
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
    return r;
}
inline Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i] - 1] = (int)i + 1;
    return r;
}
inline Perm perm_sk(int n, int k) { // adjacent transposition (k, k+1), 1-based
    Perm p = perm_id(n);
    std::swap(p[k - 1], p[k]);
    return p;
}
inline int perm_length(const Perm& p) { // number of inversions
    int len = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++len;
    return len;
}

struct Context {
    int n = 0;
    std::vector<std::string> params;
    VarsPtr vars; // symbolic: q, tau, params..., X1..Xn
                  // specialized: params..., X1..Xn (q, tau numeric)
    size_t qi = 0, ti = 1, pbase = 2, xbase = 2;
    bool qsym = true; // q, tau are variables; otherwise fixed rationals
    Rat qval, tval;

    Context() = default;
    Context(int n_, std::vector<std::string> params_ = {})
        : n(n_), params(std::move(params_)) {
        std::vector<std::string> names{"q", "tau"};
        for (auto& p : params) names.push_back(p);
        xbase = names.size();
        for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
        vars = make_vars(std::move(names));
    }
    static Context specialized(int n_, const Rat& qv, const Rat& tv,
                               std::vector<std::string> params_ = {}) {
        Context c;
        c.n = n_;
        c.params = std::move(params_);
        c.qsym = false;
        c.qval = qv;
        c.tval = tv;
        std::vector<std::string> names = c.params;
        c.pbase = 0;
        c.xbase = names.size();
        for (int i = 1; i <= n_; ++i)
            names.push_back("X" + std::to_string(i));
        c.vars = make_vars(std::move(names));
        return c;
    }

    RatFn cst(const Rat& c) const { return RatFn::constant(vars, c); }
    RatFn zero() const { return RatFn(vars); }
    RatFn one() const { return cst(Rat(1)); }
    RatFn q(int e = 1) const {
        return qsym ? RatFn::variable(vars, qi, e) : cst(rat_pow(qval, e));
    }
    RatFn tau(int e = 1) const {
        return qsym ? RatFn::variable(vars, ti, e) : cst(rat_pow(tval, e));
    }
    RatFn param(size_t k, int e = 1) const {
        return RatFn::variable(vars, pbase + k, e);
    }
    RatFn param(const std::string& name, int e = 1) const {
        for (size_t k = 0; k < params.size(); ++k)
            if (params[k] == name) return param(k, e);
        throw Error("unknown parameter " + name);
    }
    RatFn X(int i, int e = 1) const { // 1-based
        return RatFn::variable(vars, xbase + (size_t)i - 1, e);
    }
    // X_i -> q^{qshift_i} X_{perm(i)} applied to an X-dependent coefficient
    RatFn xsubst(const RatFn& g, const Perm& perm,
                 const std::vector<int>& qshift) const {
        if (qsym)
            return g.shift_permute(qi, xbase, (size_t)n, perm, qshift);
        return g.shift_permute_const(xbase, (size_t)n, perm, qshift, qval);
    }
    bool same(const Context& o) const {
        return n == o.n && *vars == *o.vars;
    }
};

// Laurent polynomial in X with X-free RatFn coefficients.
struct LaurentPoly {
    Context ctx;
    std::map<std::vector<int>, RatFn> terms; // exponent vector (size n)

    LaurentPoly() = default;
    explicit LaurentPoly(Context c) : ctx(std::move(c)) {}

    static LaurentPoly monomial(const Context& c, std::vector<int> e,
                                RatFn coeff) {
        LaurentPoly f(c);
        if (!coeff.is_zero()) f.terms.emplace(std::move(e), std::move(coeff));
        return f;
    }
    static LaurentPoly one(const Context& c) {
        return monomial(c, std::vector<int>(c.n, 0), c.one());
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const RatFn& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r(ctx);
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                std::vector<int> e(e1);
                for (int i = 0; i < ctx.n; ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    LaurentPoly scaled(const RatFn& c) const {
        LaurentPoly r(ctx);
        if (c.is_zero()) return r;
        for (auto& [e, k] : terms) r.terms.emplace(e, k * c);
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // as a rational function over the full variable table
    RatFn to_ratfn() const {
        std::vector<int> mn(ctx.n, 0);
        for (auto& [e, c] : terms)
            for (int i = 0; i < ctx.n; ++i) mn[i] = std::min(mn[i], e[i]);
        RatFn acc = RatFn(ctx.vars);
        for (auto& [e, c] : terms) {
            Mono m(ctx.vars->size(), 0);
            for (int i = 0; i < ctx.n; ++i)
                m[ctx.xbase + i] = e[i] - mn[i];
            acc += c * RatFn::from_poly(Poly::monomial(ctx.vars, m, Rat(1)));
        }
        Mono dm(ctx.vars->size(), 0);
        for (int i = 0; i < ctx.n; ++i) dm[ctx.xbase + i] = -mn[i];
        return acc / RatFn::from_poly(Poly::monomial(ctx.vars, dm, Rat(1)));
    }
};

class DROp {
public:
    Context ctx;
    // keyed (perm, shift) in lexicographic order — also the JSON order
    std::map<std::pair<Perm, Shift>, RatFn> terms;

    DROp() = default;
    explicit DROp(Context c) : ctx(std::move(c)) {}

    static DROp zero(const Context& c) { return DROp(c); }
    static DROp term(const Context& c, Perm w, Shift s, RatFn g) {
        DROp op(c);
        op.add_term(std::move(w), std::move(s), std::move(g));
        return op;
    }
    static DROp identity(const Context& c) {
        return term(c, perm_id(c.n), Shift(c.n, 0), c.one());
    }

    void add_term(Perm w, Shift s, RatFn g) {
        if (g.is_zero()) return;
        auto key = std::make_pair(std::move(w), std::move(s));
        auto it = terms.find(key);
        if (it == terms.end()) terms.emplace(std::move(key), std::move(g));
        else {
            it->second += g;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    DROp operator+(const DROp& o) const {
        DROp r = *this;
        for (auto& [k, g] : o.terms) r.add_term(k.first, k.second, g);
        return r;
    }
    DROp operator-(const DROp& o) const {
        DROp r = *this;
        for (auto& [k, g] : o.terms) r.add_term(k.first, k.second, -g);
        return r;
    }
    DROp scaled(const RatFn& c) const {
        DROp r(ctx);
        if (c.is_zero()) return r;
        for (auto& [k, g] : terms) r.terms.emplace(k, g * c);
        return r;
    }
    bool operator==(const DROp& o) const { return terms == o.terms; }
    bool operator!=(const DROp& o) const { return !(*this == o); }

    // composition: (*this) after o, i.e. (*this . o)(f) = this(o(f))
    DROp operator*(const DROp& o) const {
        DROp r(ctx);
        int n = ctx.n;
        for (auto& [k1, g1] : terms) {
            const Perm& w1 = k1.first;
            const Shift& s1 = k1.second;
            Perm w1i = perm_inv(w1);
            // substitution applied to the second coefficient:
            // X_i -> q^{s1_{w1(i)}} X_{w1(i)}
            std::vector<int> qshift(n);
            for (int i = 0; i < n; ++i) qshift[i] = s1[w1[i] - 1];
            for (auto& [k2, g2] : o.terms) {
                const Perm& w2 = k2.first;
                const Shift& s2 = k2.second;
                Perm w = perm_mul(w1, w2);
                Shift s(n);
                for (int j = 0; j < n; ++j)
                    s[j] = s1[j] + s2[w1i[j] - 1];
                RatFn g = g1 * ctx.xsubst(g2, w1, qshift);
                r.add_term(std::move(w), std::move(s), std::move(g));
            }
        }
        return r;
    }

    DROp pow(long e) const {
        if (e < 0) throw Error("DROp::pow: negative exponent");
        DROp r = identity(ctx), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    // apply to a Laurent polynomial; throws if denominators do not clear
    LaurentPoly act(const LaurentPoly& f) const {
        RatFn F = f.to_ratfn();
        RatFn acc(ctx.vars);
        int n = ctx.n;
        for (auto& [k, g] : terms) {
            const Perm& w = k.first;
            const Shift& s = k.second;
            std::vector<int> qshift(n);
            for (int i = 0; i < n; ++i) qshift[i] = s[w[i] - 1];
            acc += g * ctx.xsubst(F, w, qshift);
        }
        // the result must be Laurent in X: denominator's X-part must be a
        // single monomial
        LaurentPoly out(ctx);
        if (acc.is_zero()) return out;
        std::vector<int> dx(n, 0);
        bool first = true;
        for (auto& [m, c] : acc.den.terms) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = m[ctx.xbase + i];
            if (first) { dx = e; first = false; }
            else if (e != dx)
                throw Error("DROp::act: result is not a Laurent polynomial "
                            "(denominators do not clear)");
        }
        // den = D(q,tau,params) * X^dx
        Poly D(ctx.vars);
        for (auto& [m, c] : acc.den.terms) {
            Mono nm(m);
            for (int i = 0; i < n; ++i) nm[ctx.xbase + i] = 0;
            D.add_term(nm, c);
        }
        RatFn Dinv = ctx.one() / RatFn::from_poly(D);
        // group numerator by X-exponent
        std::map<std::vector<int>, Poly> groups;
        for (auto& [m, c] : acc.num.terms) {
            std::vector<int> e(n);
            Mono nm(m);
            for (int i = 0; i < n; ++i) {
                e[i] = m[ctx.xbase + i] - dx[i];
                nm[ctx.xbase + i] = 0;
            }
            auto [it, fresh] = groups.try_emplace(std::move(e), ctx.vars);
            it->second.add_term(nm, c);
        }
        for (auto& [e, p] : groups)
            out.add_term(e, RatFn::from_poly(p) * Dinv);
        return out;
    }

    // forget the reflection part: (w, s) -> (id, s), summing collisions
    DROp res() const {
        DROp r(ctx);
        Perm id = perm_id(ctx.n);
        for (auto& [k, g] : terms) r.add_term(id, k.second, g);
        return r;
    }

    // text form: one line per term, "([perm],[shift]) coeff"
    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (auto& [k, g] : terms) {
            if (!out.empty()) out += "\n";
            out += "([";
            for (size_t i = 0; i < k.first.size(); ++i)
                out += (i ? "," : "") + std::to_string(k.first[i]);
            out += "],[";
            for (size_t i = 0; i < k.second.size(); ++i)
                out += (i ? "," : "") + std::to_string(k.second[i]);
            out += "]) " + g.str();
        }
        return out;
    }

    bool is_w_invariant() const {
        for (int k = 1; k < ctx.n; ++k) {
            DROp sk = term(ctx, perm_sk(ctx.n, k), Shift(ctx.n, 0),
                           ctx.one());
            if (sk * (*this) * sk != *this) return false;
        }
        return true;
    }
};

inline DROp linear_combine(
    const std::vector<std::pair<RatFn, DROp>>& parts) {
    if (parts.empty()) throw Error("linear_combine: empty input");
    DROp r(parts.front().second.ctx);
    for (auto& [c, op] : parts) r = r + op.scaled(c);
    return r;
}

} // namespace daha
