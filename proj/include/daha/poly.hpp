#pragma once
// Multivariate polynomials over the rationals with a graded-lex term order.
// Exponents are non-negative; Laurent behaviour lives at the RatFn level.

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <vector>

namespace daha {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const Vars>(std::move(names));
}

using Mono = std::vector<int>;

inline int mono_deg(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// true if a precedes b, i.e. a is LARGER in graded lex (map iterates leading
// term first)
struct MonoGL {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da > db;
        return a > b; // lexicographic: bigger exponent on earlier variable wins
    }
};

class Poly {
public:
    VarsPtr vars;
    std::map<Mono, Rat, MonoGL> terms;

    Poly() = default;
    explicit Poly(VarsPtr v) : vars(std::move(v)) {}

    static Poly constant(VarsPtr v, const Rat& c) {
        Poly p(std::move(v));
        if (c != 0) p.terms.emplace(Mono(p.vars->size(), 0), c);
        return p;
    }
    static Poly variable(VarsPtr v, size_t idx, int e = 1) {
        Poly p(std::move(v));
        Mono m(p.vars->size(), 0);
        m[idx] = e;
        p.terms.emplace(std::move(m), Rat(1));
        return p;
    }
    static Poly monomial(VarsPtr v, Mono m, const Rat& c) {
        Poly p(std::move(v));
        if (c != 0) p.terms.emplace(std::move(m), c);
        return p;
    }

    size_t nv() const { return vars->size(); }
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() ||
               (terms.size() == 1 && mono_deg(terms.begin()->first) == 0);
    }
    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        return terms.begin()->second;
    }
    int total_degree() const {
        if (terms.empty()) return -1;
        return mono_deg(terms.begin()->first); // leading term has max degree
    }
    int degree_in(size_t v) const {
        int d = -1;
        for (auto& [m, c] : terms) d = std::max(d, m[v]);
        return terms.empty() ? -1 : d;
    }
    const Mono& lead_mono() const { return terms.begin()->first; }
    const Rat& lead_coeff() const { return terms.begin()->second; }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(vars);
        for (auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.vars);
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) {
                Mono m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rat& c) const {
        Poly r(vars);
        if (c == 0) return r;
        for (auto& [m, k] : terms) r.terms.emplace(m, k * c);
        return r;
    }

    Poly pow(long e) const {
        if (e < 0) throw Error("Poly::pow: negative exponent");
        Poly r = constant(vars, Rat(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // monomial substitution X_i -> coef_i * prod X_j^{images[i][j]} is not
    // needed in full generality; the hot path (operator composition) only
    // needs  X_i -> q^{s_i} * X_{p(i)}  which maps monomials to monomials.
    // qidx: index of q in the variable table; xbase: index of X_1.
    // Added q exponent of a term can be negative; callers clear Laurent
    // deficits by passing qclear (see shift_permute_minq).
    Poly shift_permute(size_t qidx, size_t xbase, size_t n,
                       const std::vector<int>& perm, // 1-based images, size n
                       const std::vector<int>& qshift, long qclear = 0) const {
        Poly r(vars);
        for (auto& [m, c] : terms) {
            Mono nm(m);
            long qadd = qclear;
            for (size_t i = 0; i < n; ++i) nm[xbase + i] = 0;
            for (size_t i = 0; i < n; ++i) {
                int e = m[xbase + i];
                if (e == 0) continue;
                nm[xbase + (perm[i] - 1)] += e;
                qadd += (long)e * qshift[i];
            }
            long qe = (long)nm[qidx] + qadd;
            if (qe < 0) throw Error("shift_permute: negative q exponent");
            nm[qidx] = (int)qe;
            r.add_term(nm, c);
        }
        return r;
    }

    // variant with numeric q: the q power becomes a scalar factor
    Poly shift_permute_const(size_t xbase, size_t n,
                             const std::vector<int>& perm,
                             const std::vector<int>& qshift,
                             const Rat& qval) const {
        Poly r(vars);
        for (auto& [m, c] : terms) {
            Mono nm(m);
            long qadd = 0;
            for (size_t i = 0; i < n; ++i) nm[xbase + i] = 0;
            for (size_t i = 0; i < n; ++i) {
                int e = m[xbase + i];
                if (e == 0) continue;
                nm[xbase + (perm[i] - 1)] += e;
                qadd += (long)e * qshift[i];
            }
            r.add_term(nm, c * rat_pow(qval, qadd));
        }
        return r;
    }

    // minimum over terms of the q exponent shift_permute would produce with
    // qclear = 0
    long shift_permute_minq(size_t qidx, size_t xbase, size_t n,
                            const std::vector<int>& perm,
                            const std::vector<int>& qshift) const {
        bool any = false;
        long best = 0;
        for (auto& [m, c] : terms) {
            long qadd = m[qidx];
            for (size_t i = 0; i < n; ++i)
                qadd += (long)m[xbase + i] * qshift[i];
            if (!any || qadd < best) best = qadd;
            any = true;
        }
        return any ? best : 0;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms) {
            Rat a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                if (a < 0) { os << " - "; a = -a; }
                else os << " + ";
            }
            bool hasvar = mono_deg(m) > 0;
            bool coefshown = false;
            if (!hasvar || a != 1) {
                os << rat_str(a);
                coefshown = true;
            }
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (coefshown) os << "*";
                os << (*vars)[i];
                if (m[i] != 1) os << "^" << m[i];
                coefshown = true;
            }
            first = false;
        }
        return os.str();
    }
};

} // namespace daha
