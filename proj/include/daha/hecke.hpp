#pragma once
// Abstract words in the generators T_k^{±1}, Y_i^{±1}, e_ij of the
// subalgebra, scalar coefficients in Q(q, tau), and finite Hecke algebra
// arithmetic in the T_w basis.

#include "generators.hpp"

#include <compare>

namespace daha {

// scalar coefficient field Q(q, tau), independent of any Context
inline VarsPtr pbw_scalar_vars() {
    static VarsPtr v = make_vars({"q", "tau"});
    return v;
}
using Scalar = RatFn;

inline Scalar sc_const(const Rat& c) {
    return RatFn::constant(pbw_scalar_vars(), c);
}
inline Scalar sc_one() { return sc_const(Rat(1)); }
inline Scalar sc_q(int e = 1) {
    return RatFn::variable(pbw_scalar_vars(), 0, e);
}
inline Scalar sc_tau(int e = 1) {
    return RatFn::variable(pbw_scalar_vars(), 1, e);
}

// embed a scalar into a Context coefficient (symbolic or specialized q, tau)
inline RatFn scalar_in(const Context& c, const Scalar& s) {
    if (c.qsym) {
        auto emb = [&](const Poly& p) {
            Poly r(c.vars);
            for (auto& [m, co] : p.terms) {
                Mono nm(c.vars->size(), 0);
                nm[c.qi] = m[0];
                nm[c.ti] = m[1];
                r.add_term(nm, co);
            }
            return r;
        };
        return RatFn::from_poly(emb(s.num)) / RatFn::from_poly(emb(s.den));
    }
    auto ev = [&](const Poly& p) {
        Rat acc(0);
        for (auto& [m, co] : p.terms)
            acc += co * rat_pow(c.qval, m[0]) * rat_pow(c.tval, m[1]);
        return acc;
    };
    Rat dv = ev(s.den);
    if (dv == 0) throw Error("scalar_in: denominator vanishes at (q, tau)");
    return c.cst(ev(s.num) / dv);
}

// a generator letter: kind 'T' (a=k, b=±1), 'Y' (a=i, b=±1), 'e' (a=i, b=j)
struct Letter {
    char kind;
    int a, b;
    auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

inline Letter LT(int k, int e = 1) { return {'T', k, e}; }
inline Letter LY(int i, int e = 1) { return {'Y', i, e}; }
inline Letter Le(int i, int j) { return {'e', i, j}; }

// elements of the subalgebra as formal sums of words
struct AlgElement {
    std::map<Word, Scalar> terms;

    static AlgElement from_word(Word w, const Scalar& c = sc_one()) {
        AlgElement x;
        if (!c.is_zero()) x.terms.emplace(std::move(w), c);
        return x;
    }
    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// formal (concatenation) product of subalgebra elements
inline AlgElement alg_mul(const AlgElement& a, const AlgElement& b) {
    AlgElement out;
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

// ---------------------------------------------------------------------------
// finite Hecke algebra of S_n in the standard basis {T_w}

struct HeckeElement {
    std::map<Perm, Scalar> terms;

    void add(const Perm& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// right multiplication by T_k^{±1}: T_w T_k = T_{w s_k} when the length
// goes up, T_{w s_k} + (tau - tau^{-1}) T_w when it goes down, and
// T_k^{-1} = T_k + tau^{-1} - tau
inline HeckeElement hecke_mul_letter(const HeckeElement& x, int k, int e) {
    HeckeElement out;
    Scalar d = sc_tau(1) - sc_tau(-1);
    for (auto& [w, c] : x.terms) {
        Perm w2 = w;
        std::swap(w2[(size_t)k - 1], w2[(size_t)k]);
        bool up = w[(size_t)k - 1] < w[(size_t)k];
        out.add(w2, c);
        if (e == 1 && !up) out.add(w, c * d);
        if (e == -1 && up) out.add(w, -(c * d));
    }
    return out;
}

// expansion of a word in T_k^{±1} letters in the T_w basis
inline HeckeElement hecke_normalize(int n, const Word& word) {
    HeckeElement x;
    x.terms.emplace(perm_id(n), sc_one());
    for (auto& L : word) {
        if (L.kind != 'T')
            throw Error("hecke_normalize: word contains a non-T letter");
        if (L.a < 1 || L.a >= n)
            throw Error("hecke_normalize: T index out of range");
        x = hecke_mul_letter(x, L.a, L.b);
    }
    return x;
}

// a reduced word for w as a sequence of simple reflection indices, read as
// the left-to-right product T_{k_1} T_{k_2} ...
inline std::vector<int> reduced_word(const Perm& w) {
    Perm v = w;
    std::vector<int> out;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 1; k < v.size(); ++k)
            if (v[k - 1] > v[k]) {
                std::swap(v[k - 1], v[k]);
                out.push_back((int)k);
                moved = true;
                break;
            }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace daha
