#pragma once
// Generators of the GL_n double affine Hecke algebra in the polynomial
// representation, realized as difference-reflection operators.

#include "operator.hpp"

namespace daha {

// T_k = (tau X_k - tau^{-1} X_{k+1})/(X_k - X_{k+1}) s_k
//       + (tau - tau^{-1}) X_{k+1}/(X_{k+1} - X_k) id
inline DROp gen_T(const Context& c, int k) {
    if (k < 1 || k >= c.n) throw Error("gen_T: index out of range");
    RatFn xk = c.X(k), xk1 = c.X(k + 1), t = c.tau(), ti = c.tau(-1);
    DROp op(c);
    op.add_term(perm_sk(c.n, k), Shift(c.n, 0),
                (t * xk - ti * xk1) / (xk - xk1));
    op.add_term(perm_id(c.n), Shift(c.n, 0),
                (t - ti) * xk1 / (xk1 - xk));
    return op;
}

inline DROp gen_Tinv(const Context& c, int k) {
    DROp op = gen_T(c, k);
    op.add_term(perm_id(c.n), Shift(c.n, 0), c.tau(-1) - c.tau());
    return op;
}

// pi: X^a -> q^{-a_n} ... acts with s = (-1,0,...,0), w = (2,3,...,n,1)
inline DROp gen_pi(const Context& c) {
    Perm w(c.n);
    for (int i = 0; i < c.n; ++i) w[i] = (i + 1) % c.n + 1;
    Shift s(c.n, 0);
    s[0] = -1;
    return DROp::term(c, std::move(w), std::move(s), c.one());
}

// pi^{-1}: X^a -> q^{a_1} X_1^{a_2} ... X_{n-1}^{a_n} X_n^{a_1}
inline DROp gen_piinv(const Context& c) {
    Perm w(c.n);
    w[0] = c.n;
    for (int i = 1; i < c.n; ++i) w[i] = i;
    Shift s(c.n, 0);
    s[c.n - 1] = 1;
    return DROp::term(c, std::move(w), std::move(s), c.one());
}

inline DROp gen_X(const Context& c, int i, int e = 1) {
    return DROp::term(c, perm_id(c.n), Shift(c.n, 0), c.X(i, e));
}

// shift operator t_i: f(..., X_i, ...) -> f(..., q X_i, ...)
inline DROp gen_t(const Context& c, int i, int e = 1) {
    Shift s(c.n, 0);
    s[i - 1] = e;
    return DROp::term(c, perm_id(c.n), std::move(s), c.one());
}

// ordered products of T's (or their inverses). "Plus" ascends i..j, "Minus"
// descends i..j; an empty range is the identity. The leftmost factor is the
// one applied last.
inline DROp gen_string(const Context& c, const std::string& kind, int i,
                       int j) {
    bool inv = kind == "TinvPlus" || kind == "TinvMinus";
    bool plus = kind == "Tplus" || kind == "TinvPlus";
    if (!inv && kind != "Tplus" && kind != "Tminus")
        throw Error("gen_string: unknown kind " + kind);
    DROp r = DROp::identity(c);
    if (plus) {
        for (int k = i; k <= j; ++k)
            r = r * (inv ? gen_Tinv(c, k) : gen_T(c, k));
    } else {
        for (int k = i; k >= j; --k)
            r = r * (inv ? gen_Tinv(c, k) : gen_T(c, k));
    }
    return r;
}

// Y_i = T_i ... T_{n-1} pi^{-1} T_1^{-1} ... T_{i-1}^{-1}
inline DROp gen_Y(const Context& c, int i) {
    return gen_string(c, "Tplus", i, c.n - 1) * gen_piinv(c) *
           gen_string(c, "TinvPlus", 1, i - 1);
}

// Y_i^{-1} = T_{i-1} ... T_1 pi T_{n-1}^{-1} ... T_i^{-1}
inline DROp gen_Yinv(const Context& c, int i) {
    return gen_string(c, "Tminus", i - 1, 1) * gen_pi(c) *
           gen_string(c, "TinvMinus", c.n - 1, i);
}

// D_n = (q - q^{-1})^{-1} X_n^{-1} (Y_n - Y_n^{-1});
// D_i = T^+_{i,n-1} D_n T^-_{n-1,i}
inline DROp gen_D(const Context& c, int i) {
    RatFn k = c.one() / (c.q() - c.q(-1));
    DROp dn = (gen_X(c, c.n, -1) * (gen_Y(c, c.n) - gen_Yinv(c, c.n)))
                  .scaled(k);
    if (i == c.n) return dn;
    return gen_string(c, "Tplus", i, c.n - 1) * dn *
           gen_string(c, "Tminus", c.n - 1, i);
}

// calD_i = (q - q^{-1}) D_i, built as the conjugated
// X_n^{-1}(Y_n - Y_n^{-1}) without the scalar prefactor
inline DROp gen_calD(const Context& c, int i) {
    DROp dn = gen_X(c, c.n, -1) * (gen_Y(c, c.n) - gen_Yinv(c, c.n));
    if (i == c.n) return dn;
    return gen_string(c, "Tplus", i, c.n - 1) * dn *
           gen_string(c, "Tminus", c.n - 1, i);
}

// e_ij = X_i D_j for i != j;
// e_ii = (q - q^{-1})^{-1} (T^{-1})^+_{i,n-1} (Y_n - Y_n^{-1}) T^-_{n-1,i}
inline DROp gen_e(const Context& c, int i, int j) {
    if (i != j) return gen_X(c, i) * gen_D(c, j);
    RatFn k = c.one() / (c.q() - c.q(-1));
    return (gen_string(c, "TinvPlus", i, c.n - 1) *
            (gen_Y(c, c.n) - gen_Yinv(c, c.n)) *
            gen_string(c, "Tminus", c.n - 1, i))
        .scaled(k);
}

// S^tau_ij = [D_i, X_j]
inline DROp gen_Stau(const Context& c, int i, int j) {
    DROp d = gen_D(c, i), x = gen_X(c, j);
    return d * x - x * d;
}

// d_i = X_i^{-1} (t_i - t_i^{-1})/(q - q^{-1})
inline DROp gen_d(const Context& c, int i) {
    RatFn k = c.one() / (c.q() - c.q(-1));
    return (gen_X(c, i, -1) * (gen_t(c, i, 1) - gen_t(c, i, -1))).scaled(k);
}

// E^q_ij = X_i d_j
inline DROp gen_Eq(const Context& c, int i, int j) {
    return gen_X(c, i) * gen_d(c, j);
}

// S^q: S^q_ii = (q+1)^{-1} (q t_i + t_i^{-1}), S^q_ij = 0 for i != j
inline DROp gen_Sq(const Context& c, int i, int j) {
    if (i != j) return DROp::zero(c);
    RatFn k = c.one() / (c.q() + c.one());
    return (gen_t(c, i, 1).scaled(c.q()) + gen_t(c, i, -1)).scaled(k);
}

// dispatch by name; i is the first index (1-based), j the second when the
// generator takes two
inline DROp gen(const Context& c, const std::string& id, int i = 1,
                int j = 0) {
    if (id == "T") return gen_T(c, i);
    if (id == "Tinv") return gen_Tinv(c, i);
    if (id == "pi") return gen_pi(c);
    if (id == "piinv") return gen_piinv(c);
    if (id == "X") return gen_X(c, i);
    if (id == "Xinv") return gen_X(c, i, -1);
    if (id == "Y") return gen_Y(c, i);
    if (id == "Yinv") return gen_Yinv(c, i);
    if (id == "D") return gen_D(c, i);
    if (id == "calD") return gen_calD(c, i);
    if (id == "e") return gen_e(c, i, j ? j : i);
    if (id == "Stau") return gen_Stau(c, i, j ? j : i);
    if (id == "Sq") return gen_Sq(c, i, j ? j : i);
    if (id == "t") return gen_t(c, i);
    if (id == "tinv") return gen_t(c, i, -1);
    if (id == "d") return gen_d(c, i);
    if (id == "Eq") return gen_Eq(c, i, j ? j : i);
    if (id == "s") return DROp::term(c, perm_sk(c.n, i), Shift(c.n, 0),
                                     c.one());
    throw Error("gen: unknown generator id " + id);
}

// R^{eps,±}_{ij} = (T^{eps})^-_{i-1,j+1} T_j^{±2} (T^{-eps})^+_{j+1,i-1}
// for i > j, identity otherwise. eps, sign in {+1,-1}.
inline DROp gen_R(const Context& c, int eps, int sign, int i, int j) {
    if (i <= j) return DROp::identity(c);
    auto tpow = [&](int k, int e) {
        return e > 0 ? gen_T(c, k) : gen_Tinv(c, k);
    };
    DROp r = DROp::identity(c);
    for (int k = i - 1; k >= j + 1; --k) r = r * tpow(k, eps);
    DROp mid = tpow(j, sign) * tpow(j, sign);
    r = r * mid;
    for (int k = j + 1; k <= i - 1; ++k) r = r * tpow(k, -eps);
    return r;
}

// quantum group generators g_k^{±1}, e_k, f_k acting through the polynomial
// representation
inline DROp js_rep(const Context& c, const std::string& name, int k) {
    if (name == "g") return gen_t(c, k, 1);
    if (name == "ginv") return gen_t(c, k, -1);
    if (name == "e") return gen_X(c, k) * gen_d(c, k + 1);
    if (name == "f") return gen_X(c, k + 1) * gen_d(c, k);
    throw Error("js_rep: unknown name " + name);
}

// rescaled representation psi: T, X unchanged; Y_i scaled by tau^{n-1},
// Y_i^{-1} by tau^{1-n}; D and e rebuilt from the scaled Y's
inline DROp gen_psi(const Context& c, const std::string& id, int i = 1,
                    int j = 0) {
    RatFn tn = c.tau().pow(c.n - 1), tni = c.tau().pow(1 - c.n);
    auto psiD = [&](int a) {
        RatFn k = c.one() / (c.q() - c.q(-1));
        DROp dn = (gen_X(c, c.n, -1) *
                   (gen_Y(c, c.n).scaled(tn) - gen_Yinv(c, c.n).scaled(tni)))
                      .scaled(k);
        if (a == c.n) return dn;
        return gen_string(c, "Tplus", a, c.n - 1) * dn *
               gen_string(c, "Tminus", c.n - 1, a);
    };
    if (id == "Y") return gen_Y(c, i).scaled(tn);
    if (id == "Yinv") return gen_Yinv(c, i).scaled(tni);
    if (id == "D") return psiD(i);
    if (id == "calD") return psiD(i).scaled(c.q() - c.q(-1));
    if (id == "e") {
        int jj = j ? j : i;
        if (i != jj) return gen_X(c, i) * psiD(jj);
        RatFn k = c.one() / (c.q() - c.q(-1));
        return (gen_string(c, "TinvPlus", i, c.n - 1) *
                (gen_Y(c, c.n).scaled(tn) - gen_Yinv(c, c.n).scaled(tni)) *
                gen_string(c, "Tminus", c.n - 1, i))
            .scaled(k);
    }
    if (id == "Stau") {
        DROp d = psiD(i), x = gen_X(c, j ? j : i);
        return d * x - x * d;
    }
    return gen(c, id, i, j);
}

// Ytilde = Y_1 Y_2 ... Y_n (central in the Hecke part, grading operator)
inline DROp gen_Ytilde(const Context& c) {
    DROp r = DROp::identity(c);
    for (int i = 1; i <= c.n; ++i) r = r * gen_Y(c, i);
    return r;
}

// pin the pi convention at startup: piinv equals both  (cycle) t_1  and
// t_n (cycle)  where the cycle sends 1 -> n and i -> i-1
inline bool pi_convention_selftest(int n) {
    Context c(n);
    Perm cyc(n);
    cyc[0] = n;
    for (int i = 1; i < n; ++i) cyc[i] = i;
    DROp C = DROp::term(c, cyc, Shift(n, 0), c.one());
    DROp A = C * gen_t(c, 1);
    DROp B = gen_t(c, n) * C;
    DROp piinv = gen_piinv(c);
    if (A != piinv || B != piinv) return false;
    // and pi is a two-sided inverse
    DROp I = DROp::identity(c);
    return gen_pi(c) * piinv == I && piinv * gen_pi(c) == I;
}

} // namespace daha
