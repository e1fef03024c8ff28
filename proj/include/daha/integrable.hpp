#pragma once
// Commuting families of difference operators, their symmetric combinations
// under Res, closed Hamiltonian forms, and the two-types-of-particles
// generalisations.

#include "generators.hpp"

#include <functional>

namespace daha {

// ---- the family calD_i^{(l1,l2)} ------------------------------------------
// coefficients a are indexed a[j + l1] for j = -l1..l2

// route via calD_n = X_n^{-1} sum_j a_j Y_n^j, conjugated by T-strings
inline DROp calD_route1(const Context& c, int i, int l1, int l2,
                        const std::vector<RatFn>& a) {
    if ((int)a.size() != l1 + l2 + 1)
        throw Error("calD_route1: coefficient count mismatch");
    DROp Yn = gen_Y(c, c.n), Yni = gen_Yinv(c, c.n);
    DROp sum = DROp::zero(c);
    for (int j = -l1; j <= l2; ++j) {
        const RatFn& aj = a[(size_t)(j + l1)];
        if (aj.is_zero()) continue;
        DROp p = j >= 0 ? Yn.pow(j) : Yni.pow(-j);
        sum = sum + p.scaled(aj);
    }
    DROp Dn = gen_X(c, c.n, -1) * sum;
    if (i == c.n) return Dn;
    return gen_string(c, "Tplus", i, c.n - 1) * Dn *
           gen_string(c, "Tminus", c.n - 1, i);
}

// pi-form route: calD_i = X_i^{-1} [ sum_{j>=1} a_j A^j + sum_{j>=1} a_{-j}
// B^j + a_0 ] with A = (T^{-1})^+_{i,n-1} pi^{-1} (T^{-1})^+_{1,i-1} and
// B = T^-_{i-1,1} pi T^-_{n-1,i}
inline DROp calD_route2(const Context& c, int i, int l1, int l2,
                        const std::vector<RatFn>& a) {
    if ((int)a.size() != l1 + l2 + 1)
        throw Error("calD_route2: coefficient count mismatch");
    DROp A = gen_string(c, "TinvPlus", i, c.n - 1) * gen_piinv(c) *
             gen_string(c, "TinvPlus", 1, i - 1);
    DROp B = gen_string(c, "Tminus", i - 1, 1) * gen_pi(c) *
             gen_string(c, "Tminus", c.n - 1, i);
    DROp tot = DROp::identity(c).scaled(a[(size_t)l1]);
    for (int j = 1; j <= l2; ++j) {
        const RatFn& aj = a[(size_t)(j + l1)];
        if (!aj.is_zero()) tot = tot + A.pow(j).scaled(aj);
    }
    for (int j = 1; j <= l1; ++j) {
        const RatFn& aj = a[(size_t)(l1 - j)];
        if (!aj.is_zero()) tot = tot + B.pow(j).scaled(aj);
    }
    return gen_X(c, i, -1) * tot;
}

// the one-sided building blocks calD_i^{+} and calD_i^{-}
inline DROp calD_pm(const Context& c, int i, int sign) {
    if (sign > 0)
        return gen_X(c, i, -1) * gen_string(c, "TinvPlus", i, c.n - 1) *
               gen_piinv(c) * gen_string(c, "TinvPlus", 1, i - 1);
    return gen_X(c, i, -1) * gen_string(c, "Tminus", i - 1, 1) * gen_pi(c) *
           gen_string(c, "Tminus", c.n - 1, i);
}

// elementary symmetric combination of degree r of a list of operators;
// products taken in increasing index order
inline DROp elem_sym_ops(const Context& c, const std::vector<DROp>& ops,
                         int r) {
    int m = (int)ops.size();
    if (r < 1 || r > m) throw Error("elem_sym_ops: degree out of range");
    DROp out = DROp::zero(c);
    std::vector<int> idx((size_t)r);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == r) {
            DROp p = DROp::identity(c);
            for (int t = 0; t < r; ++t) p = p * ops[(size_t)idx[(size_t)t]];
            out = out + p;
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[(size_t)k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

// symmetric combination of the family: sym is "p<r>" (power sum) or "e<r>"
// (elementary symmetric)
inline DROp calD_sym(const Context& c, int l1, int l2,
                     const std::vector<RatFn>& a, const std::string& sym) {
    if (sym.size() < 2 || (sym[0] != 'p' && sym[0] != 'e'))
        throw Error("calD_sym: bad symmetric function spec " + sym);
    int r = std::stoi(sym.substr(1));
    if (r < 1 || r > c.n)
        throw Error("calD_sym: degree out of range in " + sym);
    std::vector<DROp> Ds;
    for (int i = 1; i <= c.n; ++i) Ds.push_back(calD_route1(c, i, l1, l2, a));
    if (sym[0] == 'e') return elem_sym_ops(c, Ds, r);
    DROp out = DROp::zero(c);
    for (auto& d : Ds) out = out + d.pow(r);
    return out;
}

inline DROp res_sym(const Context& c, int l1, int l2,
                    const std::vector<RatFn>& a, const std::string& sym) {
    return calD_sym(c, l1, l2, a, sym).res();
}

// ---- closed Hamiltonian forms ----------------------------------------------

// M_{a,b,c} = a tau^{1-n} sum_i X_i^{-1} prod_{j!=i}
// (tau^2 X_i - X_j)/(X_i - X_j) t_i + b tau^{1-n} sum_i X_i^{-1} prod_{j!=i}
// (X_i - tau^2 X_j)/(X_i - X_j) t_i^{-1} + c sum_i X_i^{-1}
inline DROp closed_M(const Context& c, const RatFn& a, const RatFn& b,
                     const RatFn& cc) {
    int n = c.n;
    DROp out(c);
    Perm id = perm_id(n);
    RatFn t2 = c.tau(2), tpow = c.tau().pow(1 - n);
    for (int i = 1; i <= n; ++i) {
        RatFn ga = a * tpow * c.X(i, -1);
        RatFn gb = b * tpow * c.X(i, -1);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            RatFn num = t2 * c.X(i) - c.X(j);
            RatFn dnm = c.X(i) - c.X(j);
            ga *= num / dnm;
            gb *= (c.X(i) - t2 * c.X(j)) / dnm;
        }
        Shift sp(n, 0), sm(n, 0);
        sp[i - 1] = 1;
        sm[i - 1] = -1;
        out.add_term(id, sp, ga);
        out.add_term(id, sm, gb);
        out.add_term(id, Shift(n, 0), cc * c.X(i, -1));
    }
    return out;
}

// the (l1,l2) = (1,2) closed form
inline DROp closed_D12(const Context& c, const RatFn& am1, const RatFn& a0,
                       const RatFn& a1, const RatFn& a2) {
    int n = c.n;
    DROp out(c);
    Perm id = perm_id(n);
    RatFn q = c.q(), t2 = c.tau(2);
    RatFn t1n = c.tau().pow(1 - n), t21n = c.tau().pow(2 * (1 - n));
    for (int i = 1; i <= n; ++i) {
        RatFn g2 = t21n * a2 * c.X(i, -1);
        RatFn g1 = t1n * a1 * c.X(i, -1);
        RatFn gm = t1n * am1 * c.X(i, -1);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            RatFn dx = c.X(i) - c.X(j);
            g2 *= (t2 * c.X(i) - c.X(j)) * (q * t2 * c.X(i) - c.X(j)) /
                  (dx * (q * c.X(i) - c.X(j)));
            g1 *= (t2 * c.X(i) - c.X(j)) / dx;
            gm *= (c.X(i) - t2 * c.X(j)) / dx;
        }
        Shift s2(n, 0), s1(n, 0), sm(n, 0);
        s2[i - 1] = 2;
        s1[i - 1] = 1;
        sm[i - 1] = -1;
        out.add_term(id, s2, g2);
        out.add_term(id, s1, g1);
        out.add_term(id, sm, gm);
        out.add_term(id, Shift(n, 0), a0 * c.X(i, -1));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RatFn g = q * t21n * a2 * (t2 - c.one()) * (t2 - q) *
                      (c.X(i) + c.X(j)) /
                      ((q * c.X(i) - c.X(j)) * (q * c.X(j) - c.X(i)));
            for (int l = 1; l <= n; ++l) {
                if (l == i || l == j) continue;
                g *= (t2 * c.X(i) - c.X(l)) * (t2 * c.X(j) - c.X(l)) /
                     ((c.X(i) - c.X(l)) * (c.X(j) - c.X(l)));
            }
            Shift s(n, 0);
            s[i - 1] = 1;
            s[j - 1] = 1;
            out.add_term(id, s, g);
        }
    return out;
}

// closed forms E_m^{+} and E_m^{-}
inline DROp E_closed(const Context& c, int sign, int m) {
    int n = c.n;
    DROp out(c);
    Perm id = perm_id(n);
    RatFn t2 = c.tau(2);
    if (sign > 0) {
        RatFn pre = c.tau().pow(1 - n);
        for (int i = m; i <= n; ++i) {
            RatFn g = pre * c.X(i, -1);
            for (int j = m; j <= n; ++j) {
                if (j == i) continue;
                g *= (t2 * c.X(i) - c.X(j)) / (c.X(i) - c.X(j));
            }
            Shift s(n, 0);
            s[i - 1] = 1;
            out.add_term(id, s, g);
        }
    } else {
        RatFn pre = c.tau().pow(n - 2 * m + 1);
        for (int i = 1; i <= m; ++i) {
            RatFn g = pre * c.X(i, -1);
            for (int j = 1; j <= m; ++j) {
                if (j == i) continue;
                g *= (c.X(i) - t2 * c.X(j)) / (c.X(i) - c.X(j));
            }
            Shift s(n, 0);
            s[i - 1] = -1;
            out.add_term(id, s, g);
        }
    }
    return out;
}

// ---- leading-term structure of Res(sum_i calD_i) ---------------------------
struct LeadingTermReport {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(const std::string& msg) {
        ok = false;
        problems.push_back(msg);
    }
};

inline LeadingTermReport leading_term_check(const Context& c, int l1, int l2,
                                            const std::vector<RatFn>& a) {
    int n = c.n;
    LeadingTermReport rep;
    DROp sum = DROp::zero(c);
    for (int i = 1; i <= n; ++i) sum = sum + calD_route1(c, i, l1, l2, a);
    DROp R = sum.res();
    auto shift_str = [](const Shift& s) {
        std::string o = "[";
        for (size_t i = 0; i < s.size(); ++i)
            o += (i ? "," : "") + std::to_string(s[i]);
        return o + "]";
    };
    for (auto& [key, g] : R.terms) {
        const Shift& s = key.second;
        bool leading = false;
        for (int x : s)
            if (x == l2 || x == -l1) leading = true;
        if (leading) {
            int nz = 0;
            bool okv = true;
            for (int x : s)
                if (x != 0) {
                    ++nz;
                    if (x != l2 && x != -l1) okv = false;
                }
            if (nz != 1 || !okv)
                rep.fail("leading shift not of one-variable form " +
                         shift_str(s));
            continue;
        }
        bool allpos = true, allneg = true;
        int tot = 0;
        for (int x : s) {
            if (x <= -l1 || x >= l2)
                rep.fail("non-leading shift out of open bounds " +
                         shift_str(s));
            if (x < 0) allpos = false;
            if (x > 0) allneg = false;
            tot += x;
        }
        if (!allpos && !allneg)
            rep.fail("mixed-sign non-leading shift " + shift_str(s));
        if (tot > l2 || tot < -l1)
            rep.fail("non-leading total degree out of range " + shift_str(s));
    }
    // leading coefficients
    Perm id = perm_id(n);
    RatFn q = c.q(), t2 = c.tau(2);
    for (int i = 1; i <= n; ++i) {
        if (l2 > 0) {
            Shift s(n, 0);
            s[i - 1] = l2;
            RatFn want =
                c.tau().pow((long)l2 * (1 - n)) * a[(size_t)(l1 + l2)] *
                c.X(i, -1);
            for (int k = 0; k < l2; ++k)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    want *= (q.pow(k) * t2 * c.X(i) - c.X(j)) /
                            (q.pow(k) * c.X(i) - c.X(j));
                }
            auto it = R.terms.find({id, s});
            if (it == R.terms.end() || it->second != want)
                rep.fail("top leading coefficient mismatch at i=" +
                         std::to_string(i));
        }
        if (l1 > 0) {
            Shift s(n, 0);
            s[i - 1] = -l1;
            RatFn want = c.tau().pow((long)l1 * (1 - n)) * a[0] * c.X(i, -1);
            for (int k = 0; k < l1; ++k)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    want *= (c.X(i) - q.pow(k) * t2 * c.X(j)) /
                            (c.X(i) - q.pow(k) * c.X(j));
                }
            auto it = R.terms.find({id, s});
            if (it == R.terms.end() || it->second != want)
                rep.fail("bottom leading coefficient mismatch at i=" +
                         std::to_string(i));
        }
    }
    return rep;
}

// ---- two types of particles -------------------------------------------------

// difference operator in X_1..X_{n1} (multiplicative shifts by powers of q)
// and Y_1..Y_{n2} (multiplicative shifts by powers of t; for the
// tau-parametrised operator, t = tau^2)
struct TwoTypeOp {
    int n1 = 0, n2 = 0;
    VarsPtr vars;
    // key: (xshift, yshift)
    std::map<std::pair<std::vector<int>, std::vector<int>>, RatFn> terms;

    void add_term(const std::vector<int>& xs, const std::vector<int>& ys,
                  const RatFn& g) {
        if (g.is_zero()) return;
        auto key = std::make_pair(xs, ys);
        auto it = terms.find(key);
        if (it == terms.end()) terms.emplace(key, g);
        else {
            it->second += g;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool operator==(const TwoTypeOp& o) const { return terms == o.terms; }
};

struct TwoTypeCtx {
    int n1, n2;
    VarsPtr vars;
    size_t xbase, ybase;
    std::vector<std::string> head; // leading scalar variable names

    TwoTypeCtx(int N1, int N2, std::vector<std::string> scalars,
               const std::string& xname, const std::string& yname)
        : n1(N1), n2(N2), head(scalars) {
        std::vector<std::string> names = scalars;
        xbase = names.size();
        for (int i = 1; i <= N1; ++i)
            names.push_back(xname + std::to_string(i));
        ybase = names.size();
        for (int i = 1; i <= N2; ++i)
            names.push_back(yname + std::to_string(i));
        vars = make_vars(std::move(names));
    }
    RatFn sc(size_t k, int e = 1) const {
        return RatFn::variable(vars, k, e);
    }
    RatFn X(int i, int e = 1) const {
        return RatFn::variable(vars, xbase + (size_t)i - 1, e);
    }
    RatFn Y(int i, int e = 1) const {
        return RatFn::variable(vars, ybase + (size_t)i - 1, e);
    }
    RatFn one() const { return RatFn::constant(vars, Rat(1)); }
    std::vector<int> ex(int i) const { // unit x-shift vector
        std::vector<int> v(n1, 0);
        if (i) v[i - 1] = 1;
        return v;
    }
    std::vector<int> ey(int i) const {
        std::vector<int> v(n2, 0);
        if (i) v[i - 1] = 1;
        return v;
    }
};

// generalised vDE operator H_{t0,t1,t2,t3}; variables u_i = q^{x_i},
// v_i = q^{y_i}; scalars q, t, t0..t3
inline TwoTypeOp twotype_H(int N1, int N2) {
    TwoTypeCtx c(N1, N2, {"q", "t", "t0", "t1", "t2", "t3"}, "u", "v");
    RatFn q = c.sc(0), t = c.sc(1), t0 = c.sc(2), t1 = c.sc(3), t2 = c.sc(4),
          t3 = c.sc(5);
    TwoTypeOp H;
    H.n1 = N1;
    H.n2 = N2;
    H.vars = c.vars;
    std::vector<int> zx(N1, 0), zy(N2, 0);
    auto emit = [&](const std::vector<int>& xs, const std::vector<int>& ys,
                    const RatFn& g) {
        H.add_term(xs, ys, g);     // the shifted part of (T - 1)
        H.add_term(zx, zy, -g);    // minus identity
    };
    for (int i = 1; i <= N1; ++i) {
        RatFn g = (c.one() - t1 * c.X(i)) * (c.one() - t2 * c.X(i));
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (t.pow(-1) - c.X(i) / c.X(j)) / (c.one() - c.X(i) / c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (q - c.X(i) / c.Y(j)) / (c.one() - c.X(i) / c.Y(j));
        auto xs = zx;
        xs[i - 1] = 1;
        emit(xs, zy, g);
    }
    for (int i = 1; i <= N1; ++i) {
        RatFn g = t1 * t2 / (q * t0 * t3) * (c.one() - t0 * c.X(i)) *
                  (c.one() - t3 * c.X(i));
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (t - c.X(i) / c.X(j)) / (c.one() - c.X(i) / c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (t - c.X(i) / c.Y(j)) / (q * t - c.X(i) / c.Y(j));
        auto xs = zx;
        xs[i - 1] = -1;
        emit(xs, zy, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = (c.one() - q) / (c.one() - t.pow(-1)) *
                  (c.one() - t1 * c.Y(i)) * (c.one() - t2 * c.Y(i));
        for (int j = 1; j <= N1; ++j)
            g *= (t.pow(-1) - c.Y(i) / c.X(j)) /
                 (c.one() - c.Y(i) / c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q - c.Y(i) / c.Y(j)) / (c.one() - c.Y(i) / c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = -1;
        emit(zx, ys, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = t1 * t2 * (c.one() - q.pow(-1)) /
                  (q * t0 * t3 * (c.one() - t)) *
                  (c.one() - t0 * t * q * c.Y(i)) *
                  (c.one() - t3 * t * q * c.Y(i));
        for (int j = 1; j <= N1; ++j)
            g *= (q.pow(-1) - c.Y(i) / c.X(j)) /
                 (q.pow(-1) * t.pow(-1) - c.Y(i) / c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q.pow(-1) - c.Y(i) / c.Y(j)) /
                 (c.one() - c.Y(i) / c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = 1;
        emit(zx, ys, g);
    }
    return H;
}

// the hat-parametrised limit H_{t0h, t1h}; scalars q, t, th0, th1
inline TwoTypeOp twotype_Hhat(int N1, int N2) {
    TwoTypeCtx c(N1, N2, {"q", "t", "th0", "th1"}, "u", "v");
    RatFn q = c.sc(0), t = c.sc(1), th0 = c.sc(2), th1 = c.sc(3);
    TwoTypeOp H;
    H.n1 = N1;
    H.n2 = N2;
    H.vars = c.vars;
    std::vector<int> zx(N1, 0), zy(N2, 0);
    auto emit = [&](const std::vector<int>& xs, const std::vector<int>& ys,
                    const RatFn& g) {
        H.add_term(xs, ys, g);
        H.add_term(zx, zy, -g);
    };
    for (int i = 1; i <= N1; ++i) {
        RatFn g = c.one() - th0 * th1 * c.X(i);
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (t.pow(-1) - c.X(i) / c.X(j)) / (c.one() - c.X(i) / c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (q - c.X(i) / c.Y(j)) / (c.one() - c.X(i) / c.Y(j));
        auto xs = zx;
        xs[i - 1] = 1;
        emit(xs, zy, g);
    }
    for (int i = 1; i <= N1; ++i) {
        RatFn g = th0.pow(2) * (c.one() - c.X(i));
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (t - c.X(i) / c.X(j)) / (c.one() - c.X(i) / c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (t - c.X(i) / c.Y(j)) / (q * t - c.X(i) / c.Y(j));
        auto xs = zx;
        xs[i - 1] = -1;
        emit(xs, zy, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = (c.one() - q) / (c.one() - t.pow(-1)) *
                  (c.one() - th0 * th1 * c.Y(i));
        for (int j = 1; j <= N1; ++j)
            g *= (t.pow(-1) - c.Y(i) / c.X(j)) /
                 (c.one() - c.Y(i) / c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q - c.Y(i) / c.Y(j)) / (c.one() - c.Y(i) / c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = -1;
        emit(zx, ys, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = th0.pow(2) * (c.one() - q.pow(-1)) / (c.one() - t) *
                  (c.one() - t * q * c.Y(i));
        for (int j = 1; j <= N1; ++j)
            g *= (q.pow(-1) - c.Y(i) / c.X(j)) /
                 (q.pow(-1) * t.pow(-1) - c.Y(i) / c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q.pow(-1) - c.Y(i) / c.Y(j)) /
                 (c.one() - c.Y(i) / c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = 1;
        emit(zx, ys, g);
    }
    return H;
}

// multiplicative two-type operator M~_{t0h,t1h}; scalars q, tau, th0, th1;
// x-shifts multiply X_i by powers of q, y-shifts multiply Y_i by powers of
// tau^2
inline TwoTypeOp twotype_M(int N1, int N2) {
    TwoTypeCtx c(N1, N2, {"q", "tau", "th0", "th1"}, "X", "Y");
    RatFn q = c.sc(0), tau = c.sc(1), th0 = c.sc(2), th1 = c.sc(3);
    RatFn t2 = tau.pow(2);
    RatFn at = -th0.pow(2), bt = -th0 * th1, ct = th0 * (th0 + th1);
    RatFn yfac = (c.one() - q) / (c.one() - tau.pow(-2));
    TwoTypeOp M;
    M.n1 = N1;
    M.n2 = N2;
    M.vars = c.vars;
    std::vector<int> zx(N1, 0), zy(N2, 0);
    for (int i = 1; i <= N1; ++i) {
        RatFn g = at * c.X(i, -1);
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (t2 * c.X(i) - c.X(j)) / (c.X(i) - c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (t2 * c.X(i) - c.Y(j)) / (q * t2 * c.X(i) - c.Y(j));
        auto xs = zx;
        xs[i - 1] = 1;
        M.add_term(xs, zy, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = at * yfac * c.Y(i, -1);
        for (int j = 1; j <= N1; ++j)
            g *= (q.pow(-1) * c.Y(i) - c.X(j)) /
                 (q.pow(-1) * tau.pow(-2) * c.Y(i) - c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q.pow(-1) * c.Y(i) - c.Y(j)) / (c.Y(i) - c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = -1;
        M.add_term(zx, ys, g);
    }
    for (int i = 1; i <= N1; ++i) {
        RatFn g = bt * c.X(i, -1);
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            g *= (tau.pow(-2) * c.X(i) - c.X(j)) / (c.X(i) - c.X(j));
        }
        for (int j = 1; j <= N2; ++j)
            g *= (q * c.X(i) - c.Y(j)) / (c.X(i) - c.Y(j));
        auto xs = zx;
        xs[i - 1] = -1;
        M.add_term(xs, zy, g);
    }
    for (int i = 1; i <= N2; ++i) {
        RatFn g = bt * yfac * c.Y(i, -1);
        for (int j = 1; j <= N1; ++j)
            g *= (tau.pow(-2) * c.Y(i) - c.X(j)) / (c.Y(i) - c.X(j));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            g *= (q * c.Y(i) - c.Y(j)) / (c.Y(i) - c.Y(j));
        }
        auto ys = zy;
        ys[i - 1] = 1;
        M.add_term(zx, ys, g);
    }
    RatFn g0(c.vars);
    for (int i = 1; i <= N1; ++i) g0 += ct * c.X(i, -1);
    for (int i = 1; i <= N2; ++i) g0 += ct * yfac * c.Y(i, -1);
    M.add_term(zx, zy, g0);
    return M;
}

// the two-type rational-function identity (symbolic, exact)
inline bool twotype_identity_check(int N1, int N2) {
    if (N1 + N2 == 0) return true;
    std::vector<std::string> names{"s", "t"};
    for (int i = 1; i <= N1; ++i) names.push_back("z" + std::to_string(i));
    for (int i = 1; i <= N2; ++i) names.push_back("w" + std::to_string(i));
    VarsPtr vs = make_vars(std::move(names));
    auto V = [&](size_t k) { return RatFn::variable(vs, k); };
    RatFn s = V(0), t = V(1);
    auto z = [&](int i) { return V(2 + (size_t)i - 1); };
    auto w = [&](int i) { return V(2 + (size_t)N1 + (size_t)i - 1); };
    RatFn one = RatFn::constant(vs, Rat(1));
    RatFn lhs(vs), rhs(vs);
    for (int i = 1; i <= N1; ++i) {
        RatFn v = z(i);
        for (int j = 1; j <= N1; ++j) {
            if (j == i) continue;
            v *= (t * z(j) - z(i)) / (z(j) - z(i));
        }
        for (int j = 1; j <= N2; ++j)
            v *= (s * w(j) - z(i)) / (w(j) - z(i));
        lhs += v;
        rhs += z(i);
    }
    RatFn fac = (one - s) / (one - t);
    for (int i = 1; i <= N2; ++i) {
        RatFn v = fac * w(i);
        for (int j = 1; j <= N1; ++j)
            v *= (t * z(j) - w(i)) / (z(j) - w(i));
        for (int j = 1; j <= N2; ++j) {
            if (j == i) continue;
            v *= (s * w(j) - w(i)) / (w(j) - w(i));
        }
        lhs += v;
        rhs += fac * w(i);
    }
    return lhs == rhs;
}

} // namespace daha
