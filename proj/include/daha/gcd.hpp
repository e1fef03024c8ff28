#pragma once
// Exact multivariate polynomial division and gcd (primitive PRS).

#include "poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#ifdef DAHA_GCD_STATS
#include <chrono>
#endif

namespace daha {

// Exact division in graded lex: returns quotient if d divides f exactly.
inline std::optional<Poly> try_divide(const Poly& f, const Poly& d) {
    if (d.is_zero()) throw Error("try_divide: division by zero polynomial");
    Poly q(f.vars), r = f;
    const Mono& dm = d.lead_mono();
    const Rat& dc = d.lead_coeff();
    while (!r.is_zero()) {
        const Mono& rm = r.lead_mono();
        Mono t(rm);
        for (size_t i = 0; i < t.size(); ++i) {
            t[i] -= dm[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rat c = r.lead_coeff() / dc;
        q.add_term(t, c);
        r -= d * Poly::monomial(d.vars, t, c);
    }
    return q;
}

inline Poly divide_exact(const Poly& f, const Poly& d) {
    auto q = try_divide(f, d);
    if (!q) throw Error("divide_exact: not divisible");
    return *q;
}

// coefficients of f viewed as univariate in variable v; index = exponent of
// v, entries have v-exponent zeroed
inline std::vector<Poly> coeffs_in(const Poly& f, size_t v) {
    int d = f.degree_in(v);
    std::vector<Poly> out((size_t)std::max(d + 1, 1), Poly(f.vars));
    for (auto& [m, c] : f.terms) {
        Mono nm(m);
        int e = nm[v];
        nm[v] = 0;
        out[(size_t)e].add_term(nm, c);
    }
    return out;
}

inline Poly from_coeffs(const std::vector<Poly>& cs, size_t v, VarsPtr vars) {
    Poly out(vars);
    for (size_t e = 0; e < cs.size(); ++e)
        for (auto& [m, c] : cs[e].terms) {
            Mono nm(m);
            nm[v] += (int)e;
            out.add_term(nm, c);
        }
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b);

// gcd of the coefficient polys of f in variable v
inline Poly content_in(const Poly& f, size_t v) {
    Poly g(f.vars);
    for (auto& c : coeffs_in(f, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// pseudo-remainder of a by b in variable v (b nonzero in v)
inline Poly prem(Poly a, const Poly& b, size_t v) {
    int db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    const Poly& lb = bc[(size_t)db];
    int da = a.degree_in(v);
    while (!a.is_zero() && (da = a.degree_in(v)) >= db) {
        auto ac = coeffs_in(a, v);
        const Poly& la = ac[(size_t)da];
        // a <- lb*a - la * v^{da-db} * b
        Poly shift = Poly::variable(a.vars, v, da - db);
        a = lb * a - la * shift * b;
    }
    return a;
}

namespace gcd_detail {

#ifdef DAHA_GCD_STATS
struct GcdStats {
    long calls = 0, proj_hits = 0, mod_hits = 0, heu_hits = 0, prs_falls = 0;
    double t_proj = 0, t_mod = 0, t_heu = 0, t_prs = 0;
};
inline GcdStats& gcd_stats() {
    static GcdStats s;
    return s;
}
#endif

// degree of the univariate gcd of a and b in variable v, with every other
// variable evaluated at pt.  Returns -1 if the projection is inconclusive
// (the leading coefficients of both a and b in v vanish at pt).  A valid
// projected degree is an upper-bound witness: deg_v(gcd(a,b)) <= result.
inline int proj_gcd_degree(const Poly& a, const Poly& b, size_t v,
                           const std::vector<Rat>& pt) {
    auto project = [&](const Poly& p) {
        std::vector<Rat> out((size_t)p.degree_in(v) + 1, Rat(0));
        for (auto& [m, c] : p.terms) {
            Rat w = c;
            for (size_t u = 0; u < m.size(); ++u)
                if (u != v && m[u]) w *= rat_pow(pt[u], m[u]);
            out[(size_t)m[v]] += w;
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<Rat> pa = project(a), pb = project(b);
    bool la = (int)pa.size() - 1 == a.degree_in(v);
    bool lb = (int)pb.size() - 1 == b.degree_in(v);
    if (!la && !lb) return -1;
    // univariate Euclid
    if (pa.size() == 1 && pa[0] == 0) return -1;
    if (pb.size() == 1 && pb[0] == 0) return -1;
    while (true) {
        if (pb.size() > pa.size()) std::swap(pa, pb);
        if (pb.size() == 1) return pb[0] == 0 ? (int)pa.size() - 1 : 0;
        // pa <- pa mod pb
        Rat lc = pb.back();
        for (size_t k = pa.size(); k-- >= pb.size();) {
            Rat f = pa[k] / lc;
            if (f == 0) continue;
            for (size_t j = 0; j < pb.size(); ++j)
                pa[k - pb.size() + 1 + j] -= f * pb[j];
        }
        pa.resize(pb.size() - 1);
        while (pa.size() > 1 && pa.back() == 0) pa.pop_back();
        if (pa.empty()) pa.assign(1, Rat(0));
        if (pa.size() == 1 && pa[0] == 0) return (int)pb.size() - 1;
    }
}

// scale so all coefficients are integers
inline Poly clear_denominators(const Poly& p) {
    mpz_class L(1);
    for (auto& [m, c] : p.terms)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
    return L == 1 ? p : p.scaled(Rat(L));
}

// heuristic gcd: evaluate one variable at a large integer, recurse, and
// reconstruct the gcd from its base-xi digits; every candidate is verified
// by exact trial division, so a returned value is always correct
inline std::optional<Poly> heu_gcd(const Poly& a, const Poly& b) {
    // inputs assumed integer-coefficient, nonconstant, nonzero
    // evaluate the variable of smallest degree: digit counts (and hence the
    // integer blow-up across recursion levels) scale with that degree
    size_t v = a.nv();
    int vdeg = 0;
    for (size_t w = 0; w < a.nv(); ++w) {
        int d = std::max(a.degree_in(w), b.degree_in(w));
        if (d > 0 && (v == a.nv() || d < vdeg)) {
            v = w;
            vdeg = d;
        }
    }
    if (v == a.nv()) return std::nullopt;
    mpz_class maxn(0);
    auto upd = [&](const Poly& p) {
        for (auto& [m, c] : p.terms) {
            mpz_class ab = abs(c.get_num());
            if (ab > maxn) maxn = ab;
        }
    };
    upd(a);
    upd(b);
    mpz_class xi = 2 * maxn + 29;
    int max_digits = a.degree_in(v) + b.degree_in(v) + 2;
    // give up (fall back to the exact PRS) once evaluated coefficients would
    // exceed ~64k bits: past that point the heuristic is slower than the PRS
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (size_t)vdeg > (1u << 22))
        return std::nullopt;
    for (int attempt = 0; attempt < 3; ++attempt, xi = xi * 65521 + 29) {
        auto eval = [&](const Poly& p) {
            Poly out(p.vars);
            for (auto& [m, c] : p.terms) {
                Mono nm(m);
                int e = nm[v];
                nm[v] = 0;
                mpz_class f;
                mpz_pow_ui(f.get_mpz_t(), xi.get_mpz_t(), (unsigned long)e);
                out.add_term(nm, c * Rat(f));
            }
            return out;
        };
        Poly A = eval(a), B = eval(b);
        if (A.is_zero() || B.is_zero()) continue;
        Poly G(a.vars);
        if (A.is_constant() && B.is_constant()) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), A.constant_value().get_num().get_mpz_t(),
                    B.constant_value().get_num().get_mpz_t());
            G = Poly::constant(a.vars, Rat(g));
        } else {
            auto sub = heu_gcd(A, B);
            if (!sub) continue;
            G = *sub;
        }
        // reconstruct candidate from base-xi digits (symmetric remainders)
        Poly cand(a.vars);
        mpz_class half = xi / 2;
        bool bad = false;
        for (int e = 0; !G.is_zero(); ++e) {
            if (e > max_digits) {
                bad = true;
                break;
            }
            Poly digit(a.vars), next(a.vars);
            for (auto& [m, c] : G.terms) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), c.get_num().get_mpz_t(),
                           xi.get_mpz_t());
                if (r > half) r -= xi;
                if (r != 0) digit.add_term(m, Rat(r));
                mpz_class qz = (c.get_num() - r) / xi;
                if (qz != 0) next.add_term(m, Rat(qz));
            }
            for (auto& [m, c] : digit.terms) {
                Mono nm(m);
                nm[v] = e;
                cand.add_term(nm, c);
            }
            G = std::move(next);
        }
        if (bad || cand.is_zero()) continue;
        // integer primitive part
        mpz_class cont(0);
        for (auto& [m, c] : cand.terms)
            mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(),
                    c.get_num().get_mpz_t());
        if (cont > 1) cand = cand.scaled(Rat(mpz_class(1), cont));
        // a constant candidate proves nothing (1 divides everything); treat
        // it as a failed attempt so the caller falls back to the exact PRS
        if (cand.is_constant()) continue;
        if (try_divide(a, cand) && try_divide(b, cand)) return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Modular multivariate gcd (Brown's algorithm).  Compute the gcd mod a large
// word-sized prime by evaluating all but one variable on a grid, taking
// univariate gcds, and reconstructing with Newton interpolation; lift the
// result to the integers and verify by exact trial division.  A constant
// modular gcd certifies coprimality (the modular image of the true gcd always
// divides the modular gcd), and any nonconstant candidate is verified, so the
// routine is sound; randomness only affects how often it has to retry.
namespace modular {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// polynomial over Z_p, same term order as Poly so begin() is the lead term
using MPoly = std::map<Mono, u32, MonoGL>;

struct ModCtx {
    u32 p;
    std::mt19937_64 rng;
    explicit ModCtx(u32 prime, u64 seed) : p(prime), rng(seed) {}
    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p || s < a ? s - p : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 mul(u32 a, u32 b) const { return (u32)((u64)a * b % p); }
    u32 pow(u32 a, u64 e) const {
        u32 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u32 inv(u32 a) const { return pow(a, p - 2); }
    u32 rnd_nonzero() { return 1 + (u32)(rng() % (p - 1)); }
};

inline void madd_term(MPoly& f, const Mono& m, u32 c, const ModCtx& ctx) {
    if (c == 0) return;
    auto [it, fresh] = f.emplace(m, c);
    if (!fresh) {
        it->second = ctx.add(it->second, c);
        if (it->second == 0) f.erase(it);
    }
}

inline int mdeg_in(const MPoly& f, size_t v) {
    int d = 0;
    for (auto& [m, c] : f) d = std::max(d, m[v]);
    return d;
}

inline bool mis_constant(const MPoly& f) {
    return f.empty() ||
           (f.size() == 1 && mono_deg(f.begin()->first) == 0);
}

inline MPoly mscale(const MPoly& f, u32 s, const ModCtx& ctx) {
    MPoly r;
    if (s == 0) return r;
    for (auto& [m, c] : f) r.emplace(m, ctx.mul(c, s));
    return r;
}

inline MPoly mmul(const MPoly& a, const MPoly& b, const ModCtx& ctx) {
    MPoly r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Mono m(ma);
            for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            madd_term(r, m, ctx.mul(ca, cb), ctx);
        }
    return r;
}

inline MPoly msub(const MPoly& a, const MPoly& b, const ModCtx& ctx) {
    MPoly r = a;
    for (auto& [m, c] : b) madd_term(r, m, ctx.sub(0, c), ctx);
    return r;
}

// substitute v = b, folding the exponent into the coefficient
inline MPoly meval(const MPoly& f, size_t v, u32 b, const ModCtx& ctx) {
    MPoly r;
    for (auto& [m, c] : f) {
        Mono nm(m);
        int e = nm[v];
        nm[v] = 0;
        madd_term(r, nm, ctx.mul(c, ctx.pow(b, (u64)e)), ctx);
    }
    return r;
}

// coefficient of v^deg_v(f), a polynomial in the remaining variables
inline MPoly mlead_in(const MPoly& f, size_t v) {
    int d = mdeg_in(f, v);
    MPoly r;
    for (auto& [m, c] : f)
        if (m[v] == d) {
            Mono nm(m);
            nm[v] = 0;
            r.emplace(std::move(nm), c);
        }
    return r;
}

inline std::optional<MPoly> mdiv_exact(const MPoly& f, const MPoly& d,
                                       const ModCtx& ctx) {
    if (d.empty()) return std::nullopt;
    MPoly q, r = f;
    const Mono& dm = d.begin()->first;
    u32 dinv = ctx.inv(d.begin()->second);
    while (!r.empty()) {
        const Mono& rm = r.begin()->first;
        Mono t(rm);
        for (size_t i = 0; i < t.size(); ++i) {
            t[i] -= dm[i];
            if (t[i] < 0) return std::nullopt;
        }
        u32 c = ctx.mul(r.begin()->second, dinv);
        q.emplace(t, c);
        for (auto& [m, dc] : d) {
            Mono nm(t);
            for (size_t i = 0; i < nm.size(); ++i) nm[i] += m[i];
            madd_term(r, nm, ctx.sub(0, ctx.mul(c, dc)), ctx);
        }
    }
    return q;
}

// monic univariate gcd in variable v (both inputs involve only v)
inline MPoly mgcd_uni(const MPoly& a, const MPoly& b, size_t v,
                      const ModCtx& ctx) {
    auto tovec = [&](const MPoly& f) {
        std::vector<u32> out((size_t)mdeg_in(f, v) + 1, 0);
        for (auto& [m, c] : f) out[(size_t)m[v]] = c;
        return out;
    };
    std::vector<u32> pa = tovec(a), pb = tovec(b);
    auto trim = [](std::vector<u32>& x) {
        while (x.size() > 1 && x.back() == 0) x.pop_back();
    };
    trim(pa);
    trim(pb);
    while (!(pb.size() == 1 && pb[0] == 0)) {
        if (pb.size() > pa.size()) {
            std::swap(pa, pb);
            continue;
        }
        u32 lcinv = ctx.inv(pb.back());
        for (size_t k = pa.size(); k-- >= pb.size();) {
            u32 f = ctx.mul(pa[k], lcinv);
            if (f == 0) continue;
            for (size_t j = 0; j < pb.size(); ++j)
                pa[k - pb.size() + 1 + j] =
                    ctx.sub(pa[k - pb.size() + 1 + j], ctx.mul(f, pb[j]));
        }
        pa.resize(std::max<size_t>(pb.size() - 1, 1));
        trim(pa);
        std::swap(pa, pb);
    }
    trim(pa);
    u32 lcinv = ctx.inv(pa.back());
    MPoly g;
    size_t nv = a.empty() ? b.begin()->first.size() : a.begin()->first.size();
    for (size_t k = 0; k < pa.size(); ++k)
        if (pa[k]) {
            Mono m(nv, 0);
            m[v] = (int)k;
            g.emplace(std::move(m), ctx.mul(pa[k], lcinv));
        }
    return g;
}

constexpr int MOD_MAX_RESTARTS = 24;

inline std::optional<MPoly> mgcd_p(const MPoly& A, const MPoly& B,
                                   ModCtx& ctx);

// fold gcd over the coefficients of f viewed as a polynomial in v
inline std::optional<MPoly> mcontent_in(const MPoly& f, size_t v,
                                        ModCtx& ctx) {
    std::map<int, MPoly> coeffs;
    for (auto& [m, c] : f) {
        Mono nm(m);
        int e = nm[v];
        nm[v] = 0;
        coeffs[e].emplace(std::move(nm), c);
    }
    MPoly g;
    for (auto& [e, cf] : coeffs) {
        if (g.empty()) {
            g = cf;
            continue;
        }
        auto ng = mgcd_p(g, cf, ctx);
        if (!ng) return std::nullopt;
        g = *ng;
        if (mis_constant(g)) break;
    }
    if (!g.empty()) g = mscale(g, ctx.inv(g.begin()->second), ctx);
    return g;
}

// gcd in Z_p[vars], normalized with lead coefficient 1; nullopt on repeated
// bad luck (caller switches prime / falls back)
inline std::optional<MPoly> mgcd_p(const MPoly& A, const MPoly& B,
                                   ModCtx& ctx) {
    auto monic = [&](MPoly f) {
        if (!f.empty() && f.begin()->second != 1)
            f = mscale(f, ctx.inv(f.begin()->second), ctx);
        return f;
    };
    auto one = [&] {
        size_t nv = A.empty() ? B.begin()->first.size()
                              : A.begin()->first.size();
        MPoly f;
        f.emplace(Mono(nv, 0), 1u);
        return f;
    };
    if (A.empty()) return monic(B);
    if (B.empty()) return monic(A);
    if (mis_constant(A) || mis_constant(B)) return one();

    size_t nv = A.begin()->first.size();
    std::vector<size_t> shared, active;
    for (size_t v = 0; v < nv; ++v) {
        int da = mdeg_in(A, v), db = mdeg_in(B, v);
        if (da > 0 || db > 0) active.push_back(v);
        if (da > 0 && db > 0) shared.push_back(v);
    }
    if (shared.empty()) return one();
    if (active.size() == 1)
        return mgcd_uni(A, B, active[0], ctx);

    // per-variable gcd degrees via univariate projections.  A projected
    // degree can only overestimate (unlucky point) — never underestimate —
    // so "all zero" certifies a constant gcd.
    std::vector<int> dG(nv, 0);
    for (size_t v : shared) {
        bool got = false;
        for (int tries = 0; tries < 6 && !got; ++tries) {
            MPoly ea = A, eb = B;
            for (size_t w : active)
                if (w != v) {
                    u32 b = ctx.rnd_nonzero();
                    ea = meval(ea, w, b, ctx);
                    eb = meval(eb, w, b, ctx);
                }
            if (mdeg_in(ea, v) != mdeg_in(A, v) &&
                mdeg_in(eb, v) != mdeg_in(B, v))
                continue; // both lead coefficients vanished: retry
            if (ea.empty() || eb.empty()) continue;
            dG[v] = mdeg_in(mgcd_uni(ea, eb, v, ctx), v);
            got = true;
        }
        if (!got) return std::nullopt;
    }
    bool allzero = true;
    for (size_t v : shared)
        if (dG[v] > 0) allzero = false;
    if (allzero) return one();

    // main variable: largest projected gcd degree
    size_t m = shared[0];
    for (size_t v : shared)
        if (dG[v] > dG[m]) m = v;

    // contents with respect to m
    auto cA = mcontent_in(A, m, ctx);
    auto cB = mcontent_in(B, m, ctx);
    if (!cA || !cB) return std::nullopt;
    MPoly Ap = A, Bp = B;
    if (!mis_constant(*cA)) {
        auto q = mdiv_exact(A, *cA, ctx);
        if (!q) return std::nullopt;
        Ap = *q;
    }
    if (!mis_constant(*cB)) {
        auto q = mdiv_exact(B, *cB, ctx);
        if (!q) return std::nullopt;
        Bp = *q;
    }
    MPoly cG = one();
    if (!mis_constant(*cA) && !mis_constant(*cB)) {
        auto g = mgcd_p(*cA, *cB, ctx);
        if (!g) return std::nullopt;
        cG = *g;
    }

    MPoly lcA = mlead_in(Ap, m), lcB = mlead_in(Bp, m);
    auto gam = mgcd_p(lcA, lcB, ctx);
    if (!gam) return std::nullopt;
    MPoly gamma = *gam;

    // interpolation bounds for H = (gamma / lc_m(G)) * G
    std::vector<size_t> ovs;
    std::vector<int> nb(nv, 0);
    for (size_t v = 0; v < nv; ++v) {
        if (v == m) continue;
        int da = mdeg_in(Ap, v), db = mdeg_in(Bp, v);
        if (da == 0 && db == 0) continue;
        ovs.push_back(v);
        nb[v] = std::min(dG[v], std::min(da, db)) + mdeg_in(gamma, v);
    }

    for (int restart = 0; restart < MOD_MAX_RESTARTS; ++restart) {
        bool bad = false;     // bad evaluation: retry with fresh points
        bool shrink = false;  // saw a smaller univariate degree: dG[m] drops
        // recursive grid interpolation over ovs[i..]
        std::function<MPoly(size_t, const MPoly&, const MPoly&, const MPoly&)>
            rec = [&](size_t i, const MPoly& a, const MPoly& b,
                      const MPoly& g) -> MPoly {
            if (bad || shrink) return MPoly{};
            if (i == ovs.size()) {
                // univariate in m; g is the evaluated gamma (a scalar)
                if (mdeg_in(a, m) != mdeg_in(Ap, m) &&
                    mdeg_in(b, m) != mdeg_in(Bp, m)) {
                    bad = true;
                    return MPoly{};
                }
                if (a.empty() || b.empty()) {
                    bad = true;
                    return MPoly{};
                }
                MPoly u = mgcd_uni(a, b, m, ctx);
                int d = mdeg_in(u, m);
                if (d < dG[m]) {
                    dG[m] = d;
                    shrink = true;
                    return MPoly{};
                }
                if (d > dG[m]) {
                    bad = true;
                    return MPoly{};
                }
                u32 s = g.empty() ? 0 : g.begin()->second;
                if (s == 0) {
                    bad = true;
                    return MPoly{};
                }
                return mscale(u, s, ctx);
            }
            size_t v = ovs[i];
            MPoly newt, prod = [&] {
                MPoly f;
                f.emplace(Mono(nv, 0), 1u);
                return f;
            }();
            std::set<u32> used;
            for (int k = 0; k <= nb[v]; ++k) {
                u32 pt;
                do pt = ctx.rnd_nonzero();
                while (used.count(pt));
                used.insert(pt);
                MPoly hj = rec(i + 1, meval(a, v, pt, ctx),
                               meval(b, v, pt, ctx), meval(g, v, pt, ctx));
                if (bad || shrink) return MPoly{};
                MPoly corr = msub(hj, meval(newt, v, pt, ctx), ctx);
                if (!corr.empty()) {
                    u32 pv = meval(prod, v, pt, ctx).begin()->second;
                    corr = mscale(corr, ctx.inv(pv), ctx);
                    newt = [&] {
                        MPoly s = newt;
                        for (auto& [mm, cc] : mmul(corr, prod, ctx))
                            madd_term(s, mm, cc, ctx);
                        return s;
                    }();
                }
                // prod *= (x_v - pt)
                MPoly lin;
                Mono mv(nv, 0);
                mv[v] = 1;
                lin.emplace(std::move(mv), 1u);
                lin.emplace(Mono(nv, 0), ctx.sub(0, pt));
                prod = mmul(prod, lin, ctx);
            }
            return newt;
        };
        MPoly H = rec(0, Ap, Bp, gamma);
        if (shrink) {
            bool all0 = true;
            for (size_t v : shared)
                if (dG[v] > 0) all0 = false;
            if (all0) return mis_constant(cG) ? one() : monic(cG);
            continue;
        }
        if (bad || H.empty()) continue;
        auto cH = mcontent_in(H, m, ctx);
        if (!cH) return std::nullopt;
        MPoly G = H;
        if (!mis_constant(*cH)) {
            auto q = mdiv_exact(H, *cH, ctx);
            if (!q) continue;
            G = *q;
        }
        if (!mis_constant(cG)) G = mmul(G, cG, ctx);
        return monic(G);
    }
    return std::nullopt;
}

} // namespace modular

// integer-coefficient gcd candidate via the modular algorithm; returns the
// gcd over Q (lead coefficient 1) or nullopt if every prime failed.  Constant
// results are certified, nonconstant ones are verified by trial division.
inline std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
    static const modular::u32 PRIMES[] = {2147483647u, 2147483629u,
                                          2147483587u, 2147483579u};
    mpz_class delta;
    mpz_gcd(delta.get_mpz_t(), a.lead_coeff().get_num().get_mpz_t(),
            b.lead_coeff().get_num().get_mpz_t());

    mpz_class crt_mod(0);
    std::map<Mono, mpz_class, MonoGL> crt; // symmetric residues
    Mono best_lead;
    int failures = 0;

    for (modular::u32 p : PRIMES) {
        if (mpz_fdiv_ui(a.lead_coeff().get_num().get_mpz_t(), p) == 0 ||
            mpz_fdiv_ui(b.lead_coeff().get_num().get_mpz_t(), p) == 0)
            continue;
        modular::ModCtx ctx(p, 0x9e3779b97f4a7c15ull ^ p);
        auto tomod = [&](const Poly& f) {
            modular::MPoly r;
            for (auto& [m, c] : f.terms) {
                modular::u32 cm =
                    (modular::u32)mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
                if (cm) r.emplace(m, cm);
            }
            return r;
        };
        auto g = modular::mgcd_p(tomod(a), tomod(b), ctx);
        if (!g) {
            if (++failures >= 2) return std::nullopt;
            continue;
        }
        if (modular::mis_constant(*g))
            return Poly::constant(a.vars, Rat(1)); // certified coprime
        // impose integer lead coefficient delta, then merge via CRT
        modular::u32 dm = (modular::u32)mpz_fdiv_ui(delta.get_mpz_t(), p);
        modular::MPoly gs = modular::mscale(*g, dm, ctx);
        const Mono& lead = gs.begin()->first;
        if (crt_mod == 0 || MonoGL{}(best_lead, lead)) {
            // first candidate, or strictly smaller lead: previous primes
            // were unlucky — start over from this one
            crt.clear();
            crt_mod = 0;
            best_lead = lead;
        } else if (MonoGL{}(lead, best_lead)) {
            continue; // this prime unlucky
        }
        mpz_class pz(p), nm = crt_mod == 0 ? pz : crt_mod * pz;
        std::map<Mono, mpz_class, MonoGL> merged;
        auto sym = [&](mpz_class r, const mpz_class& mod) {
            if (r > mod / 2) r -= mod;
            return r;
        };
        if (crt_mod == 0) {
            for (auto& [m, c] : gs) merged[m] = sym(mpz_class(c), pz);
        } else {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), crt_mod.get_mpz_t(), pz.get_mpz_t());
            auto lift = [&](const mpz_class& prev, modular::u32 rp) {
                mpz_class d = (mpz_class(rp) - prev % pz) % pz;
                if (d < 0) d += pz;
                mpz_class k = d * inv % pz;
                mpz_class r = prev + k * crt_mod;
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), nm.get_mpz_t());
                return sym(r, nm);
            };
            for (auto& [m, c] : gs) {
                auto it = crt.find(m);
                merged[m] = lift(it == crt.end() ? mpz_class(0) : it->second,
                                 c);
            }
            for (auto& [m, c] : crt)
                if (!gs.count(m)) merged[m] = lift(c, 0);
        }
        crt = std::move(merged);
        crt_mod = nm;
        // build integer candidate, make primitive, verify
        Poly cand(a.vars);
        mpz_class cont(0);
        for (auto& [m, c] : crt)
            mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (cont == 0) continue;
        for (auto& [m, c] : crt)
            if (c != 0) cand.terms.emplace(m, Rat(mpz_class(c / cont)));
        if (cand.terms.empty() || cand.is_constant()) continue;
        if (try_divide(a, cand) && try_divide(b, cand)) {
            if (cand.lead_coeff() != 1)
                cand = cand.scaled(1 / cand.lead_coeff());
            return cand;
        }
    }
    return std::nullopt;
}

} // namespace gcd_detail

// one round of gcd extraction: returns an exact gcd via the PRS, or (from
// the verified heuristic) possibly only a nontrivial common factor; the
// wrapper below iterates until the remainder pair is coprime
inline Poly poly_gcd_core(const Poly& a, const Poly& b) {
#ifdef DAHA_GCD_STATS
    ++gcd_detail::gcd_stats().calls;
    auto now = [] {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    };
#endif
    auto one = [&](VarsPtr vs) { return Poly::constant(vs, Rat(1)); };
    if (a.is_zero() && b.is_zero()) return Poly(a.vars);
    auto normalize = [&](Poly p) {
        // make primitive over Q with positive leading coefficient
        if (p.is_zero()) return p;
        if (p.is_constant()) return one(p.vars);
        Rat lc = p.lead_coeff();
        return p.scaled(1 / lc);
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return one(a.vars);

    // monomial fast path: gcd with a single term is the componentwise
    // minimum of exponents
    auto min_expo = [](const Poly& p) {
        Mono e = p.terms.begin()->first;
        for (auto& [m, c] : p.terms)
            for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], m[i]);
        return e;
    };
    if (a.terms.size() == 1 || b.terms.size() == 1) {
        Mono ea = min_expo(a), eb = min_expo(b);
        for (size_t i = 0; i < ea.size(); ++i) ea[i] = std::min(ea[i], eb[i]);
        return Poly::monomial(a.vars, ea, Rat(1));
    }
    // strip common monomial content first: it is part of the gcd and makes
    // the PRS below much cheaper
    {
        Mono ea = min_expo(a), eb = min_expo(b);
        bool strip = false;
        for (size_t i = 0; i < ea.size(); ++i)
            if (ea[i] > 0 || eb[i] > 0) strip = true;
        if (strip) {
            Mono eg(ea.size(), 0);
            for (size_t i = 0; i < ea.size(); ++i)
                eg[i] = std::min(ea[i], eb[i]);
            Poly sa = divide_exact(a, Poly::monomial(a.vars, ea, Rat(1)));
            Poly sb = divide_exact(b, Poly::monomial(b.vars, eb, Rat(1)));
            return poly_gcd(sa, sb) * Poly::monomial(a.vars, eg, Rat(1));
        }
    }

    // modular gcd (Brown's algorithm): the primary engine.  Constant results
    // are certified, nonconstant ones verified by trial division.
    {
#ifdef DAHA_GCD_STATS
        double t0 = now();
#endif
        Poly ia = gcd_detail::clear_denominators(a);
        Poly ib = gcd_detail::clear_denominators(b);
        auto g = gcd_detail::modular_gcd(ia, ib);
#ifdef DAHA_GCD_STATS
        gcd_detail::gcd_stats().t_mod += now() - t0;
        if (g) ++gcd_detail::gcd_stats().mod_hits;
#endif
        if (g) return normalize(*g);
    }

    // variable classification
    std::vector<size_t> both, single;
    for (size_t w = 0; w < a.nv(); ++w) {
        int dA = a.degree_in(w), dB = b.degree_in(w);
        if (dA > 0 && dB > 0) both.push_back(w);
        else if (dA > 0 || dB > 0) single.push_back(w);
    }

    // projection test: evaluate all variables but one at random points and
    // take univariate gcds.  A valid projected degree bounds the gcd's
    // degree in that variable from above, so if every shared variable
    // projects to a constant gcd the full gcd is constant.  The smallest
    // positive projected degree also picks the cheapest PRS main variable.
    size_t v = a.nv();
    {
#ifdef DAHA_GCD_STATS
        double t0 = now();
#endif
        static thread_local std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> dist(2, 97);
        std::vector<int> pdeg(both.size(), -1);
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::vector<Rat> pt(a.nv());
            for (auto& x : pt) x = Rat(dist(rng), dist(rng));
            bool open = false;
            for (size_t k = 0; k < both.size(); ++k) {
                if (pdeg[k] >= 0) continue;
                pdeg[k] = gcd_detail::proj_gcd_degree(a, b, both[k], pt);
                if (pdeg[k] < 0) open = true;
            }
            if (!open) break;
        }
        bool all_zero = !both.empty();
        int best = -1;
        for (size_t k = 0; k < both.size(); ++k) {
            if (pdeg[k] != 0) all_zero = false;
            if (pdeg[k] != 0) { // positive or inconclusive: PRS candidate
                int score = pdeg[k] < 0 ? 1 << 20
                                        : pdeg[k] * 1000 +
                                              a.degree_in(both[k]) +
                                              b.degree_in(both[k]);
                if (best < 0 || score < best) {
                    best = score;
                    v = both[k];
                }
            }
        }
#ifdef DAHA_GCD_STATS
        gcd_detail::gcd_stats().t_proj += now() - t0;
#endif
        if (all_zero) {
            // gcd involves no shared variable; variables appearing in only
            // one operand cannot occur in the gcd either
#ifdef DAHA_GCD_STATS
            ++gcd_detail::gcd_stats().proj_hits;
#endif
            return one(a.vars);
        }
        if (v == a.nv()) {
            if (!both.empty()) v = both[0];
            else v = single[0];
        }
    }

    // heuristic gcd with verified result; fall back to the PRS if it fails
    {
#ifdef DAHA_GCD_STATS
        double t0 = now();
#endif
        Poly ia = gcd_detail::clear_denominators(a);
        Poly ib = gcd_detail::clear_denominators(b);
        auto h = gcd_detail::heu_gcd(ia, ib);
#ifdef DAHA_GCD_STATS
        gcd_detail::gcd_stats().t_heu += now() - t0;
        if (h) ++gcd_detail::gcd_stats().heu_hits;
        else ++gcd_detail::gcd_stats().prs_falls;
#endif
        if (h) return normalize(*h);
    }
#ifdef DAHA_GCD_STATS
    struct PrsGuard {
        double t0;
        ~PrsGuard() {
            gcd_detail::gcd_stats().t_prs +=
                std::chrono::duration<double>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count() -
                t0;
        }
    } prs_guard{now()};
#endif

    int da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 || db == 0) {
        // v appears in only one of them: gcd(content, other)
        if (da == 0) return poly_gcd(a, content_in(b, v));
        return poly_gcd(content_in(a, v), b);
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    // primitive PRS
    while (true) {
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return normalize(cg); // coprime in v
        Poly cr = content_in(r, v);
        pa = pb;
        pb = divide_exact(r, cr);
    }
    Poly g = cg * pb;
    // primitive in remaining vars too: pb is primitive w.r.t. v by
    // construction; normalize sign/scale
    if (g.lead_coeff() < 0 || g.lead_coeff() != 1) {
        // scale so leading coefficient is 1 (field of fractions of Q: any
        // rational scaling is allowed); canonicality is re-imposed at the
        // RatFn layer
        g = g.scaled(1 / g.lead_coeff());
    }
    return g;
}

// gcd over Q: result is primitive with positive leading coefficient;
// constants collapse to 1
inline Poly poly_gcd(const Poly& a0, const Poly& b0) {
    Poly g = poly_gcd_core(a0, b0);
    if (g.is_zero() || g.is_constant()) return g;
    Poly a = divide_exact(a0, g), b = divide_exact(b0, g), total = g;
    while (true) {
        Poly h = poly_gcd_core(a, b);
        if (h.is_constant()) break;
        total = total * h;
        a = divide_exact(a, h);
        b = divide_exact(b, h);
    }
    if (total.lead_coeff() != 1) total = total.scaled(1 / total.lead_coeff());
    return total;
}

} // namespace daha
