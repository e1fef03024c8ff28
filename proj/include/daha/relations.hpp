#pragma once
// Machine-checkable catalog of the algebra's identities.  Every entry builds
// LHS and RHS as difference-reflection operators and verification checks
// LHS - RHS = 0 exactly (the polynomial representation is faithful).

#include "integrable.hpp"

#include <random>

namespace daha {

struct RelInstance {
    std::string label;
    DROp lhs, rhs;
};

struct RelationEntry {
    std::string id;
    int n_min = 2;
    std::string ranges; // human-readable quantifier ranges
    std::vector<std::string> params; // extra symbolic parameters needed
    std::function<std::vector<RelInstance>(const Context&)> build;
};

struct VerificationReport {
    std::string id;
    int n = 0;
    std::string mode; // "exact" or "specialized"
    int instances = 0;
    std::vector<std::pair<std::string, std::string>> failures;
    bool verified() const { return failures.empty(); }
};

namespace detail {

inline DROp S(const Context& c, const char* kind, int i, int j) {
    return gen_string(c, kind, i, j);
}
inline DROp com(const DROp& A, const DROp& B) { return A * B - B * A; }
inline std::string lbl(std::initializer_list<int> ix) {
    std::string s;
    for (int v : ix) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

// T-string with a sign of the exponent: eps=+1 plain, eps=-1 inverse
inline DROp Tstr(const Context& c, int eps, char dir, int i, int j) {
    const char* kind = dir == '+' ? (eps > 0 ? "Tplus" : "TinvPlus")
                                  : (eps > 0 ? "Tminus" : "TinvMinus");
    return gen_string(c, kind, i, j);
}

} // namespace detail

inline const std::vector<RelationEntry>& relation_catalog() {
    using namespace detail;
    static const std::vector<RelationEntry> cat = [] {
        std::vector<RelationEntry> v;
        auto add = [&](std::string id, int n_min, std::string ranges,
                       std::vector<std::string> params,
                       std::function<std::vector<RelInstance>(const Context&)>
                           build) {
            v.push_back({std::move(id), n_min, std::move(ranges),
                         std::move(params), std::move(build)});
        };

        // ---- defining relations of the double affine Hecke algebra ----
        add("DAHA-HECKE", 2, "1 <= k <= n-1", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int k = 1; k + 1 <= c.n; ++k) {
                DROp T = gen_T(c, k);
                DROp lhs = (T - DROp::identity(c).scaled(c.tau())) *
                           (T + DROp::identity(c).scaled(c.tau(-1)));
                out.push_back({"k=" + std::to_string(k), lhs, DROp::zero(c)});
            }
            return out;
        });
        add("DAHA-BRAID", 2, "adjacent and distant pairs", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int l = 1; l + 2 <= c.n; ++l) {
                    DROp a = gen_T(c, l), b = gen_T(c, l + 1);
                    out.push_back({"l=" + std::to_string(l), a * b * a,
                                   b * a * b});
                }
                for (int k = 1; k + 1 <= c.n; ++k)
                    for (int l = k + 2; l + 1 <= c.n; ++l)
                        out.push_back({"comm " + lbl({k, l}),
                                       com(gen_T(c, k), gen_T(c, l)),
                                       DROp::zero(c)});
                return out;
            });
        add("DAHA-TX", 2, "1 <= k <= n-1; i != k,k+1", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int k = 1; k + 1 <= c.n; ++k) {
                    DROp T = gen_T(c, k);
                    out.push_back({"k=" + std::to_string(k),
                                   T * gen_X(c, k) * T, gen_X(c, k + 1)});
                    for (int i = 1; i <= c.n; ++i)
                        if (i != k && i != k + 1)
                            out.push_back({"comm " + lbl({k, i}),
                                           com(T, gen_X(c, i)),
                                           DROp::zero(c)});
                }
                return out;
            });
        add("DAHA-TY", 2, "1 <= k <= n-1; i != k,k+1; Y pairwise", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int k = 1; k + 1 <= c.n; ++k) {
                    DROp Ti = gen_Tinv(c, k);
                    out.push_back({"k=" + std::to_string(k),
                                   Ti * gen_Y(c, k) * Ti, gen_Y(c, k + 1)});
                    for (int i = 1; i <= c.n; ++i)
                        if (i != k && i != k + 1)
                            out.push_back({"comm " + lbl({k, i}),
                                           com(gen_T(c, k), gen_Y(c, i)),
                                           DROp::zero(c)});
                }
                for (int i = 1; i <= c.n; ++i)
                    for (int j = i + 1; j <= c.n; ++j)
                        out.push_back({"YY " + lbl({i, j}),
                                       com(gen_Y(c, i), gen_Y(c, j)),
                                       DROp::zero(c)});
                return out;
            });
        add("DAHA-YTX", 2, "1 <= i <= n", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            DROp Yt = gen_Ytilde(c);
            for (int i = 1; i <= c.n; ++i)
                out.push_back({"i=" + std::to_string(i), Yt * gen_X(c, i),
                               (gen_X(c, i) * Yt).scaled(c.q())});
            return out;
        });
        add("DAHA-Y2X1", 2, "single instance", {}, [](const Context& c) {
            DROp lhs = gen_Yinv(c, 2) * gen_X(c, 1) * gen_Y(c, 2) *
                       gen_X(c, 1, -1);
            DROp rhs = gen_T(c, 1) * gen_T(c, 1);
            return std::vector<RelInstance>{{"", lhs, rhs}};
        });

        // ---- the quantum group U_q(gl_n) under its representation ----
        add("QG-1", 2, "1 <= i <= n; i < j", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int i = 1; i <= c.n; ++i)
                out.push_back({"gginv " + std::to_string(i),
                               js_rep(c, "g", i) * js_rep(c, "ginv", i),
                               DROp::identity(c)});
            for (int i = 1; i <= c.n; ++i)
                for (int j = i + 1; j <= c.n; ++j)
                    out.push_back({"comm " + lbl({i, j}),
                                   com(js_rep(c, "g", i), js_rep(c, "g", j)),
                                   DROp::zero(c)});
            return out;
        });
        add("QG-2", 2, "1 <= i <= n; 1 <= k <= n-1", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int i = 1; i <= c.n; ++i)
                    for (int k = 1; k + 1 <= c.n; ++k) {
                        int e = (i == k ? 1 : 0) - (i == k + 1 ? 1 : 0);
                        out.push_back(
                            {lbl({i, k}),
                             js_rep(c, "g", i) * js_rep(c, "e", k) *
                                 js_rep(c, "ginv", i),
                             js_rep(c, "e", k).scaled(c.q(e))});
                    }
                return out;
            });
        add("QG-3", 2, "1 <= i <= n; 1 <= k <= n-1", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int i = 1; i <= c.n; ++i)
                    for (int k = 1; k + 1 <= c.n; ++k) {
                        int e = (i == k + 1 ? 1 : 0) - (i == k ? 1 : 0);
                        out.push_back(
                            {lbl({i, k}),
                             js_rep(c, "g", i) * js_rep(c, "f", k) *
                                 js_rep(c, "ginv", i),
                             js_rep(c, "f", k).scaled(c.q(e))});
                    }
                return out;
            });
        add("QG-4", 2, "1 <= k,l <= n-1", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            RatFn qd = c.q() - c.q(-1);
            for (int k = 1; k + 1 <= c.n; ++k)
                for (int l = 1; l + 1 <= c.n; ++l) {
                    DROp rhs = DROp::zero(c);
                    if (k == l)
                        rhs = (js_rep(c, "g", k) * js_rep(c, "ginv", k + 1) -
                               js_rep(c, "ginv", k) * js_rep(c, "g", k + 1))
                                  .scaled(c.one() / qd);
                    out.push_back({lbl({k, l}),
                                   com(js_rep(c, "e", k), js_rep(c, "f", l)),
                                   rhs});
                }
            return out;
        });
        add("QG-5", 2, "|k-l| > 1", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int k = 1; k + 1 <= c.n; ++k)
                for (int l = k + 2; l + 1 <= c.n; ++l) {
                    out.push_back({"e " + lbl({k, l}),
                                   com(js_rep(c, "e", k), js_rep(c, "e", l)),
                                   DROp::zero(c)});
                    out.push_back({"f " + lbl({k, l}),
                                   com(js_rep(c, "f", k), js_rep(c, "f", l)),
                                   DROp::zero(c)});
                }
            return out;
        });
        add("QG-6", 2, "|k-l| = 1", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            RatFn qq = c.q() + c.q(-1);
            auto serre = [&](const char* nm, int k, int l) {
                DROp a = js_rep(c, nm, k), b = js_rep(c, nm, l);
                return a * a * b - (a * b * a).scaled(qq) + b * a * a;
            };
            for (int k = 1; k + 1 <= c.n; ++k)
                for (int l = 1; l + 1 <= c.n; ++l) {
                    if (std::abs(k - l) != 1) continue;
                    out.push_back({"e " + lbl({k, l}), serre("e", k, l),
                                   DROp::zero(c)});
                    out.push_back({"f " + lbl({k, l}), serre("f", k, l),
                                   DROp::zero(c)});
                }
            return out;
        });

        // ---- properties of d_i at the quantum group level ----
        add("QGL-d", 2, "parts (1)-(4); 1 <= i,j <= n", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                RatFn qd = c.q() - c.q(-1);
                for (int i = 1; i <= c.n; ++i)
                    for (int j = 1; j <= c.n; ++j) {
                        int d = i == j ? 1 : 0;
                        DROp ti = gen_t(c, i), tiv = gen(c, "tinv", i),
                             Xj = gen_X(c, j), di = gen_d(c, i);
                        out.push_back({"(1)+ " + lbl({i, j}), ti * Xj,
                                       (Xj * ti).scaled(c.q(d))});
                        out.push_back({"(1)- " + lbl({i, j}), tiv * Xj,
                                       (Xj * tiv).scaled(c.q(-d))});
                        if (i < j) {
                            out.push_back({"(2)dd " + lbl({i, j}),
                                           com(di, gen_d(c, j)),
                                           DROp::zero(c)});
                            out.push_back({"(2)tt " + lbl({i, j}),
                                           com(ti, gen_t(c, j)),
                                           DROp::zero(c)});
                        }
                        DROp tj = gen_t(c, j), tjv = gen(c, "tinv", j);
                        out.push_back({"(3)+ " + lbl({i, j}), di * tj,
                                       (tj * di).scaled(c.q(d))});
                        out.push_back({"(3)- " + lbl({i, j}), di * tjv,
                                       (tjv * di).scaled(c.q(-d))});
                        DROp rp = DROp::zero(c), rm = DROp::zero(c);
                        if (i == j) {
                            rp = gen(c, "tinv", i);
                            rm = gen_t(c, i);
                        }
                        out.push_back({"(4)+ " + lbl({i, j}),
                                       di * Xj - (Xj * di).scaled(c.q(d)),
                                       rp});
                        out.push_back({"(4)- " + lbl({i, j}),
                                       di * Xj - (Xj * di).scaled(c.q(-d)),
                                       rm});
                    }
                for (int i = 1; i <= c.n; ++i) {
                    DROp rhs = (gen_t(c, i).scaled(c.q()) -
                                gen(c, "tinv", i).scaled(c.q(-1)))
                                   .scaled(c.one() / qd);
                    out.push_back({"(4)dX " + std::to_string(i),
                                   gen_d(c, i) * gen_X(c, i), rhs});
                }
                return out;
            });
        add("QGL-E", 2, "i != j, k != l", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            auto E = [&](int i, int j) { return gen_Eq(c, i, j); };
            auto Sq = [&](int i, int j) { return gen_Sq(c, i, j); };
            for (int i = 1; i <= c.n; ++i)
                for (int j = 1; j <= c.n; ++j) {
                    if (j == i) continue;
                    for (int k = 1; k <= c.n; ++k)
                        for (int l = 1; l <= c.n; ++l) {
                            if (l == k) continue;
                            out.push_back(
                                {"a " + lbl({i, j, k, l}),
                                 E(i, j) * E(k, l) - E(i, l) * E(k, j),
                                 E(i, l) * Sq(j, k) - E(i, j) * Sq(l, k)});
                            out.push_back(
                                {"b " + lbl({i, j, k, l}),
                                 E(i, j) * E(k, l) - E(k, j) * E(i, l),
                                 Sq(j, k) * E(i, l) - Sq(j, i) * E(k, l)});
                        }
                }
            return out;
        });
        add("QGL-Et", 2, "1 <= i <= n; j != k", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int i = 1; i <= c.n; ++i)
                for (int j = 1; j <= c.n; ++j)
                    for (int k = 1; k <= c.n; ++k) {
                        if (k == j) continue;
                        int e = (i == j ? 1 : 0) - (i == k ? 1 : 0);
                        out.push_back({lbl({i, j, k}),
                                       gen_t(c, i) * gen_Eq(c, j, k) *
                                           gen(c, "tinv", i),
                                       gen_Eq(c, j, k).scaled(c.q(e))});
                    }
            return out;
        });

        // ---- braid identities for T-strings ----
        add("BRAID-L", 2, "n-1 >= k > j >= i >= 1; eps = +-1", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int eps : {1, -1})
                    for (int k = 1; k + 1 <= c.n; ++k)
                        for (int j = 1; j < k; ++j)
                            for (int i = 1; i <= j; ++i) {
                                DROp Te1 = eps > 0 ? gen_T(c, j + 1)
                                                   : gen_Tinv(c, j + 1);
                                DROp Te0 = eps > 0 ? gen_T(c, j)
                                                   : gen_Tinv(c, j);
                                DROp P = S(c, "Tplus", i, k);
                                DROp M = S(c, "Tminus", k, i);
                                std::string tag =
                                    (eps > 0 ? "+ " : "- ") + lbl({i, j, k});
                                out.push_back({"a " + tag, Te1 * P, P * Te0});
                                out.push_back({"b " + tag, M * Te1, Te0 * M});
                            }
                return out;
            });
        add("BRAID-C", 2, "n >= j > i >= 1; eps = +-1; parts (i)-(iv)", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                int n = c.n;
                for (int eps : {1, -1})
                    for (int j = 2; j <= n; ++j)
                        for (int i = 1; i < j; ++i) {
                            DROp P = S(c, "Tplus", i, n - 1);
                            DROp M = S(c, "Tminus", n - 1, i);
                            std::string tag =
                                (eps > 0 ? "+ " : "- ") + lbl({i, j});
                            out.push_back(
                                {"(i) " + tag,
                                 Tstr(c, eps, '+', j, n - 1) * P,
                                 P * Tstr(c, eps, '+', j - 1, n - 2)});
                            out.push_back(
                                {"(ii) " + tag,
                                 Tstr(c, eps, '-', n - 1, j) * P,
                                 P * Tstr(c, eps, '-', n - 2, j - 1)});
                            out.push_back(
                                {"(iii) " + tag,
                                 M * Tstr(c, eps, '-', n - 1, j),
                                 Tstr(c, eps, '-', n - 2, j - 1) * M});
                            out.push_back(
                                {"(iv) " + tag,
                                 M * Tstr(c, eps, '+', j, n - 1),
                                 Tstr(c, eps, '+', j - 1, n - 2) * M});
                        }
                return out;
            });
        add("HECKE-R", 2, "j > i; eps, sign = +-1", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int eps : {1, -1})
                    for (int sgn : {1, -1})
                        for (int j = 2; j <= c.n; ++j)
                            for (int i = 1; i < j; ++i) {
                                DROp lhs = gen_R(c, eps, sgn, j, i);
                                DROp mid = sgn > 0
                                               ? gen_T(c, j - 1).pow(2)
                                               : gen_Tinv(c, j - 1).pow(2);
                                DROp rhs = Tstr(c, -eps, '+', i, j - 2) *
                                           mid * Tstr(c, eps, '-', j - 2, i);
                                std::string tag = std::string(
                                                      eps > 0 ? "+" : "-") +
                                                  (sgn > 0 ? "+" : "-") +
                                                  " " + lbl({j, i});
                                out.push_back({tag, lhs, rhs});
                            }
                return out;
            });

        // ---- T_k and D_i ----
        add("TD", 2, "1 <= k <= n-1; i != k,k+1", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int k = 1; k + 1 <= c.n; ++k) {
                for (int i = 1; i <= c.n; ++i)
                    if (i != k && i != k + 1)
                        out.push_back({"comm " + lbl({k, i}),
                                       com(gen_T(c, k), gen_D(c, i)),
                                       DROp::zero(c)});
                DROp Ti = gen_Tinv(c, k);
                out.push_back({"conj k=" + std::to_string(k),
                               Ti * gen_D(c, k) * Ti, gen_D(c, k + 1)});
            }
            return out;
        });

        // ---- properties of D_i, parts (1)-(4) ----
        add("DPROP-1", 2, "i != j; 1 <= l <= n", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            int n = c.n;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    out.push_back({"a " + lbl({i, j}),
                                   gen_Y(c, i) * gen_R(c, 1, 1, i, j) *
                                       gen_X(c, j),
                                   gen_X(c, j) * gen_R(c, -1, -1, j, i) *
                                       gen_Y(c, i)});
                }
            for (int l = 1; l <= n; ++l)
                out.push_back(
                    {"b l=" + std::to_string(l),
                     gen_Y(c, l) * gen_X(c, l),
                     (S(c, "Tplus", l, n - 1) * S(c, "Tminus", n - 1, l) *
                      gen_X(c, l) * gen_Y(c, l) * S(c, "Tminus", l - 1, 1) *
                      S(c, "Tplus", 1, l - 1))
                         .scaled(c.q())});
            return out;
        });
        add("DPROP-2", 2, "all i < j", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            for (int i = 1; i <= c.n; ++i)
                for (int j = i + 1; j <= c.n; ++j)
                    out.push_back({lbl({i, j}),
                                   com(gen_D(c, i), gen_D(c, j)),
                                   DROp::zero(c)});
            return out;
        });
        add("DPROP-3", 2, "i != j; 1 <= l <= n", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            int n = c.n;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    out.push_back({"a " + lbl({i, j}),
                                   gen_Y(c, i) * gen_D(c, j),
                                   gen_R(c, -1, 1, j, i) * gen_D(c, j) *
                                       gen_Y(c, i) * gen_R(c, 1, 1, i, j)});
                }
            for (int l = 1; l <= n; ++l)
                out.push_back(
                    {"b l=" + std::to_string(l),
                     gen_Y(c, l) * S(c, "Tminus", l - 1, 1) *
                         S(c, "Tplus", 1, l - 1) * gen_D(c, l),
                     (gen_D(c, l) * S(c, "TinvPlus", l, n - 1) *
                      S(c, "TinvMinus", n - 1, l) * gen_Y(c, l))
                         .scaled(c.q(-1))});
            return out;
        });
        add("DPROP-4", 2, "1 <= l <= n; j > i and i > j", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                int n = c.n;
                RatFn qd = c.q() - c.q(-1);
                RatFn pre = (c.tau(-1) - c.tau()) / qd;
                for (int l = 1; l <= n; ++l) {
                    out.push_back(
                        {"XD l=" + std::to_string(l),
                         gen_X(c, l) * gen_D(c, l),
                         (S(c, "TinvPlus", l, n - 1) *
                          (gen_Y(c, n) - gen_Yinv(c, n)) *
                          S(c, "Tminus", n - 1, l))
                             .scaled(c.one() / qd)});
                    out.push_back(
                        {"DX l=" + std::to_string(l),
                         gen_D(c, l) * gen_X(c, l),
                         (S(c, "TinvMinus", l - 1, 1) *
                          (gen_Y(c, 1).scaled(c.q()) -
                           gen_Yinv(c, 1).scaled(c.q(-1))) *
                          S(c, "Tplus", 1, l - 1))
                             .scaled(c.one() / qd)});
                }
                for (int j = 2; j <= n; ++j)
                    for (int i = 1; i < j; ++i) {
                        out.push_back(
                            {"[Dj,Xi] " + lbl({j, i}),
                             com(gen_D(c, j), gen_X(c, i)),
                             (S(c, "TinvPlus", i, n - 1) *
                              S(c, "TinvMinus", j - 2, 1) *
                              (gen_Y(c, 1).scaled(c.q()) + gen_Yinv(c, n)) *
                              S(c, "Tminus", n - 1, j) *
                              S(c, "Tplus", 1, i - 1))
                                 .scaled(pre)});
                        out.push_back(
                            {"[Di,Xj] " + lbl({i, j}),
                             com(gen_D(c, i), gen_X(c, j)),
                             (S(c, "TinvMinus", i - 1, 1) *
                              S(c, "TinvPlus", j, n - 1) *
                              (gen_Yinv(c, 1).scaled(c.q(-1)) + gen_Y(c, n)) *
                              S(c, "Tplus", 1, j - 2) *
                              S(c, "Tminus", n - 1, i))
                                 .scaled(pre)});
                    }
                return out;
            });

        // ---- relations among e_ij ----
        add("E-REL", 2, "i != j, k != l", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            auto e = [&](int i, int j) { return gen_e(c, i, j); };
            auto St = [&](int i, int j) { return gen_Stau(c, i, j); };
            for (int i = 1; i <= c.n; ++i)
                for (int j = 1; j <= c.n; ++j) {
                    if (j == i) continue;
                    for (int k = 1; k <= c.n; ++k)
                        for (int l = 1; l <= c.n; ++l) {
                            if (l == k) continue;
                            out.push_back(
                                {"a " + lbl({i, j, k, l}),
                                 e(i, j) * e(k, l) - e(i, l) * e(k, j),
                                 e(i, l) * St(j, k) - e(i, j) * St(l, k)});
                            out.push_back(
                                {"b " + lbl({i, j, k, l}),
                                 e(i, j) * e(k, l) - e(k, j) * e(i, l),
                                 St(j, k) * e(i, l) - St(j, i) * e(k, l)});
                        }
                }
            return out;
        });

        // ---- moving T_k to the left past e_ij ----
        add("TE-MOVE", 2, "i <= n-1; j,k outside {i,i+1}", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                int n = c.n;
                RatFn pre = (c.tau(-1) - c.tau()) / (c.q() - c.q(-1));
                for (int i = 1; i + 1 <= n; ++i) {
                    DROp T = gen_T(c, i);
                    out.push_back(
                        {"adj i=" + std::to_string(i),
                         T * gen_e(c, i, i + 1) * T,
                         gen_e(c, i + 1, i) +
                             (S(c, "TinvPlus", i + 1, n - 1) *
                              (gen_Y(c, n) - gen_Yinv(c, n)) *
                              S(c, "Tminus", n - 1, i))
                                 .scaled(pre)});
                    for (int j = 1; j <= n; ++j) {
                        if (j == i || j == i + 1) continue;
                        out.push_back({"row " + lbl({i, j}),
                                       T * gen_e(c, i, j) * T,
                                       gen_e(c, i + 1, j)});
                        out.push_back({"col " + lbl({i, j}),
                                       T * gen_e(c, j, i + 1) * T,
                                       gen_e(c, j, i)});
                        for (int k = 1; k <= n; ++k) {
                            if (k == i || k == i + 1 || k == j) continue;
                            out.push_back({"comm " + lbl({i, j, k}),
                                           com(T, gen_e(c, j, k)),
                                           DROp::zero(c)});
                        }
                    }
                }
                return out;
            });

        // ---- moving Y_i to the right past e_jk ----
        add("YE-1", 2, "i != j", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            int n = c.n;
            RatFn pre = (c.tau() - c.tau(-1)) / (c.q() - c.q(-1));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    DROp lhs = gen_Y(c, i) * gen_e(c, i, j) *
                               S(c, "TinvMinus", i - 1, 1) *
                               S(c, "TinvPlus", 1, i - 1) * gen_Yinv(c, i);
                    DROp C1 =
                        j > i
                            ? (S(c, "Tplus", i, n - 1) *
                               S(c, "TinvMinus", j - 2, i) *
                               (gen_Y(c, n) - gen_Yinv(c, n)) *
                               S(c, "Tminus", n - 1, j))
                                  .scaled(c.q())
                            : S(c, "Tplus", i, n - 1) *
                                  S(c, "TinvMinus", j - 1, 1) *
                                  S(c, "TinvPlus", 1, n - 2) *
                                  gen_Yinv(c, n - 1) *
                                  (gen_Y(c, n).pow(2) - DROp::identity(c)) *
                                  S(c, "Tminus", n - 1, j) *
                                  S(c, "TinvMinus", n - 1, i);
                    DROp rhs = (S(c, "Tplus", i, n - 1) *
                                S(c, "Tminus", n - 1, i) * gen_e(c, i, j))
                                   .scaled(c.q()) +
                               C1.scaled(pre);
                    out.push_back({lbl({i, j}), lhs, rhs});
                }
            return out;
        });
        add("YE-2", 2, "i != j", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            int n = c.n;
            RatFn pre = (c.tau(-1) - c.tau()) / (c.q() - c.q(-1));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    DROp lhs = gen_Y(c, i) * S(c, "Tminus", i - 1, 1) *
                               S(c, "Tplus", 1, i - 1) * gen_e(c, j, i) *
                               gen_Yinv(c, i);
                    DROp C2 =
                        j > i
                            ? (S(c, "TinvPlus", j, n - 1) *
                               (gen_Y(c, n) - gen_Yinv(c, n)) *
                               S(c, "Tplus", i, j - 2) *
                               S(c, "TinvMinus", n - 1, i))
                                  .scaled(c.q(-1))
                            : S(c, "Tplus", i, n - 1) *
                                  S(c, "TinvPlus", j, n - 1) *
                                  gen_Y(c, n - 1) *
                                  (DROp::identity(c) -
                                   gen_Yinv(c, n).pow(2)) *
                                  S(c, "Tminus", n - 2, 1) *
                                  S(c, "Tplus", 1, j - 1) *
                                  S(c, "TinvMinus", n - 1, i);
                    DROp rhs = (gen_e(c, j, i) * S(c, "TinvPlus", i, n - 1) *
                                S(c, "TinvMinus", n - 1, i))
                                   .scaled(c.q(-1)) +
                               C2.scaled(pre);
                    out.push_back({lbl({i, j}), lhs, rhs});
                }
            return out;
        });
        add("YE-3", 3, "i, j, k pairwise distinct", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                for (int i = 1; i <= c.n; ++i)
                    for (int j = 1; j <= c.n; ++j)
                        for (int k = 1; k <= c.n; ++k) {
                            if (j == i || k == i || k == j) continue;
                            DROp lhs = gen_Y(c, i) * gen_R(c, 1, 1, i, j) *
                                       gen_e(c, j, k) *
                                       gen_R(c, 1, -1, i, k) *
                                       gen_Yinv(c, i);
                            DROp rhs = gen_R(c, -1, 1, k, i) *
                                       gen_e(c, j, k) *
                                       gen_R(c, -1, -1, j, i);
                            out.push_back({lbl({i, j, k}), lhs, rhs});
                        }
                return out;
            });

        // ---- expansions of Y_i and Y_i^{-1} ----
        add("Y-EXP", 2, "1 <= i <= n; i > j", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            RatFn pre = c.tau(-1) - c.tau();
            for (int i = 1; i <= c.n; ++i) {
                DROp rhs = gen_Y(c, i) * S(c, "Tminus", i - 1, 1) *
                           S(c, "Tplus", 1, i - 1);
                for (int k = 1; k < i; ++k)
                    rhs = rhs + (S(c, "TinvMinus", i - 1, k) *
                                 S(c, "Tplus", k + 1, i - 1) * gen_Y(c, k))
                                    .scaled(pre);
                out.push_back({"(i) i=" + std::to_string(i), gen_Y(c, i),
                               rhs});
                for (int j = 1; j < i; ++j) {
                    DROp rhs2 = gen_Y(c, i) * gen_R(c, 1, 1, i, j) +
                                (S(c, "TinvMinus", i - 1, j) *
                                 S(c, "TinvPlus", j + 1, i - 1) *
                                 gen_Y(c, j))
                                    .scaled(pre);
                    out.push_back({"(ii) " + lbl({i, j}), gen_Y(c, i),
                                   rhs2});
                }
            }
            return out;
        });
        add("YINV-EXP", 2, "1 <= i <= n; k > i", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            int n = c.n;
            RatFn pre = c.tau(-1) - c.tau();
            for (int i = 1; i <= n; ++i) {
                DROp rhs = gen_Yinv(c, i) * S(c, "Tplus", i, n - 1) *
                           S(c, "Tminus", n - 1, i);
                for (int k = 0; k <= n - i - 1; ++k)
                    rhs = rhs + (S(c, "TinvPlus", i, n - k - 1) *
                                 S(c, "Tminus", n - k - 2, i) *
                                 gen_Yinv(c, n - k))
                                    .scaled(pre);
                out.push_back({"(i) i=" + std::to_string(i),
                               gen_Yinv(c, i), rhs});
                for (int k = i + 1; k <= n; ++k) {
                    DROp rhs2 = gen_Yinv(c, i) * gen_R(c, -1, 1, k, i) +
                                (S(c, "TinvMinus", k - 1, i + 1) *
                                 S(c, "TinvPlus", i, k - 1) *
                                 gen_Yinv(c, k))
                                    .scaled(pre);
                    out.push_back({"(ii) " + lbl({i, k}), gen_Yinv(c, i),
                                   rhs2});
                }
            }
            return out;
        });

        // ---- the commuting family calD_i ----
        add("CALD-COMM", 2, "l1=1, l2=2 with symbolic a_j; all i < j",
            {"am1", "a0", "a1", "a2"}, [](const Context& c) {
                std::vector<RelInstance> out;
                std::vector<RatFn> a{c.param("am1"), c.param("a0"),
                                     c.param("a1"), c.param("a2")};
                std::vector<DROp> Ds;
                for (int i = 1; i <= c.n; ++i)
                    Ds.push_back(calD_route1(c, i, 1, 2, a));
                for (int i = 1; i <= c.n; ++i)
                    out.push_back({"route i=" + std::to_string(i),
                                   Ds[(size_t)i - 1],
                                   calD_route2(c, i, 1, 2, a)});
                for (int i = 1; i <= c.n; ++i)
                    for (int j = i + 1; j <= c.n; ++j)
                        out.push_back({"comm " + lbl({i, j}),
                                       com(Ds[(size_t)i - 1],
                                           Ds[(size_t)j - 1]),
                                       DROp::zero(c)});
                return out;
            });
        add("TD-SYM", 2, "1 <= k <= n-1; 1 <= r <= n", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                std::vector<DROp> Ds;
                for (int i = 1; i <= c.n; ++i) Ds.push_back(gen_D(c, i));
                for (int r = 1; r <= c.n; ++r) {
                    DROp er = elem_sym_ops(c, Ds, r);
                    for (int k = 1; k + 1 <= c.n; ++k)
                        out.push_back({"r=" + std::to_string(r) +
                                           " k=" + std::to_string(k),
                                       com(gen_T(c, k), er),
                                       DROp::zero(c)});
                }
                return out;
            });

        // ---- the central element Ytilde ----
        add("CENTER-YT", 2, "generators T_k, Y_i^{+-1}, e_ij", {},
            [](const Context& c) {
                std::vector<RelInstance> out;
                DROp Yt = gen_Ytilde(c);
                for (int k = 1; k + 1 <= c.n; ++k)
                    out.push_back({"T k=" + std::to_string(k),
                                   com(Yt, gen_T(c, k)), DROp::zero(c)});
                for (int i = 1; i <= c.n; ++i) {
                    out.push_back({"Y i=" + std::to_string(i),
                                   com(Yt, gen_Y(c, i)), DROp::zero(c)});
                    out.push_back({"Yinv i=" + std::to_string(i),
                                   com(Yt, gen_Yinv(c, i)), DROp::zero(c)});
                }
                for (int i = 1; i <= c.n; ++i)
                    for (int j = 1; j <= c.n; ++j)
                        out.push_back({"e " + lbl({i, j}),
                                       com(Yt, gen_e(c, i, j)),
                                       DROp::zero(c)});
                return out;
            });
        add("GRADE-YT", 2, "monomial family", {}, [](const Context& c) {
            // checked as an operator identity: Ytilde M_{X^a} =
            // q^{sum a} M_{X^a} Ytilde for a family of monomials X^a
            std::vector<RelInstance> out;
            DROp Yt = gen_Ytilde(c);
            std::vector<std::vector<int>> fam;
            for (int i = 1; i <= c.n; ++i) {
                std::vector<int> a((size_t)c.n, 0);
                a[(size_t)i - 1] = 1;
                fam.push_back(a);
            }
            {
                std::vector<int> a((size_t)c.n, 0);
                a[0] = 1;
                if (c.n >= 2) a[1] = 2;
                fam.push_back(a); // X1 X2^2 (total degree 3 when n >= 2)
                fam.push_back(std::vector<int>((size_t)c.n, 1));
            }
            for (auto& a : fam) {
                DROp M = DROp::identity(c);
                int tot = 0;
                for (int i = 1; i <= c.n; ++i) {
                    if (a[(size_t)i - 1] == 0) continue;
                    M = M * gen_X(c, i, a[(size_t)i - 1]);
                    tot += a[(size_t)i - 1];
                }
                std::string label = "a=";
                for (int e : a) label += std::to_string(e);
                out.push_back({label, Yt * M, (M * Yt).scaled(c.q(tot))});
            }
            return out;
        });
        add("YD-q", 2, "1 <= i <= n", {}, [](const Context& c) {
            std::vector<RelInstance> out;
            DROp Yt = gen_Ytilde(c);
            for (int i = 1; i <= c.n; ++i)
                out.push_back({"i=" + std::to_string(i),
                               Yt * gen_D(c, i),
                               (gen_D(c, i) * Yt).scaled(c.q(-1))});
            return out;
        });

        return v;
    }();
    return cat;
}

enum class VerifyMode { Exact, Specialized };

// random non-degenerate rational: |value| not in {0, 1}
inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(2, 40);
    int num = d(rng), den = d(rng);
    while (num == den) num = d(rng);
    Rat r(num, den);
    r.canonicalize();
    if (rng() & 1u) r = -r;
    return r;
}

inline VerificationReport verify_entry(const RelationEntry& ent, int n,
                                       VerifyMode mode, unsigned seed = 0) {
    VerificationReport rep;
    rep.id = ent.id;
    rep.n = n;
    rep.mode = mode == VerifyMode::Exact ? "exact" : "specialized";
    if (n < ent.n_min) return rep; // vacuously verified, 0 instances
    Context ctx = [&] {
        if (mode == VerifyMode::Exact) return Context(n, ent.params);
        std::mt19937 rng(seed);
        Rat qv = random_rat(rng), tv = random_rat(rng);
        while (tv == qv) tv = random_rat(rng);
        return Context::specialized(n, qv, tv, ent.params);
    }();
    for (auto& inst : ent.build(ctx)) {
        ++rep.instances;
        DROp diff = inst.lhs - inst.rhs;
        if (!diff.terms.empty())
            rep.failures.emplace_back(inst.label, diff.str());
    }
    return rep;
}

inline VerificationReport verify(const std::string& id, int n,
                                 VerifyMode mode, unsigned seed = 0) {
    for (auto& ent : relation_catalog())
        if (ent.id == id) return verify_entry(ent, n, mode, seed);
    throw Error("verify: unknown relation id " + id);
}

inline std::vector<VerificationReport> verify_suite(int n, VerifyMode mode,
                                                    unsigned seed = 0) {
    std::vector<VerificationReport> out;
    for (auto& ent : relation_catalog())
        out.push_back(verify_entry(ent, n, mode, seed));
    return out;
}

} // namespace daha
