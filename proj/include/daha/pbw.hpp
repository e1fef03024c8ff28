#pragma once
// Reduction of subalgebra elements to the PBW normal form
// T_w · e_{i1 j1}^{k1} ··· e_{it jt}^{kt} · Y^m, plus the supporting rewrite
// rules (Y past e, e past T, Y-runs past T, e-block ordering) and validation
// against the polynomial representation.

#include "hecke.hpp"

#include <array>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>

namespace daha {

// a formal linear combination of words
using Combo = std::vector<std::pair<Scalar, Word>>;

namespace pbw_detail {

inline Combo as_combo(const Word& w) { return {{sc_one(), w}}; }
inline const Combo& as_combo(const Combo& c) { return c; }

inline Combo cmul(const Combo& a, const Combo& b) {
    Combo out;
    for (auto& [ca, wa] : a)
        for (auto& [cb, wb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.emplace_back(ca * cb, std::move(w));
        }
    return out;
}

// concatenating product of words and combos
template <class... Ps> Combo cw(const Ps&... ps) {
    Combo out{{sc_one(), Word{}}};
    ((out = cmul(out, as_combo(ps))), ...);
    return out;
}

inline Combo csc(const Scalar& c, const Combo& a) {
    Combo out;
    for (auto& [ca, wa] : a) out.emplace_back(c * ca, wa);
    return out;
}

template <class... Ps> Combo cadd(const Ps&... ps) {
    Combo out;
    (out.insert(out.end(), ps.begin(), ps.end()), ...);
    return out;
}

// T_i T_{i+1} ... T_j (ud '+') or T_i T_{i-1} ... T_j (ud '-'), exponents e;
// empty when the range is empty
inline Word wT(int i, int j, char ud, int e = 1) {
    Word w;
    if (ud == '+')
        for (int k = i; k <= j; ++k) w.push_back(LT(k, e));
    else
        for (int k = i; k >= j; --k) w.push_back(LT(k, e));
    return w;
}

// the conjugating word (R^eps)_{ij}^{pm}; identity for i <= j
inline Word wR(int eps, int i, int j, int pm) {
    if (i <= j) return {};
    Word w = wT(i - 1, j + 1, '-', eps);
    w.push_back(LT(j, pm));
    w.push_back(LT(j, pm));
    Word t = wT(j + 1, i - 1, '+', -eps);
    w.insert(w.end(), t.begin(), t.end());
    return w;
}

// correction terms in the Y-past-e rules
inline Combo C1(int n, int i, int j) {
    Scalar q = sc_q();
    if (j > i) {
        Word A = cw(wT(i, n - 1, '+', 1), wT(j - 2, i, '-', -1))[0].second;
        Word B = wT(n - 1, j, '-', 1);
        return {{q, cw(A, Word{LY(n, 1)}, B)[0].second},
                {-q, cw(A, Word{LY(n, -1)}, B)[0].second}};
    }
    Word A = cw(wT(i, n - 1, '+', 1), wT(j - 1, 1, '-', -1),
                wT(1, n - 2, '+', -1))[0]
                 .second;
    Word B = cw(wT(n - 1, j, '-', 1), wT(n - 1, i, '-', -1))[0].second;
    return {{sc_one(),
             cw(A, Word{LY(n - 1, -1), LY(n, 1), LY(n, 1)}, B)[0].second},
            {-sc_one(), cw(A, Word{LY(n - 1, -1)}, B)[0].second}};
}

inline Combo C2(int n, int i, int j) {
    Scalar q = sc_q();
    if (j > i) {
        Word A = wT(j, n - 1, '+', -1);
        Word B = cw(wT(i, j - 2, '+', 1), wT(n - 1, i, '-', -1))[0].second;
        return {{sc_q(-1), cw(A, Word{LY(n, 1)}, B)[0].second},
                {-sc_q(-1), cw(A, Word{LY(n, -1)}, B)[0].second}};
    }
    Word A = cw(wT(i, n - 1, '+', 1), wT(j, n - 1, '+', -1))[0].second;
    Word B = cw(wT(n - 2, 1, '-', 1), wT(1, j - 1, '+', 1),
                wT(n - 1, i, '-', -1))[0]
                 .second;
    return {{sc_one(), cw(A, Word{LY(n - 1, 1)}, B)[0].second},
            {-sc_one(),
             cw(A, Word{LY(n - 1, 1), LY(n, -1), LY(n, -1)}, B)[0].second}};
}

// Y_a R_{ab}^+ e_bc = (R^{-1})_{ca}^+ e_bc (R^{-1})_{ba}^- Y_a R_{ac}^+
inline Combo mainYe3(int a, int b, int c) {
    return cw(wR(-1, c, a, 1), Word{Le(b, c)}, wR(-1, b, a, -1),
              Word{LY(a, 1)}, wR(1, a, c, 1));
}

// Y_a^{-1} (R^{-1})_{ca}^+ e_bc = R_{ab}^+ e_bc R_{ac}^- Y_a^{-1} (R^{-1})_{ba}^+
inline Combo mainYe3inv(int a, int b, int c) {
    return cw(wR(1, a, b, 1), Word{Le(b, c)}, wR(1, a, c, -1),
              Word{LY(a, -1)}, wR(-1, b, a, 1));
}

// combo equal to Y_a^sign e_bc with the Y moved to the right of the e
inline Combo ruleYe(int n, int sign, int a, int b, int c) {
    Scalar q = sc_q(), tau = sc_tau();
    Scalar kap = (tau - sc_tau(-1)) / (q - sc_q(-1));
    Scalar kapp = -kap;
    Scalar tt = sc_tau(-1) - tau;
    if (sign == 1) {
        if (a == b) {
            Combo pre = cadd(
                Combo{{q, cw(wT(a, n - 1, '+', 1), wT(n - 1, a, '-', 1),
                             Word{Le(a, c)})[0]
                             .second}},
                csc(kap, C1(n, a, c)));
            return cw(pre, Word{LY(a, 1)},
                      cw(wT(a - 1, 1, '-', 1), wT(1, a - 1, '+', 1))[0]
                          .second);
        }
        if (a == c) {
            Combo main = cw(
                cadd(Combo{{sc_q(-1),
                            cw(Word{Le(b, a)}, wT(a, n - 1, '+', -1),
                               wT(n - 1, a, '-', -1))[0]
                                .second}},
                     csc(kapp, C2(n, a, b))),
                Word{LY(a, 1)});
            if (a == 1) return main;
            Combo out = main;
            for (int k = 1; k < a; ++k)
                out = cadd(out,
                           csc(tt, cw(cw(wT(a - 1, k, '-', -1),
                                         wT(k + 1, a - 1, '+', 1))[0]
                                          .second,
                                      ruleYe(n, 1, k, b, a))));
            return out;
        }
        if (a < b) return mainYe3(a, b, c);
        return cadd(mainYe3(a, b, c),
                    csc(tt, cw(cw(wT(a - 1, b, '-', -1),
                                  wT(b + 1, a - 1, '+', -1))[0]
                                   .second,
                               ruleYe(n, 1, b, b, c))));
    }
    // sign == -1
    if (a == c) {
        Combo t1{{q, cw(wT(a - 1, 1, '-', 1), wT(1, a - 1, '+', 1),
                        Word{Le(b, a), LY(a, -1)}, wT(a, n - 1, '+', 1),
                        wT(n - 1, a, '-', 1))[0]
                         .second}};
        Combo t2 = csc(-(q * kapp),
                       cw(Word{LY(a, -1)}, C2(n, a, b),
                          cw(wT(a, n - 1, '+', 1), wT(n - 1, a, '-', 1))[0]
                              .second));
        return cadd(t1, t2);
    }
    if (a == b) {
        Combo t1{{sc_q(-1), cw(Word{Le(a, c)}, wT(a - 1, 1, '-', -1),
                               wT(1, a - 1, '+', -1), Word{LY(a, -1)})[0]
                                .second}};
        Combo t2 = csc(-(kap * sc_q(-1)), cw(Word{LY(a, -1)}, C1(n, a, c)));
        Combo out = cadd(t1, t2);
        for (int k = 0; k < n - a; ++k)
            out = cadd(out,
                       csc(tt, cw(cw(wT(a, n - k - 1, '+', -1),
                                     wT(n - k - 2, a, '-', 1))[0]
                                      .second,
                                  ruleYe(n, -1, n - k, a, c))));
        return out;
    }
    if (c < a) return mainYe3inv(a, b, c);
    return cadd(mainYe3inv(a, b, c),
                csc(tt, cw(cw(wT(c - 1, a + 1, '-', -1),
                              wT(a, c - 1, '+', -1))[0]
                               .second,
                           ruleYe(n, -1, c, b, c))));
}

// W = (T^{-1})_{k+1,n-1}^+ (Y_n - Y_n^{-1}) T_{n-1,k}^-
inline Combo wW(int n, int k) {
    Word A = wT(k + 1, n - 1, '+', -1), B = wT(n - 1, k, '-', 1);
    return {{sc_one(), cw(A, Word{LY(n, 1)}, B)[0].second},
            {-sc_one(), cw(A, Word{LY(n, -1)}, B)[0].second}};
}

// combo equal to e_ij T_k^{±1} with the T moved left (or absorbed)
inline Combo ruleSwapET(int n, const Letter& LE, const Letter& LTk) {
    Scalar q = sc_q(), tau = sc_tau();
    int i = LE.a, j = LE.b, k = LTk.a, et = LTk.b;
    Scalar d = tau - sc_tau(-1);
    Scalar kapp = (sc_tau(-1) - tau) / (q - sc_q(-1));
    Letter Tk = LT(k, 1);
    if (et == -1)
        return cadd(ruleSwapET(n, LE, Tk), Combo{{-d, Word{LE}}});
    if (k != i && k != j && k + 1 != i && k + 1 != j)
        return {{sc_one(), Word{Tk, LE}}};
    if (i == k && j == k + 1) {
        Combo W = wW(n, k);
        return cadd(Combo{{sc_one(), Word{Tk, Le(k + 1, k)}},
                          {-d, Word{Le(k + 1, k)}}},
                    csc(kapp, cw(Word{Tk}, W)), csc(-(kapp * d), W));
    }
    if (i == k + 1 && j == k) {
        Combo W = wW(n, k);
        return cadd(Combo{{sc_one(), Word{Tk, Le(k, k + 1)}},
                          {d, Word{Le(k + 1, k)}}},
                    csc(-kapp, cw(W, Word{Tk})), csc(kapp * d, W));
    }
    if (i == k)
        return {{sc_one(), Word{Tk, Le(k + 1, j)}}, {-d, Word{Le(k + 1, j)}}};
    if (i == k + 1)
        return {{sc_one(), Word{Tk, Le(k, j)}}, {d, Word{Le(k + 1, j)}}};
    if (j == k + 1)
        return {{sc_one(), Word{Tk, Le(i, k)}}, {-d, Word{Le(i, k)}}};
    return {{sc_one(), Word{Tk, Le(i, k + 1)}}, {d, Word{Le(i, k)}}};
}

// expanded Y-letter run for an integer exponent vector
inline Word yrun(const std::vector<int>& mu) {
    Word w;
    for (size_t i = 0; i < mu.size(); ++i)
        for (int r = 0; r < std::abs(mu[i]); ++r)
            w.push_back(LY((int)i + 1, mu[i] > 0 ? 1 : -1));
    return w;
}

// Bernstein-type relation: Y^mu T_k^e = T_k Y^{s_k mu} + (tau - tau^{-1})
// times a geometric chain of intermediate Y-monomials
inline Combo ruleRunYT(const std::vector<int>& mu, int k, int et) {
    Scalar d = sc_tau() - sc_tau(-1);
    int a = mu[(size_t)k - 1], b = mu[(size_t)k];
    std::vector<int> nu = mu;
    std::swap(nu[(size_t)k - 1], nu[(size_t)k]);
    Combo out{{sc_one(), cw(Word{LT(k, 1)}, yrun(nu))[0].second}};
    if (a > b)
        for (int m = 0; m < a - b; ++m) {
            std::vector<int> ch = mu;
            ch[(size_t)k - 1] = a - m;
            ch[(size_t)k] = b + m;
            out.emplace_back(d, yrun(ch));
        }
    else if (a < b)
        for (int m = 0; m < b - a; ++m) {
            std::vector<int> ch = mu;
            ch[(size_t)k - 1] = b - m;
            ch[(size_t)k] = a + m;
            out.emplace_back(-d, yrun(ch));
        }
    if (et == -1) out.emplace_back(-d, yrun(mu));
    return out;
}

// word form of S^tau_{ab}
inline Combo wS(int n, int a, int b) {
    Scalar q = sc_q();
    Scalar kapp = (sc_tau(-1) - sc_tau()) / (q - sc_q(-1));
    if (a == b) {
        Word A = wT(a - 1, 1, '-', -1), B = wT(1, a - 1, '+', 1);
        Word C = wT(a, n - 1, '+', -1), Dw = wT(n - 1, a, '-', 1);
        Scalar c0 = sc_one() / (q - sc_q(-1));
        return {{c0 * q, cw(A, Word{LY(1, 1)}, B)[0].second},
                {-(c0 * sc_q(-1)), cw(A, Word{LY(1, -1)}, B)[0].second},
                {-c0, cw(C, Word{LY(n, 1)}, Dw)[0].second},
                {c0, cw(C, Word{LY(n, -1)}, Dw)[0].second}};
    }
    if (a < b) {
        Word A = cw(wT(a - 1, 1, '-', -1), wT(b, n - 1, '+', -1))[0].second;
        Word B = cw(wT(1, b - 2, '+', 1), wT(n - 1, a, '-', 1))[0].second;
        return {{kapp * sc_q(-1), cw(A, Word{LY(1, -1)}, B)[0].second},
                {kapp, cw(A, Word{LY(n, 1)}, B)[0].second}};
    }
    Word A = cw(wT(b, n - 1, '+', -1), wT(a - 2, 1, '-', -1))[0].second;
    Word B = cw(wT(n - 1, a, '-', 1), wT(1, b - 1, '+', 1))[0].second;
    return {{kapp * q, cw(A, Word{LY(1, 1)}, B)[0].second},
            {kapp, cw(A, Word{LY(n, -1)}, B)[0].second}};
}

// word form of the diagonal e_xx = (q - q^{-1})^{-1} (...(Y_n - Y_n^{-1})...)
inline Combo wEdiag(int n, int x) {
    Word A = wT(x, n - 1, '+', -1), B = wT(n - 1, x, '-', 1);
    Scalar c0 = sc_one() / (sc_q() - sc_q(-1));
    return {{c0, cw(A, Word{LY(n, 1)}, B)[0].second},
            {-c0, cw(A, Word{LY(n, -1)}, B)[0].second}};
}

// e_ij e_kl reordering relations (both orientations)
inline Combo erel1(int n, const Letter& E1, const Letter& E2) {
    int i = E1.a, j = E1.b, k = E2.a, l = E2.b;
    return cadd(Combo{{sc_one(), Word{Le(i, l), Le(k, j)}}},
                cw(Word{Le(i, l)}, wS(n, j, k)),
                csc(-sc_one(), cw(Word{Le(i, j)}, wS(n, l, k))));
}

inline Combo erel2(int n, const Letter& E1, const Letter& E2) {
    int i = E1.a, j = E1.b, k = E2.a, l = E2.b;
    return cadd(Combo{{sc_one(), Word{Le(k, j), Le(i, l)}}},
                cw(wS(n, j, k), Word{Le(i, l)}),
                csc(-sc_one(), cw(wS(n, j, i), Word{Le(k, l)})));
}

// next rewrite inside an e-block: nearest index collision, else the first
// out-of-order adjacent pair; nullopt when the block is in normal order
inline std::optional<std::pair<int, Combo>>
eblock_step(int n, const std::vector<Letter>& es) {
    int m = (int)es.size();
    struct Best {
        int dist, s, r;
        bool jfirst;
    };
    std::optional<Best> best;
    for (int s = 0; s < m; ++s)
        for (int r = s + 1; r < m; ++r)
            if (es[(size_t)s].b == es[(size_t)r].a ||
                es[(size_t)s].a == es[(size_t)r].b) {
                if (!best || r - s < best->dist)
                    best = Best{r - s, s, r,
                                es[(size_t)s].b == es[(size_t)r].a};
            }
    if (best) {
        auto [dist, s, r, jfirst] = *best;
        if (dist == 1)
            return std::make_pair(
                s, jfirst ? erel1(n, es[(size_t)s], es[(size_t)s + 1])
                          : erel2(n, es[(size_t)s], es[(size_t)s + 1]));
        return std::make_pair(
            r - 1, jfirst ? erel2(n, es[(size_t)r - 1], es[(size_t)r])
                          : erel1(n, es[(size_t)r - 1], es[(size_t)r]));
    }
    for (int p = 0; p + 1 < m; ++p) {
        if (es[(size_t)p].a > es[(size_t)p + 1].a)
            return std::make_pair(p, erel2(n, es[(size_t)p],
                                           es[(size_t)p + 1]));
        if (es[(size_t)p].b > es[(size_t)p + 1].b)
            return std::make_pair(p, erel1(n, es[(size_t)p],
                                           es[(size_t)p + 1]));
    }
    return std::nullopt;
}

} // namespace pbw_detail

// ---------------------------------------------------------------------------
// PBW normal form

struct PBWMonomial {
    Perm w;
    std::vector<std::array<int, 3>> efactors; // (i, j, multiplicity)
    std::vector<int> yexp;
    auto operator<=>(const PBWMonomial&) const = default;
};

struct PBWElement {
    std::map<PBWMonomial, Scalar> terms;

    void add(const PBWMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// index constraints of the normal form: i's weakly increasing, j's weakly
// increasing, ties in i broken by strictly increasing j, no diagonal factor,
// and the i-index set disjoint from the j-index set
inline bool pbw_validate(const PBWMonomial& m) {
    std::set<int> is, js;
    for (size_t s = 0; s < m.efactors.size(); ++s) {
        auto [i, j, k] = m.efactors[s];
        if (i == j || k <= 0) return false;
        is.insert(i);
        js.insert(j);
        if (s + 1 < m.efactors.size()) {
            auto [i2, j2, k2] = m.efactors[s + 1];
            if (i > i2) return false;
            if (i == i2 && j >= j2) return false;
            if (i < i2 && j > j2) return false;
        }
    }
    for (int i : is)
        if (js.count(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// fold engine: multiply letters onto already-normal monomials, rewriting and
// recursing; results per (letter, monomial) pair are memoized

class PBWEngine {
public:
    explicit PBWEngine(int n_) : n(n_) {
        bound = 2000000;
        if (const char* e = std::getenv("DAHA_STEP_BOUND")) {
            long v = std::atol(e);
            if (v > 0) bound = v;
        }
    }

    struct Key {
        Perm w;
        std::vector<std::pair<int, int>> es; // expanded e letters
        std::vector<int> yv;
        auto operator<=>(const Key&) const = default;
    };
    using Elem = std::map<Key, Scalar>;

    Key unit_key() const {
        return Key{perm_id(n), {}, std::vector<int>((size_t)n, 0)};
    }

    Elem reduce_word(const Word& word) {
        Elem e;
        e.emplace(unit_key(), sc_one());
        return mulw(word, e);
    }

    Elem mulw(const Word& word, Elem el) {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            el = mul(*it, el);
        return el;
    }

    long steps() const { return calls; }

private:
    int n;
    long calls = 0, bound;
    std::map<std::pair<Letter, Key>, Elem> cache;
    std::set<std::pair<Letter, Key>> inprog;

    static void accum(Elem& out, const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(k, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    }

    Elem mul(const Letter& L, const Elem& el) {
        Elem out;
        for (auto& [key, c] : el)
            for (auto& [k2, c2] : mulkey(L, key)) accum(out, k2, c * c2);
        return out;
    }

    Elem fold(const Word& word, const Key& key) {
        Elem e;
        e.emplace(key, sc_one());
        return mulw(word, e);
    }

    const Elem& mulkey(const Letter& L, const Key& key) {
        auto ck = std::make_pair(L, key);
        auto it = cache.find(ck);
        if (it != cache.end()) return it->second;
        if (inprog.count(ck))
            throw Error("pbw_reduce: rewrite cycle at letter (" +
                        std::string(1, L.kind) + "," + std::to_string(L.a) +
                        "," + std::to_string(L.b) + ")");
        if (++calls > bound) {
            std::string desc = "w=[";
            for (int v : key.w) desc += std::to_string(v) + " ";
            desc += "] e=[";
            for (auto& [a, b] : key.es)
                desc += "(" + std::to_string(a) + "," + std::to_string(b) +
                        ")";
            desc += "] y=[";
            for (int v : key.yv) desc += std::to_string(v) + " ";
            desc += "]";
            throw Error("pbw_reduce: step bound exceeded (" +
                        std::to_string(bound) + ") while multiplying letter " +
                        std::string(1, L.kind) + "(" + std::to_string(L.a) +
                        "," + std::to_string(L.b) + ") onto " + desc +
                        "; raise DAHA_STEP_BOUND to continue");
        }
        inprog.insert(ck);
        Elem r = mulkey_impl(L, key);
        inprog.erase(ck);
        return cache.emplace(std::move(ck), std::move(r)).first->second;
    }

    Elem mulkey_impl(const Letter& L, const Key& key) {
        using namespace pbw_detail;
        const Perm& w = key.w;
        Elem out;
        if (L.kind == 'T') {
            int k = L.a, e = L.b;
            Scalar d = sc_tau() - sc_tau(-1);
            Perm w2 = w;
            for (auto& x : w2) {
                if (x == k) x = k + 1;
                else if (x == k + 1) x = k;
            }
            size_t pk = 0, pk1 = 0;
            for (size_t p = 0; p < w.size(); ++p) {
                if (w[p] == k) pk = p;
                if (w[p] == k + 1) pk1 = p;
            }
            bool up = pk < pk1;
            Key key2{w2, key.es, key.yv};
            accum(out, key2, sc_one());
            if (e == 1 && !up) accum(out, key, d);
            if (e == -1 && up) accum(out, key, -d);
            return out;
        }
        if (L.kind == 'Y') {
            int a = L.a, sign = L.b;
            if (perm_is_id(w)) {
                if (key.es.empty()) {
                    Key k2 = key;
                    k2.yv[(size_t)a - 1] += sign;
                    accum(out, k2, sc_one());
                    return out;
                }
                auto [bi, bj] = key.es.front();
                Key base{w, {key.es.begin() + 1, key.es.end()}, key.yv};
                for (auto& [c2, w2] : ruleYe(n, sign, a, bi, bj))
                    for (auto& [k3, c3] : fold(w2, base))
                        accum(out, k3, c2 * c3);
                return out;
            }
            std::vector<int> mu((size_t)n, 0);
            mu[(size_t)a - 1] = sign;
            Key base{perm_id(n), key.es, key.yv};
            for (auto& [c2, pref, nu] : ypastT(mu, reduced_word(w))) {
                Elem tmp = fold(yrun(nu), base);
                Word tw;
                for (int kk : pref) tw.push_back(LT(kk, 1));
                tmp = mulw(tw, std::move(tmp));
                for (auto& [k3, c3] : tmp) accum(out, k3, c2 * c3);
            }
            return out;
        }
        // e letter
        int i = L.a, j = L.b;
        if (i == j) {
            for (auto& [c2, w2] : wEdiag(n, i))
                for (auto& [k3, c3] : fold(w2, key))
                    accum(out, k3, c2 * c3);
            return out;
        }
        if (perm_is_id(w)) {
            std::vector<Letter> eseq{Le(i, j)};
            for (auto& [ei, ej] : key.es) eseq.push_back(Le(ei, ej));
            return normE(eseq, key.yv);
        }
        std::vector<int> rw = reduced_word(w);
        Word tail;
        for (size_t p = 1; p < rw.size(); ++p) tail.push_back(LT(rw[p], 1));
        Key base{perm_id(n), key.es, key.yv};
        for (auto& [c2, w2] : ruleSwapET(n, Le(i, j), LT(rw[0], 1))) {
            Word full = w2;
            full.insert(full.end(), tail.begin(), tail.end());
            for (auto& [k3, c3] : fold(full, base)) accum(out, k3, c2 * c3);
        }
        return out;
    }

    // Y^mu T_{letters} = sum c T_prefix Y^nu with the prefix reduced letters
    struct YPast {
        Scalar c;
        std::vector<int> pref;
        std::vector<int> nu;
    };
    std::vector<YPast> ypastT(const std::vector<int>& mu,
                              const std::vector<int>& letters) {
        using namespace pbw_detail;
        if (letters.empty()) return {YPast{sc_one(), {}, mu}};
        int k = letters[0];
        std::vector<int> rest(letters.begin() + 1, letters.end());
        std::vector<YPast> out;
        for (auto& [c2, w2] : ruleRunYT(mu, k, 1)) {
            bool hasT = !w2.empty() && w2.front().kind == 'T';
            std::vector<int> nu((size_t)n, 0);
            for (size_t p = hasT ? 1 : 0; p < w2.size(); ++p)
                nu[(size_t)w2[p].a - 1] += w2[p].b;
            for (auto& sub : ypastT(nu, rest)) {
                std::vector<int> pref;
                if (hasT) pref.push_back(k);
                pref.insert(pref.end(), sub.pref.begin(), sub.pref.end());
                out.push_back(YPast{c2 * sub.c, std::move(pref), sub.nu});
            }
        }
        return out;
    }

    // normalize a pure e-sequence (with given trailing Y-exponents)
    Elem normE(const std::vector<Letter>& eseq, const std::vector<int>& yv) {
        using namespace pbw_detail;
        Key base0{perm_id(n), {}, yv};
        Elem out;
        for (size_t p = 0; p < eseq.size(); ++p)
            if (eseq[p].a == eseq[p].b) {
                for (auto& [c2, w2] : wEdiag(n, eseq[p].a)) {
                    Word word(eseq.begin(), eseq.begin() + (long)p);
                    word.insert(word.end(), w2.begin(), w2.end());
                    word.insert(word.end(), eseq.begin() + (long)p + 1,
                                eseq.end());
                    for (auto& [k3, c3] : fold(word, base0))
                        accum(out, k3, c2 * c3);
                }
                return out;
            }
        auto act = eblock_step(n, eseq);
        if (!act) {
            Key k{perm_id(n), {}, yv};
            for (auto& L : eseq) k.es.emplace_back(L.a, L.b);
            accum(out, k, sc_one());
            return out;
        }
        auto& [pos, repl] = *act;
        for (auto& [c2, w2] : repl) {
            Word word(eseq.begin(), eseq.begin() + pos);
            word.insert(word.end(), w2.begin(), w2.end());
            word.insert(word.end(), eseq.begin() + pos + 2, eseq.end());
            bool pure = true;
            for (auto& Lw : word)
                if (Lw.kind != 'e') pure = false;
            Elem sub;
            if (pure) {
                std::vector<Letter> seq(word.begin(), word.end());
                sub = normE(seq, yv);
            } else {
                sub = fold(word, base0);
            }
            for (auto& [k3, c3] : sub) accum(out, k3, c2 * c3);
        }
        return out;
    }
};

// group an engine key into a PBW monomial (run-length encode the e letters)
inline PBWMonomial pbw_monomial_of(const PBWEngine::Key& k) {
    PBWMonomial m;
    m.w = k.w;
    m.yexp = k.yv;
    for (auto& [i, j] : k.es) {
        if (!m.efactors.empty() && m.efactors.back()[0] == i &&
            m.efactors.back()[1] == j)
            ++m.efactors.back()[2];
        else
            m.efactors.push_back({i, j, 1});
    }
    return m;
}

// expand a PBW monomial back into a generator word
inline Word pbw_word_of(const PBWMonomial& m) {
    Word w;
    for (int k : reduced_word(m.w)) w.push_back(LT(k, 1));
    for (auto& [i, j, mult] : m.efactors)
        for (int r = 0; r < mult; ++r) w.push_back(Le(i, j));
    for (size_t i = 0; i < m.yexp.size(); ++i)
        for (int r = 0; r < std::abs(m.yexp[i]); ++r)
            w.push_back(LY((int)i + 1, m.yexp[i] > 0 ? 1 : -1));
    return w;
}

// reduce an element of the subalgebra to PBW normal form; the engine's
// rewrite cache can be shared across calls
inline PBWElement pbw_reduce(const AlgElement& x, PBWEngine& eng, int n) {
    for (auto& [w, c] : x.terms)
        for (auto& L : w) {
            bool ok = (L.kind == 'T' && L.a >= 1 && L.a < n &&
                       (L.b == 1 || L.b == -1)) ||
                      (L.kind == 'Y' && L.a >= 1 && L.a <= n &&
                       (L.b == 1 || L.b == -1)) ||
                      (L.kind == 'e' && L.a >= 1 && L.a <= n && L.b >= 1 &&
                       L.b <= n && L.a != L.b);
            if (!ok) throw Error("pbw_reduce: letter out of range");
        }
    std::map<PBWEngine::Key, Scalar> acc;
    for (auto& [w, c] : x.terms)
        for (auto& [k, c2] : eng.reduce_word(w)) {
            auto [it, fresh] = acc.try_emplace(k, c * c2);
            if (!fresh) {
                it->second = it->second + c * c2;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    PBWElement out;
    for (auto& [k, c] : acc) out.add(pbw_monomial_of(k), c);
    return out;
}

inline PBWElement pbw_reduce(const AlgElement& x, int n) {
    PBWEngine eng(n);
    return pbw_reduce(x, eng, n);
}

// ---------------------------------------------------------------------------
// interpretation in the polynomial representation

inline DROp to_operator(const Word& w, const Context& c) {
    DROp op = DROp::identity(c);
    for (auto& L : w) {
        DROp g(c);
        if (L.kind == 'T')
            g = L.b == 1 ? gen_T(c, L.a) : gen_Tinv(c, L.a);
        else if (L.kind == 'Y')
            g = L.b == 1 ? gen_Y(c, L.a) : gen_Yinv(c, L.a);
        else
            g = gen_e(c, L.a, L.b);
        op = op * g;
    }
    return op;
}

inline DROp to_operator(const AlgElement& x, const Context& c) {
    DROp op(c);
    for (auto& [w, s] : x.terms)
        op = op + to_operator(w, c).scaled(scalar_in(c, s));
    return op;
}

inline DROp to_operator(const PBWElement& x, const Context& c) {
    DROp op(c);
    for (auto& [m, s] : x.terms)
        op = op + to_operator(pbw_word_of(m), c).scaled(scalar_in(c, s));
    return op;
}

// interpretation at tau = 1: T_k^{+-1} -> s_k, Y_i -> t_i, e_ij -> E^q_ij;
// the context must be specialized with tval = 1 so scalars land correctly

inline DROp op_sk(const Context& c, int k) {
    Perm p = perm_id(c.n);
    std::swap(p[(size_t)k - 1], p[(size_t)k]);
    return DROp::term(c, p, Shift(c.n, 0), c.one());
}

inline DROp to_operator_tau1(const Word& w, const Context& c) {
    DROp op = DROp::identity(c);
    for (auto& L : w) {
        if (L.kind == 'T')
            op = op * op_sk(c, L.a);
        else if (L.kind == 'Y')
            op = op * gen_t(c, L.a, L.b);
        else
            op = op * gen_Eq(c, L.a, L.b);
    }
    return op;
}

inline DROp to_operator_tau1(const PBWElement& x, const Context& c) {
    DROp op(c);
    for (auto& [m, s] : x.terms)
        op = op + to_operator_tau1(pbw_word_of(m), c).scaled(scalar_in(c, s));
    return op;
}

// PBWElement reinjected as a formal element (for idempotence checks)
inline AlgElement pbw_to_alg(const PBWElement& x) {
    AlgElement out;
    for (auto& [m, s] : x.terms) out.add(pbw_word_of(m), s);
    return out;
}

// ---------------------------------------------------------------------------
// independence of PBW monomials in the representation: columns are the
// actions on all Laurent monomials with exponents in [-box, box]^n, with
// (q, tau) specialized at seeded random rationals; exact rank over Q

inline bool pbw_rank_test(const std::vector<PBWMonomial>& monomials, int n,
                          int box, unsigned seed,
                          std::string* note = nullptr) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 50);
    auto draw = [&] {
        // random rational with |num|, |den| <= 50, excluding 0 and +-1
        Rat r;
        do {
            r = Rat(dist(rng), dist(rng));
            r.canonicalize();
        } while (r == 1);
        if (rng() & 1) r = -r;
        return r;
    };
    Rat qv = draw(), tv = draw();
    while (tv == qv || tv == -qv) tv = draw();
    Context c = Context::specialized(n, qv, tv);

    // enumerate the box of input Laurent monomials
    std::vector<std::vector<int>> inputs;
    std::vector<int> cur((size_t)n, -box);
    while (true) {
        inputs.push_back(cur);
        int p = 0;
        while (p < n && cur[(size_t)p] == box) cur[(size_t)p++] = -box;
        if (p == n) break;
        ++cur[(size_t)p];
    }

    using RowKey = std::pair<std::vector<int>, std::vector<int>>;
    std::vector<std::map<RowKey, Rat>> cols;
    for (auto& m : monomials) {
        DROp op = to_operator(pbw_word_of(m), c);
        std::map<RowKey, Rat> col;
        for (auto& a : inputs) {
            LaurentPoly img = op.act(LaurentPoly::monomial(c, a, c.one()));
            for (auto& [b, g] : img.terms) {
                // no params: the coefficient is a rational constant
                if (!g.num.is_constant() || !g.den.is_constant())
                    throw Error("pbw_rank_test: non-constant coefficient");
                Rat v = g.num.constant_value() / g.den.constant_value();
                if (v != 0) col[{a, b}] = v;
            }
        }
        cols.push_back(std::move(col));
    }
    // exact Gaussian elimination on the columns
    std::vector<std::map<RowKey, Rat>> pivots; // reduced, leading entry 1
    for (auto col : cols) {
        for (auto& pv : pivots) {
            auto it = col.find(pv.begin()->first);
            if (it == col.end()) continue;
            Rat f = it->second;
            for (auto& [rk, v] : pv) {
                Rat& slot = col[rk];
                slot -= f * v;
                if (slot == 0) col.erase(rk);
            }
        }
        if (col.empty()) {
            // an exact dependence over the box: either genuinely dependent
            // or the box is too small to separate the monomials
            if (note) *note = "inconclusive at this box";
            return false;
        }
        Rat lead = col.begin()->second;
        for (auto& [rk, v] : col) v /= lead;
        pivots.push_back(std::move(col));
    }
    return true;
}

// ---------------------------------------------------------------------------
// centraliser degree check: T_w X^mx D^md Y^my commutes with the grading
// operator exactly when deg M_X = deg M_D

inline bool centraliser_degree_check(const std::vector<int>& mx,
                                     const std::vector<int>& md,
                                     const std::vector<int>& myexp,
                                     const Perm& w, int n) {
    if ((int)mx.size() != n || (int)md.size() != n ||
        (int)myexp.size() != n || (int)w.size() != n)
        throw Error("centraliser_degree_check: bad dimensions");
    for (int i = 0; i < n; ++i)
        if (mx[(size_t)i] > 0 && md[(size_t)i] > 0)
            throw Error("centraliser_degree_check: X_i and D_i powers on "
                        "the same index");
    Context c(n);
    DROp op = DROp::identity(c);
    for (int k : reduced_word(w)) op = op * gen_T(c, k);
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < mx[(size_t)i - 1]; ++r) op = op * gen_X(c, i);
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < md[(size_t)i - 1]; ++r) op = op * gen_D(c, i);
    for (int i = 1; i <= n; ++i) {
        int e = myexp[(size_t)i - 1];
        for (int r = 0; r < std::abs(e); ++r)
            op = op * (e > 0 ? gen_Y(c, i) : gen_Yinv(c, i));
    }
    DROp yt = gen_Ytilde(c);
    return yt * op == op * yt;
}

} // namespace daha
