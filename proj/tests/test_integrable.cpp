#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "daha/integrable.hpp"

using namespace daha;

TEST_CASE("closed form of Res(sum calD_i) for l1 = l2 = 1") {
    // symbolic at n = 2
    {
        Context c(2, {"a", "b", "cc"});
        RatFn a = c.param("a"), b = c.param("b"), cc = c.param("cc");
        DROp R = res_sym(c, 1, 1, {b, cc, a}, "p1");
        CHECK(R == closed_M(c, a, b, cc));
    }
    // specialized q, tau at n = 3
    {
        Context c = Context::specialized(3, Rat(5, 3), Rat(3, 2),
                                         {"a", "b", "cc"});
        RatFn a = c.param("a"), b = c.param("b"), cc = c.param("cc");
        DROp R = res_sym(c, 1, 1, {b, cc, a}, "p1");
        CHECK(R == closed_M(c, a, b, cc));
    }
}

TEST_CASE("closed form of Res(sum calD_i) for (l1, l2) = (1, 2)") {
    std::vector<std::string> ps{"am1", "a0", "a1", "a2"};
    {
        Context c(2, ps);
        std::vector<RatFn> a{c.param("am1"), c.param("a0"), c.param("a1"),
                             c.param("a2")};
        DROp R = res_sym(c, 1, 2, a, "p1");
        CHECK(R == closed_D12(c, a[0], a[1], a[2], a[3]));
    }
    {
        Context c = Context::specialized(3, Rat(5, 3), Rat(3, 2), ps);
        std::vector<RatFn> a{c.param("am1"), c.param("a0"), c.param("a1"),
                             c.param("a2")};
        DROp R = res_sym(c, 1, 2, a, "p1");
        CHECK(R == closed_D12(c, a[0], a[1], a[2], a[3]));
    }
}

TEST_CASE("closed forms E_m^+- at n = 3") {
    Context c(3);
    for (int m = 1; m <= 3; ++m) {
        DROp Sp = DROp::zero(c), Sm = DROp::zero(c);
        for (int i = m; i <= 3; ++i) Sp = Sp + calD_pm(c, i, +1);
        for (int i = 1; i <= m; ++i) Sm = Sm + calD_pm(c, i, -1);
        CHECK(Sp.res() == E_closed(c, +1, m));
        CHECK(Sm.res() == E_closed(c, -1, m));
    }
}

static std::vector<std::string> anames(int l1, int l2) {
    std::vector<std::string> ps;
    for (int j = -l1; j <= l2; ++j)
        ps.push_back(j < 0 ? "am" + std::to_string(-j)
                           : "a" + std::to_string(j));
    return ps;
}

TEST_CASE("leading-term structure and coefficients of Res(sum calD_i)") {
    for (auto [l1, l2] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        Context c(2, anames(l1, l2));
        std::vector<RatFn> a;
        for (size_t k = 0; k < c.params.size(); ++k) a.push_back(c.param(k));
        auto rep = leading_term_check(c, l1, l2, a);
        INFO("n=2 (", l1, ",", l2, ")",
             rep.problems.empty() ? "" : rep.problems[0]);
        CHECK(rep.ok);
    }
    {
        Context c = Context::specialized(3, Rat(5, 3), Rat(3, 2),
                                         anames(1, 2));
        std::vector<RatFn> a;
        for (size_t k = 0; k < c.params.size(); ++k) a.push_back(c.param(k));
        auto rep = leading_term_check(c, 1, 2, a);
        INFO("n=3 (1,2) ", rep.problems.empty() ? "" : rep.problems[0]);
        CHECK(rep.ok);
    }
}

TEST_CASE("properties of the symmetric residues") {
    Context c(2);
    std::vector<RatFn> a{RatFn::constant(c.vars, Rat(-2, 3)),
                         RatFn::constant(c.vars, Rat(1, 2)),
                         RatFn::constant(c.vars, Rat(4, 3))};
    DROp R1 = res_sym(c, 1, 1, a, "p1");
    DROp R2 = res_sym(c, 1, 1, a, "p2");
    CHECK(R1.is_w_invariant());
    CHECK(R2.is_w_invariant());
    CHECK(R1 * R2 == R2 * R1);
    DROp E1 = res_sym(c, 1, 1, a, "e1");
    DROp E2 = res_sym(c, 1, 1, a, "e2");
    CHECK(E1 * E2 == E2 * E1);
    CHECK(E1 * R2 == R2 * E1);

    // distinct supports at tau = 1 (algebraic independence witness)
    Context c1 = Context::specialized(2, Rat(5, 3), Rat(1));
    std::vector<RatFn> a1{RatFn::constant(c1.vars, Rat(-2, 3)),
                          RatFn::constant(c1.vars, Rat(1, 2)),
                          RatFn::constant(c1.vars, Rat(4, 3))};
    std::set<std::set<Shift>> sups;
    for (int r = 1; r <= 2; ++r) {
        DROp pr = res_sym(c1, 1, 1, a1, "p" + std::to_string(r));
        std::set<Shift> sup;
        for (auto& [k, g] : pr.terms) sup.insert(k.second);
        sups.insert(sup);
    }
    CHECK(sups.size() == 2);
}

TEST_CASE("two-type rational identity") {
    CHECK(twotype_identity_check(1, 1));
    CHECK(twotype_identity_check(2, 1));
    CHECK(twotype_identity_check(0, 2));
}

TEST_CASE("two-type operators: term structure") {
    TwoTypeOp M = twotype_M(2, 1);
    CHECK(M.terms.size() == 7); // 2 + 1 shifted up, 2 + 1 down, identity
    TwoTypeOp H = twotype_H(2, 1);
    CHECK(H.terms.size() == 7);
    TwoTypeOp Hh = twotype_Hhat(1, 2);
    CHECK(Hh.terms.size() == 7);
}

TEST_CASE("two-type M at N2 = 0 reduces to the closed one-type operator") {
    for (int n : {2, 3}) {
        TwoTypeOp M = twotype_M(n, 0);
        Context c(n, {"th0", "th1"}); // same variable layout as M.vars
        RatFn th0 = c.param("th0"), th1 = c.param("th1");
        RatFn a = -c.tau(n - 1) * th0 * th0;
        RatFn b = -c.tau(1 - n) * th0 * th1;
        RatFn cc = th0 * (th0 + th1);
        DROp W = closed_M(c, a, b, cc);
        CHECK(M.terms.size() == W.terms.size());
        Perm id = perm_id(n);
        for (auto& [k, g] : M.terms) {
            auto it = W.terms.find({id, k.first});
            REQUIRE(it != W.terms.end());
            CHECK(g == it->second);
        }
    }
}

TEST_CASE("generalised vDE operator merges types at t = q^-1") {
    TwoTypeOp A = twotype_H(1, 1); // vars q,t,t0..t3,u1,v1
    TwoTypeOp B = twotype_H(2, 0); // vars q,t,t0..t3,u1,u2 (same layout)
    std::map<size_t, RatFn> subA{{1, RatFn::variable(A.vars, 0, -1)}};
    std::map<size_t, RatFn> subB{{1, RatFn::variable(B.vars, 0, -1)}};
    std::map<std::vector<int>, RatFn> ga, gb;
    for (auto& [k, g] : A.terms) {
        // with t = q^-1 the y-shift T^{-log t / log q} becomes the x-shift
        // T^{+1} in the extra variable, so the y-exponent flips sign
        std::vector<int> key{k.first[0], -k.second[0]};
        RatFn v = g.substitute(subA);
        auto it = ga.find(key);
        if (it == ga.end()) ga.emplace(key, v);
        else {
            it->second += v;
            if (it->second.is_zero()) ga.erase(it);
        }
    }
    for (auto& [k, g] : B.terms) {
        RatFn v = g.substitute(subB);
        if (!v.is_zero()) gb.emplace(k.first, v);
    }
    CHECK(ga == gb);
}
