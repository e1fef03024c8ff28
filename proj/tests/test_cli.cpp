#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <daha/expr.hpp>

#include <random>

using namespace daha;

TEST_CASE("grammar examples") {
    // product of two atoms
    Expr e = parse_expr("Y[1] e[1,2]");
    REQUIRE(e.kind == Expr::Prod);
    REQUIRE(e.children.size() == 2);
    CHECK(e.children[0].name == "Y");
    CHECK(e.children[1].name == "e");
    CHECK(e.children[1].two);

    // power
    Expr p = parse_expr("T[1]^2");
    REQUIRE(p.kind == Expr::Pow);
    CHECK(p.expo == 2);
    CHECK(p.children[0].name == "T");

    // sum with scalar coefficients and a negative power
    Expr s = parse_expr("{q-1} X[1] + {tau} Y[2]^-1");
    REQUIRE(s.kind == Expr::Sum);
    REQUIRE(s.children.size() == 2);
    CHECK(s.children[0].kind == Expr::Prod);
    CHECK(s.children[0].children[0].kind == Expr::ScalarLit);
    CHECK(s.children[1].children[1].kind == Expr::Pow);
    CHECK(s.children[1].children[1].expo == -1);

    CHECK(parse_expr("pi").name == "pi");
    CHECK(parse_expr("piinv").name == "piinv");
    CHECK(parse_expr("T[1]*T[2]").kind == Expr::Prod);
}

TEST_CASE("syntax errors carry a position") {
    auto pos_of = [](const std::string& text) {
        try {
            parse_expr(text);
        } catch (const Error& e) {
            std::string msg = e.what();
            CHECK(msg.find("position") != std::string::npos);
            return true;
        }
        return false;
    };
    CHECK(pos_of("T[1"));
    CHECK(pos_of("T[ ]"));
    CHECK(pos_of("{q-1"));
    CHECK(pos_of("Y[1] +"));
    CHECK(pos_of("Y[1])"));
    CHECK(pos_of("^2"));
}

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
    auto atom = [&] {
        Expr e;
        e.kind = Expr::Atom;
        switch (rng() % 6) {
        case 0: e.name = "T"; e.a = 1 + (int)(rng() % 2); break;
        case 1: e.name = "Y"; e.a = 1 + (int)(rng() % 3); break;
        case 2:
            e.name = "e";
            e.a = 1;
            e.b = 2;
            e.two = true;
            break;
        case 3: e.name = "X"; e.a = 1 + (int)(rng() % 3); break;
        case 4: e.name = "pi"; break;
        default: e.name = "D"; e.a = 1; break;
        }
        return e;
    };
    if (depth == 0 || rng() % 3 == 0) {
        Expr a = atom();
        if (rng() % 3 == 0) {
            Expr pw;
            pw.kind = Expr::Pow;
            pw.expo = (long)(rng() % 5) - 2;
            pw.children.push_back(std::move(a));
            return pw;
        }
        return a;
    }
    if (rng() % 4 == 0) {
        Expr sc;
        sc.kind = Expr::ScalarLit;
        sc.name = (rng() % 2) ? "q-1" : "tau^2 + 3";
        return sc;
    }
    Expr out;
    size_t k = 2 + rng() % 2;
    if (rng() % 2) {
        out.kind = Expr::Sum;
        for (size_t i = 0; i < k; ++i) {
            out.children.push_back(random_expr(rng, depth - 1));
            out.signs.push_back(rng() % 2 ? 1 : -1);
        }
    } else {
        out.kind = Expr::Prod;
        for (size_t i = 0; i < k; ++i)
            out.children.push_back(random_expr(rng, depth - 1));
    }
    return out;
}

} // namespace

TEST_CASE("parse . print round-trips on randomized expressions") {
    std::mt19937 rng(19);
    for (int t = 0; t < 200; ++t) {
        Expr e = random_expr(rng, 3);
        std::string s1 = print_expr(e);
        Expr e2 = parse_expr(s1);
        CHECK(print_expr(e2) == s1);
    }
}

TEST_CASE("scalar reader inverts canonical strings") {
    Context c(2, {"a", "b"});
    std::vector<RatFn> samples{
        c.one(),
        c.q() - c.q(-1),
        (c.tau(2) - c.one()) / (c.q() * c.tau() + c.param("a")),
        c.param("b", 3) * c.X(1) - c.X(2, -2) / (c.q() + c.cst(Rat(7, 3))),
    };
    VarResolver var = [&](const std::string& name, int e) -> RatFn {
        if (name == "q") return c.q(e);
        if (name == "tau") return c.tau(e);
        if (name == "X1") return c.X(1, e);
        if (name == "X2") return c.X(2, e);
        return c.param(name, e);
    };
    for (auto& f : samples)
        CHECK(parse_ratfn(f.str(), var, c.one()) == f);
    CHECK(scalar_of(c, "(q - q^-1)^2") == (c.q() - c.q(-1)).pow(2));
    CHECK(scalar_of(c, "-3/4") == c.cst(Rat(-3, 4)));
    CHECK_THROWS_AS(scalar_of(c, "q +"), Error);
}

TEST_CASE("expression evaluation in the representation") {
    Context c(2);
    CHECK(to_operator(parse_expr("T[1]^2"), c) == gen_T(c, 1).pow(2));
    CHECK(to_operator(parse_expr("T[1] Tinv[1]"), c) == DROp::identity(c));
    CHECK(to_operator(parse_expr("Y[1]^-1"), c) == gen_Yinv(c, 1));
    CHECK(to_operator(parse_expr("{q-1} X[1] + {tau} Y[2]^-1"), c) ==
          gen_X(c, 1).scaled(c.q() - c.one()) +
              gen_Yinv(c, 2).scaled(c.tau()));
    CHECK(to_operator(parse_expr("pi^2"), c) == gen_pi(c).pow(2));
    CHECK(to_operator(parse_expr("(T[1] + Tinv[1]) (T[1] + Tinv[1])"), c) ==
          (gen_T(c, 1) + gen_Tinv(c, 1)).pow(2));
    // index out of range surfaces at evaluation, not parse
    Expr bad = parse_expr("T[5]");
    CHECK_THROWS_AS(to_operator(bad, c), Error);
}

TEST_CASE("expression evaluation as formal subalgebra elements") {
    AlgElement x = to_alg(parse_expr("{q} Y[1] e[1,2] - T[1]^2"));
    REQUIRE(x.terms.size() == 2);
    CHECK(x.terms.at(Word{LY(1, 1), Le(1, 2)}) == sc_q());
    CHECK(x.terms.at(Word{LT(1, 1), LT(1, 1)}) == -sc_one());
    // letterwise inverses for negative atom powers
    AlgElement y = to_alg(parse_expr("Y[2]^-2"));
    CHECK(y.terms.count(Word{LY(2, -1), LY(2, -1)}) == 1);
    CHECK_THROWS_AS(to_alg(parse_expr("X[1]")), Error);
    CHECK_THROWS_AS(to_alg(parse_expr("e[1,2]^-1")), Error);
}
