#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <daha/ratfn.hpp>

using namespace daha;

static VarsPtr V2 = make_vars({"q", "tau"});
static VarsPtr V4 = make_vars({"q", "tau", "X1", "X2"});

static RatFn var(VarsPtr vs, size_t i, int e = 1) {
    return RatFn::variable(vs, i, e);
}

TEST_CASE("rational scalars") {
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
    CHECK(rat_str(Rat(-7, 3)) == "-7/3");
}

TEST_CASE("poly basics and graded lex") {
    Poly q = Poly::variable(V2, 0);
    Poly t = Poly::variable(V2, 1);
    Poly p = q * q + t.scaled(Rat(3)) - Poly::constant(V2, Rat(1));
    CHECK(p.str() == "q^2 + 3*tau - 1");
    CHECK(p.total_degree() == 2);
    Poly z = p - p;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    // graded lex: degree first, then earlier variable
    Poly m = q * t + t * t.scaled(Rat(2)) + q;
    CHECK(m.str() == "q*tau + 2*tau^2 + q");
}

TEST_CASE("exact division and gcd") {
    Poly q = Poly::variable(V2, 0);
    Poly one = Poly::constant(V2, Rat(1));
    Poly a = q * q - one;       // (q-1)(q+1)
    Poly b = q * q - q.scaled(Rat(2)) + one; // (q-1)^2
    Poly g = poly_gcd(a, b);
    CHECK(divide_exact(a, g) * g == a);
    CHECK(divide_exact(b, g) * g == b);
    CHECK(g.total_degree() == 1);
    CHECK(!try_divide(a, b).has_value());

    // multivariate: gcd of (X1^2 - X2^2) and (X1 - X2)^2 is X1 - X2
    Poly x1 = Poly::variable(V4, 2), x2 = Poly::variable(V4, 3);
    Poly u = x1 * x1 - x2 * x2;
    Poly v = (x1 - x2) * (x1 - x2);
    Poly gu = poly_gcd(u, v);
    CHECK(divide_exact(u, gu) * gu == u);
    CHECK(gu.total_degree() == 1);
}

TEST_CASE("rational function canonical form") {
    RatFn q = var(V2, 0), t = var(V2, 1);
    RatFn one = RatFn::constant(V2, Rat(1));

    // (q^2 - 1)/(q - 1) canonicalizes to q + 1
    RatFn f = (q * q - one) / (q - one);
    CHECK(f.str() == "q + 1");
    CHECK(f == q + one);

    CHECK((f - f).str() == "0");
    CHECK((q / q).str() == "1");

    // denominator sign and integer scaling
    RatFn g = one / (one - q); // -> -1/(q - 1)
    CHECK(g.str() == "-1/(q - 1)");
    RatFn h = (q.pow(2) - one) * RatFn::constant(V2, Rat(1, 2)) /
              (t * RatFn::constant(V2, Rat(3)));
    CHECK(h.str() == "(q^2 - 1)/(6*tau)");

    // byte-identical canonical strings for equal values
    RatFn a = (q + t) / (q - t);
    RatFn b = (q * q - t * t) / ((q - t) * (q - t));
    CHECK(a == b);
    CHECK(a.str() == b.str());
}

TEST_CASE("field axioms on random-ish values") {
    RatFn q = var(V2, 0), t = var(V2, 1);
    RatFn one = RatFn::constant(V2, Rat(1));
    std::vector<RatFn> xs = {q + t, (q - t) / (q * t + one), one / q,
                             t.pow(2) - q, RatFn::constant(V2, Rat(-3, 7))};
    for (auto& a : xs)
        for (auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + one) == a * b + a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    for (auto& a : xs) {
        CHECK(a + RatFn(V2) == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("pow and substitute") {
    RatFn q = var(V2, 0), t = var(V2, 1);
    RatFn one = RatFn::constant(V2, Rat(1));
    RatFn f = (q - t) / (q + t);
    CHECK(f.pow(2) * f.pow(-2) == one);
    CHECK(f.pow(0) == one);

    // substitute q -> tau^2 into (q^2-1)/(q-1) = q+1 gives tau^2 + 1
    RatFn g = (q * q - one) / (q - one);
    std::map<size_t, RatFn> b{{0, t * t}};
    CHECK(g.substitute(b) == t * t + one);

    // substitution making a denominator vanish throws
    RatFn h = one / (q - one);
    std::map<size_t, RatFn> bad{{0, one}};
    CHECK_THROWS_AS((void)h.substitute(bad), Error);

    // substitution commutes with arithmetic
    std::map<size_t, RatFn> s{{0, (t + one) / t}, {1, t}};
    RatFn u = (q + t) / (q * t - one);
    RatFn v = q * q - t;
    CHECK((u * v).substitute(s) == u.substitute(s) * v.substitute(s));
    CHECK((u + v).substitute(s) == u.substitute(s) + v.substitute(s));
}

TEST_CASE("shift permute coefficient map") {
    // X1 -> q^2 X2, X2 -> q^{-1} X1 applied to (X1 + X2)/X1
    RatFn x1 = var(V4, 2), x2 = var(V4, 3), q = var(V4, 0);
    RatFn f = (x1 + x2) / x1;
    std::vector<int> perm{2, 1};  // 1 -> 2, 2 -> 1
    std::vector<int> shift{2, -1}; // exponent added per source index
    RatFn g = f.shift_permute(0, 2, 2, perm, shift);
    RatFn expect = (q.pow(2) * x2 + q.pow(-1) * x1) / (q.pow(2) * x2);
    CHECK(g == expect);
}
