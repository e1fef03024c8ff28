#pragma once
// Expression grammar for the command-line interface.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' int)? | '(' expr ')' | scalar
//   atom   := NAME '[' int (',' int)? ']' | 'pi' | 'piinv'
//   scalar := '{' rational-function-text '}'
//
// Scalar literals are exact rational functions in q, tau and any declared
// field parameters.  Syntax errors carry the character position.

#include "generators.hpp"
#include "hecke.hpp"

#include <functional>
#include <memory>

namespace daha {

// ---------------------------------------------------------------------------
// rational-function reader (used for scalar literals): standard arithmetic
// expression over named transcendentals; the resolver maps a name and an
// exponent to a field element

using VarResolver = std::function<RatFn(const std::string&, int)>;

namespace expr_detail {

struct RatReader {
    const std::string& s;
    size_t p = 0;
    const VarResolver& var;
    RatFn one;

    void skip() {
        while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("scalar parse error at position " + std::to_string(p) +
                    ": " + msg);
    }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (p >= s.size() || !std::isdigit((unsigned char)s[p]))
            fail("expected integer");
        long v = 0;
        while (p < s.size() && std::isdigit((unsigned char)s[p]))
            v = v * 10 + (s[p++] - '0');
        return neg ? -v : v;
    }

    RatFn expr() {
        RatFn acc = eat('-') ? -term() : term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    RatFn term() {
        RatFn acc = factor();
        while (true) {
            if (eat('*')) acc *= factor();
            else if (eat('/')) {
                RatFn d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else
                return acc;
        }
    }
    RatFn factor() {
        skip();
        if (p >= s.size()) fail("unexpected end of scalar");
        if (std::isdigit((unsigned char)s[p])) {
            long v = integer();
            RatFn base = RatFn::constant(one.vars(), Rat(v));
            return maybe_pow_const(base);
        }
        if (std::isalpha((unsigned char)s[p]) || s[p] == '_') {
            size_t q0 = p;
            while (p < s.size() &&
                   (std::isalnum((unsigned char)s[p]) || s[p] == '_'))
                ++p;
            std::string name = s.substr(q0, p - q0);
            long e = 1;
            if (eat('^')) e = integer();
            return var(name, (int)e);
        }
        if (eat('(')) {
            RatFn v = expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_pow_const(v);
        }
        fail("unexpected character '" + std::string(1, s[p]) + "'");
    }
    RatFn maybe_pow_const(const RatFn& base) {
        if (!eat('^')) return base;
        long e = integer();
        return base.pow(e);
    }
};

} // namespace expr_detail

inline RatFn parse_ratfn(const std::string& text, const VarResolver& var,
                         const RatFn& one) {
    expr_detail::RatReader r{text, 0, var, one};
    RatFn v = r.expr();
    r.skip();
    if (r.p != text.size()) r.fail("trailing input");
    return v;
}

// scalar literal over a representation context
inline RatFn scalar_of(const Context& c, const std::string& text) {
    VarResolver var = [&](const std::string& name, int e) -> RatFn {
        if (name == "q") return c.q(e);
        if (name == "tau") return c.tau(e);
        return c.param(name, e);
    };
    return parse_ratfn(text, var, c.one());
}

// scalar literal over the abstract coefficient field Q(q, tau)
inline Scalar scalar_of_qtau(const std::string& text) {
    VarResolver var = [](const std::string& name, int e) -> Scalar {
        if (name == "q") return sc_q(e);
        if (name == "tau") return sc_tau(e);
        throw Error("scalar parse error: unknown name '" + name +
                    "' (only q, tau allowed here)");
    };
    return parse_ratfn(text, var, sc_one());
}

// ---------------------------------------------------------------------------
// expression AST

struct Expr {
    enum Kind { Sum, Prod, Pow, Atom, ScalarLit } kind = Atom;
    std::vector<Expr> children; // Sum, Prod, Pow (single child)
    std::vector<int> signs;     // Sum: +1 / -1 per child
    long expo = 1;              // Pow
    std::string name;           // Atom name, or ScalarLit text
    int a = 0, b = 0;           // Atom indices
    bool two = false;           // Atom has two indices
};

namespace expr_detail {

struct ExprParser {
    const std::string& s;
    size_t p = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at position " + std::to_string(p) + ": " +
                    msg);
    }
    void skip() {
        while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
    }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return p < s.size() ? s[p] : '\0';
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (p >= s.size() || !std::isdigit((unsigned char)s[p]))
            fail("expected integer");
        long v = 0;
        while (p < s.size() && std::isdigit((unsigned char)s[p]))
            v = v * 10 + (s[p++] - '0');
        return neg ? -v : v;
    }

    Expr expr() {
        Expr out;
        out.kind = Expr::Sum;
        int sign = eat('-') ? -1 : 1;
        out.children.push_back(term());
        out.signs.push_back(sign);
        while (true) {
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            out.children.push_back(term());
            out.signs.push_back(sign);
        }
        if (out.children.size() == 1 && out.signs[0] == 1)
            return std::move(out.children[0]);
        return out;
    }
    Expr term() {
        Expr out;
        out.kind = Expr::Prod;
        out.children.push_back(factor());
        while (true) {
            char c = peek();
            bool star = c == '*';
            if (star) eat('*');
            c = peek();
            if (std::isalpha((unsigned char)c) || c == '(' || c == '{') {
                out.children.push_back(factor());
            } else if (star) {
                fail("expected factor after '*'");
            } else {
                break;
            }
        }
        if (out.children.size() == 1) return std::move(out.children[0]);
        return out;
    }
    Expr factor() {
        skip();
        if (p >= s.size()) fail("unexpected end of input");
        if (s[p] == '(') {
            ++p;
            Expr inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (s[p] == '{') {
            ++p;
            size_t close = s.find('}', p);
            if (close == std::string::npos) fail("unterminated scalar '{'");
            Expr e;
            e.kind = Expr::ScalarLit;
            e.name = s.substr(p, close - p);
            p = close + 1;
            return e;
        }
        if (!std::isalpha((unsigned char)s[p])) fail("expected atom");
        Expr at = atom();
        if (eat('^')) {
            Expr pw;
            pw.kind = Expr::Pow;
            pw.expo = integer();
            pw.children.push_back(std::move(at));
            return pw;
        }
        return at;
    }
    Expr atom() {
        size_t q0 = p;
        while (p < s.size() && std::isalnum((unsigned char)s[p])) ++p;
        Expr e;
        e.kind = Expr::Atom;
        e.name = s.substr(q0, p - q0);
        if (e.name == "pi" || e.name == "piinv") return e;
        if (!eat('[')) fail("expected '[' after atom name '" + e.name + "'");
        e.a = (int)integer();
        if (eat(',')) {
            e.b = (int)integer();
            e.two = true;
        }
        if (!eat(']')) fail("expected ']'");
        return e;
    }
};

} // namespace expr_detail

inline Expr parse_expr(const std::string& text) {
    expr_detail::ExprParser pr{text, 0};
    Expr e = pr.expr();
    pr.skip();
    if (pr.p != text.size()) pr.fail("trailing input");
    return e;
}

inline std::string print_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Atom:
        if (e.name == "pi" || e.name == "piinv") return e.name;
        return e.name + "[" + std::to_string(e.a) +
               (e.two ? "," + std::to_string(e.b) : "") + "]";
    case Expr::ScalarLit:
        return "{" + e.name + "}";
    case Expr::Pow:
        return print_expr(e.children[0]) + "^" + std::to_string(e.expo);
    case Expr::Prod: {
        std::string out;
        for (size_t i = 0; i < e.children.size(); ++i) {
            if (i) out += " ";
            const Expr& ch = e.children[i];
            if (ch.kind == Expr::Sum)
                out += "(" + print_expr(ch) + ")";
            else
                out += print_expr(ch);
        }
        return out;
    }
    case Expr::Sum: {
        std::string out;
        for (size_t i = 0; i < e.children.size(); ++i) {
            if (i) out += e.signs[i] == 1 ? " + " : " - ";
            else if (e.signs[i] == -1) out += "-";
            const Expr& ch = e.children[i];
            if (ch.kind == Expr::Sum)
                out += "(" + print_expr(ch) + ")";
            else
                out += print_expr(ch);
        }
        return out;
    }
    }
    throw Error("print_expr: bad node");
}

// ---------------------------------------------------------------------------
// evaluation in the polynomial representation

inline DROp expr_atom_op(const Context& c, const Expr& e, long pw) {
    const std::string& nm = e.name;
    bool inv = pw < 0;
    long k = inv ? -pw : pw;
    auto powed = [&](const DROp& base) { return base.pow(k); };
    if (nm == "pi") return powed(inv ? gen_piinv(c) : gen_pi(c));
    if (nm == "piinv") return powed(inv ? gen_pi(c) : gen_piinv(c));
    if (nm == "T") return powed(inv ? gen_Tinv(c, e.a) : gen_T(c, e.a));
    if (nm == "Tinv") return powed(inv ? gen_T(c, e.a) : gen_Tinv(c, e.a));
    if (nm == "Y") return powed(inv ? gen_Yinv(c, e.a) : gen_Y(c, e.a));
    if (nm == "Yinv") return powed(inv ? gen_Y(c, e.a) : gen_Yinv(c, e.a));
    if (nm == "X") return gen_X(c, e.a, (int)pw);
    if (nm == "Xinv") return gen_X(c, e.a, (int)-pw);
    if (nm == "t") return gen_t(c, e.a, (int)pw);
    if (nm == "e") {
        if (!e.two) throw Error("e atom needs two indices");
        if (inv) throw Error("e[i,j] has no inverse");
        return powed(gen_e(c, e.a, e.b));
    }
    if (nm == "D") {
        if (inv) throw Error("D[i] has no inverse");
        return powed(gen_D(c, e.a));
    }
    if (nm == "d") {
        if (inv) throw Error("d[i] has no inverse");
        return powed(gen_d(c, e.a));
    }
    throw Error("unknown atom '" + nm + "'");
}

inline DROp to_operator(const Expr& e, const Context& c) {
    switch (e.kind) {
    case Expr::Atom:
        return expr_atom_op(c, e, 1);
    case Expr::ScalarLit:
        return DROp::identity(c).scaled(scalar_of(c, e.name));
    case Expr::Pow: {
        const Expr& ch = e.children[0];
        if (ch.kind == Expr::Atom) return expr_atom_op(c, ch, e.expo);
        if (e.expo < 0) throw Error("negative power of a compound factor");
        return to_operator(ch, c).pow(e.expo);
    }
    case Expr::Prod: {
        DROp op = DROp::identity(c);
        for (auto& ch : e.children) op = op * to_operator(ch, c);
        return op;
    }
    case Expr::Sum: {
        DROp op = DROp::zero(c);
        for (size_t i = 0; i < e.children.size(); ++i) {
            DROp t = to_operator(e.children[i], c);
            op = e.signs[i] == 1 ? op + t : op - t;
        }
        return op;
    }
    }
    throw Error("to_operator: bad node");
}

// ---------------------------------------------------------------------------
// evaluation as a formal subalgebra element (for pbw reduce): only the
// letters T, Tinv, Y, Yinv, e and scalars in q, tau are admitted

inline AlgElement to_alg(const Expr& e) {
    switch (e.kind) {
    case Expr::Atom: {
        const std::string& nm = e.name;
        Word w;
        if (nm == "T") w.push_back(LT(e.a, 1));
        else if (nm == "Tinv") w.push_back(LT(e.a, -1));
        else if (nm == "Y") w.push_back(LY(e.a, 1));
        else if (nm == "Yinv") w.push_back(LY(e.a, -1));
        else if (nm == "e") {
            if (!e.two) throw Error("e atom needs two indices");
            w.push_back(Le(e.a, e.b));
        } else
            throw Error("atom '" + nm +
                        "' is not a subalgebra letter (allowed: T, Tinv, Y, "
                        "Yinv, e)");
        return AlgElement::from_word(w, sc_one());
    }
    case Expr::ScalarLit:
        return AlgElement::from_word({}, scalar_of_qtau(e.name));
    case Expr::Pow: {
        const Expr& ch = e.children[0];
        long pw = e.expo;
        if (ch.kind == Expr::Atom && pw < 0) {
            // letterwise inverse where one exists
            Expr flip = ch;
            if (ch.name == "T") flip.name = "Tinv";
            else if (ch.name == "Tinv") flip.name = "T";
            else if (ch.name == "Y") flip.name = "Yinv";
            else if (ch.name == "Yinv") flip.name = "Y";
            else
                throw Error("atom '" + ch.name + "' has no inverse here");
            return to_alg(Expr{Expr::Pow, {flip}, {}, -pw, "", 0, 0, false});
        }
        if (pw < 0) throw Error("negative power of a compound factor");
        AlgElement base = to_alg(ch), out = AlgElement::from_word({}, sc_one());
        for (long r = 0; r < pw; ++r) out = alg_mul(out, base);
        return out;
    }
    case Expr::Prod: {
        AlgElement out = AlgElement::from_word({}, sc_one());
        for (auto& ch : e.children) out = alg_mul(out, to_alg(ch));
        return out;
    }
    case Expr::Sum: {
        AlgElement out;
        for (size_t i = 0; i < e.children.size(); ++i) {
            AlgElement t = to_alg(e.children[i]);
            for (auto& [w, cf] : t.terms)
                out.add(w, e.signs[i] == 1 ? cf : -cf);
        }
        return out;
    }
    }
    throw Error("to_alg: bad node");
}

} // namespace daha
