// Command-line workbench: relation verification, symmetrized Hamiltonians,
// closed forms, PBW reduction, and the two-type identity.

#include <CLI11.hpp>
#include <json.hpp>

#include <daha/expr.hpp>
#include <daha/integrable.hpp>
#include <daha/pbw.hpp>
#include <daha/relations.hpp>

#include <cstdlib>
#include <iostream>

using namespace daha;
using nlohmann::json;

namespace {

json drop_json(const DROp& op) {
    json terms = json::array();
    for (auto& [k, g] : op.terms) {
        json t;
        t["perm"] = k.first;
        t["shift"] = k.second;
        t["coeff"] = g.str();
        terms.push_back(std::move(t));
    }
    json out;
    out["n"] = op.ctx.n;
    out["terms"] = std::move(terms);
    return out;
}

void emit_drop(const DROp& op, const std::string& format) {
    if (format == "json") {
        std::cout << drop_json(op).dump() << "\n";
        return;
    }
    for (auto& [k, g] : op.terms) {
        std::cout << "perm=[";
        for (size_t i = 0; i < k.first.size(); ++i)
            std::cout << (i ? "," : "") << k.first[i];
        std::cout << "] shift=[";
        for (size_t i = 0; i < k.second.size(); ++i)
            std::cout << (i ? "," : "") << k.second[i];
        std::cout << "] : " << g.str() << "\n";
    }
}

json twotype_json(const TwoTypeOp& op) {
    json terms = json::array();
    for (auto& [k, g] : op.terms) {
        json t;
        t["xshift"] = k.first;
        t["yshift"] = k.second;
        t["coeff"] = g.str();
        terms.push_back(std::move(t));
    }
    json out;
    out["n1"] = op.n1;
    out["n2"] = op.n2;
    out["bases"] = {{"x", "q"}, {"y", "t"}};
    out["terms"] = std::move(terms);
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t p = 0;
    while (true) {
        size_t c = s.find(',', p);
        if (c == std::string::npos) {
            out.push_back(s.substr(p));
            return out;
        }
        out.push_back(s.substr(p, c - p));
        p = c + 1;
    }
}

// symbolic parameter names a_{-l1}, ..., a_{l2}
std::vector<std::string> a_param_names(int l1, int l2) {
    std::vector<std::string> names;
    for (int j = -l1; j <= l2; ++j)
        names.push_back(j < 0 ? "am" + std::to_string(-j)
                              : "a" + std::to_string(j));
    return names;
}

// build a context plus coefficient vector from "--a CSV|sym"
std::pair<Context, std::vector<RatFn>> a_context(int n, int l1, int l2,
                                                 const std::string& aspec) {
    if (aspec == "sym") {
        Context c(n, a_param_names(l1, l2));
        std::vector<RatFn> a;
        for (auto& nm : a_param_names(l1, l2)) a.push_back(c.param(nm));
        return {c, a};
    }
    Context c(n);
    std::vector<RatFn> a;
    for (auto& s : split_csv(aspec)) {
        std::string t = s;
        if (t.size() >= 2 && t.front() == '{' && t.back() == '}')
            t = t.substr(1, t.size() - 2);
        a.push_back(scalar_of(c, t));
    }
    if ((int)a.size() != l1 + l2 + 1)
        throw Error("expected " + std::to_string(l1 + l2 + 1) +
                    " coefficients a_{-l1}..a_{l2}, got " +
                    std::to_string(a.size()));
    return {c, a};
}

int cmd_verify(const std::string& id, int n, const std::string& mode,
               unsigned seed) {
    VerifyMode vm =
        mode == "exact" ? VerifyMode::Exact : VerifyMode::Specialized;
    std::vector<VerificationReport> reps;
    if (id.empty()) reps = verify_suite(n, vm, seed);
    else reps.push_back(verify(id, n, vm, seed));
    bool ok = true;
    for (auto& r : reps) {
        json line;
        line["id"] = r.id;
        line["n"] = r.n;
        line["mode"] = r.mode;
        line["instances"] = r.instances;
        json fails = json::array();
        for (auto& [label, diff] : r.failures)
            fails.push_back({{"label", label}, {"diff", diff}});
        line["failures"] = std::move(fails);
        std::cout << line.dump() << "\n";
        ok = ok && r.verified();
    }
    return ok ? 0 : 1;
}

int cmd_res(int n, int l1, int l2, const std::string& aspec,
            const std::string& sym, const std::string& format) {
    auto [c, a] = a_context(n, l1, l2, aspec);
    emit_drop(res_sym(c, l1, l2, a, sym), format);
    return 0;
}

int cmd_hamiltonian(const std::string& which, int n, int n1, int n2,
                    const std::string& params, const std::string& format) {
    if (which == "twotype-h" || which == "twotype-hhat" ||
        which == "twotype-m") {
        TwoTypeOp op = which == "twotype-h"      ? twotype_H(n1, n2)
                       : which == "twotype-hhat" ? twotype_Hhat(n1, n2)
                                                 : twotype_M(n1, n2);
        if (format == "json") {
            std::cout << twotype_json(op).dump() << "\n";
        } else {
            for (auto& [k, g] : op.terms) {
                std::cout << "xshift=[";
                for (size_t i = 0; i < k.first.size(); ++i)
                    std::cout << (i ? "," : "") << k.first[i];
                std::cout << "] yshift=[";
                for (size_t i = 0; i < k.second.size(); ++i)
                    std::cout << (i ? "," : "") << k.second[i];
                std::cout << "] : " << g.str() << "\n";
            }
        }
        return 0;
    }
    auto ps = split_csv(params);
    if (which == "m-abc") {
        if (ps.size() != 3 && params != "sym")
            throw Error("m-abc needs --params a,b,c (or sym)");
        Context c = params == "sym" ? Context(n, {"a", "b", "c"}) : Context(n);
        RatFn a = params == "sym" ? c.param("a") : scalar_of(c, ps[0]);
        RatFn b = params == "sym" ? c.param("b") : scalar_of(c, ps[1]);
        RatFn cc = params == "sym" ? c.param("c") : scalar_of(c, ps[2]);
        emit_drop(closed_M(c, a, b, cc), format);
        return 0;
    }
    if (which == "d12") {
        if (ps.size() != 4 && params != "sym")
            throw Error("d12 needs --params am1,a0,a1,a2 (or sym)");
        Context c = params == "sym"
                        ? Context(n, {"am1", "a0", "a1", "a2"})
                        : Context(n);
        auto get = [&](size_t i, const char* nm) {
            return params == "sym" ? c.param(nm) : scalar_of(c, ps[i]);
        };
        emit_drop(closed_D12(c, get(0, "am1"), get(1, "a0"), get(2, "a1"),
                             get(3, "a2")),
                  format);
        return 0;
    }
    throw Error("unknown hamiltonian '" + which +
                "' (m-abc|d12|twotype-h|twotype-hhat|twotype-m)");
}

int cmd_pbw_reduce(int n, const std::string& expr, long step_bound) {
    if (step_bound > 0)
        setenv("DAHA_STEP_BOUND", std::to_string(step_bound).c_str(), 1);
    AlgElement x = to_alg(parse_expr(expr));
    PBWElement out = pbw_reduce(x, n);
    json terms = json::array();
    for (auto& [m, s] : out.terms) { // map order = (w, efactors, yexp)
        json t;
        t["w"] = m.w;
        json ef = json::array();
        for (auto& [i, j, k] : m.efactors)
            ef.push_back(json::array({i, j, k}));
        t["efactors"] = std::move(ef);
        t["yexp"] = m.yexp;
        t["coeff"] = s.str();
        terms.push_back(std::move(t));
    }
    json line;
    line["n"] = n;
    line["terms"] = std::move(terms);
    std::cout << line.dump() << "\n";
    return 0;
}

int cmd_identity_twotype(int n1, int n2) {
    bool ok = twotype_identity_check(n1, n2);
    std::cout << (ok ? "two-type identity holds" : "two-type identity FAILS")
              << " at N1=" << n1 << " N2=" << n2 << "\n";
    return ok ? 0 : 1;
}

int cmd_commute(int n, int l1, int l2, const std::string& pair,
                const std::string& aspec) {
    auto syms = split_csv(pair);
    if (syms.size() != 2) throw Error("--pair needs two entries, e.g. p1,p2");
    auto [c, a] = a_context(n, l1, l2, aspec);
    DROp A = res_sym(c, l1, l2, a, syms[0]);
    DROp B = res_sym(c, l1, l2, a, syms[1]);
    bool ok = A * B == B * A;
    std::cout << "[" << syms[0] << "," << syms[1] << "] "
              << (ok ? "= 0" : "!= 0") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic workbench for the GL_n DAHA in its "
                 "polynomial representation"};
    app.require_subcommand(1);
    app.set_config("--config");

    // verify
    std::string v_id, v_mode = "exact";
    int v_n = 2;
    unsigned v_seed = 7;
    auto* verify_cmd = app.add_subcommand("verify", "run the relation suite");
    verify_cmd->add_option("--id", v_id, "single catalog id (default: all)");
    verify_cmd->add_option("--n", v_n, "rank")->required();
    verify_cmd->add_option("--mode", v_mode, "exact|spec")
        ->check(CLI::IsMember({"exact", "spec"}));
    verify_cmd->add_option("--seed", v_seed, "specialization seed");

    // res
    int r_n = 2, r_l1 = 1, r_l2 = 1;
    std::string r_a = "sym", r_sym = "p1", r_format = "json";
    auto* res_cmd =
        app.add_subcommand("res", "symmetrized restricted Hamiltonian");
    res_cmd->add_option("--n", r_n, "rank")->required();
    res_cmd->add_option("--l1", r_l1, "negative Y-degree")->required();
    res_cmd->add_option("--l2", r_l2, "positive Y-degree")->required();
    res_cmd->add_option("--a", r_a, "a_{-l1},..,a_{l2} CSV or 'sym'");
    res_cmd->add_option("--sym", r_sym, "p1|p2|...|e1|e2|...");
    res_cmd->add_option("--format", r_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // hamiltonian
    std::string h_which, h_params = "sym", h_format = "json";
    int h_n = 2, h_n1 = 1, h_n2 = 1;
    auto* ham_cmd = app.add_subcommand("hamiltonian", "closed forms");
    ham_cmd->add_option("which", h_which,
                        "m-abc|d12|twotype-h|twotype-hhat|twotype-m")
        ->required();
    ham_cmd->add_option("--n", h_n, "rank (m-abc, d12)");
    ham_cmd->add_option("--n1", h_n1, "first family size (twotype)");
    ham_cmd->add_option("--n2", h_n2, "second family size (twotype)");
    ham_cmd->add_option("--params", h_params, "CSV of scalars or 'sym'");
    ham_cmd->add_option("--format", h_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // pbw reduce
    int p_n = 2;
    long p_bound = 0;
    std::string p_expr;
    auto* pbw_cmd = app.add_subcommand("pbw", "PBW normal form");
    auto* pbw_red = pbw_cmd->add_subcommand("reduce", "reduce an expression");
    pbw_red->add_option("--n", p_n, "rank")->required();
    pbw_red->add_option("--expr", p_expr, "expression over T, Tinv, Y, Yinv, e")
        ->required();
    pbw_red->add_option("--step-bound", p_bound, "rewrite step bound");

    // identity two-type
    int i_n1 = 1, i_n2 = 1;
    auto* id_cmd = app.add_subcommand("identity", "named identities");
    auto* id_tt = id_cmd->add_subcommand("two-type", "two-type identity");
    id_tt->add_option("--n1", i_n1, "first family size")->required();
    id_tt->add_option("--n2", i_n2, "second family size")->required();

    // commute
    int c_n = 2, c_l1 = 1, c_l2 = 1;
    std::string c_pair = "p1,p2", c_a = "sym";
    auto* com_cmd =
        app.add_subcommand("commute", "commutator of two res_sym outputs");
    com_cmd->add_option("--n", c_n, "rank")->required();
    com_cmd->add_option("--pair", c_pair, "e.g. p1,p2")->required();
    com_cmd->add_option("--l1", c_l1, "negative Y-degree");
    com_cmd->add_option("--l2", c_l2, "positive Y-degree");
    com_cmd->add_option("--a", c_a, "a-coefficients CSV or 'sym'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify_cmd) return cmd_verify(v_id, v_n, v_mode, v_seed);
        if (*res_cmd) return cmd_res(r_n, r_l1, r_l2, r_a, r_sym, r_format);
        if (*ham_cmd)
            return cmd_hamiltonian(h_which, h_n, h_n1, h_n2, h_params,
                                   h_format);
        if (*pbw_red) return cmd_pbw_reduce(p_n, p_expr, p_bound);
        if (*id_tt) return cmd_identity_twotype(i_n1, i_n2);
        if (*com_cmd) return cmd_commute(c_n, c_l1, c_l2, c_pair, c_a);
        std::cerr << "no command given\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
