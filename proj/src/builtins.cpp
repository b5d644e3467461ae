#include "lcs/builtins.hpp"

#include "lcs/dsl.hpp"

namespace lcs {

namespace {

const Polynomial kD = Polynomial::variable(kVarD);
const Polynomial kL = Polynomial::variable(kVarL1);

GenValue gv(int gen, const Polynomial& p) {
    GenValue v;
    v.add(gen, p);
    return v;
}

// Two-generator template: x even, y odd.
ConformalSuperalgebra rank11(const std::string& name, const GenValue& xx, const GenValue& xy,
                             const GenValue& yy) {
    ConformalSuperalgebra a;
    a.name = name;
    a.gens = {{"x", kEven}, {"y", kOdd}};
    a.set_bracket(0, 0, xx);
    a.set_bracket(0, 1, xy);
    a.set_bracket(1, 1, yy);
    return a;
}

}  // namespace

ConformalSuperalgebra builtin_ns() {
    ConformalSuperalgebra a;
    a.name = "NS";
    a.gens = {{"L", kEven}, {"G", kOdd}};
    a.set_bracket(0, 0, gv(0, kD + 2 * kL));
    a.set_bracket(0, 1, gv(1, kD + Rational(3, 2) * kL));
    a.set_bracket(1, 1, gv(0, Polynomial(1)));
    return a;
}

ConformalSuperalgebra builtin_ex22() {
    ConformalSuperalgebra a;
    a.name = "Ex22";
    a.gens = {{"L", kEven}, {"E", kOdd}};
    a.set_bracket(0, 0, gv(0, kD + 2 * kL));
    a.set_bracket(0, 1, gv(1, kD + Rational(3, 2) * kL));
    a.set_bracket(1, 1, GenValue{});
    return a;
}

ConformalSuperalgebra builtin_r1(const Polynomial& p) {
    if (p.degree_of(kVarL1) > 0 || p.uses_var(kVarM) || p.uses_var(kVarT))
        throw Error("R1: parameter p must be a polynomial in d");
    return rank11("R1", GenValue{}, GenValue{}, gv(0, p));
}

ConformalSuperalgebra builtin_r2(const Polynomial& q) {
    if (q.degree_of(kVarD) > 0 || q.uses_var(kVarM) || q.uses_var(kVarT))
        throw Error("R2: parameter q must be a polynomial in l");
    return rank11("R2", GenValue{}, gv(1, q), GenValue{});
}

ConformalSuperalgebra builtin_r3() {
    return rank11("R3", gv(0, kD + 2 * kL), GenValue{}, GenValue{});
}

ConformalSuperalgebra builtin_r4(const Rational& beta) {
    return rank11("R4", gv(0, kD + 2 * kL), gv(1, kD + beta * kL), GenValue{});
}

ConformalSuperalgebra builtin_r5(const Rational& alpha) {
    return rank11("R5", gv(0, kD + 2 * kL), gv(1, kD + Rational(3, 2) * kL),
                  gv(0, Polynomial(alpha)));
}

LieSuperalgebraData builtin_gl11() {
    LieSuperalgebraData l;
    l.name = "gl11";
    l.basis = {{"e11", kEven}, {"e22", kEven}, {"e12", kOdd}, {"e21", kOdd}};
    auto sc = [](std::initializer_list<std::pair<int, int>> parts) {
        std::map<int, Rational> m;
        for (auto [g, c] : parts) m[g] = c;
        return m;
    };
    // Supercommutator [a,b] = ab - (-1)^{|a||b|} ba of elementary matrices.
    l.set_bracket(0, 0, {});
    l.set_bracket(0, 1, {});
    l.set_bracket(1, 1, {});
    l.set_bracket(0, 2, sc({{2, 1}}));    // [e11,e12] = e12
    l.set_bracket(0, 3, sc({{3, -1}}));   // [e11,e21] = -e21
    l.set_bracket(1, 2, sc({{2, -1}}));   // [e22,e12] = -e12
    l.set_bracket(1, 3, sc({{3, 1}}));    // [e22,e21] = e21
    l.set_bracket(2, 2, {});              // [e12,e12] = 0
    l.set_bracket(2, 3, sc({{0, 1}, {1, 1}}));  // [e12,e21] = e11+e22
    l.set_bracket(3, 3, {});              // [e21,e21] = 0
    return l;
}

FiniteLieRep builtin_gl11_defining() {
    FiniteLieRep rep;
    rep.basis = {{"v1", kEven}, {"v2", kOdd}};
    // e_ij v_k = delta_jk v_i
    rep.action[{0, 0}] = {{0, Rational(1)}};  // e11 v1 = v1
    rep.action[{1, 1}] = {{1, Rational(1)}};  // e22 v2 = v2
    rep.action[{2, 1}] = {{0, Rational(1)}};  // e12 v2 = v1
    rep.action[{3, 0}] = {{1, Rational(1)}};  // e21 v1 = v2
    return rep;
}

LieSuperalgebraData builtin_abelian1() {
    LieSuperalgebraData l;
    l.name = "abel1";
    l.basis = {{"a", kEven}};
    l.set_bracket(0, 0, {});
    return l;
}

LieSuperalgebraData builtin_odd1() {
    LieSuperalgebraData l;
    l.name = "odd1";
    l.basis = {{"a", kOdd}};
    l.set_bracket(0, 0, {});
    return l;
}

ConformalSuperalgebra builtin_vircur(const LieSuperalgebraData& g) {
    g.validate();
    ConformalSuperalgebra a;
    a.name = "VirCur_" + g.name;
    a.gens.push_back({"L", kEven});
    for (const auto& b : g.basis) {
        Generator gen = b;
        if (gen.name == "L") gen.name += "_c";
        a.gens.push_back(gen);
    }
    int n = static_cast<int>(g.basis.size());
    a.set_bracket(0, 0, gv(0, kD + 2 * kL));
    for (int i = 0; i < n; ++i) a.set_bracket(0, 1 + i, gv(1 + i, kD + kL));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            GenValue v;
            for (const auto& [k, c] : g.bracket(i, j)) v.add(1 + k, Polynomial(c));
            a.set_bracket(1 + i, 1 + j, v);
        }
    return a;
}

namespace {

std::map<std::string, std::string> split_params(const std::string& spec, std::string& base) {
    auto lb = spec.find('[');
    std::map<std::string, std::string> params;
    if (lb == std::string::npos) {
        base = spec;
        return params;
    }
    if (spec.back() != ']') throw Error("malformed algebra specifier '" + spec + "'");
    base = spec.substr(0, lb);
    std::string body = spec.substr(lb + 1, spec.size() - lb - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("malformed parameter '" + item + "'");
        params[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return params;
}

Rational rational_param(const std::map<std::string, std::string>& params, const std::string& key,
                        const Rational& dflt) {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    Polynomial p = parse_polynomial(it->second, {});
    if (!p.is_constant()) throw Error("parameter '" + key + "' must be rational");
    return p.constant_term();
}

Polynomial poly_param(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::map<std::string, Var>& vars, const Polynomial& dflt) {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    return parse_polynomial(it->second, vars);
}

}  // namespace

ConformalSuperalgebra resolve_builtin_algebra(const std::string& spec) {
    std::string base;
    auto params = split_params(spec, base);
    if (base == "NS") return builtin_ns();
    if (base == "Ex22") return builtin_ex22();
    if (base == "R1")
        return builtin_r1(poly_param(params, "p", {{"d", kVarD}},
                                     Polynomial::variable(kVarD, 3)));
    if (base == "R2")
        return builtin_r2(poly_param(params, "q", {{"l", kVarL1}, {"l1", kVarL1}},
                                     Polynomial(1) + Polynomial::variable(kVarL1)));
    if (base == "R3") return builtin_r3();
    if (base == "R4") return builtin_r4(rational_param(params, "beta", Rational(5, 2)));
    if (base == "R5") return builtin_r5(rational_param(params, "alpha", Rational(3)));
    if (base == "CurGl11") return current_algebra(builtin_gl11());
    if (base == "VirCur1") return builtin_vircur(builtin_abelian1());
    throw Error("unknown builtin algebra '" + base + "'");
}

std::map<std::string, std::string> builtin_catalog() {
    return {
        {"NS", "Neveu-Schwarz: [L,L]=(d+2l)L, [L,G]=(d+3/2 l)G, [G,G]=L"},
        {"Ex22", "rank (1|1) with [E,E]=0"},
        {"R1", "[y,y]=p(d)x; parameter p (default d^3)"},
        {"R2", "[x,y]=q(l)y; parameter q (default 1+l)"},
        {"R3", "[x,x]=(d+2l)x only"},
        {"R4", "[x,x]=(d+2l)x, [x,y]=(d+beta l)y; parameter beta (default 5/2)"},
        {"R5", "R4 with beta=3/2 and [y,y]=alpha x; parameter alpha (default 3)"},
        {"CurGl11", "current algebra of gl(1|1)"},
        {"VirCur1", "C[d]L + Cur g for 1-dimensional even abelian g"},
    };
}

}  // namespace lcs
