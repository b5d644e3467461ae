#include "lcs/dsl.hpp"

#include <cctype>
#include <sstream>

namespace lcs {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_.kind = Tok::Ident;
            tok_.text = src_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_.kind = Tok::Number;
            tok_.text = src_.substr(start, pos_ - start);
        } else {
            tok_.kind = Tok::Sym;
            tok_.text = std::string(1, c);
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
}

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Catalog parse() {
        Catalog cat;
        while (lex_.peek().kind != Tok::End) {
            Token t = lex_.take();
            if (t.kind != Tok::Ident) fail(t, "expected a declaration keyword");
            if (t.text == "algebra")
                parse_algebra(cat);
            else if (t.text == "liealg")
                parse_liealg(cat);
            else if (t.text == "rep")
                parse_rep(cat);
            else if (t.text == "map")
                parse_map(cat);
            else if (t.text == "hom")
                parse_hom(cat);
            else if (t.text == "cochain")
                parse_cochain(cat);
            else
                fail(t, "unknown declaration '" + t.text + "'");
        }
        return cat;
    }

    Polynomial parse_poly_expr(const std::map<std::string, Var>& vars) {
        std::vector<Generator> no_gens;
        GenValue v = parse_expr(no_gens, vars);
        auto it = v.comps.find(-1);
        Polynomial p = it == v.comps.end() ? Polynomial() : it->second;
        for (const auto& [g, q] : v.comps)
            if (g != -1 && !q.is_zero()) fail(lex_.peek(), "expected a pure polynomial");
        return p;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End) fail(lex_.peek(), "trailing input after expression");
    }

  private:
    Token expect_ident() {
        Token t = lex_.take();
        if (t.kind != Tok::Ident) fail(t, "expected an identifier");
        return t;
    }

    void expect_sym(const std::string& s) {
        Token t = lex_.take();
        if (t.kind != Tok::Sym || t.text != s) fail(t, "expected '" + s + "'");
    }

    bool accept_sym(const std::string& s) {
        if (lex_.peek().kind == Tok::Sym && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }

    Parity expect_parity() {
        Token t = expect_ident();
        if (t.text == "even") return kEven;
        if (t.text == "odd") return kOdd;
        fail(t, "expected 'even' or 'odd'");
    }

    void check_fresh(Catalog& cat, const Token& name) {
        if (cat.algebras.count(name.text) || cat.liealgs.count(name.text) ||
            cat.reps.count(name.text) || cat.maps.count(name.text) ||
            cat.homs.count(name.text) || cat.cochains.count(name.text))
            fail(name, "duplicate name '" + name.text + "'");
    }

    // Generator lists shared by algebra/liealg/rep bodies.
    int find_gen(const std::vector<Generator>& gens, const std::string& name) {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<int>(i);
        return -1;
    }

    void parse_generator(std::vector<Generator>& gens) {
        Token name = expect_ident();
        if (find_gen(gens, name.text) >= 0) fail(name, "duplicate generator '" + name.text + "'");
        Parity p = expect_parity();
        expect_sym(";");
        gens.push_back({name.text, p});
    }

    // Expression values: maps generator index -> coefficient; the pure scalar
    // part is stored under index -1.
    GenValue parse_expr(const std::vector<Generator>& gens,
                        const std::map<std::string, Var>& vars) {
        GenValue acc = parse_term(gens, vars);
        while (lex_.peek().kind == Tok::Sym &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool neg = lex_.take().text == "-";
            GenValue t = parse_term(gens, vars);
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_atom() {
        const Token& t = lex_.peek();
        return t.kind == Tok::Ident || t.kind == Tok::Number ||
               (t.kind == Tok::Sym && t.text == "(");
    }

    GenValue parse_term(const std::vector<Generator>& gens,
                        const std::map<std::string, Var>& vars) {
        GenValue acc = parse_factor(gens, vars);
        while (true) {
            if (accept_sym("*")) {
                GenValue f = parse_factor(gens, vars);
                acc = multiply(acc, f);
            } else if (starts_atom()) {
                GenValue f = parse_factor(gens, vars);
                acc = multiply(acc, f);
            } else {
                break;
            }
        }
        return acc;
    }

    GenValue multiply(const GenValue& a, const GenValue& b) {
        bool a_scalar = true, b_scalar = true;
        for (const auto& [g, p] : a.comps)
            if (g != -1 && !p.is_zero()) a_scalar = false;
        for (const auto& [g, p] : b.comps)
            if (g != -1 && !p.is_zero()) b_scalar = false;
        if (!a_scalar && !b_scalar) fail(lex_.peek(), "cannot multiply two generator terms");
        const GenValue& scal = a_scalar ? a : b;
        const GenValue& other = a_scalar ? b : a;
        Polynomial s;
        auto it = scal.comps.find(-1);
        if (it != scal.comps.end()) s = it->second;
        GenValue r;
        for (const auto& [g, p] : other.comps) r.add(g, p * s);
        return r;
    }

    GenValue parse_factor(const std::vector<Generator>& gens,
                          const std::map<std::string, Var>& vars) {
        bool neg = false;
        while (lex_.peek().kind == Tok::Sym && (lex_.peek().text == "-" || lex_.peek().text == "+")) {
            if (lex_.take().text == "-") neg = !neg;
        }
        GenValue v = parse_atom(gens, vars);
        if (accept_sym("^")) {
            Token e = lex_.take();
            if (e.kind != Tok::Number) fail(e, "expected an integer exponent");
            int exp = std::stoi(e.text);
            for (const auto& [g, p] : v.comps)
                if (g != -1 && !p.is_zero()) fail(e, "cannot raise a generator to a power");
            Polynomial base;
            auto it = v.comps.find(-1);
            if (it != v.comps.end()) base = it->second;
            Polynomial r(1);
            for (int i = 0; i < exp; ++i) r *= base;
            v = GenValue{};
            v.add(-1, r);
        }
        if (neg) v = -v;
        return v;
    }

    GenValue parse_atom(const std::vector<Generator>& gens,
                        const std::map<std::string, Var>& vars) {
        Token t = lex_.take();
        GenValue v;
        if (t.kind == Tok::Number) {
            Rational num(t.text);
            if (accept_sym("/")) {
                Token den = lex_.take();
                if (den.kind != Tok::Number) fail(den, "expected a denominator");
                Rational d(den.text);
                if (d == 0) fail(den, "zero denominator");
                num /= d;
            }
            v.add(-1, Polynomial(num));
            return v;
        }
        if (t.kind == Tok::Ident) {
            int g = find_gen(gens, t.text);
            if (g >= 0) {
                v.add(g, Polynomial(1));
                return v;
            }
            auto it = vars.find(t.text);
            if (it != vars.end()) {
                v.add(-1, Polynomial::variable(it->second));
                return v;
            }
            fail(t, "unknown generator or variable '" + t.text + "'");
        }
        if (t.kind == Tok::Sym && t.text == "(") {
            GenValue inner = parse_expr(gens, vars);
            expect_sym(")");
            return inner;
        }
        fail(t, "expected a number, name or parenthesized expression");
    }

    // A generator-weighted value; the scalar part must vanish.
    GenValue parse_value(const std::vector<Generator>& gens,
                         const std::map<std::string, Var>& vars) {
        Token at = lex_.peek();
        GenValue v = parse_expr(gens, vars);
        auto it = v.comps.find(-1);
        if (it != v.comps.end() && !it->second.is_zero())
            fail(at, "value must be a sum of generator terms (or 0)");
        v.comps.erase(-1);
        return v;
    }

    static std::map<std::string, Var> bracket_vars() {
        return {{"d", kVarD}, {"l", kVarL1}, {"l1", kVarL1}};
    }

    void parse_algebra(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        ConformalSuperalgebra a;
        a.name = name.text;
        expect_sym("{");
        while (!accept_sym("}")) {
            Token kw = expect_ident();
            if (kw.text == "generator") {
                parse_generator(a.gens);
            } else if (kw.text == "bracket") {
                expect_sym("[");
                Token g1 = expect_ident();
                expect_sym(",");
                Token g2 = expect_ident();
                expect_sym("]");
                int i = find_gen(a.gens, g1.text), j = find_gen(a.gens, g2.text);
                if (i < 0) fail(g1, "unknown generator '" + g1.text + "'");
                if (j < 0) fail(g2, "unknown generator '" + g2.text + "'");
                if (a.has_stored(i, j)) fail(g1, "duplicate bracket");
                expect_sym("=");
                Token at = lex_.peek();
                GenValue v = parse_value(a.gens, bracket_vars());
                Parity want = (a.parity(i) + a.parity(j)) % 2;
                for (const auto& [g, p] : v.comps)
                    if (!p.is_zero() && a.parity(g) != want)
                        fail(at, "parity error: generator '" + a.gens[g].name +
                                     "' cannot appear in this bracket");
                expect_sym(";");
                a.set_bracket(i, j, v);
            } else {
                fail(kw, "expected 'generator' or 'bracket'");
            }
        }
        for (size_t i = 0; i < a.gens.size(); ++i)
            if (a.gens[i].parity == kOdd && !a.has_stored(static_cast<int>(i), static_cast<int>(i)))
                fail(name, "diagonal bracket [" + a.gens[i].name + "," + a.gens[i].name +
                               "] of an odd generator must be given explicitly (possibly 0)");
        try {
            a.validate_table();
        } catch (const Error& e) {
            fail(name, e.what());
        }
        cat.algebras.emplace(name.text, std::move(a));
    }

    void parse_liealg(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        LieSuperalgebraData l;
        l.name = name.text;
        expect_sym("{");
        while (!accept_sym("}")) {
            Token kw = expect_ident();
            if (kw.text == "generator") {
                parse_generator(l.basis);
            } else if (kw.text == "bracket") {
                expect_sym("[");
                Token g1 = expect_ident();
                expect_sym(",");
                Token g2 = expect_ident();
                expect_sym("]");
                int i = find_gen(l.basis, g1.text), j = find_gen(l.basis, g2.text);
                if (i < 0) fail(g1, "unknown generator '" + g1.text + "'");
                if (j < 0) fail(g2, "unknown generator '" + g2.text + "'");
                expect_sym("=");
                Token at = lex_.peek();
                GenValue v = parse_value(l.basis, {});
                std::map<int, Rational> sc;
                for (const auto& [g, p] : v.comps) {
                    if (!p.is_constant()) fail(at, "structure constants must be scalars");
                    sc[g] = p.constant_term();
                }
                expect_sym(";");
                l.set_bracket(i, j, std::move(sc));
            } else {
                fail(kw, "expected 'generator' or 'bracket'");
            }
        }
        try {
            l.validate();
        } catch (const Error& e) {
            fail(name, e.what());
        }
        cat.liealgs.emplace(name.text, std::move(l));
    }

    const ConformalSuperalgebra& resolve_algebra(Catalog& cat, const Token& name) {
        auto it = cat.algebras.find(name.text);
        if (it == cat.algebras.end()) fail(name, "unknown algebra '" + name.text + "'");
        return it->second;
    }

    void parse_rep(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        Token on = expect_ident();
        if (on.text != "on") fail(on, "expected 'on'");
        Token alg = expect_ident();
        const ConformalSuperalgebra& a = resolve_algebra(cat, alg);
        Catalog::RepDecl decl;
        decl.algebra = alg.text;
        expect_sym("{");
        while (!accept_sym("}")) {
            Token kw = expect_ident();
            if (kw.text == "generator") {
                parse_generator(decl.rep.module_gens);
            } else if (kw.text == "action") {
                Token ag = expect_ident();
                int ai = a.index_of(ag.text);
                if (ai < 0) fail(ag, "unknown algebra generator '" + ag.text + "'");
                expect_sym("(");
                Token mg = expect_ident();
                int mi = find_gen(decl.rep.module_gens, mg.text);
                if (mi < 0) fail(mg, "unknown module generator '" + mg.text + "'");
                expect_sym(")");
                expect_sym("=");
                Token at = lex_.peek();
                GenValue v = parse_value(decl.rep.module_gens, bracket_vars());
                Parity want = (a.parity(ai) + decl.rep.module_gens[mi].parity) % 2;
                for (const auto& [g, p] : v.comps)
                    if (!p.is_zero() && decl.rep.module_gens[g].parity != want)
                        fail(at, "parity error in action value");
                expect_sym(";");
                if (decl.rep.table.count({ai, mi})) fail(ag, "duplicate action");
                decl.rep.table[{ai, mi}] = v;
            } else {
                fail(kw, "expected 'generator' or 'action'");
            }
        }
        cat.reps.emplace(name.text, std::move(decl));
    }

    void parse_map(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        Parity parity = expect_parity();
        Token on = expect_ident();
        if (on.text != "on") fail(on, "expected 'on'");
        Token alg = expect_ident();
        const ConformalSuperalgebra& a = resolve_algebra(cat, alg);
        Catalog::MapDecl decl;
        decl.algebra = alg.text;
        decl.map.name = name.text;
        decl.map.parity = parity;
        expect_sym("{");
        while (!accept_sym("}")) {
            Token fn = expect_ident();
            if (fn.text != name.text) fail(fn, "expected '" + name.text + "(GEN) = ...;'");
            expect_sym("(");
            Token g = expect_ident();
            int gi = a.index_of(g.text);
            if (gi < 0) fail(g, "unknown generator '" + g.text + "'");
            expect_sym(")");
            expect_sym("=");
            Token at = lex_.peek();
            GenValue v = parse_value(a.gens, bracket_vars());
            Parity want = (a.parity(gi) + parity) % 2;
            for (const auto& [tg, p] : v.comps)
                if (!p.is_zero() && a.parity(tg) != want) fail(at, "parity error in map value");
            expect_sym(";");
            if (decl.map.vals.count(gi)) fail(fn, "duplicate map value");
            decl.map.vals[gi] = v;
        }
        cat.maps.emplace(name.text, std::move(decl));
    }

    void parse_hom(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        Token kw = expect_ident();
        if (kw.text != "from") fail(kw, "expected 'from'");
        Token a1 = expect_ident();
        const ConformalSuperalgebra& from = resolve_algebra(cat, a1);
        kw = expect_ident();
        if (kw.text != "to") fail(kw, "expected 'to'");
        Token a2 = expect_ident();
        const ConformalSuperalgebra& to = resolve_algebra(cat, a2);
        Catalog::HomDecl decl;
        decl.from = a1.text;
        decl.to = a2.text;
        expect_sym("{");
        while (!accept_sym("}")) {
            Token fn = expect_ident();
            if (fn.text != name.text) fail(fn, "expected '" + name.text + "(GEN) = ...;'");
            expect_sym("(");
            Token g = expect_ident();
            int gi = from.index_of(g.text);
            if (gi < 0) fail(g, "unknown generator '" + g.text + "'");
            expect_sym(")");
            expect_sym("=");
            GenValue v = parse_value(to.gens, {{"d", kVarD}});
            expect_sym(";");
            decl.phi[gi] = v;
        }
        cat.homs.emplace(name.text, std::move(decl));
    }

    void parse_cochain(Catalog& cat) {
        Token name = expect_ident();
        check_fresh(cat, name);
        Token kw = expect_ident();
        if (kw.text != "arity") fail(kw, "expected 'arity'");
        Token num = lex_.take();
        if (num.kind != Tok::Number) fail(num, "expected the arity");
        int arity = std::stoi(num.text);
        if (arity < 0 || arity > 3) fail(num, "cochain arity must be 0..3");
        Parity parity = expect_parity();
        Token on = expect_ident();
        if (on.text != "on") fail(on, "expected 'on'");
        Token alg = expect_ident();
        const ConformalSuperalgebra& a = resolve_algebra(cat, alg);
        Catalog::CochainDecl decl;
        decl.algebra = alg.text;
        decl.cochain.arity = arity;
        decl.cochain.parity = parity;

        std::map<std::string, Var> vars{{"d", kVarD}};
        for (int k = 0; k < arity; ++k) vars["l" + std::to_string(k + 1)] = cochain_slot(k);
        if (arity >= 1) vars["l"] = kVarL1;

        expect_sym("{");
        while (!accept_sym("}")) {
            Token fn = expect_ident();
            if (fn.text != name.text) fail(fn, "expected '" + name.text + "(...) = ...;'");
            expect_sym("(");
            std::vector<int> tuple;
            for (int k = 0; k < arity; ++k) {
                if (k) expect_sym(",");
                Token g = expect_ident();
                int gi = a.index_of(g.text);
                if (gi < 0) fail(g, "unknown generator '" + g.text + "'");
                tuple.push_back(gi);
            }
            expect_sym(")");
            for (size_t k = 0; k + 1 < tuple.size(); ++k)
                if (tuple[k] > tuple[k + 1])
                    fail(fn, "cochain tuples must be listed in generator declaration order");
            expect_sym("=");
            Token at = lex_.peek();
            GenValue v = parse_value(a.gens, vars);
            int argsum = 0;
            for (int g : tuple) argsum += a.parity(g);
            Parity want = (argsum + parity) % 2;
            for (const auto& [tg, p] : v.comps)
                if (!p.is_zero() && a.parity(tg) != want) fail(at, "parity error in cochain value");
            expect_sym(";");
            if (decl.cochain.values.count(tuple)) fail(fn, "duplicate cochain value");
            if (!v.is_zero()) decl.cochain.values[tuple] = v;
        }
        if (!check_cochain(decl.cochain, a.gens))
            fail(name, "cochain values violate skew-symmetry self-consistency");
        cat.cochains.emplace(name.text, std::move(decl));
    }

    Lexer lex_;
};

}  // namespace

Catalog parse_source(const std::string& text) {
    Parser p(text);
    return p.parse();
}

Polynomial parse_polynomial(const std::string& text, const std::map<std::string, Var>& vars) {
    Parser p(text);
    Polynomial out = p.parse_poly_expr(vars);
    p.expect_end();
    return out;
}

namespace {

void render_gens(std::ostringstream& os, const std::vector<Generator>& gens) {
    for (const auto& g : gens)
        os << "  generator " << g.name << (g.parity == kOdd ? " odd" : " even") << ";\n";
}

}  // namespace

std::string render(const Catalog& c) {
    std::ostringstream os;
    for (const auto& [name, a] : c.algebras) {
        os << "algebra " << name << " {\n";
        render_gens(os, a.gens);
        for (const auto& [key, v] : a.stored())
            os << "  bracket [" << a.gens[key.first].name << "," << a.gens[key.second].name
               << "] = " << value_str(v, a.gens) << ";\n";
        os << "}\n";
    }
    for (const auto& [name, l] : c.liealgs) {
        os << "liealg " << name << " {\n";
        render_gens(os, l.basis);
        for (const auto& [key, v] : l.stored()) {
            GenValue gv;
            for (const auto& [g, r] : v) gv.add(g, Polynomial(r));
            os << "  bracket [" << l.basis[key.first].name << "," << l.basis[key.second].name
               << "] = " << value_str(gv, l.basis) << ";\n";
        }
        os << "}\n";
    }
    for (const auto& [name, r] : c.reps) {
        os << "rep " << name << " on " << r.algebra << " {\n";
        render_gens(os, r.rep.module_gens);
        const auto& a = c.algebras.at(r.algebra);
        for (const auto& [key, v] : r.rep.table)
            os << "  action " << a.gens[key.first].name << "("
               << r.rep.module_gens[key.second].name << ") = " << value_str(v, r.rep.module_gens)
               << ";\n";
        os << "}\n";
    }
    for (const auto& [name, m] : c.maps) {
        const auto& a = c.algebras.at(m.algebra);
        os << "map " << name << (m.map.parity == kOdd ? " odd" : " even") << " on " << m.algebra
           << " {\n";
        for (const auto& [g, v] : m.map.vals)
            os << "  " << name << "(" << a.gens[g].name << ") = " << value_str(v, a.gens) << ";\n";
        os << "}\n";
    }
    for (const auto& [name, h] : c.homs) {
        const auto& from = c.algebras.at(h.from);
        const auto& to = c.algebras.at(h.to);
        os << "hom " << name << " from " << h.from << " to " << h.to << " {\n";
        for (const auto& [g, v] : h.phi)
            os << "  " << name << "(" << from.gens[g].name << ") = " << value_str(v, to.gens)
               << ";\n";
        os << "}\n";
    }
    for (const auto& [name, cc] : c.cochains) {
        const auto& a = c.algebras.at(cc.algebra);
        os << "cochain " << name << " arity " << cc.cochain.arity
           << (cc.cochain.parity == kOdd ? " odd" : " even") << " on " << cc.algebra << " {\n";
        for (const auto& [tuple, v] : cc.cochain.values) {
            os << "  " << name << "(";
            for (size_t k = 0; k < tuple.size(); ++k)
                os << (k ? "," : "") << a.gens[tuple[k]].name;
            os << ") = " << value_str(v, a.gens) << ";\n";
        }
        os << "}\n";
    }
    return os.str();
}

}  // namespace lcs
