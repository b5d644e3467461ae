#include "lcs/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lcs {

std::string var_name(Var v) {
    switch (v) {
        case kVarD: return "d";
        case kVarL1: return "l1";
        case kVarL2: return "l2";
        case kVarL3: return "l3";
        case kVarL4: return "l4";
        case kVarM: return "m";
        case kVarG: return "g";
        case kVarT: return "t";
        default: return "#" + std::to_string(v);
    }
}

Var fresh_var() {
    static std::atomic<Var> counter{kFirstFreshVar};
    return counter.fetch_add(1);
}

Monomial Monomial::var(Var v, int power) {
    Monomial m;
    if (power > 0) {
        m.exp.assign(v + 1, 0);
        m.exp[v] = static_cast<uint16_t>(power);
    }
    return m;
}

void Monomial::trim() {
    while (!exp.empty() && exp.back() == 0) exp.pop_back();
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exp.resize(std::max(exp.size(), o.exp.size()), 0);
    for (size_t i = 0; i < r.exp.size(); ++i) {
        int e = (i < exp.size() ? exp[i] : 0) + (i < o.exp.size() ? o.exp[i] : 0);
        r.exp[i] = static_cast<uint16_t>(e);
    }
    r.trim();
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    size_t n = std::max(exp.size(), o.exp.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < exp.size() ? exp[i] : 0;
        int b = i < o.exp.size() ? o.exp[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(Var v, int power) {
    Polynomial p;
    p.terms_.emplace(Monomial::var(v, power), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree_of(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(v));
    return d;
}

int Polynomial::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::substitute(const std::vector<std::pair<Var, Polynomial>>& assign) const {
    if (assign.empty()) return *this;
    std::map<Var, const Polynomial*> repl;
    for (const auto& [v, p] : assign) {
        if (!repl.emplace(v, &p).second) throw Error("duplicate substitution for " + var_name(v));
    }
    // Cache of replacement powers, keyed by (var, exponent).
    std::map<std::pair<Var, int>, Polynomial> powers;
    auto power = [&](Var v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Polynomial p(Rational(1));
        for (int i = 0; i < e; ++i) p = p * *repl.at(v);
        return powers.emplace(key, std::move(p)).first->second;
    };

    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Monomial passthrough;
        passthrough.exp = m.exp;
        Polynomial factor(c);
        bool touched = false;
        for (Var v = 0; v < static_cast<int>(m.exp.size()); ++v) {
            int e = m.exp[v];
            if (e == 0 || !repl.count(v)) continue;
            passthrough.exp[v] = 0;
            factor = factor * power(v, e);
            touched = true;
        }
        passthrough.trim();
        if (!touched) {
            result.add_term(m, c);
        } else {
            for (const auto& [fm, fc] : factor.terms()) result.add_term(fm * passthrough, fc);
        }
    }
    return result;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    return substitute({{v, value}});
}

Polynomial Polynomial::coefficient_of(Var v, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.degree_of(v) != k) continue;
        Monomial stripped = m;
        if (v < static_cast<int>(stripped.exp.size())) stripped.exp[v] = 0;
        stripped.trim();
        r.add_term(stripped, c);
    }
    return r;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (Var v = 0; v < static_cast<int>(m.exp.size()); ++v) {
        if (m.exp[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
    }
    return s;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string ms = monomial_str(m);
        if (ms.empty()) {
            s += rational_str(a);
        } else if (a == 1) {
            s += ms;
        } else {
            s += rational_str(a) + "*" + ms;
        }
    }
    return s;
}

}  // namespace lcs
