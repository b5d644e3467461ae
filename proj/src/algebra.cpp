#include "lcs/algebra.hpp"

#include <algorithm>
#include <set>

namespace lcs {

bool GenValue::is_zero() const {
    for (const auto& [g, p] : comps)
        if (!p.is_zero()) return false;
    return true;
}

void GenValue::add(int gen, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = comps.emplace(gen, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) comps.erase(it);
    }
}

GenValue GenValue::operator+(const GenValue& o) const {
    GenValue r = *this;
    for (const auto& [g, p] : o.comps) r.add(g, p);
    return r;
}

GenValue GenValue::operator-(const GenValue& o) const {
    GenValue r = *this;
    for (const auto& [g, p] : o.comps) r.add(g, -p);
    return r;
}

GenValue GenValue::operator-() const {
    GenValue r;
    for (const auto& [g, p] : comps) r.comps.emplace(g, -p);
    return r;
}

GenValue GenValue::operator*(const Polynomial& p) const {
    GenValue r;
    if (p.is_zero()) return r;
    for (const auto& [g, q] : comps) r.add(g, q * p);
    return r;
}

GenValue operator*(const Polynomial& p, const GenValue& v) { return v * p; }

bool GenValue::operator==(const GenValue& o) const { return (*this - o).is_zero(); }

GenValue GenValue::substitute(const std::vector<std::pair<Var, Polynomial>>& assign) const {
    GenValue r;
    for (const auto& [g, p] : comps) r.add(g, p.substitute(assign));
    return r;
}

GenValue GenValue::substitute(Var v, const Polynomial& value) const {
    return substitute({{v, value}});
}

bool GenValue::uses_var(Var v) const {
    for (const auto& [g, p] : comps)
        if (p.uses_var(v)) return true;
    return false;
}

std::string value_str(const GenValue& v, const std::vector<Generator>& gens) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [g, p] : v.comps) {
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (p == Polynomial(1))
            s += gens[g].name;
        else
            s += "(" + p.str() + ") " + gens[g].name;
    }
    return s;
}

std::optional<Parity> value_parity(const GenValue& v, const std::vector<Generator>& gens) {
    std::optional<Parity> p;
    for (const auto& [g, q] : v.comps) {
        if (q.is_zero()) continue;
        if (!p)
            p = gens[g].parity;
        else if (*p != gens[g].parity)
            return std::nullopt;
    }
    return p ? p : std::optional<Parity>(kEven);
}

int ConformalSuperalgebra::index_of(const std::string& gname) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == gname) return static_cast<int>(i);
    return -1;
}

void ConformalSuperalgebra::set_bracket(int i, int j, GenValue value) {
    table_[{i, j}] = std::move(value);
}

GenValue ConformalSuperalgebra::entry(int i, int j, const Polynomial& slot) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(gens.size()) || j >= static_cast<int>(gens.size()))
        throw Error("unknown generator in bracket lookup");
    auto it = table_.find({i, j});
    if (it != table_.end()) return it->second.substitute(kVarL1, slot);
    auto rev = table_.find({j, i});
    if (rev == table_.end()) return {};
    // [g_i l g_j] = -(-1)^{|i||j|} [g_j_{-d-l} g_i]
    GenValue v = rev->second.substitute(kVarL1, -Polynomial::variable(kVarD) - slot);
    if (koszul(parity(i), parity(j)) > 0) v = -v;
    return v;
}

void ConformalSuperalgebra::validate_table() const {
    Polynomial l = Polynomial::variable(kVarL1);
    for (const auto& [key, value] : table_) {
        auto [i, j] = key;
        for (const auto& [g, p] : value.comps) {
            if (g < 0 || g >= static_cast<int>(gens.size()))
                throw Error("bracket value references unknown generator");
        }
        if (i > j && table_.count({j, i})) {
            GenValue derived = table_.at({j, i}).substitute(kVarL1, -Polynomial::variable(kVarD) - l);
            if (koszul(parity(i), parity(j)) > 0) derived = -derived;
            if (!(value == derived))
                throw Error("brackets [" + gens[i].name + "," + gens[j].name +
                            "] and reverse are inconsistent with skew-symmetry");
        }
    }
}

GenValue eval_bracket(const ConformalSuperalgebra& a, const GenValue& x, const GenValue& y,
                      Var slot) {
    if (x.uses_var(slot) || y.uses_var(slot))
        throw Error("slot collision in eval_bracket: " + var_name(slot));
    Polynomial s = Polynomial::variable(slot);
    Polynomial d = Polynomial::variable(kVarD);
    GenValue r;
    for (const auto& [g, p] : x.comps) {
        Polynomial pg = p.substitute(kVarD, -s);
        if (pg.is_zero()) continue;
        for (const auto& [h, q] : y.comps) {
            Polynomial qh = q.substitute(kVarD, d + s);
            if (qh.is_zero()) continue;
            GenValue e = a.entry(g, h, s);
            for (const auto& [k, c] : e.comps) r.add(k, c * pg * qh);
        }
    }
    return r;
}

GenValue eval_bracket_at(const ConformalSuperalgebra& a, const GenValue& x, const GenValue& y,
                         const Polynomial& target) {
    Var nu = fresh_var();
    return eval_bracket(a, x, y, nu).substitute(nu, target);
}

namespace {

std::string pair_name(const ConformalSuperalgebra& a, int i, int j) {
    return "(" + a.gens[i].name + "," + a.gens[j].name + ")";
}

}  // namespace

AxiomReport check_axioms(const ConformalSuperalgebra& a) {
    AxiomReport rep;
    int n = static_cast<int>(a.rank());
    Polynomial d = Polynomial::variable(kVarD);
    Polynomial l = Polynomial::variable(kVarL1);

    for (const auto& [key, value] : a.stored()) {
        auto [i, j] = key;
        Parity want = (a.parity(i) + a.parity(j)) % 2;
        for (const auto& [g, p] : value.comps) {
            if (!p.is_zero() && a.parity(g) != want) {
                rep.parity_ok = false;
                rep.witnesses.push_back("parity " + pair_name(a, i, j) + ": generator " +
                                        a.gens[g].name + " has wrong parity");
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GenValue lhs = a.entry(i, j, l);
            GenValue rhs = a.entry(j, i, l).substitute(kVarL1, -d - l);
            GenValue resid = koszul(a.parity(i), a.parity(j)) > 0 ? lhs + rhs : lhs - rhs;
            if (!resid.is_zero()) {
                rep.skew_ok = false;
                rep.witnesses.push_back("skew " + pair_name(a, i, j) + ": residual " +
                                        value_str(resid, a.gens));
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                GenValue inner_jk = eval_bracket(a, GenValue::unit(j), GenValue::unit(k), kVarM);
                GenValue t1 = eval_bracket(a, GenValue::unit(i), inner_jk, kVarL1);
                GenValue br_ij = eval_bracket(a, GenValue::unit(i), GenValue::unit(j), kVarL1);
                GenValue t2 = eval_bracket_at(a, br_ij, GenValue::unit(k),
                                              Polynomial::variable(kVarL1) + Polynomial::variable(kVarM));
                GenValue inner_ik = eval_bracket(a, GenValue::unit(i), GenValue::unit(k), kVarL1);
                GenValue t3 = eval_bracket(a, GenValue::unit(j), inner_ik, kVarM);
                GenValue resid = t1 - t2;
                resid = koszul(a.parity(i), a.parity(j)) > 0 ? resid - t3 : resid + t3;
                if (!resid.is_zero()) {
                    rep.jacobi_ok = false;
                    rep.witnesses.push_back("jacobi (" + a.gens[i].name + "," + a.gens[j].name +
                                            "," + a.gens[k].name + "): residual " +
                                            value_str(resid, a.gens));
                }
            }
        }
    }
    return rep;
}

bool check_homomorphism(const std::map<int, GenValue>& phi, const ConformalSuperalgebra& from,
                        const ConformalSuperalgebra& to) {
    auto apply = [&](const GenValue& x) {
        GenValue r;
        for (const auto& [g, p] : x.comps) {
            auto it = phi.find(g);
            if (it == phi.end()) continue;
            for (const auto& [h, q] : it->second.comps) r.add(h, p * q);
        }
        return r;
    };
    for (size_t g = 0; g < from.rank(); ++g) {
        auto it = phi.find(static_cast<int>(g));
        GenValue img = it == phi.end() ? GenValue{} : it->second;
        auto p = value_parity(img, to.gens);
        if (!p) throw Error("parity violation: phi(" + from.gens[g].name + ") is mixed-parity");
        if (!img.is_zero() && *p != from.gens[g].parity)
            throw Error("parity violation: phi(" + from.gens[g].name + ") flips parity");
    }
    int n = static_cast<int>(from.rank());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GenValue lhs = apply(from.entry(i, j, Polynomial::variable(kVarL1)));
            GenValue rhs = eval_bracket(to, apply(GenValue::unit(i)), apply(GenValue::unit(j)),
                                        kVarL1);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

void LieSuperalgebraData::set_bracket(int i, int j, std::map<int, Rational> value) {
    for (auto it = value.begin(); it != value.end();) {
        if (it->second == 0)
            it = value.erase(it);
        else
            ++it;
    }
    table_[{i, j}] = std::move(value);
}

std::map<int, Rational> LieSuperalgebraData::bracket(int i, int j) const {
    auto it = table_.find({i, j});
    if (it != table_.end()) return it->second;
    auto rev = table_.find({j, i});
    if (rev == table_.end()) return {};
    std::map<int, Rational> r;
    Rational sign = koszul(basis[i].parity, basis[j].parity) > 0 ? -1 : 1;
    for (const auto& [k, c] : rev->second)
        if (c != 0) r[k] = sign * c;
    return r;
}

void LieSuperalgebraData::validate() const {
    int n = static_cast<int>(basis.size());
    for (const auto& [key, value] : table_) {
        auto [i, j] = key;
        Parity want = (basis[i].parity + basis[j].parity) % 2;
        for (const auto& [k, c] : value) {
            if (k < 0 || k >= n) throw Error("structure constants reference unknown basis element");
            if (c != 0 && basis[k].parity != want)
                throw Error("structure constants violate parity additivity at [" + basis[i].name +
                            "," + basis[j].name + "]");
        }
    }
    auto add_scaled = [](std::map<int, Rational>& acc, const std::map<int, Rational>& v,
                         const Rational& s) {
        for (const auto& [k, c] : v) {
            acc[k] += s * c;
            if (acc[k] == 0) acc.erase(k);
        }
    };
    // Super-antisymmetry: [a,b] + (-1)^{|a||b|}[b,a] = 0.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::map<int, Rational> r = bracket(i, j);
            add_scaled(r, bracket(j, i), Rational(koszul(basis[i].parity, basis[j].parity)));
            if (!r.empty())
                throw Error("structure constants violate super-antisymmetry at [" + basis[i].name +
                            "," + basis[j].name + "]");
        }
    }
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                std::map<int, Rational> resid;
                for (const auto& [x, c] : bracket(j, k)) add_scaled(resid, bracket(i, x), c);
                for (const auto& [x, c] : bracket(i, j)) add_scaled(resid, bracket(x, k), -c);
                Rational s(-koszul(basis[i].parity, basis[j].parity));
                for (const auto& [x, c] : bracket(i, k)) add_scaled(resid, bracket(j, x), s * c);
                if (!resid.empty())
                    throw Error("structure constants violate the super Jacobi identity at (" +
                                basis[i].name + "," + basis[j].name + "," + basis[k].name + ")");
            }
        }
    }
}

ConformalSuperalgebra current_algebra(const LieSuperalgebraData& l) {
    l.validate();
    ConformalSuperalgebra a;
    a.name = l.name.empty() ? "Cur" : "Cur_" + l.name;
    a.gens = l.basis;
    int n = static_cast<int>(l.basis.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            GenValue v;
            for (const auto& [k, c] : l.bracket(i, j)) v.add(k, Polynomial(c));
            if (!v.is_zero() || i == j) a.set_bracket(i, j, v);
        }
    }
    return a;
}

GenValue Representation::action(int alg_gen, int mod_gen, const Polynomial& slot) const {
    auto it = table.find({alg_gen, mod_gen});
    if (it == table.end()) return {};
    return it->second.substitute(kVarL1, slot);
}

GenValue rho_apply(const Representation& rep, int alg_gen, const Polynomial& slot,
                   const GenValue& x) {
    Polynomial d = Polynomial::variable(kVarD);
    GenValue r;
    for (const auto& [mg, p] : x.comps) {
        Polynomial shifted = p.substitute(kVarD, d + slot);
        if (shifted.is_zero()) continue;
        GenValue act = rep.action(alg_gen, mg, slot);
        for (const auto& [k, c] : act.comps) r.add(k, c * shifted);
    }
    return r;
}

GenValue rho_apply_element(const Representation& rep, const GenValue& y, const Polynomial& slot,
                           const GenValue& x) {
    GenValue r;
    for (const auto& [g, p] : y.comps) {
        Polynomial coeff = p.substitute(kVarD, -slot);
        if (coeff.is_zero()) continue;
        GenValue part = rho_apply(rep, g, slot, x);
        for (const auto& [k, c] : part.comps) r.add(k, c * coeff);
    }
    return r;
}

Representation adjoint_rep(const ConformalSuperalgebra& a) {
    Representation rep;
    rep.module_gens = a.gens;
    int n = static_cast<int>(a.rank());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GenValue v = a.entry(i, j, Polynomial::variable(kVarL1));
            if (!v.is_zero()) rep.table[{i, j}] = v;
        }
    return rep;
}

RepReport check_representation(const ConformalSuperalgebra& a, const Representation& rep) {
    RepReport out;
    Polynomial l = Polynomial::variable(kVarL1);
    Polynomial mu = Polynomial::variable(kVarM);
    Polynomial d = Polynomial::variable(kVarD);

    for (const auto& [key, value] : rep.table) {
        auto [i, m] = key;
        Parity want = (a.parity(i) + rep.module_gens[m].parity) % 2;
        for (const auto& [k, p] : value.comps) {
            if (!p.is_zero() && rep.module_gens[k].parity != want) {
                out.parity_ok = false;
                out.witnesses.push_back("parity: rho(" + a.gens[i].name + ") on " +
                                        rep.module_gens[m].name);
            }
        }
    }

    int n = static_cast<int>(a.rank());
    int nm = static_cast<int>(rep.module_gens.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m < nm; ++m) {
                GenValue unit_m = GenValue::unit(m);
                GenValue t1 = rho_apply(rep, i, l, rho_apply(rep, j, mu, unit_m));
                GenValue t2 = rho_apply(rep, j, mu, rho_apply(rep, i, l, unit_m));
                Var nu = fresh_var();
                GenValue t3 = rho_apply_element(rep, a.entry(i, j, l), Polynomial::variable(nu),
                                                unit_m)
                                  .substitute(nu, l + mu);
                GenValue resid = koszul(a.parity(i), a.parity(j)) > 0 ? t1 - t2 - t3 : t1 + t2 - t3;
                if (!resid.is_zero()) {
                    out.commutator_ok = false;
                    out.witnesses.push_back("commutator (" + a.gens[i].name + "," +
                                            a.gens[j].name + ") on " + rep.module_gens[m].name +
                                            ": residual " + value_str(resid, rep.module_gens));
                }
            }
        }
    }

    // rho(d a)_l = -l rho(a)_l, checked through the element-evaluation rule.
    for (int i = 0; i < n && out.sesqui_ok; ++i) {
        for (int m = 0; m < nm; ++m) {
            GenValue da = GenValue::unit(i) * d;
            GenValue lhs = rho_apply_element(rep, da, l, GenValue::unit(m));
            GenValue rhs = rho_apply(rep, i, l, GenValue::unit(m)) * (-l);
            if (!(lhs == rhs)) {
                out.sesqui_ok = false;
                out.witnesses.push_back("sesquilinearity fails on rho(d " + a.gens[i].name + ")");
            }
        }
    }
    return out;
}

ConformalSuperalgebra semidirect(const ConformalSuperalgebra& a, const Representation& rep) {
    RepReport rr = check_representation(a, rep);
    if (!rr.all_ok()) throw Error("semidirect: representation check failure");

    ConformalSuperalgebra s;
    s.name = a.name.empty() ? "semidirect" : a.name + "!M";
    s.gens = a.gens;
    int na = static_cast<int>(a.rank());
    std::set<std::string> used;
    for (const auto& g : a.gens) used.insert(g.name);
    for (const auto& mg : rep.module_gens) {
        Generator g = mg;
        while (used.count(g.name)) g.name += "_m";
        used.insert(g.name);
        s.gens.push_back(g);
    }
    for (const auto& [key, value] : a.stored()) s.set_bracket(key.first, key.second, value);
    // [r_l m] = rho(r)_l m; [m_l r] is then exactly the skew-derived entry.
    for (int i = 0; i < na; ++i) {
        for (size_t m = 0; m < rep.module_gens.size(); ++m) {
            auto it = rep.table.find({i, static_cast<int>(m)});
            GenValue v;
            if (it != rep.table.end())
                for (const auto& [k, p] : it->second.comps) v.add(na + k, p);
            s.set_bracket(i, na + static_cast<int>(m), v);
        }
    }
    for (size_t m = 0; m < rep.module_gens.size(); ++m)
        for (size_t m2 = m; m2 < rep.module_gens.size(); ++m2)
            s.set_bracket(na + static_cast<int>(m), na + static_cast<int>(m2), GenValue{});
    return s;
}

Representation cur_module(const LieSuperalgebraData& l, const FiniteLieRep& pi) {
    pi.validate(l);
    Representation rep;
    rep.module_gens = pi.basis;
    for (const auto& [key, value] : pi.action) {
        GenValue v;
        for (const auto& [k, c] : value) v.add(k, Polynomial(c));
        if (!v.is_zero()) rep.table[{key.first, key.second}] = v;
    }
    return rep;
}

std::map<int, Rational> FiniteLieRep::apply(int lie_gen, int mod_gen) const {
    auto it = action.find({lie_gen, mod_gen});
    return it == action.end() ? std::map<int, Rational>{} : it->second;
}

void FiniteLieRep::validate(const LieSuperalgebraData& l) const {
    int n = static_cast<int>(l.basis.size());
    int nm = static_cast<int>(basis.size());
    for (const auto& [key, value] : action) {
        auto [i, m] = key;
        Parity want = (l.basis[i].parity + basis[m].parity) % 2;
        for (const auto& [k, c] : value)
            if (c != 0 && basis[k].parity != want)
                throw Error("module action violates parity additivity");
    }
    // pi([a,b]) = pi(a)pi(b) - (-1)^{|a||b|} pi(b)pi(a) on every basis vector.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m < nm; ++m) {
                std::map<int, Rational> resid;
                auto acc = [&](int mg, const Rational& c) {
                    resid[mg] += c;
                    if (resid[mg] == 0) resid.erase(mg);
                };
                for (const auto& [x, c] : apply(j, m))
                    for (const auto& [y, c2] : apply(i, x)) acc(y, c * c2);
                Rational s(-koszul(l.basis[i].parity, l.basis[j].parity));
                for (const auto& [x, c] : apply(i, m))
                    for (const auto& [y, c2] : apply(j, x)) acc(y, s * c * c2);
                for (const auto& [x, c] : l.bracket(i, j))
                    for (const auto& [y, c2] : apply(x, m)) acc(y, -c * c2);
                if (!resid.empty()) throw Error("pi is not a representation of the Lie superalgebra");
            }
        }
    }
}

bool check_cur_embedding(const LieSuperalgebraData& l, const FiniteLieRep& pi) {
    l.validate();
    pi.validate(l);
    int n = static_cast<int>(l.basis.size());
    int nm = static_cast<int>(pi.basis.size());

    // The Lie superalgebra semidirect sum g x M with M abelian.
    LieSuperalgebraData sum;
    sum.name = l.name + "_sd";
    sum.basis = l.basis;
    std::set<std::string> used;
    for (const auto& g : l.basis) used.insert(g.name);
    for (const auto& mg : pi.basis) {
        Generator g = mg;
        while (used.count(g.name)) g.name += "_m";
        used.insert(g.name);
        sum.basis.push_back(g);
    }
    for (const auto& [key, value] : l.stored()) sum.set_bracket(key.first, key.second, value);
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < nm; ++m) {
            std::map<int, Rational> v;
            for (const auto& [k, c] : pi.apply(i, m)) v[n + k] = c;
            sum.set_bracket(i, n + m, std::move(v));
        }
    for (int m = 0; m < nm; ++m)
        for (int m2 = m; m2 < nm; ++m2) sum.set_bracket(n + m, n + m2, {});

    ConformalSuperalgebra b1 = current_algebra(sum);
    ConformalSuperalgebra b2 = semidirect(current_algebra(l), cur_module(l, pi));

    if (b1.rank() != b2.rank()) return false;
    Polynomial lam = Polynomial::variable(kVarL1);
    for (int i = 0; i < static_cast<int>(b1.rank()); ++i)
        for (int j = 0; j < static_cast<int>(b1.rank()); ++j)
            if (!(b1.entry(i, j, lam) == b2.entry(i, j, lam))) return false;
    return true;
}

CenterSpace center(const ConformalSuperalgebra& a, int ddeg) {
    if (ddeg < 0) throw Error("center: negative degree bound");
    int n = static_cast<int>(a.rank());
    struct Unknown {
        int gen;
        int dpow;
    };
    std::vector<Unknown> unknowns;
    for (int g = 0; g < n; ++g)
        for (int i = 0; i <= ddeg; ++i) unknowns.push_back({g, i});

    // Row keys: (partner generator, target generator, monomial in d,l1).
    std::map<std::tuple<int, int, Monomial>, std::map<size_t, Rational>> rows;
    for (size_t u = 0; u < unknowns.size(); ++u) {
        GenValue e = GenValue::unit(unknowns[u].gen) * Polynomial::variable(kVarD, unknowns[u].dpow);
        for (int h = 0; h < n; ++h) {
            GenValue resid = eval_bracket(a, e, GenValue::unit(h), kVarL1);
            for (const auto& [tg, p] : resid.comps)
                for (const auto& [mono, c] : p.terms()) rows[{h, tg, mono}][u] = c;
        }
    }
    RationalMatrix mat(rows.size(), unknowns.size());
    size_t r = 0;
    for (const auto& [key, cols] : rows) {
        for (const auto& [u, c] : cols) mat.at(r, u) = c;
        ++r;
    }
    CenterSpace out;
    out.ddeg = ddeg;
    out.coords = unknowns.empty() ? SolutionSpace{0, {}} : nullspace(mat);
    for (const auto& vec : out.coords.basis) {
        GenValue el;
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (vec[u] != 0)
                el.add(unknowns[u].gen, Polynomial::term(vec[u], Monomial::var(kVarD, unknowns[u].dpow)));
        out.elements.push_back(el);
    }
    return out;
}

}  // namespace lcs
