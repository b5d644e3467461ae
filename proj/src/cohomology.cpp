#include "lcs/cohomology.hpp"

#include <algorithm>

namespace lcs {

namespace {
const Polynomial kD = Polynomial::variable(kVarD);
const Polynomial kL = Polynomial::variable(kVarL1);
const Polynomial kMu = Polynomial::variable(kVarM);
}  // namespace

Var cochain_slot(int i) {
    if (i < 0 || i > 3) throw Error("cochain arity limited to 4 slot variables");
    return kVarL1 + i;
}

bool Cochain::is_zero() const {
    for (const auto& [t, v] : values)
        if (!v.is_zero()) return false;
    return true;
}

GenValue eval_cochain(const Cochain& c, const std::vector<Generator>& alg_gens,
                      const std::vector<GenValue>& args, const std::vector<Polynomial>& slots) {
    if (static_cast<int>(args.size()) != c.arity || slots.size() != args.size())
        throw Error("eval_cochain: arity mismatch");
    if (c.arity == 0) {
        auto it = c.values.find({});
        return it == c.values.end() ? GenValue{} : it->second;
    }

    GenValue result;
    // Expand multilinearly over generator components of each argument.
    std::vector<int> tuple(c.arity, 0);
    std::function<void(int, const Polynomial&)> expand = [&](int pos, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        if (pos == c.arity) {
            std::vector<int> gens(tuple);
            std::vector<Polynomial> perm_slots(slots);
            Rational sign(1);
            // Bubble sort to the canonical non-decreasing tuple, swapping
            // slots alongside and applying -(-1)^{|u||v|} per swap.
            for (int i = 0; i < c.arity; ++i) {
                for (int j = 0; j + 1 < c.arity - i; ++j) {
                    if (gens[j] > gens[j + 1]) {
                        int s = -koszul(alg_gens[gens[j]].parity, alg_gens[gens[j + 1]].parity);
                        sign *= s;
                        std::swap(gens[j], gens[j + 1]);
                        std::swap(perm_slots[j], perm_slots[j + 1]);
                    }
                }
            }
            auto it = c.values.find(gens);
            if (it == c.values.end()) return;
            std::vector<std::pair<Var, Polynomial>> assign;
            for (int k = 0; k < c.arity; ++k) assign.emplace_back(cochain_slot(k), perm_slots[k]);
            GenValue v = it->second.substitute(assign);
            for (const auto& [tg, p] : v.comps) result.add(tg, p * coeff * sign);
            return;
        }
        for (const auto& [g, p] : args[pos].comps) {
            // Conformal antilinearity: d -> -slot in this argument's coefficient.
            Polynomial cf = p.substitute(kVarD, -slots[pos]);
            tuple[pos] = g;
            expand(pos + 1, coeff * cf);
        }
    };
    expand(0, Polynomial(1));
    return result;
}

bool check_cochain(const Cochain& c, const std::vector<Generator>& alg_gens) {
    for (const auto& [t, v] : c.values) {
        for (size_t p = 0; p + 1 < t.size(); ++p) {
            if (t[p] != t[p + 1]) continue;
            // Swapping two equal arguments must reproduce the value with the
            // two slots exchanged and the sign -(-1)^{|g||g|}.
            int s = -koszul(alg_gens[t[p]].parity, alg_gens[t[p + 1]].parity);
            Var va = cochain_slot(static_cast<int>(p)), vb = cochain_slot(static_cast<int>(p + 1));
            GenValue swapped = v.substitute({{va, Polynomial::variable(vb)},
                                             {vb, Polynomial::variable(va)}});
            GenValue resid = s > 0 ? v - swapped : v + swapped;
            if (!resid.is_zero()) return false;
        }
    }
    return true;
}

namespace {

void canonical_tuples(int rank, int arity, std::vector<std::vector<int>>& out) {
    std::vector<int> t(arity, 0);
    std::function<void(int, int)> rec = [&](int pos, int min) {
        if (pos == arity) {
            out.push_back(t);
            return;
        }
        for (int g = min; g < rank; ++g) {
            t[pos] = g;
            rec(pos + 1, g);
        }
    };
    if (arity == 0)
        out.push_back({});
    else
        rec(0, 0);
}

}  // namespace

Cochain differential(const ConformalSuperalgebra& a, const Representation& rep, const Cochain& c) {
    int n = c.arity;
    int big = n + 1;
    if (big > 4) throw Error("differential: output arity exceeds the 4 available slots");
    Cochain out;
    out.arity = big;
    out.parity = c.parity;

    std::vector<std::vector<int>> tuples;
    canonical_tuples(static_cast<int>(a.rank()), big, tuples);
    for (const auto& t : tuples) {
        std::vector<int> par(big);
        for (int k = 0; k < big; ++k) par[k] = a.parity(t[k]);
        std::vector<int> prefix(big + 1, 0);
        for (int k = 0; k < big; ++k) prefix[k + 1] = prefix[k] + par[k];

        GenValue total;
        // First sum: rho(a_i) applied to the cochain on the remaining args.
        for (int i = 0; i < big; ++i) {
            int signexp = i /* (-1)^{i+1} with 1-based i: i_1+1 = i+2 ~ i */ +
                          (c.parity + prefix[i]) * par[i];
            std::vector<GenValue> args;
            std::vector<Polynomial> slots;
            for (int k = 0; k < big; ++k) {
                if (k == i) continue;
                args.push_back(GenValue::unit(t[k]));
                slots.push_back(Polynomial::variable(cochain_slot(k)));
            }
            GenValue inner = eval_cochain(c, a.gens, args, slots);
            if (inner.is_zero()) continue;
            GenValue term = rho_apply(rep, t[i], Polynomial::variable(cochain_slot(i)), inner);
            if (signexp % 2) term = -term;
            total = total + term;
        }
        // Second sum: the cochain with first argument [a_i_{l_i} a_j].
        for (int i = 0; i < big; ++i) {
            for (int j = i + 1; j < big; ++j) {
                // (-1)^{i+j} at 1-based indices == (-1)^{i+j} at 0-based.
                int signexp = (i + j) + prefix[i] * par[i] + prefix[j] * par[j] +
                              par[i] * par[j];
                GenValue br = eval_bracket(a, GenValue::unit(t[i]), GenValue::unit(t[j]),
                                           cochain_slot(i));
                std::vector<GenValue> args{br};
                std::vector<Polynomial> slots{Polynomial::variable(cochain_slot(i)) +
                                              Polynomial::variable(cochain_slot(j))};
                for (int k = 0; k < big; ++k) {
                    if (k == i || k == j) continue;
                    args.push_back(GenValue::unit(t[k]));
                    slots.push_back(Polynomial::variable(cochain_slot(k)));
                }
                GenValue term = eval_cochain(c, a.gens, args, slots);
                if (signexp % 2) term = -term;
                total = total + term;
            }
        }
        if (!total.is_zero()) out.values[t] = total;
    }
    return out;
}

Cochain as_one_cochain(const ConformalMap& f) {
    Cochain c;
    c.arity = 1;
    c.parity = f.parity;
    for (const auto& [g, v] : f.vals)
        if (!v.is_zero()) c.values[{g}] = v;
    return c;
}

Cochain random_cochain(const ConformalSuperalgebra& a, int arity, Parity parity, int deg,
                       std::mt19937_64& rng) {
    Cochain c;
    c.arity = arity;
    c.parity = parity;
    std::vector<std::vector<int>> tuples;
    canonical_tuples(static_cast<int>(a.rank()), arity, tuples);
    for (const auto& t : tuples) {
        int argsum = 0;
        for (int g : t) argsum += a.parity(g);
        Parity target = (argsum + parity) % 2;
        GenValue raw;
        for (int tg = 0; tg < static_cast<int>(a.rank()); ++tg) {
            if (a.parity(tg) != target) continue;
            Polynomial p;
            std::vector<Monomial> monos{Monomial::one()};
            std::vector<Var> vars{kVarD};
            for (int k = 0; k < arity; ++k) vars.push_back(cochain_slot(k));
            std::function<void(size_t, Monomial)> gen = [&](size_t vi, Monomial m) {
                if (vi == vars.size()) {
                    p += Polynomial::term(random_small_rational(rng), m);
                    return;
                }
                for (int e = 0; e <= deg; ++e) gen(vi + 1, m * Monomial::var(vars[vi], e));
            };
            gen(0, Monomial::one());
            raw.add(tg, p);
        }
        // Symmetrize over the stabilizer of the tuple so skew-consistency
        // holds on repeated generators.
        std::vector<int> idx(arity);
        for (int k = 0; k < arity; ++k) idx[k] = k;
        GenValue sym;
        std::sort(idx.begin(), idx.end());
        do {
            bool stabil = true;
            for (int k = 0; k < arity; ++k)
                if (t[idx[k]] != t[k]) stabil = false;
            if (!stabil) continue;
            Rational sign(1);
            for (int x = 0; x < arity; ++x)
                for (int y = x + 1; y < arity; ++y)
                    if (idx[x] > idx[y]) sign *= -koszul(a.parity(t[x]), a.parity(t[y]));
            std::vector<std::pair<Var, Polynomial>> assign;
            for (int k = 0; k < arity; ++k)
                assign.emplace_back(cochain_slot(k), Polynomial::variable(cochain_slot(idx[k])));
            GenValue v = raw.substitute(assign);
            for (const auto& [tg, p] : v.comps) sym.add(tg, p * sign);
        } while (std::next_permutation(idx.begin(), idx.end()));
        if (!sym.is_zero()) c.values[t] = sym;
    }
    if (!check_cochain(c, a.gens)) throw Error("random_cochain produced an inconsistent cochain");
    return c;
}

GenValue nijenhuis_bracket(const ConformalSuperalgebra& a, const ConformalMap& f, int i, int j) {
    GenValue fa = f.value(i, kL);
    GenValue x1 = eval_bracket_at(a, fa, GenValue::unit(j), kL);
    GenValue x2 = eval_bracket(a, GenValue::unit(i), apply_minus_d(f, GenValue::unit(j)), kVarL1);
    GenValue x3 = apply_minus_d(f, a.entry(i, j, kL));
    return x1 + x2 - x3;
}

NijenhuisReport nijenhuis_residual(const ConformalSuperalgebra& a, const ConformalMap& f) {
    if (f.parity != kEven) throw Error("nijenhuis_residual: operator must be even");
    NijenhuisReport out;
    int n = static_cast<int>(a.rank());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GenValue nb = nijenhuis_bracket(a, f, i, j);
            GenValue lhs = eval_bracket_at(a, f.value(i, kL), f.value(j, kMu), kL);
            GenValue rhs = apply_antilinear(f, kL + kMu, nb);
            GenValue reduced = (lhs - rhs).substitute(kVarD, -kL - kMu);
            if (!reduced.is_zero()) {
                out.ok = false;
                out.witnesses.push_back("(" + a.gens[i].name + "," + a.gens[j].name +
                                        "): " + value_str(reduced, a.gens));
            }
            out.nbracket[{i, j}] = nb;
            out.residuals[{i, j}] = reduced;
        }
    }
    return out;
}

bool check_eq_4_10(const ConformalSuperalgebra& a, const ConformalMap& f) {
    int n = static_cast<int>(a.rank());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GenValue lhs =
                eval_bracket_at(a, f.value(i, kL), apply_minus_d(f, GenValue::unit(j)), kL);
            GenValue rhs = apply_minus_d(f, nijenhuis_bracket(a, f, i, j));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

GenValue deformed_entry(const ConformalSuperalgebra& a, const Cochain& psi, int i, int j) {
    GenValue base = a.entry(i, j, kL);
    GenValue def = eval_cochain(psi, a.gens, {GenValue::unit(i), GenValue::unit(j)},
                                {kL, -kD - kL});
    return base + def * Polynomial::variable(kVarT);
}

DeformationReport deformation_check(const ConformalSuperalgebra& a, const Cochain& psi) {
    if (psi.arity != 2 || psi.parity != kEven)
        throw Error("deformation_check: psi must be an even 2-cochain");
    if (!check_cochain(psi, a.gens)) throw Error("deformation_check: psi fails skew-consistency");

    DeformationReport rep;
    int n = static_cast<int>(a.rank());

    ConformalSuperalgebra def;
    def.name = a.name + "_t";
    def.gens = a.gens;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) def.set_bracket(i, j, deformed_entry(a, psi, i, j));

    // (i) skew-symmetry of the t-bracket.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GenValue lhs = def.entry(i, j, kL);
            GenValue rhs = def.entry(j, i, kL).substitute(kVarL1, -kD - kL);
            GenValue resid = koszul(a.parity(i), a.parity(j)) > 0 ? lhs + rhs : lhs - rhs;
            if (!resid.is_zero()) {
                rep.skew_ok = false;
                rep.witnesses.push_back("t-skew (" + a.gens[i].name + "," + a.gens[j].name + ")");
            }
        }

    // Jacobi residual per t-power; t^0 is the undeformed algebra.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                GenValue inner = eval_bracket(def, GenValue::unit(j), GenValue::unit(k), kVarM);
                GenValue t1 = eval_bracket(def, GenValue::unit(i), inner, kVarL1);
                GenValue br = eval_bracket(def, GenValue::unit(i), GenValue::unit(j), kVarL1);
                GenValue t2 = eval_bracket_at(def, br, GenValue::unit(k), kL + kMu);
                GenValue t3 = eval_bracket(def, GenValue::unit(j),
                                           eval_bracket(def, GenValue::unit(i), GenValue::unit(k),
                                                        kVarL1),
                                           kVarM);
                GenValue resid = t1 - t2;
                resid = koszul(a.parity(i), a.parity(j)) > 0 ? resid - t3 : resid + t3;
                if (resid.is_zero()) continue;
                for (const auto& [tg, p] : resid.comps) {
                    if (!p.coefficient_of(kVarT, 1).is_zero()) rep.defor1_ok = false;
                    if (!p.coefficient_of(kVarT, 2).is_zero()) rep.defor2_ok = false;
                    if (!p.coefficient_of(kVarT, 0).is_zero())
                        throw Error("deformation_check: base algebra fails Jacobi");
                }
                rep.witnesses.push_back("t-jacobi (" + a.gens[i].name + "," + a.gens[j].name +
                                        "," + a.gens[k].name + ")");
            }

    rep.cocycle_ok = differential(a, adjoint_rep(a), psi).is_zero();
    return rep;
}

DeformationReport check_trivial_deformation(const ConformalSuperalgebra& a, const ConformalMap& f) {
    NijenhuisReport nr = nijenhuis_residual(a, f);
    if (!nr.ok) {
        DeformationReport rep;
        rep.nijenhuis_ok = false;
        rep.trivial_ok = false;
        rep.witnesses.push_back("precondition failed: operator is not Nijenhuis");
        rep.witnesses.insert(rep.witnesses.end(), nr.witnesses.begin(), nr.witnesses.end());
        return rep;
    }

    Cochain psi = differential(a, adjoint_rep(a), as_one_cochain(f));
    DeformationReport rep = deformation_check(a, psi);
    rep.nijenhuis_ok = true;
    rep.eq410_ok = check_eq_4_10(a, f);

    int n = static_cast<int>(a.rank());
    // psi_{l,-d-l}(a,b) = [a_l b]_N  (the d^f identity).
    for (int i = 0; i < n && rep.n2_ok; ++i)
        for (int j = 0; j < n; ++j) {
            GenValue v = eval_cochain(psi, a.gens, {GenValue::unit(i), GenValue::unit(j)},
                                      {kL, -kD - kL});
            if (!(v == nr.nbracket.at({i, j}))) {
                rep.n2_ok = false;
                break;
            }
        }

    Polynomial t = Polynomial::variable(kVarT);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GenValue vt = deformed_entry(a, psi, i, j);
            GenValue lhs = vt + apply_minus_d(f, vt) * t;
            GenValue left = GenValue::unit(i) + f.value(i, kL) * t;
            GenValue right = GenValue::unit(j) + apply_minus_d(f, GenValue::unit(j)) * t;
            GenValue rhs = eval_bracket_at(a, left, right, kL);
            if (!(lhs == rhs)) {
                rep.intertwine_ok = false;
                rep.witnesses.push_back("intertwining fails at (" + a.gens[i].name + "," +
                                        a.gens[j].name + ")");
            }
        }

    rep.trivial_ok = rep.skew_ok && rep.cocycle_ok && rep.jacobi_t_ok() && rep.n2_ok &&
                     rep.intertwine_ok && rep.eq410_ok;
    return rep;
}

}  // namespace lcs
