#include "lcs/confmap.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lcs {

namespace {
const Polynomial kD = Polynomial::variable(kVarD);
const Polynomial kL = Polynomial::variable(kVarL1);
const Polynomial kMu = Polynomial::variable(kVarM);
}  // namespace

GenValue ConformalMap::value(int src, const Polynomial& slot) const {
    auto it = vals.find(src);
    if (it == vals.end()) return {};
    return it->second.substitute(kVarL1, slot);
}

bool ConformalMap::is_zero() const {
    for (const auto& [g, v] : vals)
        if (!v.is_zero()) return false;
    return true;
}

GenValue apply_conformal(const ConformalMap& f, const Polynomial& slot, const GenValue& x) {
    GenValue r;
    for (const auto& [g, p] : x.comps) {
        Polynomial shifted = p.substitute(kVarD, kD + slot);
        if (shifted.is_zero()) continue;
        GenValue v = f.value(g, slot);
        for (const auto& [k, c] : v.comps) r.add(k, c * shifted);
    }
    return r;
}

GenValue apply_antilinear(const ConformalMap& f, const Polynomial& slot, const GenValue& x) {
    GenValue r;
    for (const auto& [g, p] : x.comps) {
        Polynomial coeff = p.substitute(kVarD, -slot);
        if (coeff.is_zero()) continue;
        GenValue v = f.value(g, slot);
        for (const auto& [k, c] : v.comps) r.add(k, c * coeff);
    }
    return r;
}

GenValue apply_minus_d(const ConformalMap& f, const GenValue& x) {
    return apply_antilinear(f, -kD, x);
}

ConformalMap inner_map(const ConformalSuperalgebra& a, const GenValue& r) {
    auto p = value_parity(r, a.gens);
    if (!p) throw Error("inner_map: element is not parity-homogeneous");
    ConformalMap f;
    f.parity = *p;
    for (size_t x = 0; x < a.rank(); ++x) {
        GenValue v = eval_bracket(a, r, GenValue::unit(static_cast<int>(x)), kVarL1);
        if (!v.is_zero()) f.vals[static_cast<int>(x)] = v;
    }
    return f;
}

ConformalMap identity_map(const std::vector<Generator>& gens) {
    ConformalMap f;
    f.name = "identity";
    f.parity = kEven;
    for (size_t g = 0; g < gens.size(); ++g)
        f.vals[static_cast<int>(g)] = GenValue::unit(static_cast<int>(g));
    return f;
}

TwoSlotMap compose(const ConformalMap& f, const ConformalMap& g) {
    TwoSlotMap t;
    t.parity = (f.parity + g.parity) % 2;
    std::set<int> srcs;
    for (const auto& [s, v] : g.vals) srcs.insert(s);
    for (int s : srcs) {
        GenValue v = apply_conformal(f, kL, apply_conformal(g, kMu - kL, GenValue::unit(s)));
        if (!v.is_zero()) t.vals[s] = v;
    }
    return t;
}

TwoSlotMap cend_bracket(const ConformalMap& f, const ConformalMap& g) {
    TwoSlotMap t;
    t.parity = (f.parity + g.parity) % 2;
    std::set<int> srcs;
    for (const auto& [s, v] : f.vals) srcs.insert(s);
    for (const auto& [s, v] : g.vals) srcs.insert(s);
    int sign = koszul(f.parity, g.parity);
    for (int s : srcs) {
        GenValue unit = GenValue::unit(s);
        GenValue fg = apply_conformal(f, kL, apply_conformal(g, kMu - kL, unit));
        GenValue gf = apply_conformal(g, kMu - kL, apply_conformal(f, kL, unit));
        GenValue v = sign > 0 ? fg - gf : fg + gf;
        if (!v.is_zero()) t.vals[s] = v;
    }
    return t;
}

GenValue apply_twoslot(const TwoSlotMap& t, const Polynomial& total, const GenValue& x) {
    GenValue r;
    for (const auto& [g, p] : x.comps) {
        Polynomial shifted = p.substitute(kVarD, kD + total);
        if (shifted.is_zero()) continue;
        auto it = t.vals.find(g);
        if (it == t.vals.end()) continue;
        GenValue v = it->second.substitute(kVarM, total);
        for (const auto& [k, c] : v.comps) r.add(k, c * shifted);
    }
    return r;
}

Rational random_small_rational(std::mt19937_64& rng) {
    int num = static_cast<int>(rng() % 7) - 3;
    int den = 1 + static_cast<int>(rng() % 2);
    return Rational(num, den);
}

ConformalMap random_conformal_map(const std::vector<Generator>& source,
                                  const std::vector<Generator>& target, Parity parity, int ddeg,
                                  int ldeg, std::mt19937_64& rng) {
    ConformalMap f;
    f.parity = parity;
    for (size_t s = 0; s < source.size(); ++s) {
        GenValue v;
        for (size_t t = 0; t < target.size(); ++t) {
            if (target[t].parity != (source[s].parity + parity) % 2) continue;
            Polynomial p;
            for (int i = 0; i <= ddeg; ++i)
                for (int j = 0; j <= ldeg; ++j)
                    p += Polynomial::term(random_small_rational(rng),
                                          Monomial::var(kVarD, i) * Monomial::var(kVarL1, j));
            v.add(static_cast<int>(t), p);
        }
        if (!v.is_zero()) f.vals[static_cast<int>(s)] = v;
    }
    return f;
}

CendReport check_cend_axioms(int rank, int trials, uint64_t seed) {
    if (rank < 1 || rank > 3) throw Error("check_cend_axioms: rank must be 1..3");
    CendReport out;
    out.trials = trials;
    std::mt19937_64 rng(seed);
    Polynomial gam = Polynomial::variable(kVarG);

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Generator> gens;
        for (int i = 0; i < rank; ++i)
            gens.push_back({"e" + std::to_string(i), static_cast<Parity>(rng() % 2)});
        auto rand_map = [&] {
            return random_conformal_map(gens, gens, static_cast<Parity>(rng() % 2), 2, 2, rng);
        };
        ConformalMap f = rand_map(), g = rand_map(), h = rand_map();

        auto fail = [&](const std::string& what) {
            out.ok = false;
            out.witnesses.push_back("trial " + std::to_string(trial) + ": " + what);
        };

        for (int m = 0; m < rank; ++m) {
            GenValue unit = GenValue::unit(m);

            // (1) f_l(g_{-d-m} x) = (f_l g)_{-d-m} x
            {
                GenValue lhs = apply_conformal(f, kL, apply_conformal(g, -kD - kMu, unit));
                Var nu = fresh_var();
                Polynomial nup = Polynomial::variable(nu);
                GenValue rhs = apply_conformal(f, kL, apply_conformal(g, nup - kL, unit))
                                   .substitute(nu, -kD - kMu);
                if (!(lhs == rhs)) fail("composition identity (1)");
            }
            // (2) f_{-d-l}(g_m x) = (f_{-d-m} g)_{-d-l+m} x
            {
                GenValue lhs = apply_conformal(f, -kD - kL, apply_conformal(g, kMu, unit));
                Var nu = fresh_var();
                Polynomial nup = Polynomial::variable(nu);
                GenValue rhs = apply_conformal(f, nup - kMu, apply_conformal(g, kMu, unit))
                                   .substitute(nu, -kD - kL + kMu);
                if (!(lhs == rhs)) fail("composition identity (2)");
            }
            // (3) f_{-d-l}(g_{-d-m} x) = (f_{-d+m-l} g)_{-d-m} x
            {
                GenValue lhs = apply_conformal(f, -kD - kL, apply_conformal(g, -kD - kMu, unit));
                Var nu = fresh_var();
                Polynomial nup = Polynomial::variable(nu);
                GenValue rhs = apply_conformal(f, nup + kMu - kL, apply_conformal(g, kL - kMu, unit))
                                   .substitute(nu, -kD - kMu);
                if (!(lhs == rhs)) fail("composition identity (3)");
            }
            // Conformal associativity through the materialized composite:
            // ((f_l g) applied at total l+m)(h_gam x) = f_l(g_m(h_gam x)).
            {
                GenValue hx = apply_conformal(h, gam, unit);
                GenValue lhs = apply_twoslot(compose(f, g), kL + kMu, hx);
                GenValue rhs = apply_conformal(f, kL, apply_conformal(g, kMu, hx));
                if (!(lhs == rhs)) fail("conformal associativity");
            }
            // d-action axioms: (d f)_l = -l f_l on either factor of a product.
            {
                ConformalMap df = f;
                for (auto& [s, v] : df.vals) v = v * (-kL);
                GenValue lhs = apply_twoslot(compose(df, g), kMu, unit);
                GenValue rhs = apply_twoslot(compose(f, g), kMu, unit) * (-kL);
                if (!(lhs == rhs)) fail("d-action on the left factor");

                ConformalMap dg = g;
                for (auto& [s, v] : dg.vals) v = v * (-kL);
                // (f_l (d g))_m = (l - m)(f_l g)_m
                GenValue lhs2 = apply_twoslot(compose(f, dg), kMu, unit);
                GenValue rhs2 = apply_twoslot(compose(f, g), kMu, unit) * (kL - kMu);
                if (!(lhs2 == rhs2)) fail("d-action on the right factor");
            }
        }
    }
    return out;
}

AnsatzBox make_box(const std::vector<Generator>& source, const std::vector<Generator>& target,
                   Parity parity, int ddeg, int ldeg) {
    if (ddeg < 0 || ldeg < 0) throw Error("negative degree bound");
    AnsatzBox box;
    box.source = source;
    box.target = target;
    box.parity = parity;
    box.ddeg = ddeg;
    box.ldeg = ldeg;
    for (int s = 0; s < static_cast<int>(source.size()); ++s)
        for (int t = 0; t < static_cast<int>(target.size()); ++t) {
            if (target[t].parity != (source[s].parity + parity) % 2) continue;
            for (int i = 0; i <= ddeg; ++i)
                for (int j = 0; j <= ldeg; ++j) box.entries.push_back({s, t, i, j});
        }
    return box;
}

ConformalMap box_map(const AnsatzBox& box, const std::vector<Rational>& coords) {
    if (coords.size() != box.entries.size()) throw Error("box_map: coordinate size mismatch");
    ConformalMap f;
    f.parity = box.parity;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        const auto& e = box.entries[k];
        Monomial m = Monomial::var(kVarD, e.dpow) * Monomial::var(kVarL1, e.lpow);
        f.vals[e.src].add(e.tgt, Polynomial::term(coords[k], m));
    }
    return f;
}

std::optional<std::vector<Rational>> vectorize(const AnsatzBox& box, const ConformalMap& f) {
    std::map<std::tuple<int, int, int, int>, size_t> index;
    for (size_t k = 0; k < box.entries.size(); ++k) {
        const auto& e = box.entries[k];
        index[{e.src, e.tgt, e.dpow, e.lpow}] = k;
    }
    std::vector<Rational> v(box.entries.size(), Rational(0));
    for (const auto& [s, val] : f.vals) {
        for (const auto& [t, p] : val.comps) {
            for (const auto& [mono, c] : p.terms()) {
                int dp = mono.degree_of(kVarD), lp = mono.degree_of(kVarL1);
                Monomial expect = Monomial::var(kVarD, dp) * Monomial::var(kVarL1, lp);
                if (!(mono == expect)) return std::nullopt;  // foreign variable
                auto it = index.find({s, t, dp, lp});
                if (it == index.end()) return std::nullopt;
                v[it->second] = c;
            }
        }
    }
    return v;
}

std::string kind_name(GenKind k) {
    switch (k) {
        case GenKind::GDer: return "GDer";
        case GenKind::QDer: return "QDer";
        case GenKind::Centroid: return "Centroid";
        case GenKind::QCentroid: return "QCentroid";
        case GenKind::ZDer: return "ZDer";
    }
    return "?";
}

SolutionSpace MapSolutionSpace::f_space() const {
    SolutionSpace s;
    s.ambient = box.size();
    for (const auto& v : coords.basis)
        s.basis.push_back(std::vector<Rational>(v.begin(), v.begin() + box.size()));
    return s;
}

GenValue derivation_residual(const ConformalSuperalgebra& a, const ConformalMap& d, int i, int j) {
    int theta = d.parity;
    GenValue t0 = apply_conformal(d, kL, a.entry(i, j, kMu));
    GenValue t1 = eval_bracket_at(a, d.value(i, kL), GenValue::unit(j), kL + kMu);
    GenValue t2 = eval_bracket(a, GenValue::unit(i), d.value(j, kL), kVarM);
    GenValue r = t0 - t1;
    return koszul(a.parity(i), theta) > 0 ? r - t2 : r + t2;
}

GenValue module_derivation_residual(const ConformalSuperalgebra& a, const Representation& rep,
                                    const ConformalMap& d, int i, int j) {
    int theta = d.parity;
    GenValue t0 = apply_conformal(d, kL, a.entry(i, j, kMu));
    GenValue t1 = rho_apply(rep, i, kMu, d.value(j, kL));
    Var nu = fresh_var();
    GenValue t2 = rho_apply(rep, j, Polynomial::variable(nu), d.value(i, kL))
                      .substitute(nu, -kD - kL - kMu);
    GenValue r = t0;
    r = koszul(a.parity(i), theta) > 0 ? r - t1 : r + t1;
    int s2 = koszul((a.parity(i) + theta) % 2, a.parity(j));
    return s2 > 0 ? r + t2 : r - t2;
}

std::vector<GenValue> generalized_residuals(const ConformalSuperalgebra& a, GenKind kind,
                                            const ConformalMap& f, const ConformalMap& fp,
                                            const ConformalMap& fpp, int i, int j) {
    int theta = f.parity;
    int s = koszul(theta, a.parity(i));
    auto b1 = [&](const ConformalMap& u) {
        return eval_bracket_at(a, u.value(i, kL), GenValue::unit(j), kL + kMu);
    };
    auto b2 = [&](const ConformalMap& u) {
        GenValue v = eval_bracket(a, GenValue::unit(i), u.value(j, kL), kVarM);
        return s > 0 ? v : -v;
    };
    auto b3 = [&](const ConformalMap& u) { return apply_conformal(u, kL, a.entry(i, j, kMu)); };

    switch (kind) {
        case GenKind::GDer: return {b1(f) + b2(fp) - b3(fpp)};
        case GenKind::QDer: return {b1(f) + b2(f) - b3(fp)};
        case GenKind::Centroid: return {b1(f) - b2(f), b2(f) - b3(f)};
        case GenKind::QCentroid: return {b1(f) - b2(f)};
        case GenKind::ZDer: return {b1(f), b3(f)};
    }
    return {};
}

namespace {

struct LinearSystem {
    // Row key -> (unknown -> coefficient).
    std::map<std::tuple<int, int, Monomial>, std::map<size_t, Rational>> rows;

    void absorb(int resid_id, const GenValue& v, size_t unknown) {
        for (const auto& [tg, p] : v.comps)
            for (const auto& [mono, c] : p.terms()) rows[{resid_id, tg, mono}][unknown] = c;
    }

    SolutionSpace solve(size_t n_unknowns) const {
        RationalMatrix m(rows.size(), n_unknowns);
        size_t r = 0;
        for (const auto& [key, cols] : rows) {
            for (const auto& [u, c] : cols) m.at(r, u) = c;
            ++r;
        }
        return nullspace(m);
    }
};

using ResidualFn = std::function<std::vector<GenValue>(const std::vector<ConformalMap>&)>;

MapSolutionSpace solve_blocks(const std::vector<AnsatzBox>& boxes, const ResidualFn& residuals) {
    size_t total = 0;
    for (const auto& b : boxes) total += b.size();

    LinearSystem sys;
    size_t offset = 0;
    for (size_t bi = 0; bi < boxes.size(); ++bi) {
        for (size_t k = 0; k < boxes[bi].size(); ++k) {
            std::vector<ConformalMap> tuple;
            for (size_t bj = 0; bj < boxes.size(); ++bj) {
                ConformalMap zero;
                zero.parity = boxes[bj].parity;
                tuple.push_back(zero);
            }
            std::vector<Rational> unitv(boxes[bi].size(), Rational(0));
            unitv[k] = 1;
            tuple[bi] = box_map(boxes[bi], unitv);
            std::vector<GenValue> res = residuals(tuple);
            for (size_t r = 0; r < res.size(); ++r)
                sys.absorb(static_cast<int>(r), res[r], offset + k);
        }
        offset += boxes[bi].size();
    }

    MapSolutionSpace out;
    out.box = boxes[0];
    out.coords = sys.solve(total);
    for (const auto& vec : out.coords.basis) {
        size_t off = 0;
        std::vector<ConformalMap> tuple;
        for (const auto& b : boxes) {
            tuple.push_back(box_map(b, std::vector<Rational>(vec.begin() + off,
                                                             vec.begin() + off + b.size())));
            off += b.size();
        }
        // Exact residual verification of every basis element.
        for (const GenValue& r : residuals(tuple))
            if (!r.is_zero()) throw Error("solver basis element fails residual verification");
        out.maps.push_back(tuple[0]);
        if (tuple.size() > 1) out.partners1.push_back(tuple[1]);
        if (tuple.size() > 2) out.partners2.push_back(tuple[2]);
    }
    return out;
}

std::vector<GenValue> all_pair_residuals(const ConformalSuperalgebra& a,
                                         const std::function<std::vector<GenValue>(int, int)>& per) {
    std::vector<GenValue> out;
    int n = static_cast<int>(a.rank());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (GenValue& v : per(i, j)) out.push_back(std::move(v));
    return out;
}

}  // namespace

MapSolutionSpace solve_derivations(const ConformalSuperalgebra& a, Parity parity, int ddeg,
                                   int ldeg) {
    AnsatzBox box = make_box(a.gens, a.gens, parity, ddeg, ldeg);
    return solve_blocks({box}, [&](const std::vector<ConformalMap>& t) {
        return all_pair_residuals(a, [&](int i, int j) {
            return std::vector<GenValue>{derivation_residual(a, t[0], i, j)};
        });
    });
}

MapSolutionSpace inner_space(const ConformalSuperalgebra& a, Parity parity, int ddeg, int ldeg) {
    AnsatzBox box = make_box(a.gens, a.gens, parity, ddeg, ldeg);
    MapSolutionSpace out;
    out.box = box;
    out.coords.ambient = box.size();

    std::vector<std::vector<Rational>> vectors;
    for (int g = 0; g < static_cast<int>(a.rank()); ++g) {
        if (a.parity(g) != parity) continue;
        // d^k r contributes (-l)^k, so the lambda bound governs how many
        // powers can still land inside the box; vectorize() filters exactly.
        for (int k = 0; k <= ddeg + ldeg + 1; ++k) {
            // d^{d^k g}: x -> (-l)^k [g_l x]
            ConformalMap f;
            f.parity = parity;
            f.name = "d^{d^" + std::to_string(k) + " " + a.gens[g].name + "}";
            Polynomial weight = Polynomial(1);
            for (int p = 0; p < k; ++p) weight *= -kL;
            for (int x = 0; x < static_cast<int>(a.rank()); ++x) {
                GenValue v = eval_bracket(a, GenValue::unit(g), GenValue::unit(x), kVarL1) * weight;
                if (!v.is_zero()) f.vals[x] = v;
            }
            auto coords = vectorize(box, f);
            if (!coords) continue;  // falls outside the degree box
            for (int i = 0; i < static_cast<int>(a.rank()); ++i)
                for (int j = 0; j < static_cast<int>(a.rank()); ++j)
                    if (!derivation_residual(a, f, i, j).is_zero())
                        throw Error("inner map fails the derivation equation");
            vectors.push_back(*coords);
        }
    }
    // Canonical independent spanning set.
    RationalMatrix m(vectors.size(), box.size());
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = 0; j < box.size(); ++j) m.at(i, j) = vectors[i][j];
    std::vector<size_t> pivots = rref(m);
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Rational> v(box.size());
        for (size_t j = 0; j < box.size(); ++j) v[j] = m.at(i, j);
        out.maps.push_back(box_map(box, v));
        out.coords.basis.push_back(std::move(v));
    }
    return out;
}

MapSolutionSpace solve_module_derivations(const ConformalSuperalgebra& a, const Representation& rep,
                                          Parity parity, int ddeg, int ldeg) {
    RepReport rr = check_representation(a, rep);
    if (!rr.all_ok()) throw Error("solve_module_derivations: representation invalid");
    AnsatzBox box = make_box(a.gens, rep.module_gens, parity, ddeg, ldeg);
    return solve_blocks({box}, [&](const std::vector<ConformalMap>& t) {
        return all_pair_residuals(a, [&](int i, int j) {
            return std::vector<GenValue>{module_derivation_residual(a, rep, t[0], i, j)};
        });
    });
}

ConformalMap module_inner_derivation(const ConformalSuperalgebra& a, const Representation& rep,
                                     const GenValue& m) {
    auto pm = value_parity(m, rep.module_gens);
    if (!pm) throw Error("module_inner_derivation: element is not parity-homogeneous");
    ConformalMap f;
    f.parity = *pm;
    for (int r = 0; r < static_cast<int>(a.rank()); ++r) {
        Var nu = fresh_var();
        GenValue v = rho_apply(rep, r, Polynomial::variable(nu), m).substitute(nu, -kD - kL);
        if (koszul(a.parity(r), *pm) > 0) v = -v;
        if (!v.is_zero()) f.vals[r] = v;
    }
    return f;
}

MapSolutionSpace solve_generalized(const ConformalSuperalgebra& a, GenKind kind, Parity parity,
                                   int ddeg, int ldeg) {
    AnsatzBox box = make_box(a.gens, a.gens, parity, ddeg, ldeg);
    std::vector<AnsatzBox> boxes{box};
    if (kind == GenKind::QDer) boxes.push_back(box);
    if (kind == GenKind::GDer) {
        boxes.push_back(box);
        boxes.push_back(box);
    }
    return solve_blocks(boxes, [&, kind](const std::vector<ConformalMap>& t) {
        const ConformalMap& f = t[0];
        const ConformalMap& fp = t.size() > 1 ? t[1] : t[0];
        const ConformalMap& fpp = t.size() > 2 ? t[2] : (t.size() > 1 ? t[1] : t[0]);
        return all_pair_residuals(
            a, [&](int i, int j) { return generalized_residuals(a, kind, f, fp, fpp, i, j); });
    });
}

SemidirectDerivationReport analyze_semidirect_derivation(const ConformalSuperalgebra& a,
                                                         const Representation& rep,
                                                         const ConformalSuperalgebra& sd,
                                                         const ConformalMap& d) {
    int na = static_cast<int>(a.rank());
    int nm = static_cast<int>(rep.module_gens.size());
    if (static_cast<int>(sd.rank()) != na + nm)
        throw Error("analyze_semidirect_derivation: algebra/module sizes do not match");
    int theta = d.parity;

    ConformalMap d11, d12, d21, d22;
    d11.parity = d12.parity = d21.parity = d22.parity = theta;
    for (const auto& [g, v] : d.vals) {
        for (const auto& [k, p] : v.comps) {
            bool src_alg = g < na, tgt_alg = k < na;
            int src = src_alg ? g : g - na;
            int tgt = tgt_alg ? k : k - na;
            ConformalMap& block = src_alg ? (tgt_alg ? d11 : d21) : (tgt_alg ? d12 : d22);
            block.vals[src].add(tgt, p);
        }
    }

    SemidirectDerivationReport out;
    auto note = [&](const std::string& s) { out.witnesses.push_back(s); };

    out.c1 = true;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            if (!derivation_residual(a, d11, i, j).is_zero()) {
                out.c1 = false;
                note("condition (1) fails at (" + a.gens[i].name + "," + a.gens[j].name + ")");
            }

    out.c2a = true;
    for (int r = 0; r < na; ++r)
        for (int m = 0; m < nm; ++m) {
            GenValue lhs = apply_conformal(d12, kL, rho_apply(rep, r, kMu, GenValue::unit(m)));
            GenValue rhs = eval_bracket(a, GenValue::unit(r), d12.value(m, kL), kVarM);
            GenValue resid = koszul(theta, a.parity(r)) > 0 ? lhs - rhs : lhs + rhs;
            if (!resid.is_zero()) {
                out.c2a = false;
                note("condition (2a) fails at (" + a.gens[r].name + "," +
                     rep.module_gens[m].name + ")");
            }
        }

    out.c2b = true;
    for (int m = 0; m < nm; ++m)
        for (int m2 = 0; m2 < nm; ++m2) {
            Var nu = fresh_var();
            GenValue lhs = rho_apply_element(rep, d12.value(m, kL), Polynomial::variable(nu),
                                             GenValue::unit(m2))
                               .substitute(nu, kL + kMu);
            Var nu2 = fresh_var();
            GenValue rhs = rho_apply_element(rep, d12.value(m2, kL), Polynomial::variable(nu2),
                                             GenValue::unit(m))
                               .substitute(nu2, -kD - kMu);
            int s = koszul(rep.module_gens[m].parity, rep.module_gens[m2].parity);
            GenValue resid = s > 0 ? lhs - rhs : lhs + rhs;
            if (!resid.is_zero()) {
                out.c2b = false;
                note("condition (2b) fails at (" + rep.module_gens[m].name + "," +
                     rep.module_gens[m2].name + ")");
            }
        }

    out.c3 = true;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            if (!module_derivation_residual(a, rep, d21, i, j).is_zero()) {
                out.c3 = false;
                note("condition (3) fails at (" + a.gens[i].name + "," + a.gens[j].name + ")");
            }

    out.c4 = true;
    for (int r = 0; r < na; ++r)
        for (int m = 0; m < nm; ++m) {
            GenValue t1 = apply_conformal(d22, kL, rho_apply(rep, r, kMu, GenValue::unit(m)));
            Var nu = fresh_var();
            GenValue t2 = rho_apply_element(rep, d11.value(r, kL), Polynomial::variable(nu),
                                            GenValue::unit(m))
                              .substitute(nu, kL + kMu);
            GenValue t3 = rho_apply(rep, r, kMu, apply_conformal(d22, kL, GenValue::unit(m)));
            GenValue resid = t1 - t2;
            resid = koszul(theta, a.parity(r)) > 0 ? resid - t3 : resid + t3;
            if (!resid.is_zero()) {
                out.c4 = false;
                note("condition (4) fails at (" + a.gens[r].name + "," +
                     rep.module_gens[m].name + ")");
            }
        }

    out.is_derivation = true;
    for (int i = 0; i < na + nm; ++i)
        for (int j = 0; j < na + nm; ++j)
            if (!derivation_residual(sd, d, i, j).is_zero()) {
                out.is_derivation = false;
                break;
            }
    return out;
}

}  // namespace lcs
