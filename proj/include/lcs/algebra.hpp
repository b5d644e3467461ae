#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/exactla.hpp"
#include "lcs/poly.hpp"

namespace lcs {

using Parity = int;  // 0 even, 1 odd
inline constexpr Parity kEven = 0;
inline constexpr Parity kOdd = 1;

inline int koszul(Parity a, Parity b) { return (a & b & 1) ? -1 : 1; }

struct Generator {
    std::string name;
    Parity parity = kEven;
};

/// A finite generator-weighted sum: map from generator index to polynomial
/// coefficient. Serves as Element (coefficients in d only), LambdaValue
/// (coefficients in d and lambda slots) and module values alike.
struct GenValue {
    std::map<int, Polynomial> comps;

    bool is_zero() const;
    GenValue operator+(const GenValue& o) const;
    GenValue operator-(const GenValue& o) const;
    GenValue operator-() const;
    GenValue operator*(const Polynomial& p) const;
    bool operator==(const GenValue& o) const;
    GenValue substitute(const std::vector<std::pair<Var, Polynomial>>& assign) const;
    GenValue substitute(Var v, const Polynomial& value) const;
    bool uses_var(Var v) const;
    void add(int gen, const Polynomial& p);

    static GenValue unit(int gen) {
        GenValue v;
        v.comps.emplace(gen, Polynomial(1));
        return v;
    }
};

GenValue operator*(const Polynomial& p, const GenValue& v);

std::string value_str(const GenValue& v, const std::vector<Generator>& gens);

/// Parity of a homogeneous value; nullopt for 0 or mixed-parity values.
std::optional<Parity> value_parity(const GenValue& v, const std::vector<Generator>& gens);

struct AxiomReport {
    bool parity_ok = true;
    bool skew_ok = true;
    bool jacobi_ok = true;
    std::vector<std::string> witnesses;
    bool all_ok() const { return parity_ok && skew_ok && jacobi_ok; }
};

/// A finitely generated Lie conformal superalgebra: free C[d]-module basis
/// with parities plus a lambda-bracket table. Stored table entries use slot
/// variable l1; missing (j,i) entries are derived by skew-symmetry.
class ConformalSuperalgebra {
  public:
    std::string name;
    std::vector<Generator> gens;

    size_t rank() const { return gens.size(); }
    Parity parity(int i) const { return gens[i].parity; }
    int index_of(const std::string& gname) const;  // -1 if absent

    void set_bracket(int i, int j, GenValue value);
    bool has_stored(int i, int j) const { return table_.count({i, j}) > 0; }
    const std::map<std::pair<int, int>, GenValue>& stored() const { return table_; }

    /// Effective bracket [g_i slot g_j]; derives unstored orientations from
    /// skew-symmetry. `slot` may be any polynomial in disjoint variables.
    GenValue entry(int i, int j, const Polynomial& slot) const;
    GenValue entry(int i, int j, Var slot) const { return entry(i, j, Polynomial::variable(slot)); }

    /// Cross-checks doubly stored orientations against skew-symmetry and
    /// validates that every referenced generator exists. Throws on failure.
    void validate_table() const;

  private:
    std::map<std::pair<int, int>, GenValue> table_;
};

/// Bilinear lambda-bracket evaluation. First argument coefficients get
/// d -> -slot, second argument d -> d+slot, foreign lambda slots pass
/// through. `slot` must be fresh for both arguments.
GenValue eval_bracket(const ConformalSuperalgebra& a, const GenValue& x, const GenValue& y,
                      Var slot);

/// [x_nu y] evaluated at a fresh slot nu, then nu -> target at top level.
/// This is the rule for slot expressions like lambda+mu or -d-lambda.
GenValue eval_bracket_at(const ConformalSuperalgebra& a, const GenValue& x, const GenValue& y,
                         const Polynomial& target);

AxiomReport check_axioms(const ConformalSuperalgebra& a);

/// phi maps each generator of `from` to an Element of `to` (coefficients in
/// d only), extended d-linearly. Throws on parity violation.
bool check_homomorphism(const std::map<int, GenValue>& phi, const ConformalSuperalgebra& from,
                        const ConformalSuperalgebra& to);

/// A finite-dimensional Lie superalgebra by basis and structure constants.
/// Missing orientations derive from super-antisymmetry.
class LieSuperalgebraData {
  public:
    std::string name;
    std::vector<Generator> basis;

    void set_bracket(int i, int j, std::map<int, Rational> value);
    std::map<int, Rational> bracket(int i, int j) const;
    const std::map<std::pair<int, int>, std::map<int, Rational>>& stored() const { return table_; }

    /// Super-antisymmetry cross-check, parity additivity and the super
    /// Jacobi identity on all basis triples. Throws with a witness message.
    void validate() const;

  private:
    std::map<std::pair<int, int>, std::map<int, Rational>> table_;
};

/// Finite-dimensional module over a Lie superalgebra: action matrices on a
/// graded basis.
struct FiniteLieRep {
    std::vector<Generator> basis;
    // (lie basis index, module basis index) -> module coefficients
    std::map<std::pair<int, int>, std::map<int, Rational>> action;

    std::map<int, Rational> apply(int lie_gen, int mod_gen) const;
    void validate(const LieSuperalgebraData& l) const;
};

/// Current Lie conformal superalgebra Cur g: one conformal generator per Lie
/// basis element, [a_l b] = [a,b] with lambda-independent table.
ConformalSuperalgebra current_algebra(const LieSuperalgebraData& l);

/// A conformal module given by the action table rho(alg gen) on module
/// generators, stored with slot l1.
struct Representation {
    std::vector<Generator> module_gens;
    std::map<std::pair<int, int>, GenValue> table;

    GenValue action(int alg_gen, int mod_gen, const Polynomial& slot) const;
};

/// rho(a)_slot(x) for a a single algebra generator and x a module value;
/// conformal in x (coefficients d -> d+slot).
GenValue rho_apply(const Representation& rep, int alg_gen, const Polynomial& slot,
                   const GenValue& x);

/// rho(y)_slot(x) for y an algebra-valued polynomial; antilinear in y's
/// coefficients (d -> -slot), per rho(da)_l = -l rho(a)_l.
GenValue rho_apply_element(const Representation& rep, const GenValue& y, const Polynomial& slot,
                           const GenValue& x);

Representation adjoint_rep(const ConformalSuperalgebra& a);

struct RepReport {
    bool parity_ok = true;
    bool commutator_ok = true;
    bool sesqui_ok = true;
    std::vector<std::string> witnesses;
    bool all_ok() const { return parity_ok && commutator_ok && sesqui_ok; }
};

RepReport check_representation(const ConformalSuperalgebra& a, const Representation& rep);

/// Semidirect product A x M. Generator order: A's generators then module
/// generators (renamed with suffix "_m" on name collision). Throws if the
/// representation check fails.
ConformalSuperalgebra semidirect(const ConformalSuperalgebra& a, const Representation& rep);

/// Builds Cur(g x M) and Cur g x (C[d] (x) M) and compares bracket tables
/// under the canonical identification.
bool check_cur_embedding(const LieSuperalgebraData& l, const FiniteLieRep& pi);

/// Conformal module over Cur g induced by a finite-dimensional g-module.
Representation cur_module(const LieSuperalgebraData& l, const FiniteLieRep& pi);

struct CenterSpace {
    int ddeg = 0;
    SolutionSpace coords;
    std::vector<GenValue> elements;
};

/// Basis of {r : [r_l g] = 0 for all generators g} with coefficient d-degree
/// bounded by ddeg.
CenterSpace center(const ConformalSuperalgebra& a, int ddeg);

}  // namespace lcs
