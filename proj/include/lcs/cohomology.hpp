#pragma once

#include <random>

#include "lcs/confmap.hpp"

namespace lcs {

/// An n-cochain with module coefficients. Values are stored on canonical
/// (non-decreasing) generator tuples only, as polynomials in d and the slot
/// variables l1..ln; evaluation derives every other tuple through
/// skew-symmetry and extends by conformal antilinearity (d -> -slot_i in
/// argument i's coefficients).
struct Cochain {
    int arity = 0;
    Parity parity = kEven;
    std::map<std::vector<int>, GenValue> values;

    bool is_zero() const;
};

/// Slot variable for cochain position i (0-based): l1..l4.
Var cochain_slot(int i);

/// Multilinear cochain evaluation. `args` are algebra-valued; `slots` may be
/// arbitrary polynomials (sums of slots, -d-l, ...).
GenValue eval_cochain(const Cochain& c, const std::vector<Generator>& alg_gens,
                      const std::vector<GenValue>& args, const std::vector<Polynomial>& slots);

/// Repeated-generator self-consistency of the stored values.
bool check_cochain(const Cochain& c, const std::vector<Generator>& alg_gens);

/// The cochain differential with coefficients in the module of `rep`.
/// Output arity is c.arity + 1 (at most 4 slot variables are available).
Cochain differential(const ConformalSuperalgebra& a, const Representation& rep, const Cochain& c);

/// A conformal map reinterpreted as a 1-cochain (same stored values; the
/// antilinear extension rule applies on evaluation).
Cochain as_one_cochain(const ConformalMap& f);

/// Random cochain with adjoint coefficients, symmetrized so that
/// check_cochain holds. Coefficient degrees in d and each slot are <= deg.
Cochain random_cochain(const ConformalSuperalgebra& a, int arity, Parity parity, int deg,
                       std::mt19937_64& rng);

struct NijenhuisReport {
    bool ok = true;
    /// Per ordered generator pair: the deformed bracket [a_l b]_N.
    std::map<std::pair<int, int>, GenValue> nbracket;
    /// Residuals of the defining identity, reduced at d = -l1-m.
    std::map<std::pair<int, int>, GenValue> residuals;
    std::vector<std::string> witnesses;
};

/// [a_l b]_N = [(f_l a)_l b] + [a_l f_{-d}(b)] - f_{-d}([a_l b]), with every
/// -d realized by a fresh slot substituted at top level and f extended as a
/// 1-cochain.
GenValue nijenhuis_bracket(const ConformalSuperalgebra& a, const ConformalMap& f, int i, int j);

/// Residual of [(f_l a)_l (f_m b)] = f_{l+m}([a_l b]_N) on every generator
/// pair, taken in the reduced sense (coefficients evaluated at d = -l-m,
/// i.e. modulo (d+l+m)). The specialization m -> -d-l of the full residual
/// is then exact, which is what the deformation theory consumes.
NijenhuisReport nijenhuis_residual(const ConformalSuperalgebra& a, const ConformalMap& f);

/// [(f_l a)_l f_{-d}(b)] = f_{-d}([a_l b]_N), exact; holds whenever the
/// reduced residual vanishes.
bool check_eq_4_10(const ConformalSuperalgebra& a, const ConformalMap& f);

struct DeformationReport {
    bool skew_ok = true;
    bool cocycle_ok = true;
    bool defor1_ok = true;  // Jacobi coefficient at t^1
    bool defor2_ok = true;  // Jacobi coefficient at t^2
    bool nijenhuis_ok = true;
    bool n2_ok = true;
    bool intertwine_ok = true;
    bool eq410_ok = true;
    bool trivial_ok = false;
    std::vector<std::string> witnesses;

    bool jacobi_t_ok() const { return defor1_ok && defor2_ok; }
};

/// Checks the algebra structure deformed by an even 2-cochain psi:
/// skew-symmetry of the t-bracket, the cocycle condition on psi, and the
/// Jacobi coefficients at t^1 and t^2.
DeformationReport deformation_check(const ConformalSuperalgebra& a, const Cochain& psi);

/// Deformed bracket table entry [g_l h] + t psi_{l,-d-l}(g,h).
GenValue deformed_entry(const ConformalSuperalgebra& a, const Cochain& psi, int i, int j);

/// For a Nijenhuis operator f: psi := d^f generates a deformation and
/// T_t = id + t f intertwines it with the original bracket, exactly in
/// (d, l, t).
DeformationReport check_trivial_deformation(const ConformalSuperalgebra& a, const ConformalMap& f);

}  // namespace lcs
