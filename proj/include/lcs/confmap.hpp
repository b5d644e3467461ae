#pragma once

#include <functional>
#include <random>

#include "lcs/algebra.hpp"

namespace lcs {

/// A conformal linear map between free graded C[d]-modules, given by its
/// values on source generators. Values are stored with slot variable l1 and
/// extend by f_l(p(d) g) = p(d+l) f_l(g).
struct ConformalMap {
    std::string name;
    Parity parity = kEven;
    std::map<int, GenValue> vals;

    GenValue value(int src, const Polynomial& slot) const;
    bool is_zero() const;
};

/// f_slot(x) with the conformal extension rule; `slot` may be a polynomial
/// (fresh-slot evaluation followed by a top-level substitution gives the
/// same result, so no fresh variable is needed here).
GenValue apply_conformal(const ConformalMap& f, const Polynomial& slot, const GenValue& x);

/// f_slot(x) with the 1-cochain extension rule (argument coefficients get
/// d -> -slot). With slot = -d this is the d-linear operator f_{-d}.
GenValue apply_antilinear(const ConformalMap& f, const Polynomial& slot, const GenValue& x);

/// The d-linear operator x -> f_nu(x)|nu -> -d (cochain extension).
GenValue apply_minus_d(const ConformalMap& f, const GenValue& x);

/// ad r as a conformal map; r must be parity-homogeneous.
ConformalMap inner_map(const ConformalSuperalgebra& a, const GenValue& r);

ConformalMap identity_map(const std::vector<Generator>& gens);

/// Map with two slot variables (l1, m): compositions and gc(M) brackets.
/// The second slot m is the total slot; values extend conformally in m.
struct TwoSlotMap {
    Parity parity = kEven;
    std::map<int, GenValue> vals;
};

/// Composite (f_l1 g) materialized with total slot m: value on x is
/// f_l1(g_{m-l1}(x)).
TwoSlotMap compose(const ConformalMap& f, const ConformalMap& g);

/// [f_l1 g]_m per the gc(M) bracket: f_l1 g_{m-l1} - (-1)^{|f||g|} g_{m-l1} f_l1.
TwoSlotMap cend_bracket(const ConformalMap& f, const ConformalMap& g);

/// Applies a two-slot map at total slot `total` (substituted for m); the
/// inner slot l1 stays as a parameter.
GenValue apply_twoslot(const TwoSlotMap& t, const Polynomial& total, const GenValue& x);

struct CendReport {
    bool ok = true;
    int trials = 0;
    std::vector<std::string> witnesses;
};

/// Random verification of conformal associativity, the d-action axioms and
/// the three composition identities for maps with shifted slots.
CendReport check_cend_axioms(int rank, int trials, uint64_t seed);

/// Degree box of unknown map coefficients: source generator, target
/// generator of matching parity, d-power <= ddeg, l-power <= ldeg, ordered
/// (generator, d-power, l-power) lexicographically.
struct AnsatzBox {
    std::vector<Generator> source;
    std::vector<Generator> target;
    Parity parity = kEven;
    int ddeg = 0, ldeg = 0;
    struct Entry {
        int src, tgt, dpow, lpow;
    };
    std::vector<Entry> entries;

    size_t size() const { return entries.size(); }
};

AnsatzBox make_box(const std::vector<Generator>& source, const std::vector<Generator>& target,
                   Parity parity, int ddeg, int ldeg);

ConformalMap box_map(const AnsatzBox& box, const std::vector<Rational>& coords);

/// Coordinates of a map in a box; nullopt if a value falls outside it.
std::optional<std::vector<Rational>> vectorize(const AnsatzBox& box, const ConformalMap& f);

enum class GenKind { GDer, QDer, Centroid, QCentroid, ZDer };

std::string kind_name(GenKind k);

/// Solver output: an exact basis of maps (with witness partners for GDer
/// and QDer) plus the raw coordinate space for membership arithmetic.
struct MapSolutionSpace {
    AnsatzBox box;
    SolutionSpace coords;  // over the concatenated unknown blocks
    std::vector<ConformalMap> maps;
    std::vector<ConformalMap> partners1;  // QDer f', GDer f'
    std::vector<ConformalMap> partners2;  // GDer f''

    size_t dim() const { return maps.size(); }
    /// Projection of `coords` to the primary f block.
    SolutionSpace f_space() const;
};

/// Residual of the conformal-derivation equation on one generator pair,
/// polynomial in (d, l1, m); zero for derivations.
GenValue derivation_residual(const ConformalSuperalgebra& a, const ConformalMap& d, int i, int j);

/// Residual of the module-derivation equation for d : A -> M.
GenValue module_derivation_residual(const ConformalSuperalgebra& a, const Representation& rep,
                                    const ConformalMap& d, int i, int j);

/// Residuals of the generalized-derivation family on one pair. GDer reads
/// the triple (f, fp, fpp); QDer the pair (f, fp) with fp the right-hand
/// witness; Centroid, QCentroid and ZDer read f alone. Centroid and ZDer
/// impose two equations; the rest impose one.
std::vector<GenValue> generalized_residuals(const ConformalSuperalgebra& a, GenKind kind,
                                            const ConformalMap& f, const ConformalMap& fp,
                                            const ConformalMap& fpp, int i, int j);

MapSolutionSpace solve_derivations(const ConformalSuperalgebra& a, Parity parity, int ddeg,
                                   int ldeg);

/// Span of the inner derivations d^{d^k r} whose values fit the degree box.
MapSolutionSpace inner_space(const ConformalSuperalgebra& a, Parity parity, int ddeg, int ldeg);

MapSolutionSpace solve_module_derivations(const ConformalSuperalgebra& a, const Representation& rep,
                                          Parity parity, int ddeg, int ldeg);

/// d^m per the inner module derivation formula; m must be homogeneous.
ConformalMap module_inner_derivation(const ConformalSuperalgebra& a, const Representation& rep,
                                     const GenValue& m);

MapSolutionSpace solve_generalized(const ConformalSuperalgebra& a, GenKind kind, Parity parity,
                                   int ddeg, int ldeg);

struct SemidirectDerivationReport {
    bool c1 = false, c2a = false, c2b = false, c3 = false, c4 = false;
    bool is_derivation = false;
    std::vector<std::string> witnesses;
    bool conditions() const { return c1 && c2a && c2b && c3 && c4; }
};

/// Decomposes a conformal map on A x M into blocks by generator origin and
/// evaluates the four block conditions plus the direct derivation equation.
SemidirectDerivationReport analyze_semidirect_derivation(const ConformalSuperalgebra& a,
                                                         const Representation& rep,
                                                         const ConformalSuperalgebra& sd,
                                                         const ConformalMap& d);

ConformalMap random_conformal_map(const std::vector<Generator>& source,
                                  const std::vector<Generator>& target, Parity parity, int ddeg,
                                  int ldeg, std::mt19937_64& rng);

Rational random_small_rational(std::mt19937_64& rng);

}  // namespace lcs
