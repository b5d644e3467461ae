#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcs {

/// Exact rational scalar. Stored in lowest terms with positive denominator
/// (cpp_rational normalizes on construction).
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formal variables are small integer ids. Ids 0..7 form the fixed universe
/// shared with the DSL; ids >= kFirstFreshVar are transient slots handed out
/// by fresh_var() and never appear in stored data.
using Var = int;

inline constexpr Var kVarD = 0;   // the translation generator, printed "d"
inline constexpr Var kVarL1 = 1;  // lambda_1, printed "l1" (alias "l")
inline constexpr Var kVarL2 = 2;
inline constexpr Var kVarL3 = 3;
inline constexpr Var kVarL4 = 4;
inline constexpr Var kVarM = 5;  // mu, printed "m"
inline constexpr Var kVarG = 6;  // gamma, printed "g"
inline constexpr Var kVarT = 7;  // deformation parameter, printed "t"
inline constexpr Var kFirstFreshVar = 8;

std::string var_name(Var v);

/// Allocates a transient slot variable, distinct from every variable that
/// has been handed out so far in this process.
Var fresh_var();

/// Exponent vector keyed by Var id, trailing zeros trimmed.
struct Monomial {
    std::vector<uint16_t> exp;

    Monomial() = default;
    explicit Monomial(std::vector<uint16_t> e) : exp(std::move(e)) { trim(); }
    static Monomial one() { return {}; }
    static Monomial var(Var v, int power = 1);

    int degree_of(Var v) const {
        return v >= 0 && v < static_cast<int>(exp.size()) ? exp[v] : 0;
    }
    int total_degree() const;
    bool is_one() const { return exp.empty(); }
    void trim();

    Monomial operator*(const Monomial& o) const;
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Multivariate polynomial over Rational. Canonical form: no zero
/// coefficients stored; std::map keys give a deterministic term order.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: implicit scalar lift intended
    Polynomial(long n) : Polynomial(Rational(n)) {}
    Polynomial(int n) : Polynomial(Rational(n)) {}
    static Polynomial variable(Var v, int power = 1);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree_of(Var v) const;
    int total_degree() const;
    bool uses_var(Var v) const { return degree_of(v) > 0; }
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Simultaneous substitution of variables by polynomials. A ring
    /// homomorphism: occurrences inside replacement values are not rescanned.
    Polynomial substitute(const std::vector<std::pair<Var, Polynomial>>& assign) const;
    Polynomial substitute(Var v, const Polynomial& value) const;

    /// Extracts the coefficient of t^k in `v`, as a polynomial in the
    /// remaining variables.
    Polynomial coefficient_of(Var v, int k) const;

    /// DSL-syntax rendering, e.g. "d^2 + 3/2*d*l1".
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace lcs
