#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcs/poly.hpp"

using namespace lcs;

namespace {

Polynomial d() { return Polynomial::variable(kVarD); }
Polynomial l() { return Polynomial::variable(kVarL1); }

Polynomial random_poly(std::mt19937_64& rng, int deg, const std::vector<Var>& vars) {
    Polynomial p;
    for (int t = 0; t < 6; ++t) {
        Monomial m;
        for (Var v : vars) m = m * Monomial::var(v, static_cast<int>(rng() % (deg + 1)));
        int num = static_cast<int>(rng() % 9) - 4;
        p += Polynomial::term(Rational(num), m);
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic on the spec examples") {
    // (d+2l) + (d+l) = 2d+3l
    Polynomial a = d() + 2 * l();
    Polynomial b = d() + l();
    CHECK(a + b == 2 * d() + 3 * l());

    // (d+2l) * 0 = 0
    CHECK((a * Polynomial()).is_zero());

    // (d+l)^2 = d^2 + 2dl + l^2
    Polynomial sq = b * b;
    CHECK(sq == Polynomial::variable(kVarD, 2) + 2 * (d() * l()) + Polynomial::variable(kVarL1, 2));
}

TEST_CASE("substitution examples") {
    Polynomial p = d() + 2 * l();
    CHECK(p.substitute(kVarL1, -d() - l()) == -d() - 2 * l());

    Polynomial p2 = Polynomial::variable(kVarD, 2);
    CHECK(p2.substitute(kVarD, d() + l()) ==
          Polynomial::variable(kVarD, 2) + 2 * (d() * l()) + Polynomial::variable(kVarL1, 2));

    Polynomial p3 = d() + Rational(3, 2) * l();
    CHECK(p3.substitute(kVarL1, Polynomial()) == d());
}

TEST_CASE("is_zero") {
    CHECK(Polynomial().is_zero());
    CHECK(((d() + l()) - (l() + d())).is_zero());
    CHECK(!(d() - l()).is_zero());
}

TEST_CASE("canonical form: p - p is the empty mapping") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 3, {kVarD, kVarL1, kVarM});
        CHECK((p - p).terms().empty());
    }
}

TEST_CASE("substitution round trip with a fresh slot") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 3, {kVarD, kVarL1});
        Var mu = fresh_var();
        Polynomial q = p.substitute(kVarL1, Polynomial::variable(mu));
        CHECK(q.substitute(mu, Polynomial::variable(kVarL1)) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, 2, {kVarD, kVarL1, kVarM});
        Polynomial q = random_poly(rng, 2, {kVarD, kVarL1, kVarM});
        std::vector<std::pair<Var, Polynomial>> assign{
            {kVarL1, random_poly(rng, 1, {kVarD, kVarM})},
            {kVarD, random_poly(rng, 1, {kVarM})}};
        CHECK((p * q).substitute(assign) == p.substitute(assign) * q.substitute(assign));
        CHECK((p + q).substitute(assign) == p.substitute(assign) + q.substitute(assign));
    }
}

TEST_CASE("simultaneous substitution does not rescan replacements") {
    // l1 -> l2, l2 -> l1 swaps the two variables.
    Polynomial p = Polynomial::variable(kVarL1) + 2 * Polynomial::variable(kVarL2);
    Polynomial swapped = p.substitute({{kVarL1, Polynomial::variable(kVarL2)},
                                       {kVarL2, Polynomial::variable(kVarL1)}});
    CHECK(swapped == Polynomial::variable(kVarL2) + 2 * Polynomial::variable(kVarL1));
}

TEST_CASE("coefficient extraction in t") {
    Polynomial p = d() + Polynomial::variable(kVarT) * (d() + l()) +
                   Polynomial::variable(kVarT, 2) * l();
    CHECK(p.coefficient_of(kVarT, 0) == d());
    CHECK(p.coefficient_of(kVarT, 1) == d() + l());
    CHECK(p.coefficient_of(kVarT, 2) == l());
    CHECK(p.coefficient_of(kVarT, 3).is_zero());
}

TEST_CASE("rendering") {
    Polynomial p = d() + Rational(3, 2) * l();
    CHECK(p.str() == "d + 3/2*l1");
    CHECK(Polynomial().str() == "0");
    CHECK((-d()).str() == "-d");
}
