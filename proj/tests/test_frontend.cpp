#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcs/builtins.hpp"
#include "lcs/dsl.hpp"

using namespace lcs;

namespace {
const char* kNsSource = R"(
algebra NS {
  generator L even; generator G odd;
  bracket [L,L] = (d + 2*l) L;
  bracket [L,G] = (d + 3/2*l) G;
  bracket [G,G] = L;
}
)";
}

TEST_CASE("parsing the NS source") {
    Catalog cat = parse_source(kNsSource);
    REQUIRE(cat.algebras.count("NS"));
    const ConformalSuperalgebra& a = cat.algebras.at("NS");
    CHECK(a.rank() == 2);
    CHECK(check_axioms(a).all_ok());

    ConformalSuperalgebra builtin = builtin_ns();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(a.entry(i, j, Polynomial::variable(kVarL1)) ==
                  builtin.entry(i, j, Polynomial::variable(kVarL1)));
}

TEST_CASE("empty file gives an empty catalog") {
    CHECK(parse_source("").empty());
    CHECK(parse_source("// just a comment\n").empty());
}

TEST_CASE("parity error carries a position") {
    const char* bad = R"(
algebra Bad {
  generator L even; generator G odd;
  bracket [L,L] = (d + 2*l) G;
  bracket [G,G] = 0;
}
)";
    try {
        parse_source(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("parity") != std::string::npos);
    }
}

TEST_CASE("syntax and semantic diagnostics") {
    CHECK_THROWS_AS(parse_source("algebra {"), ParseError);
    CHECK_THROWS_AS(parse_source("algebra A { generator x even; bracket [x,z] = 0; }"),
                    ParseError);
    CHECK_THROWS_AS(parse_source("algebra A { generator x even; generator x odd; }"), ParseError);
    // duplicate declaration name
    CHECK_THROWS_AS(parse_source("algebra A { } algebra A { }"), ParseError);
    // odd diagonal must be explicit
    CHECK_THROWS_AS(parse_source("algebra A { generator y odd; }"), ParseError);
    // even diagonal may be omitted
    CHECK(parse_source("algebra A { generator x even; }").algebras.count("A") == 1);
}

TEST_CASE("maps, homs, reps and cochains parse") {
    std::string src = std::string(kNsSource) + R"(
rep AD on NS {
  generator ML even; generator MG odd;
  action L(ML) = (d + 2*l) ML;
  action L(MG) = (d + 3/2*l) MG;
  action G(ML) = (1/2*d + 3/2*l) MG;
  action G(MG) = ML;
}
map adL even on NS {
  adL(L) = (d + 2*l) L;
  adL(G) = (d + 3/2*l) G;
}
hom flip from NS to NS {
  flip(L) = L;
  flip(G) = -G;
}
cochain psi arity 2 even on NS {
  psi(L,L) = (l1 - l2) L;
}
)";
    Catalog cat = parse_source(src);
    const auto& a = cat.algebras.at("NS");

    REQUIRE(cat.reps.count("AD"));
    CHECK(check_representation(a, cat.reps.at("AD").rep).all_ok());

    REQUIRE(cat.maps.count("adL"));
    const ConformalMap& m = cat.maps.at("adL").map;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(derivation_residual(a, m, i, j).is_zero());

    REQUIRE(cat.homs.count("flip"));
    CHECK(check_homomorphism(cat.homs.at("flip").phi, a, a));

    REQUIRE(cat.cochains.count("psi"));
    CHECK(check_cochain(cat.cochains.at("psi").cochain, a.gens));
}

TEST_CASE("cochain skew-consistency is validated at parse time") {
    std::string src = std::string(kNsSource) + R"(
cochain bad arity 2 even on NS {
  bad(L,L) = (l1 + l2) L;
}
)";
    CHECK_THROWS_AS(parse_source(src), ParseError);
}

TEST_CASE("round trip: parse(render(catalog)) preserves every builtin") {
    Catalog cat;
    for (const auto& [name, desc] : builtin_catalog()) {
        ConformalSuperalgebra a = resolve_builtin_algebra(name);
        a.name = name;
        cat.algebras.emplace(name, std::move(a));
    }
    std::string text = render(cat);
    Catalog back = parse_source(text);
    REQUIRE(back.algebras.size() == cat.algebras.size());
    for (const auto& [name, a] : cat.algebras) {
        const ConformalSuperalgebra& b = back.algebras.at(name);
        REQUIRE(a.rank() == b.rank());
        for (size_t i = 0; i < a.rank(); ++i) {
            CHECK(a.gens[i].name == b.gens[i].name);
            CHECK(a.gens[i].parity == b.gens[i].parity);
        }
        for (int i = 0; i < static_cast<int>(a.rank()); ++i)
            for (int j = 0; j < static_cast<int>(a.rank()); ++j)
                CHECK(a.entry(i, j, Polynomial::variable(kVarL1)) ==
                      b.entry(i, j, Polynomial::variable(kVarL1)));
    }
}

TEST_CASE("builtin resolution with parameters") {
    CHECK(check_axioms(resolve_builtin_algebra("NS")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("R1[p=d^3]")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("R2[q=1+l]")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("R4[beta=5/2]")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("R5[alpha=3]")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("CurGl11")).all_ok());
    CHECK(check_axioms(resolve_builtin_algebra("VirCur1")).all_ok());
    CHECK_THROWS_AS(resolve_builtin_algebra("Nope"), Error);
    CHECK_THROWS_AS(resolve_builtin_algebra("R5[alpha=l]"), Error);
}

TEST_CASE("every builtin passes check_axioms") {
    for (const auto& [name, desc] : builtin_catalog())
        CHECK(check_axioms(resolve_builtin_algebra(name)).all_ok());
}

TEST_CASE("polynomial parsing") {
    std::map<std::string, Var> vars{{"d", kVarD}, {"l", kVarL1}};
    Polynomial p = parse_polynomial("d^2 + 3/2*d*l - 1", vars);
    Polynomial want = Polynomial::variable(kVarD, 2) +
                      Rational(3, 2) * (Polynomial::variable(kVarD) * Polynomial::variable(kVarL1)) -
                      Polynomial(1);
    CHECK(p == want);
    CHECK_THROWS_AS(parse_polynomial("d +", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("q", vars), ParseError);
}
