#pragma once

#include <map>
#include <string>

#include "lcs/cohomology.hpp"

namespace lcs {

struct ParseError : Error {
    int line = 0, col = 0;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

/// Parsed declarations of one source file, by name.
struct Catalog {
    std::map<std::string, ConformalSuperalgebra> algebras;
    std::map<std::string, LieSuperalgebraData> liealgs;

    struct RepDecl {
        std::string algebra;
        Representation rep;
    };
    std::map<std::string, RepDecl> reps;

    struct MapDecl {
        std::string algebra;
        ConformalMap map;
    };
    std::map<std::string, MapDecl> maps;

    struct HomDecl {
        std::string from, to;
        std::map<int, GenValue> phi;
    };
    std::map<std::string, HomDecl> homs;

    struct CochainDecl {
        std::string algebra;
        Cochain cochain;
    };
    std::map<std::string, CochainDecl> cochains;

    bool empty() const {
        return algebras.empty() && liealgs.empty() && reps.empty() && maps.empty() &&
               homs.empty() && cochains.empty();
    }
};

/// Parses .lcs source. Throws ParseError with position on syntax errors and
/// on semantic errors (unknown generator, parity clash, duplicate name).
Catalog parse_source(const std::string& text);

/// Renders a catalog back to .lcs source; parse(render(c)) reproduces c.
std::string render(const Catalog& c);

/// Parses a standalone polynomial in the given variables ("d", "l"/"l1", ...).
Polynomial parse_polynomial(const std::string& text, const std::map<std::string, Var>& vars);

}  // namespace lcs
