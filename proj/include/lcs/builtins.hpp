#pragma once

#include <map>
#include <string>

#include "lcs/algebra.hpp"

namespace lcs {

/// Builtin rank-(1|1) families and examples. Parameters:
///   R1[p]      [y_l y] = p(d) x, p a polynomial in d
///   R2[q]      [x_l y] = q(l) y, q a polynomial in l
///   R4[beta]   [x_l y] = (d + beta*l) y
///   R5[alpha]  [y_l y] = alpha x
ConformalSuperalgebra builtin_ns();
ConformalSuperalgebra builtin_ex22();
ConformalSuperalgebra builtin_r1(const Polynomial& p);
ConformalSuperalgebra builtin_r2(const Polynomial& q);
ConformalSuperalgebra builtin_r3();
ConformalSuperalgebra builtin_r4(const Rational& beta);
ConformalSuperalgebra builtin_r5(const Rational& alpha);

LieSuperalgebraData builtin_gl11();
FiniteLieRep builtin_gl11_defining();

/// One-dimensional Lie superalgebras: even abelian, and odd with [a,a]=0.
LieSuperalgebraData builtin_abelian1();
LieSuperalgebraData builtin_odd1();

/// The Virasoro extension C[d]L + Cur g with [L_l a] = (d+l)a.
ConformalSuperalgebra builtin_vircur(const LieSuperalgebraData& g);

/// Resolves an algebra specifier: a builtin name with optional parameters,
/// e.g. "NS", "R5[alpha=3]", "R1[p=d^3]", "CurGl11", "VirCur1".
/// Throws Error for unknown names or invalid parameters.
ConformalSuperalgebra resolve_builtin_algebra(const std::string& spec);

/// Names accepted by resolve_builtin_algebra, with short descriptions.
std::map<std::string, std::string> builtin_catalog();

}  // namespace lcs
