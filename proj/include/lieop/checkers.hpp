#pragma once

#include "lieop/brackets.hpp"
#include "lieop/report.hpp"

namespace lieop {

/// Membership test for the derivation-pair class.  Verifies on all basis
/// pairs i<j, with B = bracket_xvr(t):
///   (D)  xi[x,y] = [xi x,y] + [x,xi y]
///   (C)  xi rho = rho xi
///   (I1) rho B(x,y) = [rho x, rho y]
///   (I2) xi B(x,y) = [rho x, xi y] + [xi x, rho y]
///   (I3) xi^2 B(x,y) = [rho^2 x,y] + [x,rho^2 y] - 2[rho x,rho y]
/// plus the derived consequences, checked independently:
///   (R1) xi[xi x,xi y] = [Sx,y] + [x,Sy] - S[x,y],  S = xi rho
///   (R2a) B coincides with the half-normalized theta bracket, theta = 2rho + xi^2
///   (R2b) theta B_theta(x,y) = [rho^2 x,y] + [x,rho^2 y]
///   (R3) xi B(x,y) = B(xi x,y) + B(x,xi y)
CheckReport check_xvr(const OperatorTriple& t);

/// R[Rx,y] + R[x,Ry] = [Rx,Ry] + R^2[x,y] on all basis pairs.
CheckReport check_myb(const LieAlgebra& l, const Mat& r);

/// Commuting pair of modified-Yang-Baxter operators with identical
/// deformed brackets.
CheckReport check_bi_myb(const LieAlgebra& l, const Mat& r1, const Mat& r2);

/// The two balancing identities
///   [R1 x,R2 y] + [R2 x,R1 y] - R1R2[x,y] = [Ri^2 x,y] + [x,Ri^2 y] - Ri^2[x,y]
/// for i = 1,2, on top of the bi-mYB requirements (checked as a
/// precondition entry, distinguished from identity failures).
CheckReport check_even_tempered(const LieAlgebra& l, const Mat& r1, const Mat& r2);

/// Operator-pair class of Definition 5A shape: with B = bracket_rrho and
/// BR = bracket_r,
///   (id1) rho B(x,y) = [rho x, rho y]
///   (id2) R B(x,y) + rho BR(x,y) = [Rx, rho y] + [rho x, Ry]
/// and, when require_regular, (regular) R BR(x,y) = 2([rho x,y] + [x,rho y]).
/// Also reports (informative, not gating) whether B satisfies Jacobi.
CheckReport check_rrho(const LieAlgebra& l, const Mat& r, const Mat& rho, bool require_regular);

/// Commuting-pair class with the half-normalized bracket
/// BT(x,y) = ([Theta x,y] + [x,Theta y] - Theta[x,y]) / 2:
///   (commute) Theta rho = rho Theta
///   (id1) rho BT(x,y) = [rho x, rho y]
///   (id2) Theta BT(x,y) = [rho^2 x,y] + [x,rho^2 y]
///   (id3) [Theta x,rho y] + [rho x,Theta y]
///           = rho[rho x,y] + rho[x,rho y] + BT(x,rho y) + BT(rho x,y)
///   (id4) BT(rho x,rho y) = rho([Theta x,Theta y] - [rho^2 x,y] - [x,rho^2 y] - rho^2[x,y])
/// and, when require_special, the operator identity
///   ([ad x,Theta] - ad(Theta x)) rho + 2 rho ad(rho x) = 0
/// for x over basis elements (sufficient by linearity).
CheckReport check_theta_rho(const LieAlgebra& l, const Mat& theta, const Mat& rho,
                            bool require_special);

/// Certifies that the deformed bracket of a passing triple is itself a Lie
/// bracket compatible with the ambient one, plus two explicit pencil
/// combinations (1,1) and (2,-3) as a redundant cross-check.
/// A triple failing check_xvr is reported as a precondition failure.
CheckReport theorem1_suite(const OperatorTriple& t);

}  // namespace lieop
