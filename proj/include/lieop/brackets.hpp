#pragma once

#include <memory>

#include "lieop/lie.hpp"

namespace lieop {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A Lie algebra together with a derivation candidate xi and an operator
/// rho.  theta = 2*rho + xi^2 and s = xi*rho are derived once and cached.
struct OperatorTriple {
  AlgebraPtr algebra;
  Mat xi;
  Mat rho;
  Mat theta;  // 2*rho + xi^2
  Mat s;      // xi*rho

  OperatorTriple(AlgebraPtr l, Mat xi_, Mat rho_);
  const LieAlgebra& alg() const { return *algebra; }
};

/// [x,y]_R = [Rx,y] + [x,Ry] - R[x,y], materialized on basis pairs.
BilinearMap bracket_r(const LieAlgebra& l, const Mat& r);

/// [x,y]_rho = [rho x,y] + [x,rho y] - rho[x,y] - [xi x,xi y]
/// (the derivation-pair deformation).
BilinearMap bracket_xvr(const OperatorTriple& t);

/// [x,y]_Theta = ([Theta x,y] + [x,Theta y] - Theta[x,y]) / 2.
BilinearMap bracket_theta(const LieAlgebra& l, const Mat& theta);

/// The operator-pair deformation
/// [x,y]_rho = [rho x,y] + [x,rho y] - rho[x,y] + [Rx,Ry] - R[x,y]_R.
/// Note the correction term differs in sign and form from bracket_xvr;
/// the two never stand in for each other.
BilinearMap bracket_rrho(const LieAlgebra& l, const Mat& r, const Mat& rho);

}  // namespace lieop
