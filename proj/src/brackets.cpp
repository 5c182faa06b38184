#include "lieop/brackets.hpp"

namespace lieop {

OperatorTriple::OperatorTriple(AlgebraPtr l, Mat xi_, Mat rho_)
    : algebra(std::move(l)), xi(std::move(xi_)), rho(std::move(rho_)) {
  if (!algebra) throw input_error("operator triple without algebra");
  require_same_dim(algebra->dim(), xi.dim(), "operator triple xi");
  require_same_dim(algebra->dim(), rho.dim(), "operator triple rho");
  theta = Scalar(2) * rho + xi * xi;
  s = xi * rho;
}

BilinearMap bracket_r(const LieAlgebra& l, const Mat& r) {
  require_same_dim(l.dim(), r.dim(), "bracket_r");
  const std::size_t n = l.dim();
  BilinearMap b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = Vec::basis(n, i), y = Vec::basis(n, j);
      Vec v = l.bracket_of(r.apply(x), y) + l.bracket_of(x, r.apply(y)) -
              r.apply(l.bracket_of(x, y));
      b.set_pair(i, j, v);
    }
  return b;
}

BilinearMap bracket_xvr(const OperatorTriple& t) {
  const LieAlgebra& l = *t.algebra;
  const std::size_t n = l.dim();
  BilinearMap b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = Vec::basis(n, i), y = Vec::basis(n, j);
      Vec v = l.bracket_of(t.rho.apply(x), y) + l.bracket_of(x, t.rho.apply(y)) -
              t.rho.apply(l.bracket_of(x, y)) -
              l.bracket_of(t.xi.apply(x), t.xi.apply(y));
      b.set_pair(i, j, v);
    }
  return b;
}

BilinearMap bracket_theta(const LieAlgebra& l, const Mat& theta) {
  require_same_dim(l.dim(), theta.dim(), "bracket_theta");
  const std::size_t n = l.dim();
  const Scalar half(1, 2);
  BilinearMap b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = Vec::basis(n, i), y = Vec::basis(n, j);
      Vec v = l.bracket_of(theta.apply(x), y) + l.bracket_of(x, theta.apply(y)) -
              theta.apply(l.bracket_of(x, y));
      b.set_pair(i, j, half * v);
    }
  return b;
}

BilinearMap bracket_rrho(const LieAlgebra& l, const Mat& r, const Mat& rho) {
  require_same_dim(l.dim(), r.dim(), "bracket_rrho");
  require_same_dim(l.dim(), rho.dim(), "bracket_rrho");
  const std::size_t n = l.dim();
  const BilinearMap br = bracket_r(l, r);
  BilinearMap b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = Vec::basis(n, i), y = Vec::basis(n, j);
      Vec v = l.bracket_of(rho.apply(x), y) + l.bracket_of(x, rho.apply(y)) -
              rho.apply(l.bracket_of(x, y)) +
              l.bracket_of(r.apply(x), r.apply(y)) - r.apply(br.on_basis(i, j));
      b.set_pair(i, j, v);
    }
  return b;
}

}  // namespace lieop
