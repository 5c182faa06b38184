#pragma once

#include <functional>

#include "lieop/brackets.hpp"

namespace lieop {

/// Concrete matrix realization of gl(n) (basis E_ab, lexicographic) or of
/// the transpose-antisymmetric subalgebra (basis f_ab = E_ab - E_ba, a<b,
/// lexicographic).  Structure constants come from matrix commutators.
class MatrixAlgebraBasis {
 public:
  enum class Kind { gl, so_transpose };

  static MatrixAlgebraBasis gl(std::size_t n);   // n <= 5
  static MatrixAlgebraBasis so(std::size_t n);   // n <= 7

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const Mat& basis_mat(std::size_t i) const { return basis_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Coordinates of an n x n matrix in the basis; for the so kind the
  /// matrix must be antisymmetric.
  Vec coords(const Mat& m) const;
  Mat from_coords(const Vec& v) const;

  /// Matrix (in algebra coordinates) of a linear map on n x n matrices.
  Mat operator_matrix(const std::function<Mat(const Mat&)>& f) const;

  AlgebraPtr algebra() const;

 private:
  MatrixAlgebraBasis(Kind k, std::size_t n);
  Kind kind_;
  std::size_t n_;
  std::vector<Mat> basis_;
  std::vector<std::string> labels_;
};

/// gl(n) with xi: x -> qx - xq and rho: x -> qxq, in E_ab coordinates.
OperatorTriple gl_example(std::size_t n, const Mat& q);

/// The restriction of gl_example to the antisymmetric subalgebra; q must
/// itself be antisymmetric so both operators preserve it.
OperatorTriple so_example(std::size_t n, const Mat& q);

struct BiMybPair {
  AlgebraPtr algebra;
  Mat r1;  // x -> qx
  Mat r2;  // x -> xq
};

/// Left/right multiplication pair on gl(n); commuting by associativity,
/// and even-tempered with identical deformed brackets.
BiMybPair bi_myb_left_right(std::size_t n, const Mat& q);

struct ThetaRhoTriple {
  AlgebraPtr algebra;
  Mat theta;  // x -> q^2 x + x q^2
  Mat rho;    // x -> q x q
};

/// Commutator algebra of Mat_n with Theta x = q^2 x + x q^2, rho x = qxq.
ThetaRhoTriple assoc_theta_example(std::size_t n, const Mat& q);

/// Converts an even-tempered pair into the derivation-pair form
/// xi = R1 - R2, rho = R1 R2.  Refuses (with the failing report attached)
/// unless check_even_tempered passes.
OperatorTriple xvr_from_bi_myb(const AlgebraPtr& l, const Mat& r1, const Mat& r2);

}  // namespace lieop
