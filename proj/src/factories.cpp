#include "lieop/factories.hpp"

#include <map>
#include <sstream>

#include "lieop/checkers.hpp"

namespace lieop {

namespace {

// Keyed caches so repeated factory calls share one algebra object;
// structure-constant construction validates Jacobi each time otherwise.
AlgebraPtr cached_algebra(const MatrixAlgebraBasis& basis, const std::string& name) {
  static std::map<std::string, AlgebraPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  const std::size_t d = basis.dim();
  BilinearMap b(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      b.set_pair(i, j, basis.coords(commutator(basis.basis_mat(i), basis.basis_mat(j))));
  auto alg = std::make_shared<const LieAlgebra>(name, basis.labels(), std::move(b));
  cache.emplace(name, alg);
  return alg;
}

Mat unit_matrix(std::size_t n, std::size_t a, std::size_t b) {
  Mat m(n);
  m.at(a, b) = Scalar(1);
  return m;
}

}  // namespace

MatrixAlgebraBasis::MatrixAlgebraBasis(Kind k, std::size_t n) : kind_(k), n_(n) {
  if (k == Kind::gl) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        basis_.push_back(unit_matrix(n, a, b));
        labels_.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      }
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        basis_.push_back(unit_matrix(n, a, b) - unit_matrix(n, b, a));
        labels_.push_back("f" + std::to_string(a + 1) + std::to_string(b + 1));
      }
  }
}

MatrixAlgebraBasis MatrixAlgebraBasis::gl(std::size_t n) {
  if (n < 1 || n > 5) throw input_error("gl(n) supported for 1 <= n <= 5");
  return MatrixAlgebraBasis(Kind::gl, n);
}

MatrixAlgebraBasis MatrixAlgebraBasis::so(std::size_t n) {
  if (n < 2 || n > 7) throw input_error("so(n) supported for 2 <= n <= 7");
  return MatrixAlgebraBasis(Kind::so_transpose, n);
}

Vec MatrixAlgebraBasis::coords(const Mat& m) const {
  require_same_dim(n_, m.dim(), "matrix coordinates");
  if (kind_ == Kind::gl) {
    Vec v(dim());
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) v[a * n_ + b] = m.at(a, b);
    return v;
  }
  if (m + m.transpose() != Mat::zero(n_))
    throw input_error("matrix is not antisymmetric, not an element of so(n)");
  Vec v(dim());
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) v[idx++] = m.at(a, b);
  return v;
}

Mat MatrixAlgebraBasis::from_coords(const Vec& v) const {
  require_same_dim(dim(), v.dim(), "matrix from coordinates");
  Mat m(n_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) m = m + v[i] * basis_[i];
  return m;
}

Mat MatrixAlgebraBasis::operator_matrix(const std::function<Mat(const Mat&)>& f) const {
  Mat op(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = coords(f(basis_[j]));
    for (std::size_t k = 0; k < dim(); ++k) op.at(k, j) = col[k];
  }
  return op;
}

AlgebraPtr MatrixAlgebraBasis::algebra() const {
  std::string name = (kind_ == Kind::gl ? "gl" : "so") + std::to_string(n_);
  return cached_algebra(*this, name);
}

OperatorTriple gl_example(std::size_t n, const Mat& q) {
  require_same_dim(n, q.dim(), "gl_example q");
  MatrixAlgebraBasis basis = MatrixAlgebraBasis::gl(n);
  Mat xi = basis.operator_matrix([&](const Mat& x) { return q * x - x * q; });
  Mat rho = basis.operator_matrix([&](const Mat& x) { return q * x * q; });
  return OperatorTriple(basis.algebra(), std::move(xi), std::move(rho));
}

OperatorTriple so_example(std::size_t n, const Mat& q) {
  require_same_dim(n, q.dim(), "so_example q");
  if (q + q.transpose() != Mat::zero(n))
    throw input_error(
        "so_example requires q^T = -q; otherwise x -> qxq and x -> qx-xq "
        "do not preserve the antisymmetric subalgebra");
  MatrixAlgebraBasis basis = MatrixAlgebraBasis::so(n);
  Mat xi = basis.operator_matrix([&](const Mat& x) { return q * x - x * q; });
  Mat rho = basis.operator_matrix([&](const Mat& x) { return q * x * q; });
  return OperatorTriple(basis.algebra(), std::move(xi), std::move(rho));
}

BiMybPair bi_myb_left_right(std::size_t n, const Mat& q) {
  require_same_dim(n, q.dim(), "bi_myb_left_right q");
  MatrixAlgebraBasis basis = MatrixAlgebraBasis::gl(n);
  Mat r1 = basis.operator_matrix([&](const Mat& x) { return q * x; });
  Mat r2 = basis.operator_matrix([&](const Mat& x) { return x * q; });
  return {basis.algebra(), std::move(r1), std::move(r2)};
}

ThetaRhoTriple assoc_theta_example(std::size_t n, const Mat& q) {
  require_same_dim(n, q.dim(), "assoc_theta_example q");
  MatrixAlgebraBasis basis = MatrixAlgebraBasis::gl(n);
  const Mat q2 = q * q;
  Mat theta = basis.operator_matrix([&](const Mat& x) { return q2 * x + x * q2; });
  Mat rho = basis.operator_matrix([&](const Mat& x) { return q * x * q; });
  return {basis.algebra(), std::move(theta), std::move(rho)};
}

OperatorTriple xvr_from_bi_myb(const AlgebraPtr& l, const Mat& r1, const Mat& r2) {
  CheckReport rep = check_even_tempered(*l, r1, r2);
  if (!rep.overall())
    throw precondition_error("pair is not even-tempered bi-mYB", std::move(rep));
  return OperatorTriple(l, r1 - r2, r1 * r2);
}

}  // namespace lieop
