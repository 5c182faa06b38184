#pragma once

#include "lieop/checkers.hpp"
#include "lieop/factories.hpp"

namespace lieop {

/// Family q -> rho_q of operators depending quadratically on q, stored via
/// its polarization: rho(q1,q2)(e_k) = sum_l P[i][j][k][l] q1_i q2_j e_l,
/// symmetric in (i,j), with rho_q = rho(q,q).
class QuadraticRhoFamily {
 public:
  QuadraticRhoFamily(AlgebraPtr algebra, std::vector<Scalar> polar_tensor);

  /// Skips the symmetry validation; exists so tests can probe how the
  /// checkers behave on a corrupted polarization.
  static QuadraticRhoFamily unchecked(AlgebraPtr algebra, std::vector<Scalar> polar_tensor);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return n_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return p_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  Mat polar(const Vec& q1, const Vec& q2) const;
  Mat rho_at(const Vec& q) const { return polar(q, q); }

  bool polar_symmetric() const;

 private:
  QuadraticRhoFamily() = default;
  AlgebraPtr algebra_;
  std::size_t n_ = 0;
  std::vector<Scalar> p_;
};

/// Polarization of rho(q1,q2)x = (q1 x q2 + q2 x q1)/2 on gl(n) or its
/// antisymmetric-subalgebra restriction, in the fixed bases.
QuadraticRhoFamily canonical_family(MatrixAlgebraBasis::Kind kind, std::size_t n);

/// The two-parameter rotation-equivariant family on the cross-product
/// algebra: rho_q x = a (q.q) x + b (q.x) q.
QuadraticRhoFamily ansatz_family(const Scalar& a, const Scalar& b);

/// All basis vectors plus all pairwise sums of basis vectors.
std::vector<Vec> default_sample_qs(std::size_t dim);

struct QuadraticLawSample {
  Vec q1;
  Vec q2;
  Scalar lambda;
};

/// Verifies per sample: rho_{lambda q1} = lambda^2 rho_{q1}, the
/// parallelogram law rho_{q1+q2} + rho_{q1-q2} = 2 rho_{q1} + 2 rho_{q2},
/// and symmetry of the polarization itself (the diagonal rho_q only ever
/// sees the symmetric part of P, so the two operator laws cannot detect a
/// broken symmetrization; the explicit polar check can).
CheckReport check_quadratic_law(const QuadraticRhoFamily& f,
                                const std::vector<QuadraticLawSample>& samples);

/// For each sample q: full derivation-pair check of (g, ad q, rho_q),
/// plus the equivariance law [ad z, rho(q,q)] = 2 rho([z,q], q) over basis
/// pairs (z,q).
CheckReport check_xvr_structure(const QuadraticRhoFamily& f, const std::vector<Vec>& qs);

/// The induced bracket [x,y]_q = [x,y] + [x,y]_{rho_q}; requires the
/// family to pass the structure check at q, and certifies Jacobi of the
/// result.
BilinearMap ipair_bracket(const QuadraticRhoFamily& f, const Vec& q);

/// Two copies of the algebra, each parametrizing Lie brackets on the
/// other through the same induced-bracket map.
struct IPair {
  std::shared_ptr<const QuadraticRhoFamily> family;
  std::vector<Vec> samples;
  CheckReport conformance;

  BilinearMap h1(const Vec& a) const { return ipair_bracket(*family, a); }
  BilinearMap h2(const Vec& x) const { return ipair_bracket(*family, x); }
};

IPair build_ipair(const QuadraticRhoFamily& f);

}  // namespace lieop
