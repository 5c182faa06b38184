#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieop/linalg.hpp"

namespace lieop {

/// Antisymmetric bilinear binary operation stored as a 3-index tensor:
/// B(e_i, e_j) = sum_k t[i][j][k] e_k.  Jacobi is *not* assumed; this is
/// the type of candidate brackets before they are certified.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim);

  std::size_t dim() const { return n_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * n_ + j) * n_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return t_[(i * n_ + j) * n_ + k];
  }

  /// Sets B(e_i,e_j) = v and B(e_j,e_i) = -v.
  void set_pair(std::size_t i, std::size_t j, const Vec& v);

  Vec on_basis(std::size_t i, std::size_t j) const;

  /// Checks t[i][j][.] == -t[j][i][.] for all pairs.
  bool is_antisymmetric() const;

  bool is_zero() const;

  friend BilinearMap operator+(const BilinearMap& a, const BilinearMap& b);
  friend BilinearMap operator-(const BilinearMap& a, const BilinearMap& b);
  friend BilinearMap operator*(const Scalar& s, const BilinearMap& b);

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }
  friend bool operator!=(const BilinearMap& a, const BilinearMap& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> t_;
};

/// Bilinear extension from basis values.
Vec bracket_eval(const BilinearMap& b, const Vec& x, const Vec& y);

/// B(B(x,y),z) + B(B(y,z),x) + B(B(z,x),y), exactly.
Vec jacobiator(const BilinearMap& b, const Vec& x, const Vec& y, const Vec& z);

/// Basis tuple plus the nonzero residual element certifying a violation.
struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
  std::string str() const;
};

struct LieCheck {
  bool ok = true;
  std::optional<Witness> witness;
};

/// True iff the Jacobiator vanishes on all basis triples i<j<k; on failure
/// carries the lexicographically first failing triple.
LieCheck is_lie_bracket(const BilinearMap& b);

struct CompatibilityResult {
  enum class Kind { compatible, incompatible, first_not_lie, second_not_lie };
  Kind kind = Kind::compatible;
  std::optional<Witness> witness;
  bool ok() const { return kind == Kind::compatible; }
};

/// Two Lie brackets are compatible iff their mixed Jacobiator vanishes,
/// equivalently iff every pencil combination is again a Lie bracket.
/// Inputs failing Jacobi are reported as precondition failures, not as
/// incompatibility.
CompatibilityResult are_compatible(const BilinearMap& b1, const BilinearMap& b2);

/// Finite-dimensional Lie algebra given by structure constants.
/// Construction validates antisymmetry and Jacobi eagerly and throws
/// input_error on violation.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_labels, BilinearMap structure);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return bracket_.dim(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const BilinearMap& bracket() const { return bracket_; }

  Vec bracket_of(const Vec& x, const Vec& y) const { return bracket_eval(bracket_, x, y); }

  /// Matrix of ad x = [x, .] in the algebra's coordinates.
  Mat ad(const Vec& x) const;

  /// The three-dimensional algebra with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
  /// (cross product in coordinates).
  static LieAlgebra so3_vector_form();

  /// Abelian algebra of the given dimension.
  static LieAlgebra abelian(std::size_t dim);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  BilinearMap bracket_;
};

}  // namespace lieop
