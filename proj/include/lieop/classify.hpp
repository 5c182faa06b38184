#pragma once

#include <map>
#include <utility>

#include "lieop/family.hpp"

namespace lieop {

/// Exact polynomial in two unknowns a, b with rational coefficients.
/// Sparse; degrees stay tiny here (the generated constraints have total
/// degree at most 2).
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(Scalar c) { add_term(0, 0, c); }

  static Poly2 var_a() { Poly2 p; p.add_term(1, 0, Scalar(1)); return p; }
  static Poly2 var_b() { Poly2 p; p.add_term(0, 1, Scalar(1)); return p; }

  void add_term(unsigned da, unsigned db, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const std::map<std::pair<unsigned, unsigned>, Scalar>& terms() const { return terms_; }
  unsigned deg_a() const;
  unsigned deg_b() const;

  Scalar eval(const Scalar& a, const Scalar& b) const;

  /// Coefficient of a^k as a polynomial in b.
  Poly2 coeff_of_a(unsigned k) const;

  /// Divides by the rational content and fixes the sign of the leading
  /// term (graded-lex, a before b) positive.
  Poly2 normalized() const;

  friend Poly2 operator+(const Poly2& x, const Poly2& y);
  friend Poly2 operator-(const Poly2& x, const Poly2& y);
  friend Poly2 operator*(const Poly2& x, const Poly2& y);
  friend Poly2 operator*(const Scalar& s, const Poly2& y);
  Poly2 operator-() const;

  friend bool operator==(const Poly2& x, const Poly2& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Poly2& x, const Poly2& y) { return !(x == y); }
  friend bool operator<(const Poly2& x, const Poly2& y);

  std::string str() const;

 private:
  // (deg_a, deg_b) -> coefficient, zero coefficients erased.
  std::map<std::pair<unsigned, unsigned>, Scalar> terms_;
};

struct ConstraintRecord {
  std::string identity;  // which defining identity produced it
  std::size_t q_index;   // which sample q
  std::size_t i, j;      // basis pair
  std::size_t component; // vector component
  Poly2 poly;            // the raw (un-normalized) constraint
};

struct ClassificationReport {
  std::string ansatz;
  std::vector<Vec> sample_qs;
  std::vector<ConstraintRecord> raw_constraints;  // nonzero residual components, verbatim
  std::vector<Poly2> distinct_constraints;        // normalized + deduplicated

  enum class VarietyKind { empty, finite, curve, plane };
  VarietyKind variety = VarietyKind::empty;
  std::vector<Poly2> generators;                  // reduced generating set
  std::string parametrization;                    // human-readable, curve case
  std::vector<std::pair<Scalar, Scalar>> solution_points;  // finite set or curve samples

  bool contains_canonical = false;   // (a,b) = (0,-1), the restriction family
  bool canonical_is_unique = false;  // solution set is exactly that point
  bool solutions_reverified = false; // each reported point re-passes the structure check
  bool grid_checked = false;
  bool grid_agrees = false;          // symbolic vs direct sweep agree on every grid point
  std::vector<std::pair<Scalar, Scalar>> grid_solutions;

  std::string str() const;
};

/// Classifies the rotation-equivariant quadratic families rho_q on the
/// cross-product algebra for which (g, ad q, rho_q) satisfies the
/// derivation-pair identities for all q: generates the identity residuals
/// symbolically in (a, b), eliminates exactly over the rationals, reports
/// the full solution set, and cross-checks against a bounded rational
/// grid sweep driven through the numeric checker (an independent path).
ClassificationReport classify_so3(bool run_grid = true, long grid_bound = 6);

}  // namespace lieop
