#include "lieop/family.hpp"

#include <sstream>

namespace lieop {

QuadraticRhoFamily::QuadraticRhoFamily(AlgebraPtr algebra, std::vector<Scalar> polar_tensor)
    : algebra_(std::move(algebra)), n_(algebra_->dim()), p_(std::move(polar_tensor)) {
  if (p_.size() != n_ * n_ * n_ * n_)
    throw input_error("polarization tensor has wrong size");
  if (!polar_symmetric())
    throw input_error("polarization tensor is not symmetric in its first two indices");
}

QuadraticRhoFamily QuadraticRhoFamily::unchecked(AlgebraPtr algebra,
                                                 std::vector<Scalar> polar_tensor) {
  QuadraticRhoFamily f;
  f.algebra_ = std::move(algebra);
  f.n_ = f.algebra_->dim();
  if (polar_tensor.size() != f.n_ * f.n_ * f.n_ * f.n_)
    throw input_error("polarization tensor has wrong size");
  f.p_ = std::move(polar_tensor);
  return f;
}

bool QuadraticRhoFamily::polar_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l)
          if (at(i, j, k, l) != at(j, i, k, l)) return false;
  return true;
}

Mat QuadraticRhoFamily::polar(const Vec& q1, const Vec& q2) const {
  require_same_dim(n_, q1.dim(), "family polar");
  require_same_dim(n_, q2.dim(), "family polar");
  Mat m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (q1[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (q2[j].is_zero()) continue;
      const Scalar c = q1[i] * q2[j];
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) m.at(l, k) += c * at(i, j, k, l);
    }
  }
  return m;
}

QuadraticRhoFamily canonical_family(MatrixAlgebraBasis::Kind kind, std::size_t n) {
  MatrixAlgebraBasis basis = kind == MatrixAlgebraBasis::Kind::gl ? MatrixAlgebraBasis::gl(n)
                                                                  : MatrixAlgebraBasis::so(n);
  const std::size_t d = basis.dim();
  const Scalar half(1, 2);
  std::vector<Scalar> p(d * d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Mat img = basis.basis_mat(i) * basis.basis_mat(k) * basis.basis_mat(j) +
                  basis.basis_mat(j) * basis.basis_mat(k) * basis.basis_mat(i);
        Vec coords = basis.coords(half * img);
        for (std::size_t l = 0; l < d; ++l) p[((i * d + j) * d + k) * d + l] = coords[l];
      }
  return QuadraticRhoFamily(basis.algebra(), std::move(p));
}

QuadraticRhoFamily ansatz_family(const Scalar& a, const Scalar& b) {
  auto alg = std::make_shared<const LieAlgebra>(LieAlgebra::so3_vector_form());
  const std::size_t d = 3;
  const Scalar half_b = b / Scalar(2);
  std::vector<Scalar> p(d * d * d * d);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v) {
    p[((i * d + j) * d + k) * d + l] = p[((i * d + j) * d + k) * d + l] + v;
  };
  // rho(q1,q2) = a (q1.q2) I + (b/2)(q1 q2^T + q2 q1^T)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      set(i, i, k, k, a);
      set(i, k, k, i, half_b);
      set(k, i, k, i, half_b);
    }
  return QuadraticRhoFamily(std::move(alg), std::move(p));
}

std::vector<Vec> default_sample_qs(std::size_t dim) {
  std::vector<Vec> qs;
  for (std::size_t i = 0; i < dim; ++i) qs.push_back(Vec::basis(dim, i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      qs.push_back(Vec::basis(dim, i) + Vec::basis(dim, j));
  return qs;
}

namespace {

void add_matrix_check(CheckReport& rep, const std::string& id, const Mat& residual,
                      std::vector<std::size_t> tag) {
  CheckEntry e{id, true, true, false, {}};
  for (std::size_t j = 0; j < residual.dim(); ++j) {
    Vec col = residual.column(j);
    if (!col.is_zero()) {
      tag.push_back(j);
      e.passed = false;
      e.witness = Witness{std::move(tag), col};
      break;
    }
  }
  rep.checks.push_back(std::move(e));
}

}  // namespace

CheckReport check_quadratic_law(const QuadraticRhoFamily& f,
                                const std::vector<QuadraticLawSample>& samples) {
  CheckReport rep{StructureKind::quadratic_family, {}};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& [q1, q2, lam] = samples[s];
    std::string tag = "sample " + std::to_string(s);
    add_matrix_check(rep, tag + ": scaling",
                     f.rho_at(lam * q1) - (lam * lam) * f.rho_at(q1), {s});
    add_matrix_check(rep, tag + ": parallelogram",
                     f.rho_at(q1 + q2) + f.rho_at(q1 - q2) -
                         Scalar(2) * f.rho_at(q1) - Scalar(2) * f.rho_at(q2),
                     {s});
    add_matrix_check(rep, tag + ": polar-symmetry", f.polar(q1, q2) - f.polar(q2, q1), {s});
  }
  return rep;
}

CheckReport check_xvr_structure(const QuadraticRhoFamily& f, const std::vector<Vec>& qs) {
  if (qs.empty()) throw input_error("structure check needs at least one sample q");
  CheckReport rep{StructureKind::xvr_structure, {}};
  const LieAlgebra& l = *f.algebra();
  for (std::size_t s = 0; s < qs.size(); ++s) {
    OperatorTriple t(f.algebra(), l.ad(qs[s]), f.rho_at(qs[s]));
    CheckReport sub = check_xvr(t);
    for (auto& c : sub.checks) {
      c.id = "q" + std::to_string(s) + ": " + c.id;
      rep.checks.push_back(std::move(c));
    }
  }
  // Equivariance: [ad z, rho(q,q)] = 2 rho([z,q], q) over basis pairs.
  const std::size_t n = l.dim();
  CheckEntry e{"equivariance", true, true, false, {}};
  for (std::size_t zi = 0; zi < n && e.passed; ++zi)
    for (std::size_t qi = 0; qi < n && e.passed; ++qi) {
      const Vec z = Vec::basis(n, zi), q = Vec::basis(n, qi);
      Mat lhs = commutator(l.ad(z), f.polar(q, q));
      Mat rhs = Scalar(2) * f.polar(l.bracket_of(z, q), q);
      Mat d = lhs - rhs;
      for (std::size_t j = 0; j < n; ++j) {
        Vec col = d.column(j);
        if (!col.is_zero()) {
          e.passed = false;
          e.witness = Witness{{zi, qi, j}, col};
          break;
        }
      }
    }
  rep.checks.push_back(std::move(e));
  return rep;
}

BilinearMap ipair_bracket(const QuadraticRhoFamily& f, const Vec& q) {
  const LieAlgebra& l = *f.algebra();
  OperatorTriple t(f.algebra(), l.ad(q), f.rho_at(q));
  CheckReport pre = check_xvr(t);
  if (!pre.overall())
    throw precondition_error("family is not a derivation-pair structure at q = " + q.str(),
                             std::move(pre));
  BilinearMap b = l.bracket() + bracket_xvr(t);
  if (auto c = is_lie_bracket(b); !c.ok)
    throw std::logic_error("induced bracket failed Jacobi at " + c.witness->str());
  return b;
}

IPair build_ipair(const QuadraticRhoFamily& f) {
  std::vector<Vec> samples = default_sample_qs(f.dim());
  CheckReport structure = check_xvr_structure(f, samples);
  if (!structure.overall())
    throw precondition_error("family fails the structure check on the default samples",
                             std::move(structure));
  CheckReport conformance{StructureKind::xvr_structure, {}};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    BilinearMap b = ipair_bracket(f, samples[s]);
    LieCheck c = is_lie_bracket(b);
    conformance.add("jacobi(h(q" + std::to_string(s) + "))", c.ok, c.witness);
  }
  return IPair{std::make_shared<const QuadraticRhoFamily>(f), std::move(samples),
               std::move(conformance)};
}

}  // namespace lieop
