#include "lieop/lie.hpp"

#include <sstream>
#include <utility>

namespace lieop {

BilinearMap::BilinearMap(std::size_t dim) : n_(dim), t_(dim * dim * dim) {}

void BilinearMap::set_pair(std::size_t i, std::size_t j, const Vec& v) {
  require_same_dim(n_, v.dim(), "bilinear map entry");
  for (std::size_t k = 0; k < n_; ++k) {
    at(i, j, k) = v[k];
    at(j, i, k) = -v[k];
  }
}

Vec BilinearMap::on_basis(std::size_t i, std::size_t j) const {
  Vec r(n_);
  for (std::size_t k = 0; k < n_; ++k) r[k] = at(i, j, k);
  return r;
}

bool BilinearMap::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

BilinearMap operator+(const BilinearMap& a, const BilinearMap& b) {
  require_same_dim(a.dim(), b.dim(), "bilinear map add");
  BilinearMap r(a.dim());
  for (std::size_t i = 0; i < a.t_.size(); ++i) r.t_[i] = a.t_[i] + b.t_[i];
  return r;
}

BilinearMap operator-(const BilinearMap& a, const BilinearMap& b) {
  require_same_dim(a.dim(), b.dim(), "bilinear map sub");
  BilinearMap r(a.dim());
  for (std::size_t i = 0; i < a.t_.size(); ++i) r.t_[i] = a.t_[i] - b.t_[i];
  return r;
}

BilinearMap operator*(const Scalar& s, const BilinearMap& b) {
  BilinearMap r(b.dim());
  for (std::size_t i = 0; i < b.t_.size(); ++i) r.t_[i] = s * b.t_[i];
  return r;
}

Vec bracket_eval(const BilinearMap& b, const Vec& x, const Vec& y) {
  require_same_dim(b.dim(), x.dim(), "bracket eval");
  require_same_dim(b.dim(), y.dim(), "bracket eval");
  const std::size_t n = b.dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += c * b.at(i, j, k);
    }
  }
  return r;
}

Vec jacobiator(const BilinearMap& b, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = bracket_eval(b, bracket_eval(b, x, y), z);
  r = r + bracket_eval(b, bracket_eval(b, y, z), x);
  r = r + bracket_eval(b, bracket_eval(b, z, x), y);
  return r;
}

std::string Witness::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ",";
    os << indices[i];
  }
  os << ") residual " << residual.str();
  return os.str();
}

LieCheck is_lie_bracket(const BilinearMap& b) {
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = jacobiator(b, Vec::basis(n, i), Vec::basis(n, j), Vec::basis(n, k));
        if (!r.is_zero()) return {false, Witness{{i, j, k}, r}};
      }
  return {true, std::nullopt};
}

CompatibilityResult are_compatible(const BilinearMap& b1, const BilinearMap& b2) {
  require_same_dim(b1.dim(), b2.dim(), "compatibility");
  if (auto c = is_lie_bracket(b1); !c.ok)
    return {CompatibilityResult::Kind::first_not_lie, c.witness};
  if (auto c = is_lie_bracket(b2); !c.ok)
    return {CompatibilityResult::Kind::second_not_lie, c.witness};
  // Mixed Jacobiator: sum over both orders of placing b1/b2 in the
  // cyclic triple sum; vanishes iff b1 + b2 (hence every pencil) is Lie.
  const std::size_t n = b1.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec x = Vec::basis(n, i), y = Vec::basis(n, j), z = Vec::basis(n, k);
        Vec r = bracket_eval(b1, bracket_eval(b2, x, y), z) +
                bracket_eval(b2, bracket_eval(b1, x, y), z);
        r = r + bracket_eval(b1, bracket_eval(b2, y, z), x) +
            bracket_eval(b2, bracket_eval(b1, y, z), x);
        r = r + bracket_eval(b1, bracket_eval(b2, z, x), y) +
            bracket_eval(b2, bracket_eval(b1, z, x), y);
        if (!r.is_zero())
          return {CompatibilityResult::Kind::incompatible, Witness{{i, j, k}, r}};
      }
  return {CompatibilityResult::Kind::compatible, std::nullopt};
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       BilinearMap structure)
    : name_(std::move(name)), labels_(std::move(basis_labels)), bracket_(std::move(structure)) {
  if (labels_.size() != bracket_.dim())
    throw input_error("algebra '" + name_ + "': basis label count does not match dimension");
  if (!bracket_.is_antisymmetric())
    throw input_error("algebra '" + name_ + "': structure constants not antisymmetric");
  if (auto c = is_lie_bracket(bracket_); !c.ok)
    throw input_error("algebra '" + name_ + "': Jacobi identity fails at " + c.witness->str());
}

Mat LieAlgebra::ad(const Vec& x) const {
  require_same_dim(dim(), x.dim(), "ad");
  const std::size_t n = dim();
  Mat m(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket_of(x, Vec::basis(n, j));
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

LieAlgebra LieAlgebra::so3_vector_form() {
  BilinearMap b(3);
  Vec e1 = Vec::basis(3, 0), e2 = Vec::basis(3, 1), e3 = Vec::basis(3, 2);
  b.set_pair(0, 1, e3);
  b.set_pair(1, 2, e1);
  b.set_pair(2, 0, e2);
  return LieAlgebra("so3", {"e1", "e2", "e3"}, b);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra("abelian" + std::to_string(dim), labels, BilinearMap(dim));
}

}  // namespace lieop
