#include "lieop/linalg.hpp"

#include <sstream>

namespace lieop {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw input_error(os.str());
  }
}

Vec Vec::basis(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a.dim(), b.dim(), "vector add");
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a.dim(), b.dim(), "vector sub");
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -c_[i];
  return r;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << ")";
  return os.str();
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::apply(const Vec& v) const {
  require_same_dim(n_, v.dim(), "matrix apply");
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < n_; ++j) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Vec Mat::column(std::size_t j) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = at(i, j);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a.dim(), b.dim(), "matrix compose");
  const std::size_t n = a.dim();
  Mat r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_dim(a.dim(), b.dim(), "matrix add");
  Mat r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_dim(a.dim(), b.dim(), "matrix sub");
  Mat r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = s * m.at(i, j);
  return r;
}

Mat Mat::operator-() const { return Scalar(-1) * *this; }

Mat Mat::pow(unsigned k) const {
  Mat acc = Mat::identity(n_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Mat Mat::transpose() const {
  Mat r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
    os << "]";
    if (i + 1 < n_) os << "\n";
  }
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

bool commute(const Mat& a, const Mat& b) {
  require_same_dim(a.dim(), b.dim(), "commutation test");
  return commutator(a, b).is_zero();
}

}  // namespace lieop
