#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieop/rational.hpp"

namespace lieop {

/// Coordinate vector of an algebra element.  All values are immutable
/// in spirit: operations return fresh values, nothing mutates shared state.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim) {}
  explicit Vec(std::vector<Scalar> coords) : c_(std::move(coords)) {}

  static Vec basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const Scalar& s, const Vec& v);
  Vec operator-() const;

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

/// Square matrix of exact rationals acting on algebra coordinates;
/// column j holds the image of basis vector e_j.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t dim) : n_(dim), e_(dim * dim) {}

  static Mat identity(std::size_t dim);
  static Mat zero(std::size_t dim) { return Mat(dim); }

  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  bool is_zero() const;

  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;

  friend Mat operator*(const Mat& a, const Mat& b);  // composition
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& m);
  Mat operator-() const;

  Mat pow(unsigned k) const;
  Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

Mat commutator(const Mat& a, const Mat& b);
bool commute(const Mat& a, const Mat& b);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace lieop
