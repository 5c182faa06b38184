#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lieop {

/// Raised on malformed input values (bad literals, zero denominators,
/// dimension mismatches).  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar.  Always held in canonical reduced form
/// (denominator > 0, gcd(|num|, den) = 1); every operation is exact,
/// so identity checks are plain zero tests.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses the rational literal grammar: optional '-', digits,
  /// optionally '/' and a positive denominator.  "1.5", "2/0", "+3"
  /// and stray whitespace are rejected.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  /// Canonical form: "-3/4", "7", "0".
  std::string str() const;

  const mpq_class& raw() const { return v_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ + b.v_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ - b.v_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ * b.v_)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return Scalar(mpq_class(-v_)); }

  Scalar& operator+=(const Scalar& b) { v_ += b.v_; return *this; }
  Scalar& operator-=(const Scalar& b) { v_ -= b.v_; return *this; }
  Scalar& operator*=(const Scalar& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

}  // namespace lieop
