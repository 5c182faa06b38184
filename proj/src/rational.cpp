#include "lieop/rational.hpp"

#include <cctype>
#include <ostream>

namespace lieop {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
  // grammar: '-'? digits ('/' positive-digits)?
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw input_error("bad rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw input_error("bad rational literal '" + text + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size())
      throw input_error("bad rational literal '" + text + "'");
    mpz_class den(text.substr(den_begin));
    if (sgn(den) == 0) throw input_error("zero denominator in '" + text + "'");
    mpz_class num(text.substr(0, den_begin - 1));
    return Scalar(mpq_class(num, den));
  }
  return Scalar(mpq_class(mpz_class(text)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw input_error("division by zero");
  return Scalar(mpq_class(a.v_ / b.v_));
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace lieop
