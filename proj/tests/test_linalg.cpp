#include <doctest.h>

#include "lieop/linalg.hpp"
#include "lieop/random_sweep.hpp"

using namespace lieop;

namespace {
Vec vec3(long a, long b, long c) {
  Vec v(3);
  v[0] = Scalar(a);
  v[1] = Scalar(b);
  v[2] = Scalar(c);
  return v;
}
}  // namespace

TEST_CASE("apply: identity, zero, projection") {
  CHECK(Mat::identity(3).apply(vec3(1, 2, 3)) == vec3(1, 2, 3));
  CHECK(Mat::zero(3).apply(vec3(5, -7, 9)) == Vec(3));

  Mat diag(2);
  diag.at(0, 0) = Scalar(1);
  Vec v(2);
  v[0] = Scalar(1, 2);
  v[1] = Scalar(7);
  Vec expect(2);
  expect[0] = Scalar(1, 2);
  CHECK(diag.apply(v) == expect);
}

TEST_CASE("compose laws") {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    Mat a = random_matrix(rng, 3, 9, 4);
    Mat b = random_matrix(rng, 3, 9, 4);
    Mat c = random_matrix(rng, 3, 9, 4);
    Vec v(3);
    for (int i = 0; i < 3; ++i) v[i] = rng.next_rational(9, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).apply(v) == a.apply(b.apply(v)));
    CHECK(a * Mat::identity(3) == a);
    CHECK(commutator(a, a).is_zero());
  }
}

TEST_CASE("orthogonal projections compose to zero") {
  Mat d1(2), d2(2);
  d1.at(0, 0) = Scalar(1);
  d2.at(1, 1) = Scalar(1);
  CHECK((d1 * d2).is_zero());
}

TEST_CASE("commutation predicate") {
  Rng rng(3);
  Mat a = random_matrix(rng, 3, 9, 4);
  CHECK(commute(a, a * a));  // powers commute
  Mat d1(2), d2(2);
  d1.at(0, 0) = Scalar(1);
  d1.at(1, 1) = Scalar(2);
  d2.at(0, 0) = Scalar(-5);
  d2.at(1, 1) = Scalar(1, 3);
  CHECK(commute(d1, d2));  // diagonal matrices

  // E11 E12 = E12 but E12 E11 = 0, so the commutator is E12.
  Mat e11(2), e12(2);
  e11.at(0, 0) = Scalar(1);
  e12.at(0, 1) = Scalar(1);
  CHECK(!commute(e11, e12));
  Mat expected(2);
  expected.at(0, 1) = Scalar(1);
  CHECK(commutator(e11, e12) == expected);

  Mat b = random_matrix(rng, 3, 9, 4);
  CHECK(commute(a, b) == commute(b, a));
}

TEST_CASE("dimension mismatches are input errors") {
  CHECK_THROWS_AS(Mat::identity(3).apply(Vec(2)), input_error);
  CHECK_THROWS_AS(Mat::identity(3) * Mat::identity(2), input_error);
  CHECK_THROWS_AS(vec3(1, 2, 3) + Vec(2), input_error);
}
