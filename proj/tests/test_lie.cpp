#include <doctest.h>

#include "lieop/lie.hpp"
#include "lieop/random_sweep.hpp"
#include "lieop/factories.hpp"

using namespace lieop;

namespace {

Vec rand_vec(Rng& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.next_rational(9, 4);
  return v;
}

// dim-3 map with B(e1,e2) = e1, B(e1,e3) = e2, B(e2,e3) = 0; violates
// Jacobi: J(e1,e2,e3) = B(e1,e3) + B(0,e1) + B(-e2,e2) = e2.
BilinearMap non_jacobi_map() {
  BilinearMap b(3);
  b.set_pair(0, 1, Vec::basis(3, 0));
  b.set_pair(0, 2, Vec::basis(3, 1));
  return b;
}

}  // namespace

TEST_CASE("cross-product bracket on basis") {
  LieAlgebra so3 = LieAlgebra::so3_vector_form();
  CHECK(so3.bracket_of(Vec::basis(3, 0), Vec::basis(3, 1)) == Vec::basis(3, 2));
  CHECK(so3.bracket_of(Vec::basis(3, 1), Vec::basis(3, 2)) == Vec::basis(3, 0));
  CHECK(so3.bracket_of(Vec::basis(3, 2), Vec::basis(3, 0)) == Vec::basis(3, 1));
}

TEST_CASE("bracket_eval is antisymmetric and kills repeated arguments") {
  LieAlgebra so3 = LieAlgebra::so3_vector_form();
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    Vec x = rand_vec(rng, 3), y = rand_vec(rng, 3);
    CHECK(bracket_eval(so3.bracket(), x, y) == -bracket_eval(so3.bracket(), y, x));
    CHECK(bracket_eval(so3.bracket(), x, x).is_zero());
  }
  LieAlgebra ab = LieAlgebra::abelian(4);
  CHECK(bracket_eval(ab.bracket(), rand_vec(rng, 4), rand_vec(rng, 4)).is_zero());
}

TEST_CASE("jacobiator fixture and properties") {
  BilinearMap b = non_jacobi_map();
  Vec j = jacobiator(b, Vec::basis(3, 0), Vec::basis(3, 1), Vec::basis(3, 2));
  CHECK(j == Vec::basis(3, 1));

  LieAlgebra so3 = LieAlgebra::so3_vector_form();
  Rng rng(17);
  for (int k = 0; k < 10; ++k) {
    Vec x = rand_vec(rng, 3), y = rand_vec(rng, 3), z = rand_vec(rng, 3), x2 = rand_vec(rng, 3);
    CHECK(jacobiator(so3.bracket(), x, y, z).is_zero());
    // cyclic symmetry
    CHECK(jacobiator(b, x, y, z) == jacobiator(b, y, z, x));
    // trilinearity in the first slot
    CHECK(jacobiator(b, x + x2, y, z) == jacobiator(b, x, y, z) + jacobiator(b, x2, y, z));
  }
}

TEST_CASE("is_lie_bracket with witness") {
  CHECK(is_lie_bracket(LieAlgebra::so3_vector_form().bracket()).ok);
  CHECK(is_lie_bracket(BilinearMap(4)).ok);  // zero map
  LieCheck c = is_lie_bracket(non_jacobi_map());
  REQUIRE(!c.ok);
  CHECK(c.witness->indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(c.witness->residual == Vec::basis(3, 1));
}

TEST_CASE("algebra construction validates eagerly") {
  CHECK_THROWS_AS(LieAlgebra("bad", {"a", "b", "c"}, non_jacobi_map()), input_error);
  BilinearMap asym(2);
  asym.at(0, 1, 0) = Scalar(1);  // no matching (1,0) entry
  CHECK_THROWS_AS(LieAlgebra("asym", {"a", "b"}, asym), input_error);
  CHECK_THROWS_AS(LieAlgebra("labels", {"a"}, BilinearMap(2)), input_error);
}

TEST_CASE("compatibility basics") {
  LieAlgebra so3 = LieAlgebra::so3_vector_form();
  CHECK(are_compatible(so3.bracket(), so3.bracket()).ok());
  CHECK(are_compatible(so3.bracket(), BilinearMap(3)).ok());

  CompatibilityResult pre = are_compatible(non_jacobi_map(), LieAlgebra::abelian(3).bracket());
  CHECK(pre.kind == CompatibilityResult::Kind::first_not_lie);
}

TEST_CASE("compatibility matches sum-is-Lie on deformed gl(2) brackets") {
  Rng rng(23);
  for (int k = 0; k < 8; ++k) {
    Mat q = random_matrix(rng, 2, 5, 3);
    OperatorTriple t = gl_example(2, q);
    const BilinearMap ambient = t.algebra->bracket();
    const BilinearMap deformed = bracket_xvr(t);
    CompatibilityResult c = are_compatible(ambient, deformed);
    LieCheck sum = is_lie_bracket(ambient + deformed);
    CHECK(c.ok() == sum.ok);
    CHECK(c.ok());
  }
}
