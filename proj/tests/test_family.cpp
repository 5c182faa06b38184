#include <doctest.h>

#include "lieop/family.hpp"
#include "lieop/random_sweep.hpp"

using namespace lieop;

namespace {

Mat e_mat(std::size_t n, std::size_t a, std::size_t b) {
  Mat m(n);
  m.at(a, b) = Scalar(1);
  return m;
}

const CheckEntry& entry(const CheckReport& rep, const std::string& id) {
  const CheckEntry* e = rep.find(id);
  REQUIRE(e != nullptr);
  return *e;
}

Vec rand_vec(Rng& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.next_rational(5, 3);
  return v;
}

}  // namespace

TEST_CASE("canonical family diagonal recovers q x q") {
  // gl(2), gl(3), so(3), so(4): rho_at computed from the polarization
  // equals the direct x -> qxq operator matrix for seeded random q.
  Rng rng(89);
  struct Case {
    MatrixAlgebraBasis::Kind kind;
    std::size_t n;
  };
  for (Case c : {Case{MatrixAlgebraBasis::Kind::gl, 2}, Case{MatrixAlgebraBasis::Kind::gl, 3},
                 Case{MatrixAlgebraBasis::Kind::so_transpose, 3},
                 Case{MatrixAlgebraBasis::Kind::so_transpose, 4}}) {
    MatrixAlgebraBasis basis = c.kind == MatrixAlgebraBasis::Kind::gl
                                   ? MatrixAlgebraBasis::gl(c.n)
                                   : MatrixAlgebraBasis::so(c.n);
    QuadraticRhoFamily f = canonical_family(c.kind, c.n);
    for (int k = 0; k < 5; ++k) {
      Mat q = c.kind == MatrixAlgebraBasis::Kind::gl ? random_matrix(rng, c.n, 9, 4)
                                                     : random_antisymmetric(rng, c.n, 9, 4);
      Mat direct = basis.operator_matrix([&](const Mat& x) { return q * x * q; });
      CHECK(f.rho_at(basis.coords(q)) == direct);
    }
    CHECK(f.rho_at(Vec(basis.dim())).is_zero());
  }
}

TEST_CASE("canonical gl(2) family matches the example operators at E11") {
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::gl, 2);
  MatrixAlgebraBasis basis = MatrixAlgebraBasis::gl(2);
  OperatorTriple t = gl_example(2, e_mat(2, 0, 0));
  CHECK(f.rho_at(basis.coords(e_mat(2, 0, 0))) == t.rho);
}

TEST_CASE("canonical so(3) family fixture") {
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::so_transpose, 3);
  // q = f12: rho_q(f12) = -f12
  Mat m = f.rho_at(Vec::basis(3, 0));
  CHECK(m.apply(Vec::basis(3, 0)) == -Vec::basis(3, 0));
}

TEST_CASE("quadratic law checks") {
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::gl, 2);
  Rng rng(97);
  std::vector<QuadraticLawSample> samples;
  samples.push_back({Vec::basis(4, 0), Vec(4), Scalar(1)});  // degenerate tautology
  for (int k = 0; k < 5; ++k)
    samples.push_back({rand_vec(rng, 4), rand_vec(rng, 4), Scalar(3)});
  CHECK(check_quadratic_law(f, samples).overall());
}

TEST_CASE("corrupted polarization is caught by the symmetry check") {
  auto alg = std::make_shared<const LieAlgebra>(LieAlgebra::so3_vector_form());
  std::vector<Scalar> p(81);
  // P[0][1][0][0] = 1 with no mirror entry: construction rejects it...
  p[((0 * 3 + 1) * 3 + 0) * 3 + 0] = Scalar(1);
  CHECK_THROWS_AS(QuadraticRhoFamily(alg, p), input_error);

  // ...and the unchecked escape hatch fails the law check with a witness.
  QuadraticRhoFamily bad = QuadraticRhoFamily::unchecked(alg, p);
  std::vector<QuadraticLawSample> samples = {
      {Vec::basis(3, 0), Vec::basis(3, 1), Scalar(2)}};
  CheckReport rep = check_quadratic_law(bad, samples);
  CHECK(!rep.overall());
  CHECK(!entry(rep, "sample 0: polar-symmetry").passed);
  // The diagonal rho_q only sees the symmetric part of P, so the scaling
  // and parallelogram laws still hold for this corruption.
  CHECK(entry(rep, "sample 0: scaling").passed);
  CHECK(entry(rep, "sample 0: parallelogram").passed);
}

TEST_CASE("structure check: canonical families pass") {
  {
    QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::so_transpose, 3);
    CHECK(check_xvr_structure(f, default_sample_qs(3)).overall());
  }
  {
    QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::gl, 2);
    std::vector<Vec> qs = {Vec::basis(4, 0) + Vec::basis(4, 1)};  // E11 + E12
    CHECK(check_xvr_structure(f, qs).overall());
  }
}

TEST_CASE("structure check: the zero family on so3 is a genuine member") {
  // [ad q x, ad q y] is proportional to q on so3, so every defining
  // identity degenerates to 0 = 0 at rho = 0; the zero family really is a
  // structure here (it sits at (a,b) = (0,0) on the classifier's curve).
  auto alg = std::make_shared<const LieAlgebra>(LieAlgebra::so3_vector_form());
  QuadraticRhoFamily zero(alg, std::vector<Scalar>(81));
  CHECK(check_xvr_structure(zero, default_sample_qs(3)).overall());
}

TEST_CASE("structure check: an off-curve family fails") {
  QuadraticRhoFamily off = ansatz_family(Scalar(1), Scalar(1));  // a+b+b^2 = 3
  CheckReport rep = check_xvr_structure(off, default_sample_qs(3));
  CHECK(!rep.overall());
  CHECK(!entry(rep, "q0: identity-1").passed);
  CHECK(entry(rep, "q0: identity-1").witness.has_value());
  // equivariance is parameter-independent for this ansatz
  CHECK(entry(rep, "equivariance").passed);
}

TEST_CASE("induced bracket at q = 0 is the ambient bracket") {
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::so_transpose, 3);
  CHECK(ipair_bracket(f, Vec(3)) == f.algebra()->bracket());
}

TEST_CASE("induced bracket on gl(2) at E11 equals ambient plus the shift") {
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::gl, 2);
  Vec q = Vec::basis(4, 0);
  BilinearMap got = ipair_bracket(f, q);
  OperatorTriple t = gl_example(2, e_mat(2, 0, 0));
  CHECK(got == t.algebra->bracket() + bracket_xvr(t));
}

TEST_CASE("induced bracket scaling decomposition") {
  // [x,y]_{lam q} = [x,y] + lam^2 ([x,y]_q - [x,y]): both the rho part
  // and the correction [ad q x, ad q y] scale with lam^2.
  QuadraticRhoFamily f = canonical_family(MatrixAlgebraBasis::Kind::so_transpose, 3);
  Rng rng(101);
  for (int k = 0; k < 5; ++k) {
    Vec q = rand_vec(rng, 3);
    Scalar lam = rng.next_rational(5, 2);
    BilinearMap base = ipair_bracket(f, q);
    BilinearMap scaled = ipair_bracket(f, lam * q);
    const BilinearMap& amb = f.algebra()->bracket();
    CHECK(scaled == amb + (lam * lam) * (base - amb));
  }
}

TEST_CASE("ipair construction") {
  {
    IPair p = build_ipair(canonical_family(MatrixAlgebraBasis::Kind::so_transpose, 3));
    CHECK(p.conformance.overall());
    CHECK(p.samples.size() == 6);
    // h1 and h2 agree on the diagonal pair construction
    CHECK(p.h1(Vec::basis(3, 0)) == p.h2(Vec::basis(3, 0)));
  }
  {
    // abelian ambient algebra, zero family: every induced bracket is zero
    auto ab = std::make_shared<const LieAlgebra>(LieAlgebra::abelian(3));
    QuadraticRhoFamily f(ab, std::vector<Scalar>(81));
    IPair p = build_ipair(f);
    CHECK(p.conformance.overall());
    CHECK(p.h1(Vec::basis(3, 1)).is_zero());
  }
  {
    IPair p = build_ipair(canonical_family(MatrixAlgebraBasis::Kind::gl, 2));
    CHECK(p.conformance.overall());
  }
  {
    // refusal on a family failing the structure check
    CHECK_THROWS_AS(build_ipair(ansatz_family(Scalar(1), Scalar(1))), precondition_error);
  }
}
