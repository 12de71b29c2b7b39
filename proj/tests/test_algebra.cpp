#include "doctest.h"
#include "quatcoh/errors.hpp"
#include "test_support.hpp"

using namespace qt;

namespace {

Vector row(std::size_t dim, std::vector<std::pair<int, GaussianRational>> entries) {
  Vector v(dim);
  for (auto& [k, c] : entries) v[static_cast<std::size_t>(k - 1)] = c;
  return v;
}

StructureTerm term(int i, int j, long c) { return {i, j, ParamExpr::constant({}, GaussianRational(c))}; }

}  // namespace

TEST_CASE("corpus validates") {
  const auto ex1 = validate(corpus("example1"));
  CHECK(ex1.ok());
  CHECK(ex1.jacobi_ok);
  CHECK(ex1.nilpotent_ok);
  CHECK(ex1.nilpotency_step == 2);
  CHECK(ex1.messages.empty());

  const auto ab = validate(corpus("abelian8"));
  CHECK(ab.ok());
  CHECK(ab.nilpotency_step == 1);

  const auto ex3 = validate(corpus("example3"));
  CHECK(ex3.ok());
  CHECK(ex3.integrability.at("I"));
  CHECK(ex3.integrability.at("J"));
  CHECK(ex3.integrability.at("K"));

  for (auto [num, den] : {std::pair{1L, 3L}, {1L, 2L}, {3L, 4L}, {5L, 7L}}) CHECK(validate(example2(num, den)).ok());
}

TEST_CASE("broken Jacobi identity is detected") {
  auto spec = corpus_spec("example1");
  spec.structure.assign(8, {});
  spec.structure[4] = {term(1, 2, 1)};
  spec.structure[5] = {term(1, 5, 1)};
  spec.structure[6] = {term(5, 6, 1)};
  const auto r = validate_lie_algebra(spec, {});
  CHECK_FALSE(r.jacobi_ok);
  CHECK_FALSE(r.messages.empty());
  CHECK_THROWS_AS(require_valid(r), ValidationError);
}

TEST_CASE("changing a coefficient of Example 1 keeps d squared zero") {
  auto spec = corpus_spec("example1");
  spec.structure[5][0].coeff = ParamExpr::constant({}, GaussianRational(2));
  CHECK(validate_lie_algebra(spec, {}).jacobi_ok);
}

TEST_CASE("a sign flip in J breaks the quaternionic relations") {
  auto spec = corpus_spec("example1");
  spec.J[1][3] = ParamExpr::constant({}, GaussianRational(1));
  const auto r = validate_hypercomplex(spec, {});
  CHECK_FALSE(r.quaternionic_relations_ok);
  CHECK_FALSE(r.messages.empty());
  CHECK_THROWS_AS(require_valid(r), QuaternionicRelationFailure);
  CHECK_THROWS_AS(Session(instantiate(spec, {})), QuaternionicRelationFailure);
}

TEST_CASE("instantiation errors") {
  const auto spec = corpus_spec("example2");
  CHECK_THROWS_AS(instantiate(spec, {}), UnboundParameter);
  CHECK_THROWS_AS(instantiate(spec, {{"t", Rational(1)}}), PoleAtBinding);
  CHECK_THROWS_AS(instantiate(spec, {{"t", Rational(0)}}), PoleAtBinding);

  auto bad = corpus_spec("example1");
  bad.structure[5].push_back(term(3, 9, 1));
  CHECK_THROWS_AS(instantiate(bad, {}), IndexError);
}

TEST_CASE("K is I∘J and the quaternion relations hold") {
  for (const auto& alg : {corpus("example1"), corpus("example3"), example2(1, 3)}) {
    const auto id = Matrix::identity(static_cast<std::size_t>(alg.dim));
    // Rows act on the coframe, so I∘J has matrix J·I.
    CHECK(alg.K == alg.J * alg.I);
    CHECK(alg.K * alg.K == -id);
    CHECK(alg.I * alg.K == -(alg.K * alg.I));
    CHECK(alg.I * alg.I == -id);
    CHECK(alg.J * alg.J == -id);
  }
}

TEST_CASE("Example 1 coframe") {
  const Session s(corpus("example1"));
  const auto& phi = s.coframe().phi;
  const auto mi = -GaussianRational::i();
  REQUIRE(phi.size() == 4);
  CHECK(phi[0] == row(8, {{1, 1}, {2, mi}}));
  CHECK(phi[1] == row(8, {{3, 1}, {4, mi}}));
  CHECK(phi[2] == row(8, {{5, 1}, {6, mi}}));
  CHECK(phi[3] == row(8, {{7, 1}, {8, mi}}));
}

TEST_CASE("Example 2 coframe") {
  // φ¹ = e¹ − i((t−1)/t)e² at t = 1/3.
  const Session s(example2(1, 3));
  CHECK(s.coframe().phi[0] == row(8, {{1, 1}, {2, 2 * GaussianRational::i()}}));
  // φ³ = e⁵ − i(1/t)e⁶.
  CHECK(s.coframe().phi[2] == row(8, {{5, 1}, {6, -3 * GaussianRational::i()}}));
}

TEST_CASE("Example 3 coframe pairs φ² with the J-partner of φ¹") {
  const Session s(corpus("example3"));
  const auto& phi = s.coframe().phi;
  const auto mi = -GaussianRational::i();
  CHECK(phi[0] == row(12, {{1, 1}, {2, mi}}));
  CHECK(phi[1] == row(12, {{5, 1}, {6, mi}}));
  CHECK(phi[2] == row(12, {{3, 1}, {4, mi}}));
  CHECK(phi[3] == row(12, {{7, 1}, {8, mi}}));
  CHECK(phi[4] == row(12, {{9, 1}, {10, mi}}));
  CHECK(phi[5] == row(12, {{11, 1}, {12, mi}}));
}

TEST_CASE("coframe invariants") {
  for (const auto& alg : {corpus("example1"), corpus("example3"), corpus("abelian8"), example2(2, 7)}) {
    const Session s(alg);
    const auto& cf = s.coframe();
    // +i eigenvectors of I.
    for (const auto& p : cf.phi) {
      const Matrix r = Matrix::from_rows({p}, p.size());
      CHECK(r * alg.I == r.scaled(GaussianRational::i()));
    }
    CHECK(cf.frame * cf.frame_inverse == Matrix::identity(static_cast<std::size_t>(alg.dim)));
    // J̄ on 1-forms: L·conj(L) = −Id, and J̄φ^{2k−1} = φ^{2k}.
    const Matrix& L = s.matrix(Op::Jbar, 1);
    CHECK(L * L.conj() == -Matrix::identity(L.rows()));
    for (int k = 0; k < s.n2(); k += 2) {
      CHECK(s.Jbar(Form::monomial(Mask(1) << k)) == Form::monomial(Mask(1) << (k + 1)));
    }
  }
}
