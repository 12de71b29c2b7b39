#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace qt;

namespace {

const GaussianRational I = GaussianRational::i();

Form random_form(int generators, int degree, std::mt19937& rng) {
  Form f;
  std::uniform_int_distribution<long> v(-3, 3);
  for (Mask m : combinations(generators, degree)) {
    if (rng() % 3 == 0) f.add(m, GaussianRational(Rational(v(rng)), Rational(v(rng))));
  }
  return f;
}

int total_degree(const Form& f) { return f.is_zero() ? 0 : popcount(f.terms().begin()->first); }

}  // namespace

TEST_CASE("wedge product") {
  CHECK(wedge(phi({1}), phi({1})).is_zero());
  CHECK(phi({1, 2}) == -phi({2, 1}));
  CHECK(wedge(phi({1}) + phi({2}), phi({3})) == phi({1, 3}) + phi({2, 3}));
  CHECK(wedge_sign(0b0110, 0b0001) == 1);
  CHECK(wedge_sign(0b0010, 0b0001) == -1);
  CHECK(wedge_sign(0b0011, 0b0001) == 0);

  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    const int da = 1 + static_cast<int>(rng() % 3), db = 1 + static_cast<int>(rng() % 3);
    const Form a = random_form(8, da, rng), b = random_form(8, db, rng), c = random_form(8, 1, rng);
    const int sign = (da * db) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * GaussianRational(sign));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("exterior derivative on the real coframe") {
  const auto ext = real_exterior(corpus("example1"));
  const auto e = [](int k) { return Form::monomial(Mask(1) << (k - 1)); };
  CHECK(ext.d(e(6)) == wedge(e(1), e(2)) + wedge(e(3), e(4)));
  CHECK(ext.d(e(7)) == wedge(e(1), e(3)) + wedge(e(4), e(2)));
  CHECK(ext.d(Form::constant(GaussianRational(5))).is_zero());
  CHECK(ext.d(ext.d(e(7))).is_zero());
  // Antiderivation rule.
  const Form f = e(6), g = wedge(e(7), e(5));
  CHECK(ext.d(wedge(f, g)) == wedge(ext.d(f), g) - wedge(f, ext.d(g)));
}

TEST_CASE("bidegree projection") {
  const Session s(corpus("example1"));
  const Form e12 = wedge(e(s, 1), e(s, 2));
  // e¹ = (φ¹+φ̄¹)/2 and e² = i(φ¹−φ̄¹)/2.
  CHECK(s.project(e12, 1, 1) == wedge(phi({1}), phibar(s, 1)) * (-I * q(1, 2)));
  CHECK(s.project(e12, 2, 0).is_zero());
  CHECK(s.project(e12, 0, 2).is_zero());

  std::mt19937 rng(4);
  for (int k = 0; k < 10; ++k) {
    const Form f = random_form(8, 2, rng);
    Form sum;
    for (int p = 0; p <= 2; ++p) sum += s.project(f, p, 2 - p);
    CHECK(sum == f);
  }
  CHECK(s.project(phi({1, 3}), 2, 0) == phi({1, 3}));
  CHECK(s.project(phi({1, 3}), 1, 1).is_zero());
}

TEST_CASE("Example 1 structure equations in the quaternionic coframe") {
  const Session s(corpus("example1"));
  const Form d3 = s.d(phi({3}));
  CHECK(d3 == (wedge(phi({1}), phibar(s, 1)) + wedge(phi({2}), phibar(s, 2))) * q(-1, 2));
  CHECK(s.project(d3, 2, 0).is_zero());
  CHECK(s.project(d3, 0, 2).is_zero());
  CHECK(s.d(phi({4})) == phi({1, 2}));
  CHECK(s.d(phi({1})).is_zero());
  CHECK(s.d(phi({2})).is_zero());
}

TEST_CASE("Example 1 ∂ and ∂_J tables") {
  const Session s(corpus("example1"));
  const Form zero;
  const Form expected_del[] = {zero, zero, zero, phi({1, 2})};
  const Form expected_delJ[] = {zero, zero, phi({1, 2}), zero};
  for (int a = 1; a <= 4; ++a) {
    CAPTURE(a);
    CHECK(s.del(phi({a})) == expected_del[a - 1]);
    CHECK(s.del_J(phi({a})) == expected_delJ[a - 1]);
  }
  // Matrix realization: 6×4, the single nonzero column belongs to φ⁴.
  const Matrix& m = s.matrix(Op::Del, 1);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 4);
  for (std::size_t c = 0; c < 3; ++c) CHECK(is_zero(m.column(c)));
  CHECK(m.column(3) == s.to_vector(phi({1, 2}), 2));
  CHECK(s.matrix(Op::DdJ, 0).is_zero());
  CHECK(s.matrix(Op::Del, 4).rows() == 0);
}

TEST_CASE("Example 2 structure equations") {
  // The displayed coframe, rebuilt from the real one: φ¹ = e¹ − i((t−1)/t)e²,
  // φ² = e³ − ie⁴, φ³ = e⁵ − (i/t)e⁶, φ⁴ = e⁷ − ie⁸.
  for (auto [num, den] : {std::pair{1L, 3L}, {1L, 4L}, {3L, 4L}, {1L, 2L}}) {
    const Rational t(num, den);
    CAPTURE(t.get_str());
    const Session s(example2(num, den));
    const GaussianRational tq(t);
    const Form p1 = e(s, 1) - e(s, 2) * (I * (tq - 1) / tq);
    const Form p2 = e(s, 3) - e(s, 4) * I;
    const Form p3 = e(s, 5) - e(s, 6) * (I / tq);
    const Form p4 = e(s, 7) - e(s, 8) * I;
    const Form p12 = wedge(p1, p2);
    for (const Form& f : {p1, p2, p3, p4}) CHECK(s.project(f, 0, 1).is_zero());
    CHECK(s.del(p1).is_zero());
    CHECK(s.del(p2).is_zero());
    CHECK(s.del(p3).is_zero());
    CHECK(s.del(p4) == p12 * ((2 * tq - 1) / (2 * (tq - 1))));
    CHECK(s.del_J(p1).is_zero());
    CHECK(s.del_J(p2).is_zero());
    CHECK(s.del_J(p3) == p12 * ((2 * tq - 1) / (2 * tq * (tq - 1))));
    CHECK(s.del_J(p4).is_zero());
    const Form expected_d3 = wedge(p1, s.conj(p1)) * (GaussianRational(1) / (2 * (1 - tq))) -
                             wedge(p2, s.conj(p2)) * (GaussianRational(1) / (2 * tq));
    CHECK(s.d(p3) == expected_d3);
  }
}

TEST_CASE("Example 3 structure equations") {
  // Coframe generators 2 and 3 are swapped relative to the displayed list.
  const Session s(corpus("example3"));
  for (int a = 1; a <= 4; ++a) {
    CHECK(s.del(phi({a})).is_zero());
    CHECK(s.del_J(phi({a})).is_zero());
  }
  CHECK(s.del(phi({5})) == phi({1, 3}) * q(1, 2));
  CHECK(s.del(phi({6})) == phi({1, 4}) * q(1, 2));
  CHECK(s.del_J(phi({5})) == phi({3, 2}) * q(1, 2));
  CHECK(s.del_J(phi({6})) == phi({2, 4}) * q(-1, 2));
}

TEST_CASE("J̄ action") {
  const Session s(corpus("example1"));
  CHECK(s.Jbar(phi({1})) == phi({2}));
  const Form omega = s.standard_omega();
  CHECK(omega == phi({1, 2}) + phi({3, 4}));
  CHECK(s.Jbar(omega) == omega);
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    const Form f = random_form(4, 2, rng);
    CHECK(s.Jbar(s.Jbar(f)) == f);
    const Form g = random_form(4, 1, rng);
    CHECK(s.Jbar(s.Jbar(g)) == -g);
  }
  // J maps (p,q) to (q,p) and squares to (−1)^{p+q}.
  const Form mixed = wedge(phi({1}), phibar(s, 3));
  CHECK(s.J(s.J(mixed)) == mixed);
  CHECK(s.project(s.J(mixed), 1, 1) == s.J(mixed));
}

TEST_CASE("operator matrix identities") {
  for (const auto& alg : {corpus("example1"), corpus("example3"), example2(1, 3), corpus("abelian8")}) {
    const Session s(alg);
    for (int p = 0; p <= s.n2(); ++p) {
      CAPTURE(p);
      const Matrix& d = s.matrix(Op::Del, p);
      const Matrix& dj = s.matrix(Op::DelJ, p);
      const Matrix& d1 = s.matrix(Op::Del, p + 1);
      const Matrix& dj1 = s.matrix(Op::DelJ, p + 1);
      CHECK(d.rows() == s.dim(p + 1));
      CHECK(d.cols() == s.dim(p));
      if (p + 1 <= s.n2()) {
        CHECK((d1 * d).is_zero());
        CHECK((dj1 * dj).is_zero());
        CHECK((d1 * dj + dj1 * d).is_zero());
        CHECK(s.matrix(Op::DdJ, p) == d1 * dj);
        // ∂_J∘J̄ = −J̄∘∂ with J̄ antilinear.
        CHECK(dj * s.matrix(Op::Jbar, p) == -(s.matrix(Op::Jbar, p + 1) * d.conj()));
      }
      const Matrix& L = s.matrix(Op::Jbar, p);
      const long sign = p % 2 == 0 ? 1 : -1;
      CHECK(L * L.conj() == Matrix::identity(s.dim(p)).scaled(GaussianRational(sign)));
    }
  }
}

TEST_CASE("form-level operators match the matrices") {
  const Session s(example2(2, 5));
  std::mt19937 rng(12);
  for (int p = 0; p < s.n2(); ++p) {
    const Form f = random_form(s.n2(), p, rng);
    const Vector v = s.to_vector(f, p);
    CHECK(s.to_form(v, p) == f);
    CHECK(s.to_vector(s.del(f), p + 1) == s.matrix(Op::Del, p).apply(v));
    CHECK(s.to_vector(s.del_J(f), p + 1) == s.matrix(Op::DelJ, p).apply(v));
    CHECK(s.to_vector(s.Jbar(f), p) == s.matrix(Op::Jbar, p).apply(conj(v)));
    CHECK(total_degree(s.del(f)) == (s.del(f).is_zero() ? 0 : p + 1));
  }
}
