#include "doctest.h"
#include "quatcoh/cohomology.hpp"
#include "quatcoh/errors.hpp"
#include "quatcoh/metric.hpp"
#include "test_support.hpp"

using namespace qt;

namespace {

Matrix diag(std::vector<long> v) {
  Matrix m(v.size(), v.size());
  for (std::size_t k = 0; k < v.size(); ++k) m(k, k) = GaussianRational(v[k]);
  return m;
}

}  // namespace

TEST_CASE("Sylvester criterion") {
  CHECK(positive_definite(diag({1, 2, 3})));
  CHECK_FALSE(positive_definite(diag({1, -1})));
  CHECK_FALSE(positive_definite(diag({1, 0})));
  Matrix h(2, 2);
  h(0, 0) = GaussianRational(2);
  h(1, 1) = GaussianRational(1);
  h(0, 1) = GaussianRational::i();
  h(1, 0) = -GaussianRational::i();
  CHECK(leading_minors(h) == std::vector<GaussianRational>{GaussianRational(2), GaussianRational(1)});
  CHECK(positive_definite(h));
  h(1, 1) = q(1, 2);
  CHECK_FALSE(positive_definite(h));
  // Not Hermitian.
  h(1, 0) = GaussianRational::i();
  h(1, 1) = GaussianRational(5);
  CHECK_FALSE(positive_definite(h));
}

TEST_CASE("standard form on Example 1") {
  const Session s(corpus("example1"));
  const Form omega = s.standard_omega();
  const auto c = classify_metric(s, omega);
  CHECK(c.gram == Matrix::identity(4).scaled(q(1, 2)));
  CHECK(c.flags.hermitian);
  CHECK_FALSE(c.flags.hkt);
  CHECK_FALSE(c.flags.hyperkahler);
  // ∂Ω_std = −φ³∧∂φ⁴ = −φ^{312}.
  CHECK(s.del(omega) == -phi({3, 1, 2}));
  CHECK_THROWS_AS(classify_metric(s, phi({1})), NotBidegree20);
}

TEST_CASE("standard form on Example 3") {
  const Session s(corpus("example3"));
  CHECK(s.standard_omega() == phi({1, 2}) + phi({3, 4}) + phi({5, 6}));
  CHECK(classify_metric(s, s.standard_omega()).flags.hermitian);
}

TEST_CASE("flags of the abelian and t = 1/2 cases") {
  const Session ab(corpus("abelian8"));
  const auto fa = classify_metric(ab, ab.standard_omega()).flags;
  CHECK(fa.hyperkahler);
  CHECK(fa.hkt);
  CHECK(fa.strongly_gauduchon);
  CHECK(fa.gauduchon);
  CHECK(fa.hermitian);

  const Session half(example2(1, 2));
  const auto fh = classify_metric(half, half.standard_omega()).flags;
  CHECK(fh.hkt);
  CHECK(fh.strongly_gauduchon);
  CHECK(fh.hermitian);
}

TEST_CASE("non-positive candidates") {
  const Session s(corpus("abelian8"));
  const auto c = classify_metric(s, phi({1, 2}) - phi({3, 4}));
  CHECK_FALSE(c.flags.hermitian);
  CHECK_FALSE(c.flags.hkt);
  CHECK(s.del(phi({1, 2}) - phi({3, 4})).is_zero());
}

TEST_CASE("grid ordering") {
  const auto g = grid_values({2, 1, 100});
  CHECK(g == std::vector<Rational>{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("existence verdicts") {
  const SearchBounds b;
  const Session e1(corpus("example1"));
  const auto t1 = cohomology(e1);
  const auto h1 = hkt_existence(e1, t1, b);
  CHECK_FALSE(h1.answer);
  CHECK(h1.method == "delta2-criterion");
  CHECK(h1.delta2 == 2);
  CHECK(h1.h10 == 3);
  CHECK_FALSE(h1.certificate.has_value());
  CHECK_FALSE(sg_existence(e1, t1, b).answer);

  const Session half(example2(1, 2));
  const auto th = cohomology(half);
  const auto hh = hkt_existence(half, th, b);
  CHECK(hh.answer);
  CHECK(hh.method == "explicit-certificate");
  REQUIRE(hh.certificate.has_value());
  CHECK(hh.certificate->omega == half.standard_omega());
  CHECK(hh.certificate->flags.hkt);
  CHECK(positive_definite(hh.certificate->gram));
  CHECK(sg_existence(half, th, b).answer);
  CHECK(hh.delta2 == 0);

  const Session third(example2(1, 3));
  const auto t3 = cohomology(third);
  CHECK_FALSE(hkt_existence(third, t3, b).answer);
  CHECK(t3.at(2).delta == 2);

  const Session ab(corpus("abelian8"));
  const auto sa = sg_existence(ab, cohomology(ab), b);
  CHECK(sa.answer);
  REQUIRE(sa.certificate.has_value());
  CHECK(sa.certificate->flags.strongly_gauduchon);

  const Session e3(corpus("example3"));
  CHECK_THROWS_AS(hkt_existence(e3, cohomology(e3), b), NotSL2);
  CHECK_THROWS_AS(sg_existence(e3, cohomology(e3), b), NotSL2);
}

TEST_CASE("a tampered table is a theorem violation") {
  const Session e1(corpus("example1"));
  auto t = cohomology(e1);
  t.rows[2].delta = 0;  // Δ² = 0 with h^{1,0} odd
  CHECK_THROWS_AS(hkt_existence(e1, t, SearchBounds{}), TheoremViolation);
}

TEST_CASE("search: serial and parallel agree") {
  for (const auto& alg : {example2(1, 2), corpus("abelian8"), corpus("example1")}) {
    const Session s(alg);
    for (auto kind : {MetricKind::HKT, MetricKind::StronglyGauduchon}) {
      const SearchBounds b{3, 2, 3000};
      const auto a = search_metric(s, kind, b, Exec::Serial);
      const auto p = search_metric(s, kind, b, Exec::Parallel);
      CHECK(a.probes == p.probes);
      CHECK(a.solution_dim == p.solution_dim);
      CHECK(a.exhausted == p.exhausted);
      REQUIRE(a.found.has_value() == p.found.has_value());
      if (a.found) {
        CHECK(a.found->omega == p.found->omega);
        CHECK(positive_definite(a.found->gram));
      }
    }
  }
}

TEST_CASE("solution space decouples linear conditions from positivity") {
  const Session s(example2(1, 2));
  for (const auto& v : metric_solution_space(s, MetricKind::HKT)) {
    const Form f = s.to_form(v, 2);
    CHECK(s.del(f).is_zero());
    CHECK(s.Jbar(f) == f);
    const auto c = classify_metric(s, f);
    CHECK(c.flags.hkt == positive_definite(c.gram));
  }
  const Session e1(corpus("example1"));
  CHECK_FALSE(search_metric(e1, MetricKind::HKT, SearchBounds{}, Exec::Parallel).found.has_value());
}
