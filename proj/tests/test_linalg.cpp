#include <random>

#include "doctest.h"
#include "quatcoh/errors.hpp"
#include "quatcoh/matrix.hpp"
#include "quatcoh/subspace.hpp"

using namespace quatcoh;

namespace {

GaussianRational g(long re, long im = 0) { return {Rational(re), Rational(im)}; }

Matrix from_ints(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = g(rows[r][c]);
  }
  return m;
}

// Product of random Gaussian-integer factors, so the rank is controlled.
Matrix random_matrix(std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937& rng) {
  std::uniform_int_distribution<long> v(-3, 3);
  Matrix a(rows, rank), b(rank, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < rank; ++c) a(r, c) = g(v(rng), v(rng));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = g(v(rng), v(rng));
  return a * b;
}

Vector unit(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = g(1);
  return v;
}

}  // namespace

TEST_CASE("rref of a known matrix") {
  const Matrix m = from_ints({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
  const Rref r = rref(m, Exec::Serial);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == from_ints({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  CHECK(rank(m, Exec::Serial) == 2);
  CHECK(nullity(m) == 1);
  const Matrix k = kernel(m, Exec::Serial);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(k.column(0) == Vector{g(1), g(-2), g(1)});
}

TEST_CASE("inverse, determinant and solve") {
  Matrix m(2, 2);
  m(0, 0) = g(1, 1);
  m(0, 1) = g(2);
  m(1, 0) = g(0, -1);
  m(1, 1) = g(3);
  CHECK(determinant(m) == g(3, 5));
  CHECK(m * inverse(m, Exec::Serial) == Matrix::identity(2));
  CHECK(inverse(m, Exec::Parallel) == inverse(m, Exec::Serial));
  CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}}), Exec::Serial), DivisionByZero);
  CHECK_THROWS_AS(inverse(from_ints({{1, 2, 3}}), Exec::Serial), DimensionMismatch);

  const Vector b{g(1), g(0, 2)};
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);
  CHECK_FALSE(solve(from_ints({{1, 1}, {1, 1}}), Vector{g(1), g(2)}).has_value());
}

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    const std::size_t rows = 10 + rng() % 25, cols = 10 + rng() % 25;
    const std::size_t rk = 1 + rng() % std::min(rows, cols);
    const Matrix m = random_matrix(rows, cols, rk, rng);
    const Rref s = rref(m, Exec::Serial);
    const Rref p = rref(m, Exec::Parallel);
    CHECK(s.reduced == p.reduced);
    CHECK(s.pivots == p.pivots);
    CHECK(s.pivots.size() == rk);
    CHECK(kernel(m, Exec::Serial) == kernel(m, Exec::Parallel));
    CHECK((m * kernel(m, Exec::Parallel)).is_zero());
  }
}

TEST_CASE("subspace arithmetic") {
  const auto u = Subspace::span({unit(3, 0)}, 3);
  const auto v = Subspace::span({unit(3, 0) + unit(3, 1)}, 3);
  CHECK((u + v).dim() == 2);
  CHECK(u.intersect(v).dim() == 0);
  CHECK(u.intersect(u) == u);
  CHECK((u + v).contains(unit(3, 1)));
  CHECK_FALSE((u + v).contains(unit(3, 2)));
  CHECK(Subspace::quotient_dim(u + v, u) == 1);
  CHECK_THROWS_AS(Subspace::quotient_dim(u, v), NotASubspace);
  // Canonical bases do not depend on the spanning set.
  CHECK(Subspace::span({unit(3, 1), unit(3, 0)}, 3) == Subspace::span({unit(3, 0) + unit(3, 1), unit(3, 0) - unit(3, 1)}, 3));
  const auto comp = Subspace::complement(Subspace::whole(3), u);
  CHECK(comp.size() == 2);
  CHECK((u + Subspace::span(comp, 3)).dim() == 3);
}

TEST_CASE("intersection against a joint kernel") {
  // dim(U ∩ V) is the nullity of [U | −V] when both column sets are independent.
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) {
    const std::size_t du = 1 + rng() % 4, dv = 1 + rng() % 4;
    Matrix bu = random_matrix(5, du, du, rng);
    Matrix bv = random_matrix(5, dv, std::min<std::size_t>(dv, 1 + rng() % 4), rng);
    const auto u = Subspace::image(bu);
    const auto v = Subspace::image(bv);
    const Matrix joint = Matrix::hstack(u.basis().transpose(), -v.basis().transpose());
    const auto w = u.intersect(v);
    CHECK(w.dim() == nullity(joint));
    for (const auto& x : w.vectors()) {
      CHECK(u.contains(x));
      CHECK(v.contains(x));
    }
    CHECK((u + v).dim() == u.dim() + v.dim() - w.dim());
  }
}

TEST_CASE("images, kernels and preimages") {
  const Matrix m = from_ints({{1, 0, 1}, {0, 1, 1}});
  CHECK(Subspace::kernel_of(m).dim() == 1);
  CHECK(Subspace::image(m).dim() == 2);
  const auto target = Subspace::span({unit(2, 0)}, 2);
  const auto pre = Subspace::preimage(m, target);
  CHECK(pre.dim() == 2);
  for (const auto& x : pre.vectors()) CHECK(target.contains(m.apply(x)));
  CHECK(Subspace::whole(3).mapped(m) == Subspace::whole(2));
}
