#include "quatcoh/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "quatcoh/errors.hpp"

namespace quatcoh {

namespace {

// Builder for a direct sum: each piece appends basis vectors to degrees and
// records matrix entries between them.
struct Assembler {
  int top;
  std::vector<std::size_t> dims;
  struct Entry {
    int op;  // 1 or 2
    int p;
    std::size_t from, to;
    GaussianRational value;
  };
  std::vector<Entry> entries;

  explicit Assembler(int t) : top(t), dims(static_cast<std::size_t>(t + 1), 0) {}

  std::size_t add(int p) { return dims[static_cast<std::size_t>(p)]++; }
  void map(int op, int p, std::size_t from, std::size_t to, GaussianRational v = GaussianRational(1)) {
    entries.push_back({op, p, from, to, std::move(v)});
  }

  DoubleComplex build() const {
    DoubleComplex dc;
    dc.dims = dims;
    for (int p = 0; p <= top; ++p) {
      const std::size_t next = p < top ? dims[static_cast<std::size_t>(p + 1)] : 0;
      dc.d1.emplace_back(next, dims[static_cast<std::size_t>(p)]);
      dc.d2.emplace_back(next, dims[static_cast<std::size_t>(p)]);
    }
    for (const auto& e : entries) {
      auto& m = (e.op == 1 ? dc.d1 : dc.d2)[static_cast<std::size_t>(e.p)];
      m(e.to, e.from) += e.value;
    }
    return dc;
  }
};

void add_dot(Assembler& a, int p) { a.add(p); }

void add_square(Assembler& a, int p) {
  const auto x = a.add(p);
  const auto u = a.add(p + 1), v = a.add(p + 1);
  const auto w = a.add(p + 2);
  a.map(1, p, x, u);
  a.map(2, p, x, v);
  a.map(2, p + 1, u, w);
  a.map(1, p + 1, v, w, GaussianRational(-1));
}

// Sources in degree p, targets in degree p+1, edges alternating between the
// two differentials.
void add_zigzag(Assembler& a, int p, std::size_t sources, bool d1_first, bool extra_target) {
  std::vector<std::size_t> s, t;
  for (std::size_t k = 0; k < sources; ++k) s.push_back(a.add(p));
  const std::size_t targets = sources + (extra_target ? 1 : 0);
  for (std::size_t k = 0; k < std::max<std::size_t>(targets, 1); ++k) t.push_back(a.add(p + 1));
  for (std::size_t k = 0; k < sources; ++k) {
    a.map(d1_first ? 1 : 2, p, s[k], t[k]);
    if (k + 1 < t.size()) a.map(d1_first ? 2 : 1, p, s[k], t[k + 1]);
  }
}

Matrix random_gaussian_change(std::size_t n, std::mt19937& rng) {
  Matrix b = Matrix::identity(n);
  if (n < 2) {
    if (n == 1) b(0, 0) = GaussianRational(2, 1);
    return b;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix e = Matrix::identity(n);
    e(i, j) = GaussianRational(coef(rng), coef(rng));
    b = e * b;
  }
  return b;
}

DoubleComplex conjugate_by_random_bases(const DoubleComplex& dc, std::mt19937& rng) {
  std::vector<Matrix> b, binv;
  for (std::size_t p = 0; p < dc.dims.size(); ++p) {
    b.push_back(random_gaussian_change(dc.dims[p], rng));
    binv.push_back(inverse(b.back()));
  }
  DoubleComplex out = dc;
  for (std::size_t p = 0; p + 1 < dc.dims.size(); ++p) {
    out.d1[p] = b[p + 1] * dc.d1[p] * binv[p];
    out.d2[p] = b[p + 1] * dc.d2[p] * binv[p];
  }
  return out;
}

DoubleComplex assemble(int top, std::mt19937& rng, ComplexShape* shape, bool zigzags) {
  if (top < 2) throw DimensionMismatch("random complexes need at least three degrees");
  Assembler a(top);
  ComplexShape local;
  ComplexShape& sh = shape ? *shape : local;
  sh = ComplexShape{};
  sh.dots_per_degree.assign(static_cast<std::size_t>(top + 1), 0);
  std::uniform_int_distribution<int> count(0, 2), deg(0, top), deg_sq(0, top - 2), deg_zz(0, top - 1);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  std::bernoulli_distribution coin(0.5);
  for (int k = count(rng) + 1; k > 0; --k) {
    const int p = deg(rng);
    add_dot(a, p);
    ++sh.dots;
    ++sh.dots_per_degree[static_cast<std::size_t>(p)];
  }
  for (int k = count(rng); k > 0; --k) {
    add_square(a, deg_sq(rng));
    ++sh.squares;
  }
  if (zigzags) {
    for (int k = count(rng) + 1; k > 0; --k) {
      add_zigzag(a, deg_zz(rng), len(rng), coin(rng), coin(rng));
      ++sh.zigzags;
    }
  }
  return conjugate_by_random_bases(a.build(), rng);
}

}  // namespace

Algebra change_basis(const Algebra& alg, const Matrix& p) {
  if (!p.is_real()) throw DimensionMismatch("basis changes of the real coframe must be real");
  const Matrix q = inverse(p);
  const ExteriorAlgebra ext = real_exterior(alg);
  // e^i = Σ_a Q(i,a) f^a.
  std::vector<Form> images;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    Form f;
    for (std::size_t a = 0; a < q.cols(); ++a) f.add(Mask{1} << a, q(i, a));
    images.push_back(std::move(f));
  }
  Algebra out = alg;
  out.d.assign(alg.d.size(), {});
  for (std::size_t k = 0; k < p.rows(); ++k) {
    Form df;
    for (std::size_t l = 0; l < p.cols(); ++l) {
      if (!p(k, l).is_zero()) df += ext.d_generator(static_cast<int>(l)) * p(k, l);
    }
    const Form g = ExteriorAlgebra::multiplicative(images, df);
    for (const auto& [m, c] : g.terms()) {
      const int i = std::countr_zero(m);
      const int j = std::countr_zero(m & (m - 1));
      if (sgn(c.im()) != 0) throw DimensionMismatch("basis change produced a complex structure constant");
      out.d[k][{i, j}] = c.re();
    }
  }
  out.I = p * alg.I * q;
  out.J = p * alg.J * q;
  out.K = out.J * out.I;
  if (alg.K_input) out.K_input = p * *alg.K_input * q;
  return out;
}

Matrix random_real_basis_change(std::size_t dim, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Matrix b = Matrix::identity(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix e = Matrix::identity(dim);
    e(i, j) = GaussianRational(coef(rng));
    b = e * b;
  }
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix pm(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) pm(k, perm[k]) = GaussianRational(1);
  return pm * b;
}

Algebra perturb_coefficients(const Algebra& alg, std::mt19937& rng, int attempts) {
  static const long nums[] = {2, 1, -1, 3, -2, 1};
  static const long dens[] = {1, 2, 1, 1, 3, 3};
  std::uniform_int_distribution<int> pick(0, 5);
  for (int k = 0; k < attempts; ++k) {
    Algebra out = alg;
    for (auto& eq : out.d) {
      for (auto& [ij, c] : eq) {
        const int m = pick(rng);
        c *= Rational(nums[m], dens[m]);
        c.canonicalize();
      }
    }
    if (out.d != alg.d && validate(out).ok()) return out;
  }
  const int m = pick(rng);
  Rational lambda(nums[m] == 1 && dens[m] == 1 ? 5 : nums[m], dens[m]);
  lambda.canonicalize();
  Algebra out = alg;
  for (auto& eq : out.d) {
    for (auto& [ij, c] : eq) c *= lambda;
  }
  return out;
}

Rational random_parameter(std::mt19937& rng, long max_den) {
  std::uniform_int_distribution<long> den(3, max_den);
  while (true) {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(1, q - 1);
    Rational t(num(rng), q);
    t.canonicalize();
    if (t != Rational(1, 2)) return t;
  }
}

DoubleComplex random_double_complex(int top, std::mt19937& rng, ComplexShape* shape) {
  return assemble(top, rng, shape, true);
}

DoubleComplex random_dot_square_complex(int top, std::mt19937& rng, ComplexShape* shape) {
  return assemble(top, rng, shape, false);
}

}  // namespace quatcoh
