#include "quatcoh/metric.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "quatcoh/errors.hpp"
#include "quatcoh/subspace.hpp"
#include "quatcoh/sl_structure.hpp"

namespace quatcoh {

namespace {

constexpr std::size_t kBatch = 512;

void require_20(const Session& s, const Form& omega) {
  for (const auto& [m, c] : omega.terms()) {
    if (s.bidegree(m) != std::pair<int, int>{2, 0}) throw NotBidegree20("Ω must be a (2,0)-form");
  }
}

Matrix real_part(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c).re());
  return out;
}

Matrix imag_part(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c).im());
  return out;
}

// [Cr, −Ci; Ci, Cr] acting on (x, y) with v = x + i·y.
Matrix realify_linear(const Matrix& c) {
  const Matrix cr = real_part(c), ci = imag_part(c);
  return Matrix::vstack(Matrix::hstack(cr, -ci), Matrix::hstack(ci, cr));
}

// L·conj(v) = v on (x, y).
Matrix realify_jbar(const Matrix& l) {
  const Matrix lr = real_part(l), li = imag_part(l);
  const Matrix id = Matrix::identity(l.rows());
  return Matrix::vstack(Matrix::hstack(lr - id, li), Matrix::hstack(li, -lr - id));
}

Vector complexify(const Vector& xy) {
  const std::size_t n = xy.size() / 2;
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = GaussianRational(xy[k].re(), xy[k + n].re());
  return v;
}

Vector realify(const Vector& v) {
  Vector xy(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    xy[k] = GaussianRational(v[k].re());
    xy[k + v.size()] = GaussianRational(v[k].im());
  }
  return xy;
}

// Rows whose common kernel is the column span of w.
Matrix annihilator(const Subspace& w) {
  if (w.dim() == 0) return Matrix::identity(w.ambient());
  return kernel(w.basis()).transpose();
}

Matrix constraint_matrix(const Session& s, MetricKind kind) {
  const Matrix& del2 = s.matrix(Op::Del, 2);
  Matrix lin = del2;
  if (kind == MetricKind::StronglyGauduchon) {
    if (s.n() != 2) throw NotSL2("the strongly Gauduchon condition is linear in Ω only for n = 2");
    lin = annihilator(Subspace::image(s.matrix(Op::DelJ, 2))) * del2;
  }
  return Matrix::vstack(realify_jbar(s.matrix(Op::Jbar, 2)), realify_linear(lin));
}

// Odometer over index tuples in [0, shell]^k having at least one entry equal
// to shell; shells grow until the value list is used up.
class ShellWalker {
 public:
  ShellWalker(std::size_t k, std::size_t values) : idx_(k, 0), values_(values) {}

  bool next(std::vector<std::size_t>& out) {
    while (true) {
      if (!started_) {
        started_ = true;
        out = idx_;
        return true;  // shell 0: the zero tuple
      }
      if (!advance()) return false;
      if (std::find(idx_.begin(), idx_.end(), shell_) != idx_.end()) {
        out = idx_;
        return true;
      }
    }
  }

 private:
  bool advance() {
    for (std::size_t j = idx_.size(); j-- > 0;) {
      if (idx_[j] < shell_) {
        ++idx_[j];
        return true;
      }
      idx_[j] = 0;
    }
    // Wrapped around: open the next shell.
    if (shell_ + 1 >= values_ || idx_.empty()) return false;
    ++shell_;
    std::fill(idx_.begin(), idx_.end(), 0);
    idx_.back() = shell_;
    return true;
  }

  std::vector<std::size_t> idx_;
  std::size_t values_;
  std::size_t shell_ = 0;
  bool started_ = false;
};

}  // namespace

Matrix gram_matrix(const Session& s, const Vector& omega) {
  const int n2 = s.n2();
  const auto& basis = s.basis(2);
  Matrix w(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Mask m = basis[k];
    const auto a = static_cast<std::size_t>(std::countr_zero(m));
    const auto b = static_cast<std::size_t>(std::countr_zero(m & (m - 1)));
    w(a, b) = omega[k];
    w(b, a) = -omega[k];
  }
  Matrix q(w.rows(), w.cols());
  for (std::size_t k = 0; k + 1 < q.rows(); k += 2) {
    q(k + 1, k) = GaussianRational(1);
    q(k, k + 1) = GaussianRational(-1);
  }
  return (w * q).scaled(GaussianRational(Rational(1, 2)));
}

std::vector<GaussianRational> leading_minors(const Matrix& g) {
  std::vector<GaussianRational> out;
  for (std::size_t k = 1; k <= g.rows(); ++k) out.push_back(determinant(g.block(0, 0, k, k)));
  return out;
}

bool positive_definite(const Matrix& g) {
  for (std::size_t k = 0; k < g.rows(); ++k) {
    if (sgn(g(k, k).im()) != 0 || sgn(g(k, k).re()) <= 0) return false;
  }
  if (!(g == g.adjoint())) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    const GaussianRational m = determinant(g.block(0, 0, k, k));
    if (sgn(m.im()) != 0 || sgn(m.re()) <= 0) return false;
  }
  return true;
}

MetricCandidate classify_metric(const Session& s, const Form& omega) {
  require_20(s, omega);
  MetricCandidate c;
  c.omega = omega;
  c.gram = gram_matrix(s, s.to_vector(omega, 2));
  c.minors = leading_minors(c.gram);
  bool minors_positive = true;
  for (const auto& m : c.minors) {
    if (sgn(m.im()) != 0 || sgn(m.re()) <= 0) minors_positive = false;
  }
  auto& f = c.flags;
  f.hermitian = s.Jbar(omega) == omega && c.gram == c.gram.adjoint() && minors_positive;
  const Form power = wedge_power(omega, s.n() - 1);
  const Form dpow = s.del(power);
  const Subspace dj_image = Subspace::image(s.matrix(Op::DelJ, s.n2() - 2));
  f.hkt = f.hermitian && s.del(omega).is_zero();
  f.gauduchon = f.hermitian && s.del(s.del_J(power)).is_zero();
  f.strongly_gauduchon = f.hermitian && dj_image.contains(s.to_vector(dpow, s.n2() - 1));
  f.hyperkahler = f.hermitian && s.d(omega).is_zero();
  return c;
}

std::vector<Vector> metric_solution_space(const Session& s, MetricKind kind) {
  const Matrix basis = kernel(constraint_matrix(s, kind));
  std::vector<Vector> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(complexify(basis.column(j)));
  return out;
}

std::vector<Rational> grid_values(const SearchBounds& b) {
  std::vector<Rational> out{Rational(0)};
  for (long den = 1; den <= b.denominator; ++den) {
    for (long num = 1; num <= b.coefficient * den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      out.emplace_back(num, den);
      out.emplace_back(-num, den);
    }
  }
  for (auto& v : out) v.canonicalize();
  return out;
}

SearchResult search_metric(const Session& s, MetricKind kind, const SearchBounds& b, Exec exec) {
  SearchResult res;
  const Matrix basis = kernel(constraint_matrix(s, kind));
  const std::size_t k = basis.cols();
  res.solution_dim = k;
  if (k == 0) {
    res.exhausted = true;
    return res;
  }
  const auto to_omega = [&](const Vector& coeffs) { return complexify(basis.apply(coeffs)); };
  // G is linear in the kernel coordinates; the diagonal rejects most probes.
  std::vector<Matrix> grams;
  for (std::size_t j = 0; j < k; ++j) grams.push_back(gram_matrix(s, complexify(basis.column(j))));
  const std::size_t m = grams.front().rows();
  const auto positive_coords = [&](const Vector& c) {
    for (std::size_t a = 0; a < m; ++a) {
      GaussianRational diag;
      for (std::size_t j = 0; j < k; ++j) {
        if (!c[j].is_zero() && !grams[j](a, a).is_zero()) diag += c[j] * grams[j](a, a);
      }
      if (sgn(diag.im()) != 0 || sgn(diag.re()) <= 0) return false;
    }
    Matrix g(m, m);
    for (std::size_t j = 0; j < k; ++j) {
      if (!c[j].is_zero()) g = g + grams[j].scaled(c[j]);
    }
    return positive_definite(g);
  };
  const auto accept = [&](const Vector& omega) {
    res.found = classify_metric(s, s.to_form(omega, 2));
  };

  // Least-squares projection of the standard form onto the solution space.
  if (b.budget > 0) {
    const Vector w = realify(s.to_vector(s.standard_omega(), 2));
    const Matrix bt = basis.transpose();
    const Vector c0 = inverse(bt * basis).apply(bt.apply(w));
    ++res.probes;
    if (positive_coords(c0)) {
      accept(to_omega(c0));
      return res;
    }
  }

  const std::vector<Rational> values = grid_values(b);
  ShellWalker walker(k, values.size());
  std::vector<std::size_t> idx;
  bool more = true;
  while (more && res.probes < b.budget) {
    std::vector<Vector> batch;
    while (batch.size() < kBatch && res.probes + batch.size() < b.budget) {
      if (!walker.next(idx)) {
        more = false;
        break;
      }
      Vector c(k);
      for (std::size_t j = 0; j < k; ++j) c[j] = GaussianRational(values[idx[j]]);
      batch.push_back(std::move(c));
    }
    std::vector<char> ok(batch.size(), 0);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::size_t j = 0; j < batch.size(); ++j) ok[j] = positive_coords(batch[j]) ? 1 : 0;
    } else {
      for (std::size_t j = 0; j < batch.size(); ++j) {
        ok[j] = positive_coords(batch[j]) ? 1 : 0;
        if (ok[j]) break;
      }
    }
    for (std::size_t j = 0; j < batch.size(); ++j) {
      ++res.probes;
      if (ok[j]) {
        accept(to_omega(batch[j]));
        return res;
      }
    }
  }
  res.exhausted = !more;
  return res;
}

namespace {

ExistenceVerdict existence(const Session& s, const CohomologyTable& t, const SearchBounds& b, MetricKind kind) {
  if (s.n() != 2) throw NotSL2("existence verdicts are available for n = 2 only");
  ExistenceVerdict v;
  v.question = kind == MetricKind::HKT ? "hkt" : "sg";
  v.delta2 = t.at(2).delta;
  v.h10 = t.at(1).h_del;
  v.answer = v.delta2 == 0;
  if (v.answer != (v.h10 % 2 == 0)) {
    throw TheoremViolation("Δ² = " + std::to_string(v.delta2) + " disagrees with h^{1,0} = " +
                           std::to_string(v.h10));
  }
  const SearchResult r = search_metric(s, kind, b, s.options().exec);
  v.probes = r.probes;
  if (r.found) {
    const bool flag = kind == MetricKind::HKT ? r.found->flags.hkt : r.found->flags.strongly_gauduchon;
    if (!flag) throw InternalInconsistency("search returned a candidate failing its own condition");
    if (!v.answer) {
      throw TheoremViolation("found a " + v.question + " metric although Δ² = " + std::to_string(v.delta2));
    }
    v.certificate = r.found;
    v.method = "explicit-certificate";
  } else {
    v.method = "delta2-criterion";
  }
  return v;
}

}  // namespace

ExistenceVerdict hkt_existence(const Session& s, const CohomologyTable& t, const SearchBounds& b) {
  return existence(s, t, b, MetricKind::HKT);
}

ExistenceVerdict sg_existence(const Session& s, const CohomologyTable& t, const SearchBounds& b) {
  return existence(s, t, b, MetricKind::StronglyGauduchon);
}

}  // namespace quatcoh
