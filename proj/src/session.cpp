#include "quatcoh/session.hpp"

#include <bit>
#include <exception>

#include "quatcoh/errors.hpp"

namespace quatcoh {

std::string op_name(Op op) {
  switch (op) {
    case Op::Del: return "del";
    case Op::DelJ: return "del_J";
    case Op::DelBar: return "del_bar";
    case Op::Jbar: return "Jbar";
    case Op::DdJ: return "ddJ";
  }
  return "?";
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

std::size_t DoubleComplex::dim(int p) const {
  if (p < 0 || p > top()) return 0;
  return dims[static_cast<std::size_t>(p)];
}

Matrix DoubleComplex::D1(int p) const {
  if (p < 0 || p >= static_cast<int>(d1.size())) return Matrix(dim(p + 1), dim(p));
  return d1[static_cast<std::size_t>(p)];
}

Matrix DoubleComplex::D2(int p) const {
  if (p < 0 || p >= static_cast<int>(d2.size())) return Matrix(dim(p + 1), dim(p));
  return d2[static_cast<std::size_t>(p)];
}

Matrix DoubleComplex::D12(int p) const { return D1(p + 1) * D2(p); }

Session::Session(Algebra alg, Options opts) : alg_(std::move(alg)), opts_(opts) {
  require_valid(validate(alg_));
  n_ = alg_.n();
  coframe_ = build_coframe(alg_);
  ext_ = frame_exterior(alg_, coframe_.frame, coframe_.frame_inverse);

  // J on generators: rows of frame·J·frame⁻¹ are the images.
  const Matrix jimg = coframe_.frame * alg_.J * coframe_.frame_inverse;
  for (std::size_t a = 0; a < jimg.rows(); ++a) j_images_.push_back(one_form(jimg.row(a)));

  for (int p = 0; p <= n2(); ++p) {
    for (int q = 0; q <= 1; ++q) {
      std::vector<Mask> masks;
      for (Mask h : combinations(n2(), p)) {
        for (Mask a : combinations(n2(), q)) masks.push_back(h | (a << n2()));
      }
      auto& idx = index_[{p, q}];
      for (std::size_t k = 0; k < masks.size(); ++k) idx[masks[k]] = k;
      bases_[{p, q}] = std::move(masks);
    }
  }
  build_matrices();
}

std::pair<int, int> Session::bidegree(Mask m) const {
  const Mask low = (Mask{1} << n2()) - 1;
  return {std::popcount(m & low), std::popcount(m >> n2())};
}

Form Session::project(const Form& f, int p, int q) const {
  return f.filter([this, p, q](Mask m) { return bidegree(m) == std::pair<int, int>{p, q}; });
}

namespace {
std::pair<int, int> pure_bidegree(const Session& s, const Form& f) {
  if (f.is_zero()) return {-1, -1};
  const auto bd = s.bidegree(f.terms().begin()->first);
  for (const auto& [m, c] : f.terms()) {
    if (s.bidegree(m) != bd) throw DimensionMismatch("operator requires a form of pure bidegree");
  }
  return bd;
}

Form checked_component(const Session& s, const Form& f, bool holomorphic_part) {
  const auto [p, q] = pure_bidegree(s, f);
  if (p < 0) return {};
  const Form df = s.d(f);
  for (const auto& [m, c] : df.terms()) {
    const auto bd = s.bidegree(m);
    if (bd != std::pair<int, int>{p + 1, q} && bd != std::pair<int, int>{p, q + 1}) {
      throw IntegrabilityViolation("d of a (" + std::to_string(p) + "," + std::to_string(q) +
                                   ")-form has a component of type (" + std::to_string(bd.first) + "," +
                                   std::to_string(bd.second) + ")");
    }
  }
  return holomorphic_part ? s.project(df, p + 1, q) : s.project(df, p, q + 1);
}
}  // namespace

Form Session::del(const Form& f) const { return checked_component(*this, f, true); }

Form Session::del_bar(const Form& f) const { return checked_component(*this, f, false); }

Form Session::J(const Form& f) const { return ExteriorAlgebra::multiplicative(j_images_, f); }

Form Session::conj(const Form& f) const {
  Form out;
  const Mask low = (Mask{1} << n2()) - 1;
  for (const auto& [m, c] : f.terms()) {
    const Mask swapped = ((m & low) << n2()) | (m >> n2());
    // Reorder the conjugated factors into increasing generator order.
    std::vector<Form> factors;
    Mask rest = m;
    while (rest != 0) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const int b = a < n2() ? a + n2() : a - n2();
      factors.push_back(Form::monomial(Mask{1} << b));
    }
    const Form w = wedge_all(factors);
    out.add(swapped, c.conj() * w.coeff(swapped));
  }
  return out;
}

Form Session::del_J(const Form& f) const {
  const auto [p, q] = pure_bidegree(*this, f);
  if (p < 0) return {};
  if (q != 0) throw DimensionMismatch("del_J is defined on (p,0)-forms only");
  const Form g = del_bar(J(f));
  const Form out = J(g);
  return (p + 1) % 2 == 0 ? out : -out;
}

const std::vector<Mask>& Session::basis(int p, int q) const {
  static const std::vector<Mask> empty;
  auto it = bases_.find({p, q});
  return it == bases_.end() ? empty : it->second;
}

std::size_t Session::dim(int p, int q) const { return basis(p, q).size(); }

Vector Session::to_vector(const Form& f, int p, int q) const {
  Vector v(dim(p, q));
  if (f.is_zero()) return v;
  auto found = index_.find({p, q});
  if (found == index_.end()) throw DimensionMismatch("form is not of the requested bidegree");
  for (const auto& [m, c] : f.terms()) {
    auto it = found->second.find(m);
    if (it == found->second.end()) throw DimensionMismatch("form is not of the requested bidegree");
    v[it->second] = c;
  }
  return v;
}

Form Session::to_form(const Vector& v, int p, int q) const {
  const auto& b = basis(p, q);
  if (v.size() != b.size()) throw DimensionMismatch("vector length does not match the bidegree");
  Form f;
  for (std::size_t k = 0; k < v.size(); ++k) f.add(b[k], v[k]);
  return f;
}

Matrix Session::operator_column_matrix(Op op, int p) const {
  const int tp = (op == Op::Jbar || op == Op::DelBar) ? p : p + 1;
  const int tq = op == Op::DelBar ? 1 : 0;
  Matrix m(dim(tp, tq), dim(p, 0));
  const auto& src = basis(p, 0);
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Form mono = Form::monomial(src[k]);
    Form img;
    switch (op) {
      case Op::Del: img = del(mono); break;
      case Op::DelJ: img = del_J(mono); break;
      case Op::DelBar: img = del_bar(mono); break;
      case Op::Jbar: img = Jbar(mono); break;
      case Op::DdJ: img = del(del_J(mono)); break;
    }
    m.set_column(k, to_vector(img, tp, tq));
  }
  return m;
}

void Session::build_matrices() {
  std::vector<std::pair<Op, int>> tasks;
  for (Op op : {Op::Del, Op::DelJ, Op::DelBar, Op::Jbar}) {
    for (int p = 0; p <= n2(); ++p) tasks.emplace_back(op, p);
  }
  std::vector<Matrix> results(tasks.size());
  std::exception_ptr error;
  const auto work = [&](std::size_t t) { results[t] = operator_column_matrix(tasks[t].first, tasks[t].second); };
  if (opts_.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      try {
        work(t);
      } catch (...) {
#pragma omp critical(quatcoh_session_error)
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t t = 0; t < tasks.size(); ++t) matrices_[tasks[t]] = std::move(results[t]);

  const auto d = [this](int p, int q) { return dim(p, q); };
  for (int p = -2; p <= n2() + 2; ++p) {
    if (p < 0 || p > n2()) {
      matrices_[{Op::Del, p}] = Matrix(d(p + 1, 0), d(p, 0));
      matrices_[{Op::DelJ, p}] = Matrix(d(p + 1, 0), d(p, 0));
      matrices_[{Op::DelBar, p}] = Matrix(d(p, 1), d(p, 0));
      matrices_[{Op::Jbar, p}] = Matrix(d(p, 0), d(p, 0));
    }
  }
  for (int p = -2; p <= n2() + 2; ++p) {
    if (p + 1 > n2() + 2) {
      matrices_[{Op::DdJ, p}] = Matrix(d(p + 2, 0), d(p, 0));
    } else {
      matrices_[{Op::DdJ, p}] = matrices_.at({Op::Del, p + 1}) * matrices_.at({Op::DelJ, p});
    }
  }

  complex_.dims.clear();
  for (int p = 0; p <= n2(); ++p) {
    complex_.dims.push_back(dim(p, 0));
    complex_.d1.push_back(matrices_.at({Op::Del, p}));
    complex_.d2.push_back(matrices_.at({Op::DelJ, p}));
  }
}

const Matrix& Session::matrix(Op op, int p) const {
  auto it = matrices_.find({op, p});
  if (it == matrices_.end()) throw DimensionMismatch("no " + op_name(op) + " matrix for degree " + std::to_string(p));
  return it->second;
}

Form Session::volume_form() const {
  std::vector<Form> f;
  for (int a = 0; a < n2(); ++a) f.push_back(Form::monomial(Mask{1} << a));
  return wedge_all(f);
}

Form Session::standard_omega() const {
  Form om;
  for (int i = 0; i < n_; ++i) om.add((Mask{1} << (2 * i)) | (Mask{1} << (2 * i + 1)), GaussianRational(1));
  return om;
}

std::vector<std::string> Session::generator_names() const {
  std::vector<std::string> names;
  for (int a = 1; a <= n2(); ++a) names.push_back("φ" + std::to_string(a));
  for (int a = 1; a <= n2(); ++a) names.push_back("φ̄" + std::to_string(a));
  return names;
}

}  // namespace quatcoh
