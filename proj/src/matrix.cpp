#include "quatcoh/matrix.hpp"

#include <atomic>
#include <sstream>

#include "quatcoh/errors.hpp"

namespace quatcoh {

namespace {
std::atomic<Exec> g_default_exec{Exec::Parallel};

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shape mismatch");
  }
}
}  // namespace

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec e) { g_default_exec.store(e); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const GaussianRational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const GaussianRational& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o, "matrix sum");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o, "matrix difference");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::operator-() const { return scaled(GaussianRational(-1)); }

Matrix Matrix::scaled(const GaussianRational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = x.conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_) {
    if (!x.is_real()) return false;
  }
  return true;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row counts differ");
  Matrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column counts differ");
  Matrix out(a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(a.rows_ + r, c) = b(r, c);
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

Rref rref(Matrix m, Exec exec) {
  Rref out;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < nc && lead < nr; ++col) {
    std::size_t piv = lead;
    while (piv < nr && m(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != lead) {
      for (std::size_t c = col; c < nc; ++c) std::swap(m(piv, c), m(lead, c));
    }
    const GaussianRational inv = m(lead, col).inverse();
    for (std::size_t c = col; c < nc; ++c) m(lead, c) *= inv;

    const auto eliminate = [&m, lead, col, nc](std::size_t r) {
      if (r == lead || m(r, col).is_zero()) return;
      const GaussianRational factor = m(r, col);
      for (std::size_t c = col; c < nc; ++c) {
        if (!m(lead, c).is_zero()) m(r, c) -= factor * m(lead, c);
      }
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::size_t r = 0; r < nr; ++r) eliminate(r);
    } else {
      for (std::size_t r = 0; r < nr; ++r) eliminate(r);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, Exec exec) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m, exec).pivots.size();
}

Matrix kernel(const Matrix& m, Exec exec) {
  const std::size_t nc = m.cols();
  if (m.rows() == 0) return Matrix::identity(nc);
  const Rref r = rref(m, exec);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vector v(nc);
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, nc);
}

Matrix inverse(const Matrix& m, Exec exec) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const Rref r = rref(Matrix::hstack(m, Matrix::identity(n)), exec);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw DivisionByZero("inverse of a singular matrix");
  return r.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), 1);
  aug.set_column(0, b);
  const Rref r = rref(Matrix::hstack(m, aug));
  Vector x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == m.cols()) return std::nullopt;
    x[r.pivots[k]] = r.reduced(k, m.cols());
  }
  return x;
}

GaussianRational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return GaussianRational(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const GaussianRational inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const GaussianRational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: length mismatch");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: length mismatch");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vector scale(const Vector& v, const GaussianRational& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector conj(const Vector& v) {
  Vector out = v;
  for (auto& x : out) x = x.conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace quatcoh
