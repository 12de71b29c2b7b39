#include "quatcoh/subspace.hpp"

#include "quatcoh/errors.hpp"

namespace quatcoh {

Subspace Subspace::span_rows(const Matrix& rows) {
  Subspace s(rows.cols());
  if (rows.rows() == 0) return s;
  const Rref r = rref(rows);
  s.basis_ = r.reduced.block(0, 0, r.pivots.size(), rows.cols());
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  if (vectors.empty()) return Subspace(ambient);
  return span_rows(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::kernel_of(const Matrix& m) { return span_columns(kernel(m)); }

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  Matrix one(1, ambient_);
  for (std::size_t c = 0; c < ambient_; ++c) one(0, c) = v[c];
  return rank(Matrix::vstack(basis_, one)) == dim();
}

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  return (*this + w).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspace sum: ambient mismatch");
  return span_rows(Matrix::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("intersection: ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
  // a·U = b·V  <=>  (a, b) in ker [Uᵀ | −Vᵀ]
  const Matrix system = Matrix::hstack(basis_.transpose(), -o.basis_.transpose());
  const Matrix ker = kernel(system);
  const Matrix coeffs = ker.block(0, 0, dim(), ker.cols());
  return span_columns(basis_.transpose() * coeffs);
}

Subspace Subspace::mapped(const Matrix& m) const {
  if (m.cols() != ambient_) throw DimensionMismatch("mapped: ambient mismatch");
  if (dim() == 0) return Subspace(m.rows());
  return span_columns(m * basis_.transpose());
}

Subspace Subspace::preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient_ != m.rows()) throw DimensionMismatch("preimage: target ambient mismatch");
  if (target.dim() == 0) return kernel_of(m);
  // m·x = Wᵀ·y  <=>  (x, y) in ker [m | −Wᵀ]
  const Matrix ker = kernel(Matrix::hstack(m, -target.basis_.transpose()));
  return span_columns(ker.block(0, 0, m.cols(), ker.cols()));
}

std::size_t Subspace::quotient_dim(const Subspace& u, const Subspace& w) {
  if (!u.contains(w)) throw NotASubspace("quotient_dim: second argument is not contained in the first");
  return u.dim() - w.dim();
}

std::vector<Vector> Subspace::complement(const Subspace& u, const Subspace& w) {
  if (!u.contains(w)) throw NotASubspace("complement: second argument is not contained in the first");
  std::vector<Vector> out;
  Subspace acc = w;
  for (std::size_t r = 0; r < u.dim() && acc.dim() < u.dim(); ++r) {
    Vector v = u.basis_.row(r);
    if (acc.contains(v)) continue;
    acc = acc + span({v}, u.ambient_);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace quatcoh
