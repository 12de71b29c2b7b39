#pragma once

#include <cstddef>
#include <vector>

#include "quatcoh/matrix.hpp"

namespace quatcoh {

/// Subspace of ℚ(i)^ambient held by its canonical basis: the nonzero rows
/// of the reduced row echelon form of any spanning set. Equal subspaces
/// have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span_rows(const Matrix& rows);
  static Subspace span_columns(const Matrix& cols) { return span_rows(cols.transpose()); }
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient) { return span_rows(Matrix::identity(ambient)); }
  /// Column span of m.
  static Subspace image(const Matrix& m) { return span_columns(m); }
  static Subspace kernel_of(const Matrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image under m (m has `ambient` columns).
  Subspace mapped(const Matrix& m) const;
  /// {x : m·x ∈ target}.
  static Subspace preimage(const Matrix& m, const Subspace& target);

  /// dim U − dim W; throws NotASubspace unless W ⊆ U.
  static std::size_t quotient_dim(const Subspace& u, const Subspace& w);
  /// Vectors of u completing a basis of w to a basis of u (requires w ⊆ u).
  static std::vector<Vector> complement(const Subspace& u, const Subspace& w);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

}  // namespace quatcoh
