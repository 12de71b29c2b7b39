#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quatcoh/gaussian_rational.hpp"

namespace quatcoh {

/// Selects the serial reference kernel or the OpenMP kernel.
enum class Exec { Serial, Parallel };

/// Process-wide default used when no policy is passed explicitly.
Exec default_exec();
void set_default_exec(Exec e);

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over ℚ(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const GaussianRational& s) const;
  Vector apply(const Vector& v) const;

  Matrix conj() const;
  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;

  bool is_zero() const;
  bool is_real() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with first-nonzero pivoting. Both policies return
/// identical results.
Rref rref(Matrix m, Exec exec);
inline Rref rref(Matrix m) { return rref(std::move(m), default_exec()); }

std::size_t rank(const Matrix& m, Exec exec);
inline std::size_t rank(const Matrix& m) { return rank(m, default_exec()); }
inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Basis of the right kernel as the columns of the result, one per free column.
Matrix kernel(const Matrix& m, Exec exec);
inline Matrix kernel(const Matrix& m) { return kernel(m, default_exec()); }

/// Throws DimensionMismatch for non-square input, DivisionByZero when singular.
Matrix inverse(const Matrix& m, Exec exec);
inline Matrix inverse(const Matrix& m) { return inverse(m, default_exec()); }

/// Some solution of m·x = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

GaussianRational determinant(const Matrix& m);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const GaussianRational& s);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);

}  // namespace quatcoh
