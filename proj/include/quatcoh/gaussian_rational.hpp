#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace quatcoh {

using Rational = mpq_class;

/// Exact element re + im·i of ℚ(i).
///
/// Both parts are kept as reduced GMP fractions with positive denominators,
/// so structural equality is field equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational from_ratio(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|² as an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Literal form accepted by `parse`: "p", "p/q", "p/q*i", "p/q+r/s*i".
  std::string to_string() const;
  /// Parses the literal form produced by `to_string` (and plain "i", "-i").
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Deterministic total order used only for canonical output ordering.
std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

}  // namespace quatcoh
