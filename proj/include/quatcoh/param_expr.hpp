#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quatcoh/gaussian_rational.hpp"

namespace quatcoh {

using Bindings = std::map<std::string, Rational>;

/// Polynomial in the declared parameters with ℚ(i) coefficients.
/// Monomials are exponent vectors indexed like the owning parameter list.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  static Polynomial constant(std::size_t nvars, const GaussianRational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  /// Exact value at the given point (one rational per variable).
  GaussianRational evaluate(const std::vector<Rational>& point) const;
  /// Indices of variables with a positive exponent somewhere.
  std::vector<std::size_t> used_variables() const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, GaussianRational> terms_;
};

/// Rational function numerator/denominator in named parameters.
///
/// No gcd cancellation is performed: a binding that zeroes the stored
/// denominator is a pole even if the numerator vanishes too.
class ParamExpr {
 public:
  ParamExpr() = default;
  ParamExpr(std::vector<std::string> params, Polynomial num, Polynomial den);

  static ParamExpr constant(std::vector<std::string> params, const GaussianRational& c);

  /// Parses +, -, *, /, parentheses, integer literals, the imaginary unit `i`
  /// and the declared parameter names. Throws CoefficientParseError.
  static ParamExpr parse(std::string_view text, const std::vector<std::string>& params);

  ParamExpr operator+(const ParamExpr& o) const;
  ParamExpr operator-(const ParamExpr& o) const;
  ParamExpr operator*(const ParamExpr& o) const;
  /// Throws DivisionByZero when `o` is identically zero.
  ParamExpr operator/(const ParamExpr& o) const;
  ParamExpr operator-() const;

  /// Throws UnboundParameter or PoleAtBinding.
  GaussianRational evaluate(const Bindings& bindings) const;

  bool is_constant() const;
  const std::vector<std::string>& params() const { return params_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  /// Original text when parsed, otherwise empty.
  const std::string& source() const { return source_; }

 private:
  std::vector<std::string> params_;
  Polynomial num_;
  Polynomial den_;
  std::string source_;
};

}  // namespace quatcoh
