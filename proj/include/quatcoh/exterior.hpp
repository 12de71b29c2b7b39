#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatcoh/gaussian_rational.hpp"
#include "quatcoh/matrix.hpp"

namespace quatcoh {

/// Wedge monomial: bit a set means generator a is a factor; factors are
/// ordered by increasing bit.
using Mask = std::uint64_t;

/// Element of an exterior algebra on at most 64 generators. No zero
/// coefficients are stored.
class Form {
 public:
  Form() = default;
  static Form monomial(Mask m, const GaussianRational& c = GaussianRational(1));
  static Form constant(const GaussianRational& c) { return monomial(0, c); }

  const std::map<Mask, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(Mask m) const;
  void add(Mask m, const GaussianRational& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const GaussianRational& s) const;
  Form& operator+=(const Form& o);
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  /// Coefficients conjugated, monomials untouched.
  Form conj_coeffs() const;
  /// Terms whose mask satisfies pred.
  template <class Pred>
  Form filter(Pred pred) const {
    Form out;
    for (const auto& [m, c] : terms_) {
      if (pred(m)) out.terms_.emplace(m, c);
    }
    return out;
  }

 private:
  std::map<Mask, GaussianRational> terms_;
};

/// Sign of the permutation sorting the factors of a∧b (0 if they overlap).
int wedge_sign(Mask a, Mask b);
Form wedge(const Form& f, const Form& g);
Form wedge_all(const std::vector<Form>& factors);

/// Exterior algebra on `n` generators with a differential fixed on
/// generators and extended as an antiderivation.
class ExteriorAlgebra {
 public:
  ExteriorAlgebra() = default;
  ExteriorAlgebra(int generators, std::vector<Form> d_generators);

  int generators() const { return n_; }
  const Form& d_generator(int a) const { return dgen_.at(static_cast<std::size_t>(a)); }
  Form d(const Form& f) const;

  /// Extends generator images multiplicatively: g_{a1}∧…∧g_{ap} ↦ img[a1]∧…∧img[ap].
  static Form multiplicative(const std::vector<Form>& images, const Form& f);

 private:
  int n_ = 0;
  std::vector<Form> dgen_;
};

/// 1-form Σ row[a]·g_a.
Form one_form(const Vector& row);

/// Increasing index tuples of length k from {0..n-1}, in lexicographic order,
/// as masks.
std::vector<Mask> combinations(int n, int k);

int popcount(Mask m);

/// Renders a form with the given generator names, e.g. "1/2*φ1∧φ2".
std::string format_form(const Form& f, const std::vector<std::string>& names);

}  // namespace quatcoh
