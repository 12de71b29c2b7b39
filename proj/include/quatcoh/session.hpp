#pragma once

#include <map>
#include <string>
#include <vector>

#include "quatcoh/algebra.hpp"
#include "quatcoh/exterior.hpp"
#include "quatcoh/matrix.hpp"

namespace quatcoh {

enum class Op { Del, DelJ, DelBar, Jbar, DdJ };

std::string op_name(Op op);

/// Graded vector space V_0..V_top with two degree-one differentials.
/// D1 = ∂ and D2 = ∂_J for a session; arbitrary for synthetic complexes.
struct DoubleComplex {
  std::vector<std::size_t> dims;  // dims[p] = dim V_p
  std::vector<Matrix> d1;         // d1[p] : V_p -> V_{p+1}
  std::vector<Matrix> d2;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int p) const;
  /// Zero-size matrices outside [0, top].
  Matrix D1(int p) const;
  Matrix D2(int p) const;
  /// D1(p+1)·D2(p) : V_p -> V_{p+2}.
  Matrix D12(int p) const;
};

/// Immutable per-algebra state: the quaternionic coframe, the exterior
/// algebra on {φ^a, φ̄^a}, and every operator matrix on the (p,0) bases.
///
/// Generator a < 2n is φ^{a+1}; generator 2n + a is conj(φ^{a+1}).
class Session {
 public:
  struct Options {
    Exec exec = Exec::Parallel;
  };

  /// Validates first; throws the matching ValidationError subclass.
  explicit Session(Algebra alg, Options opts);
  explicit Session(Algebra alg) : Session(std::move(alg), Options{}) {}

  const Algebra& algebra() const { return alg_; }
  const QuaternionicCoframe& coframe() const { return coframe_; }
  const ExteriorAlgebra& exterior() const { return ext_; }
  const Options& options() const { return opts_; }
  int n() const { return n_; }
  int n2() const { return 2 * n_; }

  // Form-level operators.
  Form d(const Form& f) const { return ext_.d(f); }
  Form project(const Form& f, int p, int q) const;
  std::pair<int, int> bidegree(Mask m) const;
  /// Throws IntegrabilityViolation unless d maps f into (p+1,q) ⊕ (p,q+1).
  Form del(const Form& f) const;
  Form del_bar(const Form& f) const;
  Form J(const Form& f) const;
  Form conj(const Form& f) const;
  Form Jbar(const Form& f) const { return J(conj(f)); }
  /// J⁻¹∘∂̄∘J on (p,0)-forms; throws NotBidegree20-style misuse as DimensionMismatch.
  Form del_J(const Form& f) const;

  /// Monomial basis of Λ^{p,q}, lexicographic in (holomorphic, antiholomorphic) tuples.
  const std::vector<Mask>& basis(int p, int q = 0) const;
  std::size_t dim(int p, int q = 0) const;
  Vector to_vector(const Form& f, int p, int q = 0) const;
  Form to_form(const Vector& v, int p, int q = 0) const;

  /// Operator on the (p,0) basis. Jbar returns its linear part L with
  /// J̄(v) = L·conj(v). Valid for every integer p (zero-size outside range).
  const Matrix& matrix(Op op, int p) const;
  const DoubleComplex& complex() const { return complex_; }

  /// φ^1∧…∧φ^{2n}.
  Form volume_form() const;
  /// Σ φ^{2i-1}∧φ^{2i}.
  Form standard_omega() const;
  std::vector<std::string> generator_names() const;
  std::string format(const Form& f) const { return format_form(f, generator_names()); }

 private:
  void build_matrices();
  Matrix operator_column_matrix(Op op, int p) const;

  Algebra alg_;
  Options opts_;
  int n_ = 0;
  QuaternionicCoframe coframe_;
  ExteriorAlgebra ext_;
  std::vector<Form> j_images_;
  std::map<std::pair<int, int>, std::vector<Mask>> bases_;
  std::map<std::pair<int, int>, std::map<Mask, std::size_t>> index_;
  std::map<std::pair<Op, int>, Matrix> matrices_;
  DoubleComplex complex_;
};

/// Binomial coefficient C(n, k), 0 outside range.
std::size_t binomial(int n, int k);

}  // namespace quatcoh
