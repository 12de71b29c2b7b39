#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quatcoh/cohomology.hpp"
#include "quatcoh/session.hpp"

namespace quatcoh {

struct VolumeForm {
  Form phi;
  /// Top coefficient of Φ∧Φ̄; integrals are divided by it.
  GaussianRational normalization;
};

/// Φ = φ^1∧…∧φ^{2n}; throws NotHolomorphic or NotReal when a check fails.
VolumeForm canonical_volume_form(const Session& s);

/// Hodge star for the metric making the quaternionic coframe unitary,
/// obtained by solving α∧∗β∧Φ̄ = h(α,β)·Ω^n∧Φ̄/n! degree by degree.
/// ∗ is antilinear: ∗v = S_p·conj(v) on (p,0) coordinate vectors.
class HodgeData {
 public:
  explicit HodgeData(const Session& s);

  const VolumeForm& volume() const { return volume_; }
  /// Linear part S_p : Λ^{p,0} -> Λ^{2n-p,0}.
  const Matrix& star_matrix(int p) const { return star_.at(static_cast<std::size_t>(p)); }
  Form star(const Form& f, int p) const;
  /// ∫ of a top-degree form: the coefficient of the top monomial over the
  /// normalization, so that ∫ Ω^n∧Φ̄/n! = 1.
  GaussianRational integrate(const Form& top) const;
  /// Σ a_i conj(b_i) on (p,0) coordinates.
  static GaussianRational h(const Vector& a, const Vector& b);

 private:
  const Session* s_;
  VolumeForm volume_;
  Form phi_bar_;
  std::vector<Matrix> star_;
};

struct PairingResult {
  int p = 0;
  Matrix matrix;  // rows: H^{p,0}_BC representatives, columns: H^{2n-p,0}_AE representatives
  bool invertible = false;
  std::vector<Vector> bc_representatives;
  std::vector<Vector> ae_representatives;
};

/// Throws RepresentativeDependence if perturbed representatives change the
/// matrix, TheoremViolation if the duality dimensions differ.
PairingResult pairing_matrix(const Session& s, const HodgeData& hd, const CohomologyTable& t, int p);

struct SelfDualReport {
  std::size_t dim_plus = 0;
  std::size_t dim_minus = 0;
  bool direct = false;
  bool exhaustive = false;
  bool exact_forms_vanish = false;  // for the antilinear ∗, on Im ∂_J in degree 2
};

/// n = 2 only (throws NotSL2). Throws DecompositionFailure when the sum is
/// not direct or does not exhaust H^{2,0}_∂.
SelfDualReport sd_asd_decomposition(const Session& s, const HodgeData& hd);

struct JbarReport {
  std::size_t h = 0;  // h_del^{2,0}
  std::size_t dim_plus = 0;
  std::size_t dim_minus = 0;
  std::size_t dim_intersection = 0;
  std::size_t dim_sum = 0;
  std::size_t dim_complement = 0;
  bool pure = false;
  bool full = false;
  std::vector<Vector> plus_basis;   // representatives, modulo Im ∂
  std::vector<Vector> minus_basis;
};

/// H^{J̄,±} as images in H^{2,0}_∂ of ∂-closed forms fixed (resp. negated)
/// by the linear part of J̄. For n = 2, throws TheoremViolation unless pure
/// and full.
JbarReport jbar_decomposition(const Session& s);

/// deg(α) = ∫ ∂α∧Ω^{n-1}∧Φ̄. Throws NotGauduchon, NotAeppliClosed,
/// NotBidegree20 for an Ω of the wrong type.
GaussianRational degree_map(const Session& s, const HodgeData& hd, const Form& omega, const Form& alpha);

/// f∧…∧f (k factors); the constant 1 for k = 0.
Form wedge_power(const Form& f, int k);

}  // namespace quatcoh
