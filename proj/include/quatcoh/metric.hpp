#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quatcoh/cohomology.hpp"
#include "quatcoh/session.hpp"

namespace quatcoh {

struct MetricFlags {
  bool hermitian = false;
  bool hkt = false;
  bool gauduchon = false;
  bool strongly_gauduchon = false;
  bool hyperkahler = false;
};

struct MetricCandidate {
  Form omega;
  Matrix gram;  // g(φ_a, φ_b) on the dual frame
  std::vector<GaussianRational> minors;
  MetricFlags flags;
};

/// G = ½·ω·Q with ω the antisymmetric coefficient matrix of Ω and Q pairing
/// φ^{2k} with φ^{2k+1}. The standard form gives ½·Id.
Matrix gram_matrix(const Session& s, const Vector& omega);

/// Leading principal minors; positive definite iff all are positive reals.
std::vector<GaussianRational> leading_minors(const Matrix& g);
bool positive_definite(const Matrix& g);

/// Throws NotBidegree20 unless Ω is a (2,0)-form.
MetricCandidate classify_metric(const Session& s, const Form& omega);

enum class MetricKind { HKT, StronglyGauduchon };

struct SearchBounds {
  long denominator = 4;
  long coefficient = 2;
  std::size_t budget = 20000;
};

struct SearchResult {
  std::optional<MetricCandidate> found;
  std::size_t probes = 0;
  std::size_t solution_dim = 0;  // real dimension of the linear solution space
  bool exhausted = false;        // the whole grid was probed
};

/// Basis of the real solution space of the linear conditions, as complex
/// (2,0) coordinate vectors.
std::vector<Vector> metric_solution_space(const Session& s, MetricKind kind);

/// Rational coefficient grid ordered by (denominator, |numerator|, sign).
std::vector<Rational> grid_values(const SearchBounds& b);

/// Searches the real solution space of the linear conditions (J̄Ω = Ω plus
/// ∂Ω = 0, or ∂Ω ∈ Im ∂_J for n = 2) for a positive Ω. The projection of the
/// standard form is probed first, then the grid in shells. Both policies
/// return the first success in enumeration order.
SearchResult search_metric(const Session& s, MetricKind kind, const SearchBounds& b, Exec exec);

struct ExistenceVerdict {
  std::string question;  // "hkt" or "sg"
  bool answer = false;
  std::string method;    // "explicit-certificate" or "delta2-criterion"
  std::optional<MetricCandidate> certificate;
  long delta2 = 0;
  std::size_t h10 = 0;
  std::size_t probes = 0;
};

/// n = 2 only (throws NotSL2). Throws TheoremViolation when Δ² = 0 disagrees
/// with h^{1,0}_∂ being even, or when the search contradicts the answer.
ExistenceVerdict hkt_existence(const Session& s, const CohomologyTable& t, const SearchBounds& b);
ExistenceVerdict sg_existence(const Session& s, const CohomologyTable& t, const SearchBounds& b);

}  // namespace quatcoh
