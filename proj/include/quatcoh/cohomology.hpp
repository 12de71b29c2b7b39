#pragma once

#include <cstddef>
#include <vector>

#include "quatcoh/matrix.hpp"
#include "quatcoh/session.hpp"

namespace quatcoh {

/// Every dimension attached to one degree p of a double complex.
struct DegreeRow {
  int p = 0;
  std::size_t h_del = 0;
  std::size_t h_delJ = 0;
  std::size_t h_BC = 0;
  std::size_t h_AE = 0;
  std::size_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  std::size_t dim_E1 = 0;
  std::size_t dim_E2 = 0;
  /// Page-iteration value of dim E2; equals dim_E2 on success.
  std::size_t dim_E2_iterated = 0;
  long delta = 0;

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct CohomologyTable {
  std::vector<DegreeRow> rows;  // ordered by p
  bool degenerate_at_1 = true;

  const DegreeRow& at(int p) const { return rows.at(static_cast<std::size_t>(p)); }
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// dim{φ ∈ ker D1 : D2φ ∈ Im D1} − dim(Im D1 + D2(ker D1)) at degree p.
std::size_t e2_by_definition(const DoubleComplex& dc, int p);
/// dim E1 − rank d1^p − rank d1^{p−1}, with d1 induced by D2 on E1 representatives.
std::size_t e2_by_iteration(const DoubleComplex& dc, int p);

DegreeRow compute_degree(const DoubleComplex& dc, int p);

/// All degrees; per-degree work runs concurrently under Exec::Parallel.
/// Throws InternalInconsistency if the two E2 computations disagree.
CohomologyTable compute_table(const DoubleComplex& dc, Exec exec);

/// compute_table for a session plus the checks that only hold for the
/// quaternionic complex (h_del = h_delJ, b = d, c = e, shifted identities,
/// Δ^p ≥ 0 and, for n = 2, Δ¹ = Δ³ = 0, Δ² ∈ {0, 2}).
/// Throws TheoremViolation.
CohomologyTable cohomology(const Session& s);

/// b(p) = 0 for all p. Throws TheoremViolation when this disagrees with
/// h_BC + h_AE = 2·dim E2 for all p.
bool ddJ_lemma_holds(const CohomologyTable& t);

}  // namespace quatcoh
