#include "quatcoh/cohomology.hpp"

#include <exception>

#include "quatcoh/errors.hpp"
#include "quatcoh/subspace.hpp"

namespace quatcoh {

namespace {

// Rank of the map E1^p -> E1^{p+1} induced by D2.
std::size_t induced_rank(const DoubleComplex& dc, int p) {
  const Subspace ker = Subspace::kernel_of(dc.D1(p));
  const Subspace im_prev = Subspace::image(dc.D1(p - 1));
  const auto reps = Subspace::complement(ker, im_prev);
  const Subspace im_here = Subspace::image(dc.D1(p));
  if (reps.empty()) return 0;
  const Subspace images = Subspace::span(reps, dc.dim(p)).mapped(dc.D2(p));
  return (images + im_here).dim() - im_here.dim();
}

}  // namespace

std::size_t e2_by_definition(const DoubleComplex& dc, int p) {
  const Subspace ker = Subspace::kernel_of(dc.D1(p));
  const Subspace lifts = ker.intersect(Subspace::preimage(dc.D2(p), Subspace::image(dc.D1(p))));
  const Subspace ker_prev = Subspace::kernel_of(dc.D1(p - 1));
  const Subspace denom = Subspace::image(dc.D1(p - 1)) + ker_prev.mapped(dc.D2(p - 1));
  return Subspace::quotient_dim(lifts, denom);
}

std::size_t e2_by_iteration(const DoubleComplex& dc, int p) {
  const std::size_t e1 = nullity(dc.D1(p)) - rank(dc.D1(p - 1));
  return e1 - induced_rank(dc, p) - induced_rank(dc, p - 1);
}

DegreeRow compute_degree(const DoubleComplex& dc, int p) {
  DegreeRow r;
  r.p = p;
  const Matrix d1 = dc.D1(p), d1_prev = dc.D1(p - 1);
  const Matrix d2 = dc.D2(p), d2_prev = dc.D2(p - 1);
  const Matrix dd = dc.D12(p), dd_prev2 = dc.D12(p - 2);

  const Subspace ker1 = Subspace::kernel_of(d1);
  const Subspace ker2 = Subspace::kernel_of(d2);
  const Subspace im1 = Subspace::image(d1_prev);
  const Subspace im2 = Subspace::image(d2_prev);
  const Subspace ker12 = Subspace::kernel_of(dd);
  const Subspace im12 = Subspace::image(dd_prev2);

  r.h_del = Subspace::quotient_dim(ker1, im1);
  r.h_delJ = Subspace::quotient_dim(ker2, im2);
  r.h_BC = Subspace::quotient_dim(ker1.intersect(ker2), im12);
  r.h_AE = Subspace::quotient_dim(ker12, im1 + im2);
  r.a = Subspace::quotient_dim(im1.intersect(im2), im12);
  r.b = Subspace::quotient_dim(ker1.intersect(im2), im12);
  r.c = Subspace::quotient_dim(ker12, ker1 + im2);
  r.d = Subspace::quotient_dim(im1.intersect(ker2), im12);
  r.e = Subspace::quotient_dim(ker12, im1 + ker2);
  r.f = Subspace::quotient_dim(ker12, ker1 + ker2);
  r.dim_E1 = r.h_del;
  r.dim_E2 = e2_by_definition(dc, p);
  r.dim_E2_iterated = e2_by_iteration(dc, p);
  r.delta = static_cast<long>(r.h_BC + r.h_AE) - 2 * static_cast<long>(r.dim_E2);
  return r;
}

CohomologyTable compute_table(const DoubleComplex& dc, Exec exec) {
  CohomologyTable t;
  const int top = dc.top();
  t.rows.resize(static_cast<std::size_t>(top + 1));
  std::exception_ptr error;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p <= top; ++p) {
      try {
        t.rows[static_cast<std::size_t>(p)] = compute_degree(dc, p);
      } catch (...) {
#pragma omp critical(quatcoh_table_error)
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (int p = 0; p <= top; ++p) t.rows[static_cast<std::size_t>(p)] = compute_degree(dc, p);
  }
  if (error) std::rethrow_exception(error);
  for (const auto& r : t.rows) {
    if (r.dim_E2 != r.dim_E2_iterated) {
      throw InternalInconsistency("dim E2 at p=" + std::to_string(r.p) + ": definition gives " +
                                  std::to_string(r.dim_E2) + ", page iteration gives " +
                                  std::to_string(r.dim_E2_iterated));
    }
    if (r.dim_E1 != r.dim_E2) t.degenerate_at_1 = false;
  }
  return t;
}

CohomologyTable cohomology(const Session& s) {
  const CohomologyTable t = compute_table(s.complex(), s.options().exec);
  const auto fail = [](const std::string& msg) { throw TheoremViolation(msg); };
  for (const auto& r : t.rows) {
    const std::string at = " at p=" + std::to_string(r.p);
    if (r.h_del != r.h_delJ) fail("h_del != h_delJ" + at);
    if (r.b != r.d) fail("b != d" + at);
    if (r.c != r.e) fail("c != e" + at);
    if (r.p + 1 < static_cast<int>(t.rows.size())) {
      const auto& next = t.at(r.p + 1);
      if (r.e != next.b) fail("e(p) != b(p+1)" + at);
      if (r.c != next.d) fail("c(p) != d(p+1)" + at);
    }
    if (r.delta < 0) fail("negative non-HKT-ness degree" + at);
  }
  if (s.n() == 2) {
    if (t.at(1).delta != 0 || t.at(3).delta != 0) fail("Delta^1 = Delta^3 = 0 fails");
    if (t.at(2).delta != 0 && t.at(2).delta != 2) fail("Delta^2 is not in {0, 2}");
  }
  return t;
}

bool ddJ_lemma_holds(const CohomologyTable& t) {
  bool b_zero = true;
  bool equality = true;
  for (const auto& r : t.rows) {
    if (r.b != 0) b_zero = false;
    if (r.h_BC + r.h_AE != 2 * r.dim_E2) equality = false;
  }
  if (b_zero != equality) {
    throw TheoremViolation("ddJ-lemma: vanishing of every B^{p,0} disagrees with h_BC + h_AE = 2 dim E2");
  }
  return b_zero;
}

}  // namespace quatcoh
