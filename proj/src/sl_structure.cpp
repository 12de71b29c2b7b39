#include "quatcoh/sl_structure.hpp"

#include <random>

#include "quatcoh/errors.hpp"
#include "quatcoh/subspace.hpp"

namespace quatcoh {

namespace {

Mask top_mask(const Session& s) { return 2 * s.n2() == 64 ? ~Mask{0} : ((Mask{1} << (2 * s.n2())) - 1); }

// Real 2N×2M matrix of a linear map on (re, im) coordinates; with `antilinear`
// the map is v ↦ m·conj(v).
Matrix realify(const Matrix& m, bool antilinear) {
  const std::size_t r = m.rows(), c = m.cols();
  Matrix out(2 * r, 2 * c);
  const GaussianRational flip(antilinear ? -1 : 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const GaussianRational a(m(i, j).re()), b(m(i, j).im());
      out(i, j) = a;
      out(i, c + j) = -b * flip;
      out(r + i, j) = b;
      out(r + i, c + j) = a * flip;
    }
  }
  return out;
}

// Whether some nonzero v in the image of `image` has ∗v = sign·v, with ∗v = star·conj(v).
bool has_star_eigenform(const Matrix& star, const Matrix& image, long sign) {
  const Matrix mr = realify(image, false);
  const Matrix cond = realify(star, true) - Matrix::identity(mr.rows()).scaled(GaussianRational(sign));
  return nullity(cond * mr) > nullity(mr);
}

Vector random_combination(const std::vector<Vector>& vs, std::size_t ambient, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Vector out(ambient);
  for (const auto& v : vs) out = out + scale(v, GaussianRational(coef(rng), coef(rng)));
  return out;
}

std::size_t image_dim_mod(const Subspace& forms, const Subspace& exact) {
  return (forms + exact).dim() - exact.dim();
}

}  // namespace

Form wedge_power(const Form& f, int k) {
  Form acc = Form::constant(GaussianRational(1));
  for (int j = 0; j < k; ++j) acc = wedge(acc, f);
  return acc;
}

VolumeForm canonical_volume_form(const Session& s) {
  VolumeForm v;
  v.phi = s.volume_form();
  const Form dbar = s.project(s.d(v.phi), s.n2(), 1);
  if (!dbar.is_zero()) throw NotHolomorphic("the (2n,1)-part of dΦ is " + s.format(dbar));
  const Form jb = s.Jbar(v.phi);
  if (!(jb == v.phi)) throw NotReal("Jbar(Φ) = " + s.format(jb) + " differs from Φ");
  v.normalization = wedge(v.phi, s.conj(v.phi)).coeff(top_mask(s));
  return v;
}

HodgeData::HodgeData(const Session& s) : s_(&s), volume_(canonical_volume_form(s)) {
  phi_bar_ = s.conj(volume_.phi);
  const int n2 = s.n2();
  // ∫ Ω^n∧Φ̄/n! fixes the right-hand side scale.
  Rational fact = 1;
  for (int k = 2; k <= s.n(); ++k) fact *= k;
  const Form vol = wedge_power(s.standard_omega(), s.n()) * GaussianRational(Rational(1) / fact);
  const GaussianRational rhs = integrate(wedge(vol, phi_bar_));
  if (rhs.is_zero()) throw SingularGram("Ω^n∧Φ̄ integrates to zero");
  for (int p = 0; p <= n2; ++p) {
    const auto& src = s.basis(p);
    const auto& dst = s.basis(n2 - p);
    // W(A, C) = ∫ φ^A∧φ^C∧Φ̄ ; solve W·S = rhs·Id (h(φ^A, φ^B) = δ_AB).
    Matrix w(src.size(), dst.size());
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (std::size_t c = 0; c < dst.size(); ++c) {
        w(a, c) = integrate(wedge(wedge(Form::monomial(src[a]), Form::monomial(dst[c])), phi_bar_));
      }
    }
    Matrix winv;
    try {
      winv = inverse(w);
    } catch (const DivisionByZero&) {
      throw SingularGram("the defining system of the Hodge star is singular in degree " + std::to_string(p));
    }
    star_.push_back(winv.scaled(rhs));
  }
}

GaussianRational HodgeData::integrate(const Form& top) const {
  return top.coeff(top_mask(*s_)) / volume_.normalization;
}

GaussianRational HodgeData::h(const Vector& a, const Vector& b) {
  GaussianRational out;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k] * b.at(k).conj();
  return out;
}

Form HodgeData::star(const Form& f, int p) const {
  const Vector v = s_->to_vector(f, p);
  return s_->to_form(star_matrix(p).apply(conj(v)), s_->n2() - p);
}

PairingResult pairing_matrix(const Session& s, const HodgeData& hd, const CohomologyTable& t, int p) {
  const int q = s.n2() - p;
  if (p < 0 || q < 0) throw DimensionMismatch("pairing degree out of range");
  if (t.at(p).h_BC != t.at(q).h_AE || t.at(p).h_del != t.at(q).h_del) {
    throw TheoremViolation("duality dimensions differ between degrees " + std::to_string(p) + " and " +
                           std::to_string(q));
  }
  PairingResult out;
  out.p = p;
  const Subspace bc_closed =
      Subspace::kernel_of(s.matrix(Op::Del, p)).intersect(Subspace::kernel_of(s.matrix(Op::DelJ, p)));
  const Subspace bc_exact = Subspace::image(s.matrix(Op::DdJ, p - 2));
  const Subspace ae_closed = Subspace::kernel_of(s.matrix(Op::DdJ, q));
  const Subspace ae_exact = Subspace::image(s.matrix(Op::Del, q - 1)) + Subspace::image(s.matrix(Op::DelJ, q - 1));
  out.bc_representatives = Subspace::complement(bc_closed, bc_exact);
  out.ae_representatives = Subspace::complement(ae_closed, ae_exact);

  const Form phi_bar = s.conj(hd.volume().phi);
  const auto build = [&](const std::vector<Vector>& as, const std::vector<Vector>& bs) {
    Matrix m(as.size(), bs.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        m(i, j) = hd.integrate(wedge(wedge(s.to_form(as[i], p), s.to_form(bs[j], q)), phi_bar));
      }
    }
    return m;
  };
  out.matrix = build(out.bc_representatives, out.ae_representatives);
  out.invertible = out.matrix.rows() == out.matrix.cols() &&
                   (out.matrix.rows() == 0 || rank(out.matrix) == out.matrix.rows());

  std::mt19937 rng(20240601u + static_cast<unsigned>(p));
  for (int trial = 0; trial < 3; ++trial) {
    auto as = out.bc_representatives;
    auto bs = out.ae_representatives;
    const auto exact_bc = bc_exact.vectors();
    const auto exact_ae = ae_exact.vectors();
    for (auto& a : as) a = a + random_combination(exact_bc, a.size(), rng);
    for (auto& b : bs) b = b + random_combination(exact_ae, b.size(), rng);
    if (!(build(as, bs) == out.matrix)) {
      throw RepresentativeDependence("pairing matrix in degree " + std::to_string(p) +
                                     " changed under a change of representatives");
    }
  }
  return out;
}

SelfDualReport sd_asd_decomposition(const Session& s, const HodgeData& hd) {
  if (s.n() != 2) throw NotSL2("the self-dual decomposition is implemented for n = 2 only");
  SelfDualReport rep;
  const Matrix& S = hd.star_matrix(2);
  const std::size_t N = S.rows();
  const Subspace plus = Subspace::kernel_of(S - Matrix::identity(N));
  const Subspace minus = Subspace::kernel_of(S + Matrix::identity(N));
  const Subspace closed = Subspace::kernel_of(s.matrix(Op::Del, 2));
  const Subspace exact = Subspace::image(s.matrix(Op::Del, 1));
  const Subspace cp = closed.intersect(plus) + exact;
  const Subspace cm = closed.intersect(minus) + exact;
  rep.dim_plus = cp.dim() - exact.dim();
  rep.dim_minus = cm.dim() - exact.dim();
  rep.direct = cp.intersect(cm).dim() == exact.dim();
  rep.exhaustive = (cp + cm).dim() == closed.dim();
  const Matrix& dj = s.matrix(Op::DelJ, 1);
  rep.exact_forms_vanish = !has_star_eigenform(S, dj, 1) && !has_star_eigenform(S, dj, -1);
  if (!rep.direct || !rep.exhaustive) {
    throw DecompositionFailure("H^{2,0} is not the direct sum of its self-dual and anti-self-dual parts (" +
                               std::to_string(rep.dim_plus) + " + " + std::to_string(rep.dim_minus) + ")");
  }
  return rep;
}

JbarReport jbar_decomposition(const Session& s) {
  JbarReport rep;
  const Matrix& L = s.matrix(Op::Jbar, 2);
  const std::size_t N = L.rows();
  const Subspace closed = Subspace::kernel_of(s.matrix(Op::Del, 2));
  const Subspace exact = Subspace::image(s.matrix(Op::Del, 1));
  const Subspace fp = closed.intersect(Subspace::kernel_of(L - Matrix::identity(N)));
  const Subspace fm = closed.intersect(Subspace::kernel_of(L + Matrix::identity(N)));
  const Subspace hp = fp + exact;
  const Subspace hm = fm + exact;
  rep.h = closed.dim() - exact.dim();
  rep.dim_plus = image_dim_mod(fp, exact);
  rep.dim_minus = image_dim_mod(fm, exact);
  rep.dim_intersection = hp.intersect(hm).dim() - exact.dim();
  rep.dim_sum = (hp + hm).dim() - exact.dim();
  rep.dim_complement = rep.h - rep.dim_sum;
  rep.pure = rep.dim_intersection == 0;
  rep.full = rep.dim_complement == 0;
  rep.plus_basis = Subspace::complement(hp, exact);
  rep.minus_basis = Subspace::complement(hm, exact);
  if (s.n() == 2 && !(rep.pure && rep.full)) {
    throw TheoremViolation("an n = 2 structure must be pure and full; intersection " +
                           std::to_string(rep.dim_intersection) + ", complement " +
                           std::to_string(rep.dim_complement));
  }
  return rep;
}

GaussianRational degree_map(const Session& s, const HodgeData& hd, const Form& omega, const Form& alpha) {
  for (const auto& [m, c] : omega.terms()) {
    if (s.bidegree(m) != std::pair<int, int>{2, 0}) throw NotBidegree20("Ω must be a (2,0)-form");
  }
  const Form power = wedge_power(omega, s.n() - 1);
  if (!s.del(s.del_J(power)).is_zero()) throw NotGauduchon("∂∂_J Ω^{n-1} does not vanish");
  for (const auto& [m, c] : alpha.terms()) {
    if (s.bidegree(m) != std::pair<int, int>{1, 0}) throw NotAeppliClosed("α must be a (1,0)-form");
  }
  if (!s.del(s.del_J(alpha)).is_zero()) throw NotAeppliClosed("∂∂_J α does not vanish");
  return hd.integrate(wedge(wedge(s.del(alpha), power), s.conj(hd.volume().phi)));
}

}  // namespace quatcoh
