#include "quatcoh/algebra.hpp"

#include "quatcoh/errors.hpp"
#include "quatcoh/subspace.hpp"

namespace quatcoh {

namespace {

Rational real_value(const ParamExpr& e, const Bindings& b, const std::string& where) {
  const GaussianRational v = e.evaluate(b);
  if (!v.is_real()) throw SchemaError(where + ": coefficient must be real, got " + v.to_string());
  return v.re();
}

Matrix instantiate_matrix(const ParamMatrix& pm, int dim, const Bindings& b, const std::string& name) {
  if (pm.size() != static_cast<std::size_t>(dim)) {
    throw IndexError(name + " must have " + std::to_string(dim) + " rows");
  }
  Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < pm.size(); ++r) {
    if (pm[r].size() != static_cast<std::size_t>(dim)) {
      throw IndexError(name + " row " + std::to_string(r + 1) + " must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < pm[r].size(); ++c) {
      m(r, c) = GaussianRational(
          real_value(pm[r][c], b, name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]"));
    }
  }
  return m;
}

}  // namespace

Algebra instantiate(const AlgebraSpec& spec, const Bindings& bindings) {
  if (spec.dim <= 0 || spec.dim % 4 != 0) {
    throw SchemaError("dimension must be a positive multiple of 4, got " + std::to_string(spec.dim));
  }
  if (spec.dim > 32) throw SchemaError("dimension above 32 is not supported");
  Algebra alg;
  alg.name = spec.name;
  alg.dim = spec.dim;
  alg.bindings = bindings;
  if (spec.structure.size() != static_cast<std::size_t>(spec.dim)) {
    throw IndexError("structure table must describe de^1..de^" + std::to_string(spec.dim));
  }
  alg.d.resize(static_cast<std::size_t>(spec.dim));
  for (std::size_t k = 0; k < spec.structure.size(); ++k) {
    for (const auto& t : spec.structure[k]) {
      const std::string where = "de^" + std::to_string(k + 1) + " term (" + std::to_string(t.i) + "," +
                                std::to_string(t.j) + ")";
      if (t.i < 1 || t.j < 1 || t.i > spec.dim || t.j > spec.dim) throw IndexError(where + ": index out of range");
      if (t.i >= t.j) throw IndexError(where + ": requires i < j");
      Rational v = real_value(t.coeff, bindings, where);
      auto& slot = alg.d[k][{t.i - 1, t.j - 1}];
      slot += v;
      if (sgn(slot) == 0) alg.d[k].erase({t.i - 1, t.j - 1});
    }
  }
  alg.I = instantiate_matrix(spec.I, spec.dim, bindings, "I");
  alg.J = instantiate_matrix(spec.J, spec.dim, bindings, "J");
  alg.K = alg.J * alg.I;
  if (spec.K) alg.K_input = instantiate_matrix(*spec.K, spec.dim, bindings, "K");
  return alg;
}

bool ValidationReport::ok() const {
  if (!jacobi_ok || !nilpotent_ok || !quaternionic_relations_ok) return false;
  for (const auto& [k, v] : integrability) {
    if (!v) return false;
  }
  return true;
}

ExteriorAlgebra real_exterior(const Algebra& alg) {
  std::vector<Form> dgen;
  for (const auto& terms : alg.d) {
    Form f;
    for (const auto& [ij, c] : terms) f.add((Mask{1} << ij.first) | (Mask{1} << ij.second), GaussianRational(c));
    dgen.push_back(std::move(f));
  }
  return {alg.dim, std::move(dgen)};
}

ValidationReport validate_lie_algebra(const Algebra& alg) {
  ValidationReport rep;
  const ExteriorAlgebra ext = real_exterior(alg);
  for (int k = 0; k < alg.dim; ++k) {
    const Form dd = ext.d(ext.d_generator(k));
    if (!dd.is_zero()) {
      rep.jacobi_ok = false;
      std::vector<std::string> names;
      for (int a = 1; a <= alg.dim; ++a) names.push_back("e" + std::to_string(a));
      rep.messages.push_back("Jacobi identity fails: d(de^" + std::to_string(k + 1) + ") = " + format_form(dd, names));
    }
  }

  // Filtration V_1 = ker d, V_{k+1} = {α : dα ∈ Λ²V_k}; nilpotent iff it exhausts.
  const auto pairs = combinations(alg.dim, 2);
  std::map<Mask, std::size_t> pair_index;
  for (std::size_t r = 0; r < pairs.size(); ++r) pair_index[pairs[r]] = r;
  Matrix dmat(pairs.size(), static_cast<std::size_t>(alg.dim));
  for (int k = 0; k < alg.dim; ++k) {
    for (const auto& [m, c] : ext.d_generator(k).terms()) dmat(pair_index.at(m), static_cast<std::size_t>(k)) = c;
  }
  Subspace v(static_cast<std::size_t>(alg.dim));
  int step = 0;
  while (v.dim() < static_cast<std::size_t>(alg.dim)) {
    std::vector<Vector> wedges;
    const auto basis = v.vectors();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        const Form w = wedge(one_form(basis[a]), one_form(basis[b]));
        Vector col(pairs.size());
        for (const auto& [m, c] : w.terms()) col[pair_index.at(m)] = c;
        wedges.push_back(std::move(col));
      }
    }
    const Subspace next = Subspace::preimage(dmat, Subspace::span(wedges, pairs.size()));
    if (next.dim() == v.dim()) {
      rep.nilpotent_ok = false;
      rep.messages.push_back("not nilpotent: the descending filtration stabilises at dimension " +
                             std::to_string(v.dim()) + " of " + std::to_string(alg.dim));
      break;
    }
    v = next;
    ++step;
  }
  rep.nilpotency_step = rep.nilpotent_ok ? step : 0;
  return rep;
}

Matrix holomorphic_rows(const Matrix& a) {
  const Matrix shifted = a.transpose() - Matrix::identity(a.rows()).scaled(GaussianRational::i());
  const Matrix ker = kernel(shifted);
  if (ker.cols() == 0) return Matrix(0, a.rows());
  const Rref r = rref(ker.transpose());
  return r.reduced.block(0, 0, r.pivots.size(), a.rows());
}

ExteriorAlgebra frame_exterior(const Algebra& alg, const Matrix& frame, const Matrix& frame_inverse) {
  const std::size_t N = static_cast<std::size_t>(alg.dim);
  std::vector<Form> e_in_gens;
  for (std::size_t k = 0; k < N; ++k) e_in_gens.push_back(one_form(frame_inverse.row(k)));
  std::vector<Form> de;
  for (std::size_t k = 0; k < N; ++k) {
    Form f;
    for (const auto& [ij, c] : alg.d[k]) {
      f += wedge(e_in_gens[static_cast<std::size_t>(ij.first)], e_in_gens[static_cast<std::size_t>(ij.second)]) *
           GaussianRational(c);
    }
    de.push_back(std::move(f));
  }
  std::vector<Form> dgen;
  for (std::size_t a = 0; a < N; ++a) {
    Form f;
    for (std::size_t k = 0; k < N; ++k) {
      if (!frame(a, k).is_zero()) f += de[k] * frame(a, k);
    }
    dgen.push_back(std::move(f));
  }
  return {alg.dim, std::move(dgen)};
}

ValidationReport validate_hypercomplex(const Algebra& alg) {
  ValidationReport rep;
  const std::size_t N = static_cast<std::size_t>(alg.dim);
  const Matrix minus_id = -Matrix::identity(N);
  const auto relation = [&rep](bool holds, const std::string& what) {
    if (!holds) {
      rep.quaternionic_relations_ok = false;
      rep.messages.push_back("quaternionic relation fails: " + what);
    }
  };
  relation(alg.I * alg.I == minus_id, "I^2 = -Id");
  relation(alg.J * alg.J == minus_id, "J^2 = -Id");
  relation(alg.K * alg.K == minus_id, "K^2 = -Id (K = I∘J)");
  relation(alg.I * alg.J == -(alg.J * alg.I), "IJ = -JI");
  if (alg.K_input) relation(*alg.K_input == alg.K, "supplied K equals I∘J");

  const int n2 = alg.dim / 2;
  const std::vector<std::pair<std::string, const Matrix*>> structures{{"I", &alg.I}, {"J", &alg.J}, {"K", &alg.K}};
  for (const auto& [name, a] : structures) {
    if (!(*a * *a == minus_id)) {
      rep.integrability[name] = false;
      rep.messages.push_back("integrability of " + name + " not tested: " + name + "^2 != -Id");
      continue;
    }
    const Matrix rows = holomorphic_rows(*a);
    if (rows.rows() != static_cast<std::size_t>(n2)) {
      rep.integrability[name] = false;
      rep.messages.push_back("+i eigenspace of " + name + " has dimension " + std::to_string(rows.rows()));
      continue;
    }
    const Matrix frame = Matrix::vstack(rows, rows.conj());
    const Matrix inv = inverse(frame);
    const ExteriorAlgebra ext = frame_exterior(alg, frame, inv);
    const Mask low = (Mask{1} << n2) - 1;
    for (int g = 0; g < n2; ++g) {
      const Form bad = ext.d_generator(g).filter([low](Mask m) { return (m & low) == 0; });
      if (!bad.is_zero()) {
        rep.integrability[name] = false;
        std::string form;
        const Vector r = rows.row(static_cast<std::size_t>(g));
        std::vector<std::string> enames;
        for (int k = 1; k <= alg.dim; ++k) enames.push_back("e" + std::to_string(k));
        Form as_e;
        for (std::size_t k = 0; k < r.size(); ++k) as_e.add(Mask{1} << k, r[k]);
        rep.messages.push_back(name + " is not integrable: the (0,2)-part of d(" + format_form(as_e, enames) +
                               ") is nonzero");
      }
    }
  }
  return rep;
}

ValidationReport validate(const Algebra& alg) {
  ValidationReport rep = validate_lie_algebra(alg);
  const ValidationReport hc = validate_hypercomplex(alg);
  rep.quaternionic_relations_ok = hc.quaternionic_relations_ok;
  rep.integrability = hc.integrability;
  rep.messages.insert(rep.messages.end(), hc.messages.begin(), hc.messages.end());
  return rep;
}

ValidationReport validate_lie_algebra(const AlgebraSpec& spec, const Bindings& bindings) {
  return validate_lie_algebra(instantiate(spec, bindings));
}

ValidationReport validate_hypercomplex(const AlgebraSpec& spec, const Bindings& bindings) {
  return validate_hypercomplex(instantiate(spec, bindings));
}

void require_valid(const ValidationReport& report) {
  std::string all;
  for (const auto& m : report.messages) all += (all.empty() ? "" : "; ") + m;
  if (!report.jacobi_ok || !report.nilpotent_ok) throw ValidationError(all);
  if (!report.quaternionic_relations_ok) throw QuaternionicRelationFailure(all);
  for (const auto& [k, v] : report.integrability) {
    if (!v) throw IntegrabilityFailure(all);
  }
}

QuaternionicCoframe build_coframe(const Algebra& alg) {
  const int n2 = alg.dim / 2;
  const Matrix rows = holomorphic_rows(alg.I);
  if (rows.rows() != static_cast<std::size_t>(n2)) {
    throw EigenspaceDimensionError("+i eigenspace of I has dimension " + std::to_string(rows.rows()) +
                                   ", expected " + std::to_string(n2));
  }
  QuaternionicCoframe cf;
  cf.n = alg.dim / 4;
  const std::size_t N = static_cast<std::size_t>(alg.dim);
  Subspace chosen(N);
  for (std::size_t r = 0; r < rows.rows() && cf.phi.size() < static_cast<std::size_t>(n2); ++r) {
    const Vector odd = rows.row(r);
    if (chosen.contains(odd)) continue;
    // J(conj φ): coefficients conj(c)ᵀ·J
    Matrix as_row(1, N);
    for (std::size_t k = 0; k < N; ++k) as_row(0, k) = odd[k].conj();
    const Vector even = (as_row * alg.J).row(0);
    cf.phi.push_back(odd);
    cf.phi.push_back(even);
    chosen = chosen + Subspace::span({odd, even}, N);
  }
  if (cf.phi.size() != static_cast<std::size_t>(n2) || chosen.dim() != static_cast<std::size_t>(n2)) {
    throw EigenspaceDimensionError("quaternionic pairing did not produce a basis of the +i eigenspace");
  }
  const Matrix phi = Matrix::from_rows(cf.phi, N);
  cf.frame = Matrix::vstack(phi, phi.conj());
  try {
    cf.frame_inverse = inverse(cf.frame);
  } catch (const DivisionByZero&) {
    throw EigenspaceDimensionError("coframe and its conjugate do not span the complexified dual");
  }
  return cf;
}

}  // namespace quatcoh
