#include "quatcoh/suite.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "quatcoh/cohomology.hpp"
#include "quatcoh/errors.hpp"
#include "quatcoh/sl_structure.hpp"
#include "quatcoh/subspace.hpp"

namespace quatcoh {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Fail ? 1 : 0;
  return n;
}

namespace {

// A check returns an empty witness on success.
using Witness = std::optional<std::string>;

struct Runner {
  SuiteReport report;

  void check(const std::string& name, const std::string& statement, const std::function<Witness()>& body) {
    CheckResult r{name, statement, CheckStatus::Pass, ""};
    try {
      if (auto w = body()) {
        r.status = CheckStatus::Fail;
        r.witness = *w;
      }
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.witness = e.what();
    }
    report.checks.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& statement, const std::string& note) {
    report.checks.push_back({name, statement, CheckStatus::NotApplicable, note});
  }
};

std::string at(int p) { return "p=" + std::to_string(p); }

template <typename T>
std::string pair_str(const T& a, const T& b) {
  std::ostringstream os;
  os << a << " vs " << b;
  return os.str();
}

Witness for_degrees(int lo, int hi, const std::function<Witness(int)>& f) {
  for (int p = lo; p <= hi; ++p) {
    if (auto w = f(p)) return at(p) + ": " + *w;
  }
  return std::nullopt;
}

Matrix signed_identity(std::size_t n, int p) {
  return Matrix::identity(n).scaled(GaussianRational(p % 2 == 0 ? 1 : -1));
}

Matrix laplacian(const Session& s, int p) {
  const Matrix& out = s.matrix(Op::Del, p);
  const Matrix& in = s.matrix(Op::Del, p - 1);
  return in * in.adjoint() + out.adjoint() * out;
}

}  // namespace

SuiteReport run_property_suite(const Session& s, const SearchBounds& bounds) {
  Runner r;
  const int n2 = s.n2();
  const bool sl2 = s.n() == 2;
  const std::string n_note = "n=" + std::to_string(s.n());

  // Arithmetic.
  r.check("gaussian-roundtrip", "parse(print(x)) = x on every operator matrix entry", [&]() -> Witness {
    for (Op op : {Op::Del, Op::DelJ, Op::Jbar, Op::DdJ}) {
      for (int p = 0; p <= n2; ++p) {
        const Matrix& m = s.matrix(op, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(GaussianRational::parse(m(i, j).to_string()) == m(i, j))) return m(i, j).to_string();
      }
    }
    return std::nullopt;
  });
  r.check("field-axioms", "distributivity and commutativity on 1000 seeded random triples", [&]() -> Witness {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    const auto draw = [&] {
      return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    };
    for (int k = 0; k < 1000; ++k) {
      const auto a = draw(), b = draw(), c = draw();
      if (!(a * (b + c) == a * b + a * c) || !(a * b == b * a) || !(a + b == b + a)) {
        return a.to_string() + ", " + b.to_string() + ", " + c.to_string();
      }
    }
    return std::nullopt;
  });

  // Hypercomplex structure.
  r.check("quaternion-relations", "(I∘J)² = −Id and I∘(I∘J) = −(I∘J)∘I", [&]() -> Witness {
    const Algebra& a = s.algebra();
    const Matrix id = Matrix::identity(static_cast<std::size_t>(a.dim));
    if (!(a.K * a.K == -id)) return "K² ≠ −Id";
    if (!(a.I * a.K == -(a.K * a.I))) return "I and K do not anticommute";
    return std::nullopt;
  });
  r.check("jbar-squared", "J̄² = (−1)^p on (p,0)", [&] {
    return for_degrees(0, n2, [&](int p) -> Witness {
      const Matrix& l = s.matrix(Op::Jbar, p);
      if (!(l * l.conj() == signed_identity(l.rows(), p))) return "J̄² ≠ (−1)^p";
      return std::nullopt;
    });
  });

  // Operators.
  r.check("del-squared", "M_∂(p+1)·M_∂(p) = 0", [&] {
    return for_degrees(0, n2, [&](int p) -> Witness {
      if (!(s.matrix(Op::Del, p + 1) * s.matrix(Op::Del, p)).is_zero()) return "nonzero product";
      return std::nullopt;
    });
  });
  r.check("delJ-squared", "M_∂J(p+1)·M_∂J(p) = 0", [&] {
    return for_degrees(0, n2, [&](int p) -> Witness {
      if (!(s.matrix(Op::DelJ, p + 1) * s.matrix(Op::DelJ, p)).is_zero()) return "nonzero product";
      return std::nullopt;
    });
  });
  r.check("anticommutation", "M_∂(p+1)·M_∂J(p) + M_∂J(p+1)·M_∂(p) = 0", [&] {
    return for_degrees(0, n2, [&](int p) -> Witness {
      const Matrix m = s.matrix(Op::Del, p + 1) * s.matrix(Op::DelJ, p) +
                       s.matrix(Op::DelJ, p + 1) * s.matrix(Op::Del, p);
      if (!m.is_zero()) return "nonzero sum";
      return std::nullopt;
    });
  });
  r.check("jbar-intertwining", "∂_J∘J̄ = −J̄∘∂", [&] {
    return for_degrees(0, n2 - 1, [&](int p) -> Witness {
      const Matrix lhs = s.matrix(Op::DelJ, p) * s.matrix(Op::Jbar, p);
      const Matrix rhs = -(s.matrix(Op::Jbar, p + 1) * s.matrix(Op::Del, p).conj());
      if (!(lhs == rhs)) return "matrices differ";
      return std::nullopt;
    });
  });

  // Cohomology.
  CohomologyTable t;
  bool have_table = false;
  r.check("e2-dual-oracle", "dim E2 by definition = dim E2 by page iteration", [&]() -> Witness {
    t = compute_table(s.complex(), s.options().exec);
    have_table = true;
    return std::nullopt;
  });
  if (!have_table) return r.report;
  const auto rows = [&](const std::function<Witness(const DegreeRow&)>& f) -> Witness {
    for (const auto& row : t.rows) {
      if (auto w = f(row)) return at(row.p) + ": " + *w;
    }
    return std::nullopt;
  };
  r.check("h-del-equals-h-delJ", "h_∂ = h_∂J", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      if (x.h_del != x.h_delJ) return pair_str(x.h_del, x.h_delJ);
      return std::nullopt;
    });
  });
  r.check("exactness-sums", "a − b + h_∂ − h_AE + c = 0 and d − h_BC + h_∂ − e + f = 0", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      const long s1 = static_cast<long>(x.a) - static_cast<long>(x.b) + static_cast<long>(x.h_del) -
                      static_cast<long>(x.h_AE) + static_cast<long>(x.c);
      const long s2 = static_cast<long>(x.d) - static_cast<long>(x.h_BC) + static_cast<long>(x.h_del) -
                      static_cast<long>(x.e) + static_cast<long>(x.f);
      if (s1 != 0 || s2 != 0) return "sums " + pair_str(s1, s2);
      return std::nullopt;
    });
  });
  r.check("b-equals-d-c-equals-e", "b = d and c = e", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      if (x.b != x.d) return "b, d: " + pair_str(x.b, x.d);
      if (x.c != x.e) return "c, e: " + pair_str(x.c, x.e);
      return std::nullopt;
    });
  });
  r.check("shifted-identities", "e(p) = b(p+1) and c(p) = d(p+1)", [&] {
    return for_degrees(0, n2 - 1, [&](int p) -> Witness {
      if (t.at(p).e != t.at(p + 1).b) return "e, b: " + pair_str(t.at(p).e, t.at(p + 1).b);
      if (t.at(p).c != t.at(p + 1).d) return "c, d: " + pair_str(t.at(p).c, t.at(p + 1).d);
      return std::nullopt;
    });
  });
  r.check("frolicher-inequality", "h_BC + h_AE ≥ 2 h_∂ ≥ 2 dim E2", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      if (x.h_BC + x.h_AE < 2 * x.h_del || x.h_del < x.dim_E2) {
        return std::to_string(x.h_BC) + " + " + std::to_string(x.h_AE) + ", h " + std::to_string(x.h_del) +
               ", E2 " + std::to_string(x.dim_E2);
      }
      return std::nullopt;
    });
  });
  r.check("delta-identity", "Δ = a + f + 2(h_∂ − dim E2)", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      const long rhs = static_cast<long>(x.a + x.f) + 2 * (static_cast<long>(x.h_del) - static_cast<long>(x.dim_E2));
      if (x.delta != rhs) return pair_str(x.delta, rhs);
      return std::nullopt;
    });
  });
  r.check("delta-nonnegative", "Δ ≥ 0", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      if (x.delta < 0) return std::to_string(x.delta);
      return std::nullopt;
    });
  });
  r.check("e2-below-e1", "dim E2 ≤ dim E1", [&] {
    return rows([](const DegreeRow& x) -> Witness {
      if (x.dim_E2 > x.dim_E1) return pair_str(x.dim_E2, x.dim_E1);
      return std::nullopt;
    });
  });
  r.check("bc-ae-degree1-even", "h_BC^{1,0} and h_AE^{1,0} are even", [&]() -> Witness {
    if (t.at(1).h_BC % 2 != 0 || t.at(1).h_AE % 2 != 0) return pair_str(t.at(1).h_BC, t.at(1).h_AE);
    return std::nullopt;
  });
  r.check("b10-vanishes", "b^{1,0} = 0", [&]() -> Witness {
    if (t.at(1).b != 0) return std::to_string(t.at(1).b);
    return std::nullopt;
  });
  r.check("ddJ-lemma-equivalence", "all b = 0 ⇔ h_BC + h_AE = 2 dim E2 for all p", [&]() -> Witness {
    ddJ_lemma_holds(t);
    return std::nullopt;
  });
  if (sl2) {
    r.check("delta-1-3-vanish", "Δ¹ = Δ³ = 0", [&]() -> Witness {
      if (t.at(1).delta != 0 || t.at(3).delta != 0) return pair_str(t.at(1).delta, t.at(3).delta);
      return std::nullopt;
    });
    r.check("delta-2-range", "Δ² ∈ {0, 2}", [&]() -> Witness {
      if (t.at(2).delta != 0 && t.at(2).delta != 2) return std::to_string(t.at(2).delta);
      return std::nullopt;
    });
    r.check("degenerates-at-first-page", "E1 ≅ E2", [&]() -> Witness {
      if (!t.degenerate_at_1) return "E1 ≠ E2";
      return std::nullopt;
    });
  } else {
    r.skip("delta-1-3-vanish", "Δ¹ = Δ³ = 0", "not applicable (" + n_note + ")");
    r.skip("delta-2-range", "Δ² ∈ {0, 2}", "not applicable (" + n_note + ")");
    r.skip("degenerates-at-first-page", "E1 ≅ E2",
           std::string("not applicable (") + n_note + "); measured " + (t.degenerate_at_1 ? "E1 = E2" : "E1 ≠ E2"));
  }

  // SL(n,H) layer.
  std::optional<HodgeData> hd;
  r.check("volume-form", "Φ is holomorphic and J̄Φ = Φ", [&]() -> Witness {
    hd.emplace(s);
    return std::nullopt;
  });
  if (hd) {
    r.check("star-squared", "∗² = (−1)^p", [&] {
      return for_degrees(0, n2, [&](int p) -> Witness {
        const Matrix& sp = hd->star_matrix(p);
        if (!(hd->star_matrix(n2 - p) * sp.conj() == signed_identity(sp.rows(), p))) return "∗² ≠ (−1)^p";
        return std::nullopt;
      });
    });
    r.check("star-monomial-rule", "∗ maps each basis monomial to ± its complement", [&] {
      return for_degrees(0, n2, [&](int p) -> Witness {
        const auto& src = s.basis(p);
        const Mask full = (Mask{1} << n2) - 1;
        for (std::size_t k = 0; k < src.size(); ++k) {
          const Form img = hd->star(Form::monomial(src[k]), p);
          const Mask target = full & ~src[k];
          const GaussianRational c = img.coeff(target);
          const bool unit = c == GaussianRational(1) || c == GaussianRational(-1);
          if (img.terms().size() != 1 || !unit) return "∗" + s.format(Form::monomial(src[k])) + " = " + s.format(img);
        }
        return std::nullopt;
      });
    });
    r.check("omega-norm", "h(Ω_std, Ω_std) = n", [&]() -> Witness {
      const Vector v = s.to_vector(s.standard_omega(), 2);
      const GaussianRational h = HodgeData::h(v, v);
      if (!(h == GaussianRational(s.n()))) return h.to_string();
      return std::nullopt;
    });
    r.check("adjoint-identity", "M_∂^† = −∗ M_∂ ∗", [&] {
      return for_degrees(0, n2 - 1, [&](int p) -> Witness {
        const Matrix lhs = s.matrix(Op::Del, p).adjoint();
        const Matrix rhs = -(hd->star_matrix(n2 - p) * s.matrix(Op::Del, n2 - p - 1).conj() *
                             hd->star_matrix(p + 1).conj());
        if (!(lhs == rhs)) return "matrices differ";
        return std::nullopt;
      });
    });
    r.check("star-commutes-with-laplacian", "∗ Δ_∂ = Δ_∂ ∗", [&] {
      return for_degrees(0, n2, [&](int p) -> Witness {
        const Matrix& sp = hd->star_matrix(p);
        if (!(sp * laplacian(s, p).conj() == laplacian(s, n2 - p) * sp)) return "matrices differ";
        return std::nullopt;
      });
    });
    r.check("sl-duality", "h_BC(p) = h_AE(2n−p) and h_∂(p) = h_∂(2n−p)", [&] {
      return for_degrees(0, n2, [&](int p) -> Witness {
        if (t.at(p).h_BC != t.at(n2 - p).h_AE) return "BC/AE " + pair_str(t.at(p).h_BC, t.at(n2 - p).h_AE);
        if (t.at(p).h_del != t.at(n2 - p).h_del) return "h_∂ " + pair_str(t.at(p).h_del, t.at(n2 - p).h_del);
        return std::nullopt;
      });
    });
    r.check("pairing-invertible", "∫ α∧β∧Φ̄ is a perfect pairing H_BC^{p,0} × H_AE^{2n−p,0}", [&] {
      return for_degrees(0, n2, [&](int p) -> Witness {
        const auto pr = pairing_matrix(s, *hd, t, p);
        if (!pr.invertible) {
          return std::to_string(pr.matrix.rows()) + "×" + std::to_string(pr.matrix.cols()) + " singular";
        }
        return std::nullopt;
      });
    });
    if (sl2) {
      r.check("self-dual-decomposition", "H^{2,0}_∂ = H^{Φ,+} ⊕ H^{Φ,−}", [&]() -> Witness {
        const auto sd = sd_asd_decomposition(s, *hd);
        if (sd.dim_plus + sd.dim_minus != t.at(2).h_del) return pair_str(sd.dim_plus + sd.dim_minus, t.at(2).h_del);
        return std::nullopt;
      });
      r.check("delJ-exact-self-dual-vanish", "∂_J-exact (anti-)self-dual (2,0)-forms are zero", [&]() -> Witness {
        if (!sd_asd_decomposition(s, *hd).exact_forms_vanish) return "nonzero ∂_J-exact eigenform";
        return std::nullopt;
      });
    } else {
      r.skip("self-dual-decomposition", "H^{2,0}_∂ = H^{Φ,+} ⊕ H^{Φ,−}", "not applicable (" + n_note + ")");
      r.skip("delJ-exact-self-dual-vanish", "∂_J-exact (anti-)self-dual (2,0)-forms are zero",
             "not applicable (" + n_note + ")");
    }
    const std::string deg_statement =
        "deg vanishes on H^{1,0}_∂, does not see ∂_J-exact terms, h_AE^{1,0} ≤ h_∂^{1,0} + 1";
    if (!sl2) {
      r.skip("degree-map", deg_statement,
             "not applicable (" + n_note + "); h_AE^{1,0} = " + std::to_string(t.at(1).h_AE) +
                 ", h_∂^{1,0} = " + std::to_string(t.at(1).h_del));
    } else {
      r.check("degree-map", deg_statement, [&]() -> Witness {
        if (t.at(1).h_AE > t.at(1).h_del + 1) return "h_AE " + pair_str(t.at(1).h_AE, t.at(1).h_del + 1);
        const Form omega = s.standard_omega();
        if (!s.del(s.del_J(wedge_power(omega, s.n() - 1))).is_zero()) return std::nullopt;
        for (const auto& v : Subspace::kernel_of(s.matrix(Op::Del, 1)).vectors()) {
          if (!degree_map(s, *hd, omega, s.to_form(v, 1)).is_zero()) return "deg ≠ 0 on a ∂-closed form";
        }
        const Subspace exact = Subspace::image(s.matrix(Op::Del, 0)) + Subspace::image(s.matrix(Op::DelJ, 0));
        for (const auto& v : Subspace::complement(Subspace::kernel_of(s.matrix(Op::DdJ, 1)), exact)) {
          const auto base = degree_map(s, *hd, omega, s.to_form(v, 1));
          for (const auto& e : exact.vectors()) {
            if (!(degree_map(s, *hd, omega, s.to_form(v + e, 1)) == base)) return "representative dependence";
          }
        }
        return std::nullopt;
      });
    }
  }
  {
    const std::string pf = "H^{J̄,+} ∩ H^{J̄,−} = 0 and H^{J̄,+} + H^{J̄,−} = H^{2,0}_∂";
    if (sl2) {
      r.check("pure-and-full", pf, [&]() -> Witness {
        jbar_decomposition(s);
        return std::nullopt;
      });
    } else {
      try {
        const auto jb = jbar_decomposition(s);
        r.skip("pure", "H^{J̄,+} ∩ H^{J̄,−} = 0",
               "not applicable (" + n_note + "); intersection dim " + std::to_string(jb.dim_intersection));
        r.skip("full", "H^{J̄,+} + H^{J̄,−} = H^{2,0}_∂",
               "not applicable (" + n_note + "); complement dim " + std::to_string(jb.dim_complement));
      } catch (const std::exception& e) {
        r.check("pure-and-full", pf, [&]() -> Witness { return std::string(e.what()); });
      }
    }
  }

  // Metrics.
  r.check("flag-monotonicity", "hyperkähler ⇒ HKT ⇒ strongly Gauduchon ⇒ Gauduchon", [&]() -> Witness {
    std::vector<Form> omegas{s.standard_omega()};
    for (const auto& v : metric_solution_space(s, MetricKind::HKT)) omegas.push_back(s.to_form(v, 2));
    for (const auto& om : omegas) {
      const auto f = classify_metric(s, om).flags;
      if ((f.hyperkahler && !f.hkt) || (f.hkt && !f.strongly_gauduchon) || (f.strongly_gauduchon && !f.gauduchon)) {
        return s.format(om);
      }
    }
    return std::nullopt;
  });
  r.check("search-decoupling", "on the HKT search space, hkt flag = positivity of the Gram matrix", [&]() -> Witness {
    const auto basis = metric_solution_space(s, MetricKind::HKT);
    std::vector<Vector> samples = basis;
    if (!basis.empty()) {
      Vector sum(basis.front().size());
      for (const auto& v : basis) sum = sum + v;
      samples.push_back(sum);
      samples.push_back(s.to_vector(s.standard_omega(), 2));
    }
    for (const auto& v : samples) {
      const Form om = s.to_form(v, 2);
      const auto c = classify_metric(s, om);
      const bool linear_ok = s.Jbar(om) == om && s.del(om).is_zero();
      if (linear_ok && c.flags.hkt != positive_definite(c.gram)) return s.format(om);
    }
    return std::nullopt;
  });
  if (sl2) {
    r.check("hkt-criteria-agree", "Δ² = 0 ⇔ h_∂^{1,0} even ⇔ certificate found", [&]() -> Witness {
      const auto v = hkt_existence(s, t, bounds);
      if (v.answer != v.certificate.has_value()) {
        return "answer " + std::string(v.answer ? "yes" : "no") + ", certificate " +
               (v.certificate ? "found" : "not found") + " after " + std::to_string(v.probes) + " probes";
      }
      return std::nullopt;
    });
    r.check("sg-agrees-with-hkt", "strongly Gauduchon ⇔ HKT", [&]() -> Witness {
      const auto h = hkt_existence(s, t, bounds);
      const auto g = sg_existence(s, t, bounds);
      if (h.answer != g.answer) return "answers differ";
      return std::nullopt;
    });
  } else {
    r.skip("hkt-criteria-agree", "Δ² = 0 ⇔ h_∂^{1,0} even ⇔ certificate found", "no verdict (" + n_note + ")");
    r.skip("sg-agrees-with-hkt", "strongly Gauduchon ⇔ HKT", "no verdict (" + n_note + ")");
  }
  return r.report;
}

}  // namespace quatcoh
