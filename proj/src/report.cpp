#include "quatcoh/report.hpp"

#include <sstream>

#include "quatcoh/errors.hpp"

namespace quatcoh {

namespace {

Json forms_json(const Session& s, const std::vector<Vector>& vs, int p) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(s.format(s.to_form(v, p)));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Display width of UTF-8 text; combining marks take no column.
std::size_t width(const std::string& text) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    unsigned cp = c;
    if (len == 2) cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(text[i + 1]) & 0x3Fu);
    if (len == 3) {
      cp = ((c & 0x0Fu) << 12) | ((static_cast<unsigned char>(text[i + 1]) & 0x3Fu) << 6) |
           (static_cast<unsigned char>(text[i + 2]) & 0x3Fu);
    }
    if (!(cp >= 0x300 && cp <= 0x36F)) ++w;
    i += len;
  }
  return w;
}

std::string centered(const std::string& text, std::size_t w) {
  const std::size_t pad = w - width(text);
  return std::string(pad / 2, ' ') + text + std::string(pad - pad / 2, ' ');
}

// Box table with a double rule after the first column.
std::string box_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    w[c] = width(head[c]);
    for (const auto& r : rows) w[c] = std::max(w[c], width(r[c]));
    w[c] += 2;
  }
  const auto rule = [&](char ch) {
    std::string line = "+";
    for (std::size_t c = 0; c < w.size(); ++c) {
      line += std::string(w[c], ch) + "+";
      if (c == 0) line += "+";
    }
    return line + "\n";
  };
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += centered(cells[c], w[c]) + "|";
      if (c == 0) out += "|";
    }
    return out + "\n";
  };
  std::string out = rule('-') + line(head) + rule('=');
  for (const auto& r : rows) out += line(r) + rule('-');
  return out;
}

std::string num(const Json& j) {
  if (j.is_boolean()) return yes_no(j.get<bool>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string degree_label(int p) { return "(" + std::to_string(p) + ",0)"; }

}  // namespace

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json algebra_json(const Algebra& alg) {
  Json doc;
  doc["name"] = alg.name;
  doc["dimension"] = alg.dim;
  Json params = Json::array();
  Json bindings = Json::object();
  for (const auto& [name, value] : alg.bindings) {
    params.push_back(name);
    bindings[name] = value.get_str();
  }
  doc["parameters"] = std::move(params);
  doc["bindings"] = std::move(bindings);
  Json structure = Json::array();
  for (std::size_t k = 0; k < alg.d.size(); ++k) {
    if (alg.d[k].empty()) continue;
    Json terms = Json::array();
    for (const auto& [ij, c] : alg.d[k]) {
      terms.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"coeff", c.get_str()}});
    }
    structure.push_back({{"k", k + 1}, {"terms", std::move(terms)}});
  }
  doc["structure"] = std::move(structure);
  doc["I"] = matrix_json(alg.I);
  doc["J"] = matrix_json(alg.J);
  if (alg.K_input) doc["K"] = matrix_json(*alg.K_input);
  return doc;
}

Json validation_json(const ValidationReport& r) {
  Json out;
  out["valid"] = r.ok();
  out["jacobi"] = r.jacobi_ok;
  out["nilpotent"] = r.nilpotent_ok;
  out["nilpotency_step"] = r.nilpotency_step;
  out["quaternionic_relations"] = r.quaternionic_relations_ok;
  Json integ = Json::object();
  for (const auto& [k, v] : r.integrability) integ[k] = v;
  out["integrable"] = std::move(integ);
  out["messages"] = r.messages;
  return out;
}

Json table_json(const CohomologyTable& t) {
  Json out;
  Json coh = Json::array(), var = Json::array(), e1 = Json::array(), e2 = Json::array(), delta = Json::array();
  for (const auto& r : t.rows) {
    coh.push_back({{"p", r.p}, {"h_del", r.h_del}, {"h_delJ", r.h_delJ}, {"h_BC", r.h_BC}, {"h_AE", r.h_AE}});
    var.push_back({{"p", r.p}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}, {"f", r.f}});
    e1.push_back(r.dim_E1);
    e2.push_back(r.dim_E2);
    delta.push_back(r.delta);
  }
  out["cohomology"] = std::move(coh);
  out["varouchas"] = std::move(var);
  out["spectral_sequence"] = {{"E1", std::move(e1)}, {"E2", std::move(e2)}, {"degenerates_at_page_1", t.degenerate_at_1}};
  out["delta"] = std::move(delta);
  return out;
}

Json candidate_json(const Session& s, const MetricCandidate& c) {
  Json out;
  out["omega"] = s.format(c.omega);
  out["gram"] = matrix_json(c.gram);
  Json minors = Json::array();
  for (const auto& m : c.minors) minors.push_back(m.to_string());
  out["leading_minors"] = std::move(minors);
  out["flags"] = {{"hermitian", c.flags.hermitian},
                  {"hkt", c.flags.hkt},
                  {"gauduchon", c.flags.gauduchon},
                  {"strongly_gauduchon", c.flags.strongly_gauduchon},
                  {"hyperkahler", c.flags.hyperkahler}};
  return out;
}

Json verdict_json(const Session& s, const ExistenceVerdict& v) {
  Json out;
  out["question"] = v.question;
  out["answer"] = yes_no(v.answer);
  out["method"] = v.method;
  out["delta2"] = v.delta2;
  out["h10_del"] = v.h10;
  out["probes"] = v.probes;
  out["certificate"] = v.certificate ? candidate_json(s, *v.certificate) : Json(nullptr);
  return out;
}

Json decomposition_json(const Session& s, const std::optional<SelfDualReport>& sd, const JbarReport& jb) {
  Json out;
  if (sd) {
    out["self_dual"] = {{"plus", sd->dim_plus},
                        {"minus", sd->dim_minus},
                        {"direct", sd->direct},
                        {"exhaustive", sd->exhaustive},
                        {"delJ_exact_eigenforms_vanish", sd->exact_forms_vanish}};
  } else {
    out["self_dual"] = nullptr;
  }
  out["jbar"] = {{"h_del", jb.h},
                 {"plus", jb.dim_plus},
                 {"minus", jb.dim_minus},
                 {"intersection", jb.dim_intersection},
                 {"sum", jb.dim_sum},
                 {"complement", jb.dim_complement},
                 {"pure", jb.pure},
                 {"full", jb.full},
                 {"pure_and_full", jb.pure && jb.full}};
  out["bases"] = {{"plus", forms_json(s, jb.plus_basis, 2)}, {"minus", forms_json(s, jb.minus_basis, 2)}};
  return out;
}

Json pairing_json(const Session& s, const PairingResult& pr) {
  Json out;
  out["p"] = pr.p;
  out["rows"] = pr.matrix.rows();
  out["cols"] = pr.matrix.cols();
  out["invertible"] = pr.invertible;
  out["matrix"] = matrix_json(pr.matrix);
  out["bc_representatives"] = forms_json(s, pr.bc_representatives, pr.p);
  out["ae_representatives"] = forms_json(s, pr.ae_representatives, s.n2() - pr.p);
  return out;
}

Json suite_json(const SuiteReport& r) {
  Json out;
  Json checks = Json::array();
  std::size_t pass = 0, na = 0;
  for (const auto& c : r.checks) {
    pass += c.status == CheckStatus::Pass ? 1 : 0;
    na += c.status == CheckStatus::NotApplicable ? 1 : 0;
    checks.push_back({{"name", c.name}, {"statement", c.statement}, {"status", status_name(c.status)}, {"witness", c.witness}});
  }
  out["passed"] = pass;
  out["failed"] = r.failures();
  out["not_applicable"] = na;
  out["checks"] = std::move(checks);
  return out;
}

Json build_report(const Session& s, const ReportOptions& opts) {
  const CohomologyTable t = cohomology(s);
  const HodgeData hd(s);
  std::optional<SelfDualReport> sd;
  if (s.n() == 2) sd = sd_asd_decomposition(s, hd);
  const JbarReport jb = jbar_decomposition(s);

  Json doc;
  doc["input"] = algebra_json(s.algebra());

  Json results;
  results["n"] = s.n();
  const Json tj = table_json(t);
  for (const auto& [k, v] : tj.items()) results[k] = v;
  results["ddJ_lemma"] = ddJ_lemma_holds(t);

  Json dec = decomposition_json(s, sd, jb);
  Json bases = dec["bases"];
  dec.erase("bases");
  results["decomposition"] = std::move(dec);

  Json pairing = Json::array(), pairing_details = Json::array();
  for (int p = 0; p <= s.n2(); ++p) {
    Json pj = pairing_json(s, pairing_matrix(s, hd, t, p));
    pairing.push_back({{"p", p}, {"rows", pj["rows"]}, {"cols", pj["cols"]}, {"invertible", pj["invertible"]}});
    pairing_details.push_back(std::move(pj));
  }
  results["pairing"] = std::move(pairing);

  Json certificates = Json::object();
  if (s.n() == 2) {
    Json verdicts = Json::object();
    for (const auto& v : {hkt_existence(s, t, opts.bounds), sg_existence(s, t, opts.bounds)}) {
      const std::string key = v.question == "hkt" ? "hkt" : "strongly_gauduchon";
      verdicts[key] = {{"answer", yes_no(v.answer)}, {"method", v.method}, {"delta2", v.delta2}, {"h10_del", v.h10}};
      certificates[key] = v.certificate ? candidate_json(s, *v.certificate) : Json(nullptr);
    }
    results["verdicts"] = std::move(verdicts);
  } else {
    results["verdicts"] = {{"note", "no verdict for n = " + std::to_string(s.n())}};
  }
  doc["results"] = std::move(results);

  Json details;
  details["decomposition_bases"] = std::move(bases);
  details["certificates"] = std::move(certificates);
  details["pairing"] = std::move(pairing_details);
  doc["details"] = std::move(details);

  if (opts.include_suite) doc["suite"] = suite_json(run_property_suite(s, opts.bounds));
  return doc;
}

std::string render_report(const Json& doc) {
  const Json& in = doc["input"];
  const Json& r = doc["results"];
  const int n2 = 2 * r["n"].get<int>();
  std::ostringstream os;
  os << in["name"].get<std::string>() << " (real dimension " << in["dimension"].get<int>() << ", n = " << n2 / 2
     << ")";
  for (const auto& [k, v] : in["bindings"].items()) os << ", " << k << " = " << v.get<std::string>();
  os << "\n\n";

  std::vector<std::vector<std::string>> rows1, rows2;
  for (int p = 1; p < n2; ++p) {
    const Json& c = r["cohomology"][static_cast<std::size_t>(p)];
    const Json& v = r["varouchas"][static_cast<std::size_t>(p)];
    rows1.push_back({degree_label(p), num(c["h_del"]), num(c["h_delJ"]), num(c["h_BC"]), num(c["h_AE"])});
    rows2.push_back({degree_label(p), num(v["a"]), num(v["b"]), num(v["c"]), num(v["d"]), num(v["e"]), num(v["f"])});
  }
  os << box_table({"(p,0)", "h_∂^{p,0}", "h_∂J^{p,0}", "h_BC^{p,0}", "h_AE^{p,0}"}, rows1) << "\n";
  os << box_table({"(p,0)", "a^{p,0}", "b^{p,0}", "c^{p,0}", "d^{p,0}", "e^{p,0}", "f^{p,0}"}, rows2) << "\n";

  std::vector<std::vector<std::string>> rows3;
  for (int p = 0; p <= n2; ++p) {
    const auto i = static_cast<std::size_t>(p);
    rows3.push_back({degree_label(p), num(r["spectral_sequence"]["E1"][i]), num(r["spectral_sequence"]["E2"][i]),
                     num(r["delta"][i])});
  }
  os << box_table({"(p,0)", "dim E1", "dim E2", "Δ^p"}, rows3);
  os << "Frölicher degenerates at page 1: " << num(r["spectral_sequence"]["degenerates_at_page_1"]) << "\n";
  os << "∂∂_J-lemma: " << num(r["ddJ_lemma"]) << "\n\n";

  os << render_decomposition(r["decomposition"]) << "\n";

  os << "Pairing H_BC^{p,0} × H_AE^{2n-p,0}:";
  for (const auto& p : r["pairing"]) {
    os << " p=" << p["p"].get<int>() << " " << p["rows"].get<std::size_t>() << "×" << p["cols"].get<std::size_t>()
       << (p["invertible"].get<bool>() ? " invertible" : " SINGULAR") << ";";
  }
  os << "\n\n";

  const Json& v = r["verdicts"];
  if (v.contains("note")) {
    os << "Verdicts: " << v["note"].get<std::string>() << "\n";
  } else {
    os << "HKT: " << num(v["hkt"]["answer"]) << " (" << num(v["hkt"]["method"]) << ", Δ² = " << num(v["hkt"]["delta2"])
       << ", h_∂^{1,0} = " << num(v["hkt"]["h10_del"]) << ")\n";
    os << "Strongly Gauduchon: " << num(v["strongly_gauduchon"]["answer"]) << " ("
       << num(v["strongly_gauduchon"]["method"]) << ")\n";
    const Json& cert = doc["details"]["certificates"]["hkt"];
    if (!cert.is_null()) os << "HKT certificate: Ω = " << cert["omega"].get<std::string>() << "\n";
  }
  if (doc.contains("suite")) {
    const Json& s = doc["suite"];
    os << "\nProperty suite: " << num(s["passed"]) << " passed, " << num(s["failed"]) << " failed, "
       << num(s["not_applicable"]) << " not applicable\n";
    for (const auto& c : s["checks"]) {
      if (c["status"] != "pass") os << "  " << render_suite(Json{{"checks", Json::array({c})}});
    }
  }
  return os.str();
}

std::string render_validation(const Json& v) {
  std::ostringstream os;
  os << "valid: " << num(v["valid"]) << "\n";
  os << "jacobi: " << num(v["jacobi"]) << "\n";
  os << "nilpotent: " << num(v["nilpotent"]) << " (step " << num(v["nilpotency_step"]) << ")\n";
  os << "quaternionic relations: " << num(v["quaternionic_relations"]) << "\n";
  for (const auto& [k, b] : v["integrable"].items()) os << "integrable " << k << ": " << num(b) << "\n";
  for (const auto& m : v["messages"]) os << "  " << m.get<std::string>() << "\n";
  return os.str();
}

std::string render_verdict(const Json& v) {
  std::ostringstream os;
  const std::string label = v["question"] == "hkt" ? "HKT" : "Strongly Gauduchon";
  os << label << ": " << num(v["answer"]) << "\n";
  os << "method: " << num(v["method"]) << "\n";
  os << "Δ² = " << num(v["delta2"]) << ", h_∂^{1,0} = " << num(v["h10_del"]) << ", probes = " << num(v["probes"])
     << "\n";
  if (!v["certificate"].is_null()) {
    const Json& c = v["certificate"];
    os << "certificate: Ω = " << num(c["omega"]) << "\n";
    os << "leading minors:";
    for (const auto& m : c["leading_minors"]) os << " " << num(m);
    os << "\nflags:";
    for (const auto& [k, b] : c["flags"].items()) os << " " << k << "=" << num(b);
    os << "\n";
  }
  return os.str();
}

std::string render_decomposition(const Json& d) {
  std::ostringstream os;
  if (!d["self_dual"].is_null()) {
    const Json& sd = d["self_dual"];
    os << "H^{Φ,+} = " << num(sd["plus"]) << ", H^{Φ,-} = " << num(sd["minus"])
       << ", direct sum: " << num(sd["direct"] && sd["exhaustive"]) << "\n";
  }
  const Json& jb = d["jbar"];
  os << "H^{J̄,+} = " << num(jb["plus"]) << ", H^{J̄,-} = " << num(jb["minus"]) << ", intersection "
     << num(jb["intersection"]) << ", sum " << num(jb["sum"]) << " of " << num(jb["h_del"]) << ", complement "
     << num(jb["complement"]) << "\n";
  os << "pure: " << num(jb["pure"]) << ", full: " << num(jb["full"]) << ", pure-and-full: " << num(jb["pure_and_full"])
     << "\n";
  if (d.contains("bases")) {
    for (const char* key : {"plus", "minus"}) {
      os << "H^{J̄," << (key[0] == 'p' ? '+' : '-') << "} representatives:";
      for (const auto& f : d["bases"][key]) os << "\n  " << f.get<std::string>();
      os << "\n";
    }
  }
  return os.str();
}

std::string render_pairing(const Json& p) {
  std::ostringstream os;
  os << "p = " << num(p["p"]) << ": " << num(p["rows"]) << "×" << num(p["cols"])
     << (p["invertible"].get<bool>() ? ", invertible" : ", singular") << "\n";
  for (const auto& row : p["matrix"]) {
    os << " ";
    for (const auto& e : row) os << " " << e.get<std::string>();
    os << "\n";
  }
  os << "H_BC representatives:";
  for (const auto& f : p["bc_representatives"]) os << "\n  " << f.get<std::string>();
  os << "\nH_AE representatives:";
  for (const auto& f : p["ae_representatives"]) os << "\n  " << f.get<std::string>();
  os << "\n";
  return os.str();
}

std::string render_suite(const Json& s) {
  std::ostringstream os;
  for (const auto& c : s["checks"]) {
    os << num(c["status"]) << "  " << num(c["name"]) << "  [" << num(c["statement"]) << "]";
    if (!c["witness"].get<std::string>().empty()) os << "  " << num(c["witness"]);
    os << "\n";
  }
  os << num(s["passed"]) << " passed, " << num(s["failed"]) << " failed, " << num(s["not_applicable"])
     << " not applicable\n";
  return os.str();
}

}  // namespace quatcoh
