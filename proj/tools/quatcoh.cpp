#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatcoh/errors.hpp"
#include "quatcoh/report.hpp"
#include "quatcoh/spec_io.hpp"

using namespace quatcoh;

namespace {

struct Common {
  std::string spec;
  std::vector<std::string> params;
  std::string format = "table";
  bool serial = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("spec", c.spec, "Algebra spec (JSON)")->required();
  cmd->add_option("--param", c.params, "Parameter binding name=p/q")->take_all();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_flag("--serial", c.serial, "Use the serial reference kernels");
}

Algebra load(const Common& c) {
  const AlgebraSpec spec = load_spec(c.spec);
  return instantiate(spec, parse_bindings(c.params, spec));
}

Session open_session(const Common& c) {
  return Session(load(c), Session::Options{c.serial ? Exec::Serial : Exec::Parallel});
}

void emit(const Common& c, const Json& doc, std::string (*render)(const Json&)) {
  if (c.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render(doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic cohomology of nilpotent Lie algebras with hypercomplex structures"};
  app.require_subcommand(1);

  Common validate_opts, report_opts, hkt_opts, decompose_opts, pairing_opts, suite_opts;
  SearchBounds bounds;
  int pairing_p = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check Jacobi, nilpotency, quaternionic relations, integrability");
  add_common(validate_cmd, validate_opts);
  auto* report_cmd = app.add_subcommand("report", "Full cohomology report");
  add_common(report_cmd, report_opts);
  auto* hkt_cmd = app.add_subcommand("hkt", "HKT existence verdict with certificate search");
  add_common(hkt_cmd, hkt_opts);
  hkt_cmd->add_option("--search-denominator-bound", bounds.denominator, "Largest grid denominator")
      ->check(CLI::PositiveNumber);
  hkt_cmd->add_option("--search-coeff-bound", bounds.coefficient, "Largest absolute grid value")
      ->check(CLI::PositiveNumber);
  hkt_cmd->add_option("--search-budget", bounds.budget, "Maximum number of probes");
  auto* decompose_cmd = app.add_subcommand("decompose", "Self-dual and J-bar decompositions of H^{2,0}");
  add_common(decompose_cmd, decompose_opts);
  auto* pairing_cmd = app.add_subcommand("pairing", "Bott-Chern/Aeppli duality pairing in one degree");
  add_common(pairing_cmd, pairing_opts);
  pairing_cmd->add_option("--p", pairing_p, "Degree p")->required();
  auto* suite_cmd = app.add_subcommand("suite", "Run the property suite");
  add_common(suite_cmd, suite_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      const Algebra alg = load(validate_opts);
      const ValidationReport r = validate(alg);
      emit(validate_opts, validation_json(r), render_validation);
      return r.ok() ? 0 : 1;
    }
    if (*report_cmd) {
      const Session s = open_session(report_opts);
      emit(report_opts, build_report(s, ReportOptions{}), render_report);
      return 0;
    }
    if (*hkt_cmd) {
      const Session s = open_session(hkt_opts);
      const CohomologyTable t = cohomology(s);
      if (s.n() != 2) {
        const std::string note = "no verdict (n = " + std::to_string(s.n()) + ")";
        if (hkt_opts.format == "json") {
          std::cout << Json{{"question", "hkt"}, {"answer", nullptr}, {"note", note}}.dump(2) << "\n";
        } else {
          std::cout << "HKT: " << note << "\n";
        }
        return 0;
      }
      emit(hkt_opts, verdict_json(s, hkt_existence(s, t, bounds)), render_verdict);
      return 0;
    }
    if (*decompose_cmd) {
      const Session s = open_session(decompose_opts);
      cohomology(s);
      const HodgeData hd(s);
      std::optional<SelfDualReport> sd;
      if (s.n() == 2) sd = sd_asd_decomposition(s, hd);
      emit(decompose_opts, decomposition_json(s, sd, jbar_decomposition(s)), render_decomposition);
      return 0;
    }
    if (*pairing_cmd) {
      const Session s = open_session(pairing_opts);
      if (pairing_p < 0 || pairing_p > s.n2()) {
        std::cerr << "error: --p must lie in [0, " << s.n2() << "]\n";
        return 2;
      }
      const CohomologyTable t = cohomology(s);
      const HodgeData hd(s);
      emit(pairing_opts, pairing_json(s, pairing_matrix(s, hd, t, pairing_p)), render_pairing);
      return 0;
    }
    if (*suite_cmd) {
      const Session s = open_session(suite_opts);
      const SuiteReport r = run_property_suite(s, bounds);
      emit(suite_opts, suite_json(r), render_suite);
      return r.ok() ? 0 : 3;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleAtBinding& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
