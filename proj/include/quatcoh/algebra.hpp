#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatcoh/exterior.hpp"
#include "quatcoh/matrix.hpp"
#include "quatcoh/param_expr.hpp"

namespace quatcoh {

struct StructureTerm {
  int i = 0;  // 1-based, i < j
  int j = 0;
  ParamExpr coeff;
};

using ParamMatrix = std::vector<std::vector<ParamExpr>>;

/// Uninstantiated input: de^k as 2-forms in the real coframe plus the I, J
/// actions on that coframe (row k holds the coefficients of I e^k).
struct AlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> parameters;
  std::vector<std::vector<StructureTerm>> structure;  // structure[k-1] = terms of de^k
  ParamMatrix I;
  ParamMatrix J;
  std::optional<ParamMatrix> K;
  std::string metadata_json = "{}";
};

/// AlgebraSpec evaluated at a parameter binding.
struct Algebra {
  std::string name;
  int dim = 0;
  Bindings bindings;
  std::vector<std::map<std::pair<int, int>, Rational>> d;  // 0-based, i < j
  Matrix I;
  Matrix J;
  Matrix K;  // I∘J on the coframe
  std::optional<Matrix> K_input;

  int n() const { return dim / 4; }
};

/// Throws UnboundParameter, PoleAtBinding, IndexError, SchemaError.
Algebra instantiate(const AlgebraSpec& spec, const Bindings& bindings);

struct ValidationReport {
  bool jacobi_ok = true;
  bool nilpotent_ok = true;
  int nilpotency_step = 0;
  bool quaternionic_relations_ok = true;
  std::map<std::string, bool> integrability{{"I", true}, {"J", true}, {"K", true}};
  std::vector<std::string> messages;

  bool ok() const;
};

ValidationReport validate_lie_algebra(const Algebra& alg);
ValidationReport validate_hypercomplex(const Algebra& alg);
ValidationReport validate_lie_algebra(const AlgebraSpec& spec, const Bindings& bindings);
ValidationReport validate_hypercomplex(const AlgebraSpec& spec, const Bindings& bindings);
/// Both checks merged.
ValidationReport validate(const Algebra& alg);
/// Throws the ValidationError subclass matching the first failing flag.
void require_valid(const ValidationReport& report);

/// Real exterior algebra on e^1..e^dim with the structure equations.
ExteriorAlgebra real_exterior(const Algebra& alg);

/// Rows: a basis of the +i eigenspace of the coframe action `a`, reduced so
/// that each row has a leading 1 at its lowest index.
Matrix holomorphic_rows(const Matrix& a);

/// Exterior algebra on the generators given by the rows of `frame`
/// (4n rows over e^1..e^4n); d expressed in those generators.
ExteriorAlgebra frame_exterior(const Algebra& alg, const Matrix& frame, const Matrix& frame_inverse);

struct QuaternionicCoframe {
  int n = 0;
  std::vector<Vector> phi;  // 2n rows over e^1..e^4n
  Matrix frame;             // [φ rows; conj φ rows]
  Matrix frame_inverse;     // e^k = Σ_a frame_inverse(k, a) g_a
};

/// Throws EigenspaceDimensionError.
QuaternionicCoframe build_coframe(const Algebra& alg);

}  // namespace quatcoh
