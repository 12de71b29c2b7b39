#include "quatcoh/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "quatcoh/errors.hpp"

namespace quatcoh {

namespace {

using json = nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing required field '" + key + "' at " + path + "/" + key);
  return *it;
}

std::string scalar_text(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(path + ": expected an integer or a string coefficient");
}

int int_field(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return v.get<int>();
}

ParamExpr coefficient(const json& v, const std::string& path, const std::vector<std::string>& params) {
  const std::string text = scalar_text(v, path);
  try {
    return ParamExpr::parse(text, params);
  } catch (const CoefficientParseError& e) {
    throw CoefficientParseError(path + ": " + e.what());
  }
}

ParamMatrix matrix_field(const json& v, int dim, const std::string& path, const std::vector<std::string>& params) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(dim)) {
    throw SchemaError(path + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  }
  ParamMatrix m;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    if (!v[r].is_array() || v[r].size() != static_cast<std::size_t>(dim)) {
      throw SchemaError(rp + ": expected a row of " + std::to_string(dim) + " entries");
    }
    std::vector<ParamExpr> row;
    for (std::size_t c = 0; c < v[r].size(); ++c) {
      row.push_back(coefficient(v[r][c], rp + "/" + std::to_string(c), params));
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::string expr_text(const ParamExpr& e) {
  if (!e.source().empty()) return e.source();
  return e.evaluate({}).to_string();
}

json matrix_json(const ParamMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(expr_text(e));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("malformed JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw SchemaError("/: the document must be a JSON object");

  AlgebraSpec spec;
  const json& name = require(doc, "name", "");
  if (!name.is_string()) throw SchemaError("/name: expected a string");
  spec.name = name.get<std::string>();
  spec.dim = int_field(require(doc, "dimension", ""), "/dimension");
  if (spec.dim <= 0 || spec.dim % 4 != 0) {
    throw SchemaError("/dimension: must be a positive multiple of 4, got " + std::to_string(spec.dim));
  }
  if (spec.dim > 32) throw SchemaError("/dimension: at most 32 is supported");

  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("/parameters: expected an array of names");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& p = (*it)[k];
      const std::string path = "/parameters/" + std::to_string(k);
      if (!p.is_string()) throw SchemaError(path + ": expected a string");
      const std::string pname = p.get<std::string>();
      if (pname.empty() || !(std::isalpha(static_cast<unsigned char>(pname[0])) || pname[0] == '_')) {
        throw SchemaError(path + ": invalid parameter name '" + pname + "'");
      }
      for (char c : pname) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
          throw SchemaError(path + ": invalid parameter name '" + pname + "'");
        }
      }
      if (pname == "i") throw SchemaError(path + ": 'i' is reserved for the imaginary unit");
      if (!seen.insert(pname).second) throw SchemaError(path + ": duplicate parameter '" + pname + "'");
      spec.parameters.push_back(pname);
    }
  }

  spec.structure.assign(static_cast<std::size_t>(spec.dim), {});
  const json& structure = require(doc, "structure", "");
  if (!structure.is_array()) throw SchemaError("/structure: expected an array");
  std::set<int> seen_k;
  for (std::size_t s = 0; s < structure.size(); ++s) {
    const std::string path = "/structure/" + std::to_string(s);
    const json& entry = structure[s];
    const int k = int_field(require(entry, "k", path), path + "/k");
    if (k < 1 || k > spec.dim) throw IndexError(path + "/k: index " + std::to_string(k) + " out of range");
    if (!seen_k.insert(k).second) throw SchemaError(path + "/k: de^" + std::to_string(k) + " listed twice");
    const json& terms = require(entry, "terms", path);
    if (!terms.is_array()) throw SchemaError(path + "/terms: expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = path + "/terms/" + std::to_string(t);
      StructureTerm term;
      term.i = int_field(require(terms[t], "i", tp), tp + "/i");
      term.j = int_field(require(terms[t], "j", tp), tp + "/j");
      term.coeff = coefficient(require(terms[t], "coeff", tp), tp + "/coeff", spec.parameters);
      if (term.i < 1 || term.j < 1 || term.i > spec.dim || term.j > spec.dim) {
        throw IndexError(tp + ": index out of range");
      }
      if (term.i >= term.j) throw IndexError(tp + ": requires i < j");
      spec.structure[static_cast<std::size_t>(k - 1)].push_back(std::move(term));
    }
  }

  spec.I = matrix_field(require(doc, "I", ""), spec.dim, "/I", spec.parameters);
  spec.J = matrix_field(require(doc, "J", ""), spec.dim, "/J", spec.parameters);
  if (auto it = doc.find("K"); it != doc.end()) spec.K = matrix_field(*it, spec.dim, "/K", spec.parameters);
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw SchemaError("/metadata: expected an object");
    spec.metadata_json = it->dump();
  }
  return spec;
}

AlgebraSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Bindings parse_bindings(const std::vector<std::string>& items, const AlgebraSpec& spec) {
  Bindings out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw SchemaError("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (std::find(spec.parameters.begin(), spec.parameters.end(), name) == spec.parameters.end()) {
      throw SchemaError("--param " + name + ": the spec declares no such parameter");
    }
    const GaussianRational v = GaussianRational::parse(item.substr(eq + 1));
    if (!v.is_real()) throw SchemaError("--param " + name + ": value must be rational");
    out[name] = v.re();
  }
  return out;
}

std::string dump_spec(const AlgebraSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["dimension"] = spec.dim;
  doc["parameters"] = spec.parameters;
  json structure = json::array();
  for (std::size_t k = 0; k < spec.structure.size(); ++k) {
    if (spec.structure[k].empty()) continue;
    json terms = json::array();
    for (const auto& t : spec.structure[k]) terms.push_back({{"i", t.i}, {"j", t.j}, {"coeff", expr_text(t.coeff)}});
    structure.push_back({{"k", k + 1}, {"terms", std::move(terms)}});
  }
  doc["structure"] = std::move(structure);
  doc["I"] = matrix_json(spec.I);
  doc["J"] = matrix_json(spec.J);
  if (spec.K) doc["K"] = matrix_json(*spec.K);
  doc["metadata"] = json::parse(spec.metadata_json);
  return doc.dump(2) + "\n";
}

}  // namespace quatcoh
