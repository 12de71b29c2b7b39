#include <cctype>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "quatcoh/errors.hpp"
#include "quatcoh/report.hpp"
#include "test_support.hpp"

using namespace qt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

Json example1_doc() { return Json::parse(read_file(data_path("example1.json"))); }

// Integer cells of the boxed table rows "| (p,0) || … |", in order of appearance.
std::vector<std::vector<long>> table_rows(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("| (", 0) != 0 || !std::isdigit(static_cast<unsigned char>(line[3]))) continue;
    const auto body = line.find("||");
    std::vector<long> cells;
    std::istringstream cs(line.substr(body + 2));
    std::string cell;
    while (std::getline(cs, cell, '|')) {
      if (cell.find_first_not_of(' ') == std::string::npos) continue;
      cells.push_back(std::stol(cell));
    }
    rows.push_back(cells);
  }
  return rows;
}

Json quick_report(const Algebra& alg) {
  ReportOptions opts;
  opts.include_suite = false;
  return build_report(Session(alg), opts);
}

}  // namespace

TEST_CASE("bundled specs parse") {
  const auto e1 = corpus_spec("example1");
  CHECK(e1.name == "example1");
  CHECK(e1.dim == 8);
  CHECK(e1.parameters.empty());
  const auto e2 = corpus_spec("example2");
  CHECK(e2.parameters == std::vector<std::string>{"t"});
  CHECK_THROWS_AS(instantiate(e2, {}), UnboundParameter);
  CHECK(corpus_spec("example3").dim == 12);
}

TEST_CASE("schema errors name the offending field") {
  auto doc = example1_doc();
  doc.erase("J");
  const auto msg = error_of(doc.dump());
  CHECK(msg.find("J") != std::string::npos);
  CHECK_THROWS_AS(parse_spec(doc.dump()), SchemaError);

  auto bad_row = example1_doc();
  bad_row["I"][2].erase(0);
  CHECK(error_of(bad_row.dump()).find("/I/2") != std::string::npos);

  auto bad_dim = example1_doc();
  bad_dim["dimension"] = 6;
  CHECK(error_of(bad_dim.dump()).find("/dimension") != std::string::npos);

  auto bad_coeff = example1_doc();
  bad_coeff["structure"][0]["terms"][1]["coeff"] = "3*(";
  CHECK_THROWS_AS(parse_spec(bad_coeff.dump()), CoefficientParseError);
  CHECK(error_of(bad_coeff.dump()).find("/structure/0/terms/1") != std::string::npos);

  auto bad_index = example1_doc();
  bad_index["structure"][0]["terms"][0]["j"] = 11;
  CHECK_THROWS_AS(parse_spec(bad_index.dump()), IndexError);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"name\": \"x\",\n  \"dimension\": 8,,\n}";
  const auto msg = error_of(text);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK_THROWS_AS(load_spec(data_path("no_such_file.json")), SchemaError);
}

TEST_CASE("spec round trip") {
  for (const char* name : {"example1", "example2", "example3", "abelian8"}) {
    const auto spec = corpus_spec(name);
    const auto text = dump_spec(spec);
    CHECK(dump_spec(parse_spec(text)) == text);
  }
  const auto spec = corpus_spec("example2");
  const Bindings b{{"t", Rational(1, 3)}};
  const auto a = instantiate(spec, b);
  const auto back = instantiate(parse_spec(dump_spec(spec)), b);
  CHECK(a.I == back.I);
  CHECK(a.J == back.J);
  CHECK(a.d == back.d);
}

TEST_CASE("parameter bindings") {
  const auto spec = corpus_spec("example2");
  const auto b = parse_bindings({"t=1/3"}, spec);
  CHECK(b.at("t") == Rational(1, 3));
  CHECK_THROWS_AS(parse_bindings({"s=1/3"}, spec), SchemaError);
  CHECK_THROWS_AS(parse_bindings({"t"}, spec), SchemaError);
  CHECK_THROWS_AS(parse_bindings({"t=1/2+i"}, spec), SchemaError);
}

TEST_CASE("report content for Example 1") {
  const auto r = quick_report(corpus("example1"));
  const auto& res = r.at("results");
  CHECK(res.at("n") == 2);
  CHECK(res.at("cohomology")[2].at("h_BC") == 5);
  CHECK(res.at("varouchas")[3].at("b") == 1);
  CHECK(res.at("delta") == Json::array({0, 0, 2, 0, 0}));
  CHECK(res.at("spectral_sequence").at("degenerates_at_page_1") == true);
  CHECK(res.at("ddJ_lemma") == false);
  CHECK(res.at("verdicts").at("hkt").at("answer") == "no");
  CHECK(res.at("verdicts").at("strongly_gauduchon").at("answer") == "no");
  CHECK(res.at("decomposition").at("jbar").at("pure_and_full") == true);
  CHECK_FALSE(r.contains("suite"));
}

TEST_CASE("report determinism and JSON round trip") {
  const auto alg = example2(1, 2);
  ReportOptions opts;
  const auto a = build_report(Session(alg), opts).dump(2);
  const auto b = build_report(Session(alg, Session::Options{Exec::Serial}), opts).dump(2);
  CHECK(a == b);
  CHECK(Json::parse(a).dump(2) == a);
  const auto doc = Json::parse(a);
  CHECK(doc.at("results").at("verdicts").at("hkt").at("answer") == "yes");
  CHECK(doc.at("details").at("certificates").at("hkt").contains("leading_minors"));
  CHECK(doc.at("suite").at("failed") == 0);
}

TEST_CASE("the input echo instantiates back to the same algebra") {
  const auto alg = example2(3, 4);
  const auto r = quick_report(alg);
  const auto echoed = instantiate(parse_spec(r.at("input").dump()), {});
  CHECK(echoed.I == alg.I);
  CHECK(echoed.J == alg.J);
  CHECK(echoed.d == alg.d);
}

TEST_CASE("table rendering carries the same numbers as the document") {
  for (const auto& alg : {corpus("example1"), corpus("example3"), example2(1, 2)}) {
    const auto r = quick_report(alg);
    const auto& res = r.at("results");
    const int top = 2 * res.at("n").get<int>();
    std::vector<std::vector<long>> expected;
    for (int p = 1; p < top; ++p) {
      const auto& c = res.at("cohomology")[static_cast<std::size_t>(p)];
      expected.push_back({c.at("h_del"), c.at("h_delJ"), c.at("h_BC"), c.at("h_AE")});
    }
    for (int p = 1; p < top; ++p) {
      const auto& v = res.at("varouchas")[static_cast<std::size_t>(p)];
      expected.push_back({v.at("a"), v.at("b"), v.at("c"), v.at("d"), v.at("e"), v.at("f")});
    }
    for (int p = 0; p <= top; ++p) {
      const auto k = static_cast<std::size_t>(p);
      expected.push_back({res.at("spectral_sequence").at("E1")[k], res.at("spectral_sequence").at("E2")[k],
                          res.at("delta")[k]});
    }
    CHECK(table_rows(render_report(r)) == expected);
  }
}

TEST_CASE("Example 2 away from 1/2 reports exactly like Example 1") {
  const auto ref = quick_report(corpus("example1")).at("results");
  for (auto [num, den] : {std::pair{1L, 3L}, {1L, 4L}, {3L, 4L}}) {
    CHECK(quick_report(example2(num, den)).at("results") == ref);
  }
}
