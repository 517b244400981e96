#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "acyt/cli.hpp"
#include "support.hpp"

using namespace acyt;
namespace ts = test_support;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("catalog entries construct, validate, and carry defaults") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = get_entry(name);
    CHECK(e.algebra.validate().ok);
    CHECK(validate_su3(e.structure).ok);
    CHECK(e.algebra.is_unimodular());
  }
  // h3 default t = -1/2 gives de6 = e12 - e34
  CatalogEntry h3 = get_entry("h3");
  CHECK(h3.algebra.d_basis(6) == ts::two_form({{{1, 2}, rat(1)}, {{3, 4}, rat(-1)}}));
  // sl2c default t = 1 gives de1 = e35 - e46
  CatalogEntry sl = get_entry("sl2c");
  CHECK(sl.algebra.d_basis(1) == ts::two_form({{{3, 5}, rat(1)}, {{4, 6}, rat(-1)}}));
  // both complex structures of g7 validate
  CHECK(get_entry("g7", {{"delta", rat(1)}}).algebra.validate().ok);
  CHECK(get_entry("g7", {{"delta", rat(-1)}}).algebra.validate().ok);
}

TEST_CASE("catalog parameter domains") {
  CHECK_THROWS_AS(get_entry("nope"), InputError);
  CHECK_THROWS_AS(get_entry("h3", {{"t", rat(0)}}), InputError);
  CHECK_THROWS_AS(get_entry("g7", {{"r", rat(0)}}), InputError);
  CHECK_THROWS_AS(get_entry("g7", {{"delta", rat(2)}}), InputError);
  CHECK_THROWS_AS(get_entry("sl2c", {{"q", rat(1)}}), InputError);
}

TEST_CASE("document export/parse round trip on every entry and both conventions") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = get_entry(name);
    for (Convention conv : {Convention::internal_F, Convention::paper_omega}) {
      InputDocument doc = document_from_catalog(e, conv);
      std::string text = serialize_document(doc);
      InputDocument back = parse_document(text);
      CHECK(back == doc);
      CHECK(serialize_document(back) == text);

      auto [g, s] = realize(back);
      CHECK(g == e.algebra);
      CHECK(s == e.structure);  // the sign dictionary restores the internal forms
    }
  }
}

TEST_CASE("parse rejects malformed documents with named fields") {
  auto base = [] {
    return serialize_document(document_from_catalog(get_entry("h3")));
  }();

  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_document(text);
      FAIL_CHECK("expected InputError for " << needle);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("{", "not valid JSON");
  expect_error(R"({"F": [], "psi_plus": [], "psi_minus": [], "convention": "x"})",
               "unknown convention tag");
  expect_error(R"({"F": [["0.5", [1,2]]], "psi_plus": [], "psi_minus": []})",
               "floating point not accepted");
  expect_error(R"({"F": [["1", [2,1]]], "psi_plus": [], "psi_minus": []})",
               "strictly increasing");
  expect_error(R"({"F": [["1", [1,7]]], "psi_plus": [], "psi_minus": []})", "out of range");
  expect_error(R"({"F": [["1", [1,1]]], "psi_plus": [], "psi_minus": []})",
               "strictly increasing");
  expect_error(R"({"psi_plus": [], "psi_minus": []})", "missing required field");
  expect_error(R"({"F": [], "psi_plus": [], "psi_minus": [], "d": {"e7": []}})", "unknown key");
  expect_error(R"({"F": [["1/0", [1,2]]], "psi_plus": [], "psi_minus": []})", "zero denominator");
  expect_error(R"({"F": 3, "psi_plus": [], "psi_minus": []})", "expected a list");
  expect_error(R"({"F": [], "psi_plus": [], "psi_minus": [], "orientation": [1,2,3,4,5,5]})",
               "repeated index");
}

TEST_CASE("integer JSON coefficients are accepted, floats rejected") {
  std::string ok = R"({"name":"x","F":[[-1,[1,2]],[-1,[3,4]],[-1,[5,6]]],
    "psi_plus":[[-1,[1,3,5]],[1,[2,3,6]],[1,[1,4,6]],[1,[2,4,5]]],
    "psi_minus":[[-1,[1,3,6]],[-1,[1,4,5]],[-1,[2,3,5]],[1,[2,4,6]]]})";
  InputDocument doc = parse_document(ok);
  auto [g, s] = realize(doc);
  CHECK(validate_su3(s).ok);
  CHECK_THROWS_AS(parse_document(R"({"F":[[1.5,[1,2]]],"psi_plus":[],"psi_minus":[]})"),
                  InputError);
}

TEST_CASE("analysis gating on non-G1 input") {
  SU3Structure s = SU3Structure::standard();
  AnalysisReport rep = analyze(ts::non_g1_algebra(), s, "non_g1", Convention::internal_F);
  CHECK(rep.valid());
  CHECK_FALSE(rep.applicable);
  CHECK_FALSE(rep.conn.has_value());
  CHECK(rep.finding_code() == 1);
  auto j = report_to_json(rep);
  CHECK(j["connection"].is_null());
  CHECK(j["class"]["g1"] == false);
}

TEST_CASE("analysis of an invalid algebra reports the violation") {
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[0] = ts::two_form({{{2, 6}, rat(1)}});
  d[5] = ts::two_form({{{1, 2}, rat(1)}, {{3, 4}, rat(-1)}});
  AnalysisReport rep =
      analyze(LieAlgebra(d), SU3Structure::standard(), "tampered", Convention::internal_F);
  CHECK_FALSE(rep.valid());
  CHECK(rep.finding_code() == 2);
  CHECK(rep.algebra_message.find("d^2 e_1") != std::string::npos);
}

TEST_CASE("cli: catalog run produces the expected machine fields and exit code") {
  std::string out;
  int code = run_cli({"catalog", "run", "h3", "--param", "t=-1/2", "--format", "machine"}, &out);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["instanton"]["first_pair_su3"] == true);
  CHECK(j["instanton"]["nabla_T_zero"] == true);
  CHECK(j["instanton"]["holonomy_dim"] == 1);
  CHECK(j["acyt"]["is_acyt"] == true);
  CHECK(j["torsion"].dump() == R"([["1",[1,2,6]],["-1",[3,4,6]]])");
}

TEST_CASE("cli: nilp_noncomplex reports the einstein data") {
  std::string out;
  int code = run_cli({"catalog", "run", "nilp_noncomplex", "--format", "machine"}, &out);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["connection"]["scal"] == "-12");
  CHECK(j["einstein"]["is_einstein"] == true);
  CHECK(j["einstein"]["constant"] == "-2");
  CHECK(j["instanton"]["hull_instanton"] == false);
  CHECK(j["dT"].dump() == R"([["-2",[1,2,3,4]],["-2",[1,2,5,6]],["-2",[3,4,5,6]]])");
}

TEST_CASE("cli: determinism of machine reports") {
  std::string a, b;
  run_cli({"catalog", "run", "sl2c", "--format", "machine"}, &a);
  run_cli({"catalog", "run", "sl2c", "--format", "machine"}, &b);
  CHECK(a == b);
  CHECK_FALSE(a.empty());
}

TEST_CASE("cli: exit codes") {
  std::string out, err;
  CHECK(run_cli({"catalog", "list"}, &out) == 0);
  CHECK(out.find("h3") != std::string::npos);
  CHECK(out.find("nilp_noncomplex") != std::string::npos);

  CHECK(run_cli({"catalog", "run", "unknown_entry"}, &out, &err) == 2);
  CHECK(run_cli({"catalog", "run", "h3", "--param", "t=0"}, &out, &err) == 2);
  CHECK(run_cli({"catalog", "run", "h3", "--param", "t=0.5"}, &out, &err) == 2);
  CHECK(err.find("floating point") != std::string::npos);
  CHECK(run_cli({"analyze", "/nonexistent/file.json"}, &out, &err) == 2);
  CHECK(run_cli({"verify", "h3"}, &out, &err) == 0);
  CHECK(run_cli({"verify", "g7"}, &out) == 0);
}

TEST_CASE("cli: analyze a temp file round-tripped through export") {
  std::string doc_text;
  CHECK(run_cli({"export", "sl2c", "--convention", "paper"}, &doc_text) == 0);
  std::string path = "acyt_test_sl2c.json";
  {
    std::ofstream f(path, std::ios::binary);
    f << doc_text;
  }
  std::string out;
  int code = run_cli({"analyze", path, "--format", "machine"}, &out);
  std::remove(path.c_str());
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["input_convention"] == "paper-omega");
  CHECK(j["instanton"]["holonomy_dim"] == 3);
}

TEST_CASE("cli: non-acyt and non-g1 inputs exit with the finding code") {
  // complex Heisenberg x R: integrable but not ACYT
  {
    InputDocument doc;
    doc.name = "heis";
    for (int k = 1; k <= kDim; ++k) doc.d[k - 1] = ts::heisenberg_c().d_basis(k);
    SU3Structure s = SU3Structure::standard();
    doc.F = s.F;
    doc.psi_plus = s.psi_plus;
    doc.psi_minus = s.psi_minus;
    std::string path = "acyt_test_heis.json";
    {
      std::ofstream f(path, std::ios::binary);
      f << serialize_document(doc);
    }
    std::string out;
    int code = run_cli({"analyze", path, "--format", "machine"}, &out);
    std::remove(path.c_str());
    CHECK(code == 1);
    auto j = nlohmann::json::parse(out);
    CHECK(j["acyt"]["is_acyt"] == false);
    CHECK(j["class"]["hermitian"] == true);
  }
  // non-G1 input: connection sections are not applicable
  {
    InputDocument doc;
    doc.name = "non_g1";
    for (int k = 1; k <= kDim; ++k) doc.d[k - 1] = ts::non_g1_algebra().d_basis(k);
    SU3Structure s = SU3Structure::standard();
    doc.F = s.F;
    doc.psi_plus = s.psi_plus;
    doc.psi_minus = s.psi_minus;
    std::string path = "acyt_test_nong1.json";
    {
      std::ofstream f(path, std::ios::binary);
      f << serialize_document(doc);
    }
    std::string out;
    int code = run_cli({"analyze", path, "--format", "machine"}, &out);
    std::remove(path.c_str());
    CHECK(code == 1);
    auto j = nlohmann::json::parse(out);
    CHECK(j["applicable"] == false);
    CHECK(j["connection"].is_null());
  }
}

TEST_CASE("cli: paper-convention output flips the dictionary-covariant values") {
  std::string internal_out, paper_out;
  run_cli({"catalog", "run", "nilp_noncomplex", "--format", "machine"}, &internal_out);
  run_cli({"catalog", "run", "nilp_noncomplex", "--format", "machine", "--convention", "paper"},
          &paper_out);
  auto ji = nlohmann::json::parse(internal_out);
  auto jp = nlohmann::json::parse(paper_out);
  CHECK(ji["mu"] == "-1");
  CHECK(jp["mu"] == "1");
  CHECK(ji["torsion"] == jp["torsion"]);  // torsion is convention-invariant
  CHECK(ji["d_kahler_form"] != jp["d_kahler_form"]);
}
