#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lieham/algebras.hpp"
#include "lieham/catalog.hpp"
#include "lieham/error.hpp"
#include "lieham/examples.hpp"
#include "lieham/io.hpp"
#include "lieham/linalg.hpp"
#include "support.hpp"

using namespace lieham;
using testing_support::S;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string squash(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

void check_same_operator(const PolyOperator& a, const PolyOperator& b) {
  REQUIRE(a.dim() == b.dim());
  CHECK(a.ring->param_names() == b.ring->param_names());
  // Rings are rebuilt on parse, so compare entry by entry through their text.
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      CHECK(a.g(i, j).str() == b.g(i, j).str());
      CHECK(a.omega(i, j).str() == b.omega(i, j).str());
    }
}

}  // namespace

TEST_CASE("algebra round trip over random bases") {
  std::mt19937_64 rng(testing_support::seed());
  const std::vector<LieAlgebra> bases = {algebras::so3(), algebras::sl2(), algebras::heisenberg(), algebras::s46(),
                                         algebras::n52(), algebras::su11()};
  for (int k = 0; k < 200; ++k) {
    const auto& g0 = bases[k % bases.size()];
    auto g = change_basis(g0, testing_support::random_invertible(rng, g0.dim()));
    auto text = algebra_to_json(g).dump();
    CHECK(algebra_from_json(parse_json(text)) == g);
  }
}

TEST_CASE("operator round trip over Q and Q(sqrt d)") {
  for (const auto& op : {examples::kdv_a(), examples::kdv_b(), examples::kdv_a_su11_form()}) {
    auto j = operator_to_json(op);
    auto back = operator_from_json(parse_json(j.dump(2)));
    check_same_operator(op, back);
  }
  for (const auto& name : {"A_{3,2}", "A_{5,6}", "A_{6,11}", "g2"}) {
    CAPTURE(name);
    auto op = catalog_get(name).op();
    check_same_operator(op, operator_from_json(parse_json(operator_to_json(op).dump())));
  }
  auto b = read_json_file(LIEHAM_SOURCE_DIR "/data/kdv_B.json");
  CHECK(b["field_sqrt"] == 2);
  check_same_operator(operator_from_json(b, 2), examples::kdv_b());
}

TEST_CASE("scalar matrices over Q(sqrt 3)") {
  auto j = read_json_file(LIEHAM_SOURCE_DIR "/data/kdv_to_su11.json");
  auto m = scalar_matrix_from_json(j);
  CHECK(m(0, 1) == S("1/2*sqrt(3)"));
  CHECK(m(2, 2) == S("-1/2"));
  CHECK(scalar_matrix_from_json(matrix_to_json(m)) == m);
  CHECK(scalar_from_json(scalar_to_json(S("1/2+3*sqrt(2)")), "x") == S("1/2+3*sqrt(2)"));
}

TEST_CASE("field mismatches") {
  auto j = read_json_file(LIEHAM_SOURCE_DIR "/data/kdv_to_su11.json");
  CHECK(code_of([&] { scalar_matrix_from_json(j, 2); }) == ErrorCode::FieldMismatch);
  auto bad = parse_json(R"j({"field_sqrt": 2, "matrix": [["sqrt(3)"]]})j");
  CHECK(code_of([&] { scalar_matrix_from_json(bad); }) == ErrorCode::FieldMismatch);
  auto b = read_json_file(LIEHAM_SOURCE_DIR "/data/kdv_B.json");
  CHECK(code_of([&] { operator_from_json(b, 3); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([] { algebra_from_json(parse_json(R"({"dim": 1, "field_sqrt": 4, "brackets": []})")); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_json("{\n  \"dim\": 3,\n  \"brackets\": [\n");
    FAIL("expected PARSE_ERROR");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(code_of([] { read_json_file(LIEHAM_SOURCE_DIR "/data/malformed.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_json_file("/nonexistent.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { algebra_from_json(parse_json(R"({"dim": 3, "brackets": [{"i": 2, "j": 1, "out": {}}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { algebra_from_json(parse_json(R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "out": {}}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          algebra_from_json(parse_json(
              R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "out": {}}, {"i": 1, "j": 2, "out": {}}]})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { algebra_from_json(read_json_file(LIEHAM_SOURCE_DIR "/data/broken_jacobi.json")); }) ==
        ErrorCode::InvalidAlgebra);
  CHECK(structure_constants_from_json(read_json_file(LIEHAM_SOURCE_DIR "/data/broken_jacobi.json")).dim() == 3);
}

TEST_CASE("LaTeX goldens") {
  for (auto [name, file] : {std::pair{"A_{3,2}", "A32.tex"}, std::pair{"A_{3,3}", "A33.tex"}}) {
    CAPTURE(name);
    auto tex = latex_operator(catalog_get(name).op());
    CHECK(squash(tex) == squash(slurp(std::string(LIEHAM_SOURCE_DIR "/tests/golden/") + file)));
  }
}

TEST_CASE("LaTeX rendering of single entries") {
  auto r = Ring::make(3, {"alpha", "f12", "g11"});
  CHECK(latex(parse_poly("alpha/2", r)) == "\\frac{\\alpha}{2}");
  CHECK(latex(parse_poly("-2*u2", r)) == "-2 u^{2}");
  CHECK(latex(parse_poly("f12", r)) == "f^{12}");
  CHECK(latex(parse_poly("g11", r)) == "g_{11}");
  CHECK(latex(parse_poly("0", r)) == "0");
}
