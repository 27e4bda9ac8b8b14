#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liealg/algebra_file.hpp"
#include "liealg/catalog.hpp"
#include "liealg/oracle.hpp"
#include "support/algebras.hpp"

using namespace liealg;
using namespace liealg::testing;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a ParseError");
  return 0;
}

}  // namespace

TEST_CASE("parses the s3_2 table") {
  const LieAlgebra l = parse_algebra("dim 3\nbasis x y z\n[3,1] = 1*e1\n[3,2] = 1*e1 + 1*e2\n");
  CHECK(same_structure(l, s3_2()));
  CHECK(l.labels() == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("dim alone is abelian") {
  const LieAlgebra l = parse_algebra("dim 2");
  CHECK(same_structure(l, abelian(2)));
  CHECK(l.labels() == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("comments, blank lines, CRLF, rationals, explicit zero") {
  const LieAlgebra l = parse_algebra(
      "# heading\r\n\r\ndim 3   # trailing\r\n[1,2] = 2/2*e3\r\n[1,3] = 0\r\n  [ 2 , 3 ]=0\r\n");
  CHECK(same_structure(l, heis3()));

  const LieAlgebra neg = parse_algebra("dim 2\n[2,1] = -1*e2\n");
  CHECK(neg.constants().coeff(0, 1, 1) == Rational(1));
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("dim 3\n[1,2] = 1*e1\n[2,1] = 1*e1\n") == 3);
  CHECK(error_line("dim 3\n[1,2] = 1*e1\n[1,2] = 1*e1\n") == 3);
  CHECK(error_line("[1,2] = 1*e1\ndim 3\n") == 1);
  CHECK(error_line("dim 3\ndim 3\n") == 2);
  CHECK(error_line("dim 2\n[1,3] = 1*e1\n") == 2);
  CHECK(error_line("dim 2\n[1,2] = 1*e3\n") == 2);
  CHECK(error_line("dim 2\n[1,2] = e1\n") == 2);
  CHECK(error_line("dim 2\n[1,2] = 1.5*e1\n") == 2);
  CHECK(error_line("dim 2\n[1,2] = 1*e1 - 1*e2\n") == 2);
  CHECK(error_line("dim 2\nbasis a\n") == 2);
  CHECK(error_line("dim 2\nbasis a a\n") == 2);
  CHECK(error_line("dim x\n") == 1);
  CHECK(error_line("dim 2\n\nhello\n") == 3);
  CHECK(error_line("dim 2\n[1,2] = 1/0*e1\n") == 2);
  CHECK_THROWS_AS(parse_algebra("# nothing\n"), ParseError);
}

TEST_CASE("axiom failures are invalid algebras, not parse errors") {
  CHECK_THROWS_AS(parse_algebra("dim 3\n[1,2] = 1*e1\n[2,3] = 1*e2\n[3,1] = 1*e3\n"), InvalidAlgebra);
  CHECK_THROWS_AS(parse_algebra("dim 2\n[1,1] = 1*e2\n"), InvalidAlgebra);
  try {
    parse_algebra("dim 3\n[1,2] = 1*e1\n[2,3] = 1*e2\n[3,1] = 1*e3\n");
  } catch (const InvalidAlgebra& e) {
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
}

TEST_CASE("render output") {
  CHECK(render_algebra(heis3()) == "dim 3\n[1,2] = 1*e3\n");
  CHECK(render_algebra(s3_2(), "s3_2") == "# s3_2\ndim 3\nbasis x y z\n[1,3] = -1*e1\n[2,3] = -1*e1 + -1*e2\n");
}

TEST_CASE("property: render then parse is the identity on structure and labels") {
  std::vector<LieAlgebra> algebras = oracle::random_corpus(40, 3);
  for (const auto& name : catalog::list()) algebras.push_back(catalog::get(name).algebra);
  algebras.push_back(oracle::change_basis(s3_2(), Matrix{{1, 0, 0}, {1, 2, 0}, {0, 1, 3}}));
  for (const auto& lie : algebras) {
    const LieAlgebra back = parse_algebra(render_algebra(lie, "x"));
    CHECK(same_structure(back, lie));
    CHECK(back.labels() == lie.labels());
  }
}
