#include <doctest.h>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/poly_parser.hpp"
#include "cyclezeta/polynomial.hpp"

using namespace cyclezeta;

TEST_CASE("arithmetic") {
  IntPoly z1 = IntPoly::variable(2, 0);
  IntPoly z2 = IntPoly::variable(2, 1);
  IntPoly one = IntPoly::constant(2, 1);
  IntPoly f = (z1 + one) * (z1 - one);
  CHECK(f == z1.pow(2) - one);
  CHECK((f - f).is_zero());
  CHECK((z1 * z2).degrees() == std::vector<int>{1, 1});
  CHECK(f.degree_in(0) == 2);
  CHECK(one.is_constant());
  CHECK(f.scaled(3).coefficient({2, 0}) == 3);
  CHECK(content(f.scaled(6) + one.scaled(4)) == 2);
}

TEST_CASE("parser affine") {
  IntPoly f = parse_poly("3*z1*z2 - 4", VarStyle::Affine);
  CHECK(f.nvars() == 2);
  CHECK(f.coefficient({1, 1}) == 3);
  CHECK(f.coefficient({0, 0}) == -4);
  CHECK(parse_poly("z+1", VarStyle::Affine) == parse_poly("1 + z1", VarStyle::Affine));
  CHECK(parse_poly("(z1-1)^2", VarStyle::Affine) == parse_poly("z1^2 - 2*z1 + 1", VarStyle::Affine));
  CHECK(parse_poly("-(-z2)", VarStyle::Affine, 3).nvars() == 3);
  CHECK(parse_poly("0", VarStyle::Affine, 1).is_zero());
  CHECK(to_string(f, affine_names(2)) == "3*z1*z2 - 4");
}

TEST_CASE("parser pairs and function field") {
  IntPoly g = parse_poly("X1*Y2 - Y1*X2", VarStyle::Pairs);
  CHECK(g.nvars() == 4);
  CHECK(g.coefficient({1, 0, 0, 1}) == 1);
  CHECK(g.coefficient({0, 1, 1, 0}) == -1);
  CHECK(dehomogenize_pairs(g) == parse_poly("z1 - z2", VarStyle::Affine));
  IntPoly t = parse_poly("t^2 + 1", VarStyle::FunctionField);
  CHECK(t.nvars() == 1);
  CHECK(t.coefficient({2}) == 1);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_poly("z1 +", VarStyle::Affine), ParseError);
  CHECK_THROWS_AS(parse_poly("(z1", VarStyle::Affine), ParseError);
  CHECK_THROWS_AS(parse_poly("z1^1000", VarStyle::Affine), ParseError);
  CHECK_THROWS_AS(parse_poly("X1", VarStyle::Affine), ParseError);
  CHECK_THROWS_AS(parse_poly("z3", VarStyle::Affine, 2), ParseError);
  CHECK_THROWS_AS(parse_poly("2 3", VarStyle::Affine), ParseError);
}

TEST_CASE("complex conversion") {
  ComplexPoly c = to_complex(parse_poly("2*z - 5", VarStyle::Affine));
  CHECK(c.coefficient({1}) == std::complex<double>(2, 0));
  CHECK(c.coefficient({0}) == std::complex<double>(-5, 0));
}
