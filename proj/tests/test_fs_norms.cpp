#include <doctest.h>

#include <cmath>
#include <random>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/fs_norms.hpp"
#include "cyclezeta/poly_parser.hpp"

using namespace cyclezeta;

namespace {

ComplexPoly cp(const char* text, int nvars = 0) { return to_complex(parse_poly(text, VarStyle::Affine, nvars)); }
IntegerForm form(const char* text, int pairs = 0) { return IntegerForm::from_poly(parse_poly(text, VarStyle::Pairs, pairs)); }

const double kHalfLog2 = 0.5 * std::log(2.0);

}  // namespace

TEST_CASE("norms examples") {
  auto a = norms(cp("z+1"));
  CHECK(a.inf == 1.0);
  CHECK(a.two == doctest::Approx(std::sqrt(2.0)));
  auto b = norms(parse_poly("3*z1*z2 - 4", VarStyle::Affine));
  CHECK(b.inf == 4.0);
  CHECK(b.two == doctest::Approx(5.0));
  auto c = norms(ComplexPoly(1));
  CHECK(c.inf == 0.0);
  CHECK(c.two == 0.0);
}

TEST_CASE("v_measure examples") {
  QuadratureConfig cfg;
  CHECK(v_measure({cp("z+1")}, cfg).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  auto c = v_measure({cp("-6", 1)}, cfg);
  CHECK(c.value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(c.log_error == 0.0);
  CHECK(v_measure({cp("1", 1), cp("z")}, cfg).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  CHECK_THROWS_AS(v_measure({ComplexPoly(1)}, cfg), AllZero);
}

TEST_CASE("v_measure closed form for linear factors") {
  QuadratureConfig cfg;
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> root(-5, 5), lead(1, 4), deg(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly z = IntPoly::variable(1, 0);
    const int a = lead(rng);
    IntPoly f = IntPoly::constant(1, a);
    double expect = a;
    for (int j = deg(rng); j > 0; --j) {
      const int c = root(rng);
      f = f * (z - IntPoly::constant(1, c));
      expect *= std::sqrt(1.0 + c * c);
    }
    CHECK(std::abs(v_measure({to_complex(f)}, cfg).value - expect) <= 1e-3 * expect);
  }
}

TEST_CASE("multiplicativity and scaling") {
  QuadratureConfig cfg;
  for (std::uint64_t i = 0; i < 6; ++i) {
    const int nv = 1 + static_cast<int>(i % 2);
    IntPoly f = random_int_poly(3, 2 * i, nv, 2, 5);
    IntPoly g = random_int_poly(3, 2 * i + 1, nv, 2, 5);
    const double lf = v_measure({to_complex(f)}, cfg).log_value;
    const double lg = v_measure({to_complex(g)}, cfg).log_value;
    const double lfg = v_measure({to_complex(f * g)}, cfg).log_value;
    CHECK(std::abs(lfg - lf - lg) <= 2 * cfg.tolerance);
    const double l3f = v_measure({to_complex(f.scaled(-3))}, cfg).log_value;
    CHECK(std::abs(l3f - std::log(3.0) - lf) <= cfg.tolerance);
  }
}

TEST_CASE("lc_sigma_max examples") {
  CHECK(lc_sigma_max(cp("5*z^2 + 1")) == 5.0);
  CHECK(lc_sigma_max(cp("z1*z2 + z1 + 1")) == 1.0);
  CHECK(lc_sigma_max(cp("7", 1)) == 7.0);
  CHECK(lc_sigma_max(cp("2*z1^2*z2 + 9*z2^3")) == 9.0);
  CHECK(leading_coefficient_in(cp("2*z1^2*z2 + 3*z1^2 + z2^5"), 0) == cp("2*z2 + 3", 2));
  CHECK_THROWS_AS(lc_sigma_max(ComplexPoly(2)), ZeroPolynomial);
}

TEST_CASE("integer forms") {
  IntegerForm p = form("-3*X1*Y2 + Y1*X2");
  CHECK(p.multidegree() == MultiDegree{1, 1});
  CHECK(p.total_degree() == 2);
  IntegerForm q = form("3*X1*Y2 - Y1*X2");
  CHECK(p.poly() == q.poly());
  CHECK(p.dehomogenized() == parse_poly("3*z1 - z2", VarStyle::Affine, 2));
  CHECK_THROWS_AS(form("X1 + 1", 1), DomainError);
  CHECK_THROWS_AS(form("X1*Y1 + X1", 1), DomainError);
  CHECK_THROWS_AS(IntegerForm::from_poly(IntPoly(2)), DomainError);
}

TEST_CASE("delta_lambda examples") {
  QuadratureConfig cfg;
  for (int m = 1; m <= 12; ++m) {
    auto d = delta_lambda(IntegerForm::from_poly(IntPoly::constant(2, m)), 1.0, cfg);
    CHECK(d.exact);
    CHECK(d.value == doctest::Approx(std::log(m)).epsilon(1e-12));
  }
  for (double lambda : {0.5, 1.0, 2.0}) {
    CHECK(delta_lambda(form("X1"), lambda, cfg).value == doctest::Approx(lambda).epsilon(1e-9));
    CHECK(delta_lambda(form("X1 - Y1"), lambda, cfg).value == doctest::Approx(lambda + kHalfLog2).epsilon(1e-3));
  }
}

TEST_CASE("delta additivity and lower bound") {
  QuadratureConfig cfg;
  IntegerForm p = form("2*X1 - 3*Y1");
  IntegerForm q = form("X1^2 + X1*Y1 - 5*Y1^2");
  IntegerForm pq = IntegerForm::from_poly(p.poly() * q.poly());
  const double dp = delta_lambda(p, 1.0, cfg).value;
  const double dq = delta_lambda(q, 1.0, cfg).value;
  CHECK(std::abs(delta_lambda(pq, 1.0, cfg).value - dp - dq) <= 2 * cfg.tolerance);
  CHECK(dp >= 1.0);
  CHECK(dq >= 2.0);
}

TEST_CASE("coefficient bound branches") {
  CHECK(coefficient_bound_g(1.0, 0.5) == doctest::Approx(std::exp(std::log(2.0) / 0.5)));
  CHECK(coefficient_bound_g(2.0, 1.0) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("count_arith_divisors_bounded examples") {
  QuadratureConfig cfg;
  auto a = count_arith_divisors_bounded(1, 1.0, 0.5, cfg);
  CHECK(a.count == 1);
  CHECK(a.borderline.empty());
  ArithSearchOptions keep;
  keep.keep_members = true;
  auto b = count_arith_divisors_bounded(1, 1.0, std::log(3.0), cfg, keep);
  CHECK(b.count == 5);
  CHECK(b.borderline.empty());
  CHECK(b.members.size() == 5);
  CHECK(b.certified_bound >= 5.0);
  auto c = count_arith_divisors_bounded(1, 1.0, 0.0, cfg);
  CHECK(c.count == 1);
  auto d = count_arith_divisors_bounded(1, 1.0, 2.0, cfg);
  CHECK(d.count >= b.count);
  CHECK(d.count.get_d() <= d.certified_bound);
}

TEST_CASE("verify_norm_props examples") {
  QuadratureConfig cfg;
  NormSampleSpec spec;
  spec.samples = 20;
  spec.seed = 7;
  spec.nvars = 2;
  spec.maxdeg = 3;
  auto r = verify_norm_props(spec, cfg);
  CHECK(r.instances == 20);
  CHECK(r.hard_failures() == 0);
  CHECK_FALSE(r.checks.empty());
  for (const auto& c : r.checks) CHECK(c.checked > 0);
  auto again = verify_norm_props(spec, cfg);
  for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].min_slack == again.checks[i].min_slack);
}

TEST_CASE("norm inequalities on the worked examples") {
  QuadratureConfig cfg;
  auto f = cp("z+1");
  const double v = v_measure({f}, cfg).value;
  CHECK(norms(f).inf <= 2 * v);
  CHECK(norms(f).two <= std::sqrt(2.0) * v + 1e-3);
  CHECK(norms(cp("(z+1)*(z-1)")).inf <= 1.0 * 1.0 * 2);
  CHECK(v_measure({cp("2*z^2-3*z+1")}, cfg).log_value >= -1e-3);
}

TEST_CASE("random polynomials are reproducible and nonzero") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    IntPoly f = random_int_poly(1, i, 2, 4, 10);
    CHECK_FALSE(f.is_zero());
    CHECK(f == random_int_poly(1, i, 2, 4, 10));
    for (int d : f.degrees()) CHECK(d <= 4);
    CHECK(norms(f).inf <= 10.0);
  }
}
