#include <doctest.h>

#include <cmath>
#include <random>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/field_census.hpp"
#include "cyclezeta/height_lab.hpp"
#include "cyclezeta/poly_parser.hpp"

using namespace cyclezeta;

namespace {

FunctionFieldPoint ff(unsigned q, std::initializer_list<const char*> coords) {
  std::vector<IntPoly> polys;
  for (const char* c : coords) polys.push_back(parse_poly(c, VarStyle::FunctionField, 1));
  return ff_point_from_int_polys(PrimePower::from_q(q), polys);
}

RationalFunctionPoint rf(std::initializer_list<const char*> coords, int nvars) {
  std::vector<IntPoly> polys;
  for (const char* c : coords) polys.push_back(parse_poly(c, VarStyle::Affine, nvars));
  return normalize_rf_point(polys);
}

// Polynomials over F_2 as bit masks.
int gf2_deg(unsigned a) { return a == 0 ? -1 : 31 - __builtin_clz(a); }

unsigned gf2_mod(unsigned a, unsigned b) {
  while (gf2_deg(a) >= gf2_deg(b)) a ^= b << (gf2_deg(a) - gf2_deg(b));
  return a;
}

unsigned gf2_gcd(unsigned a, unsigned b) {
  while (b != 0) {
    unsigned r = gf2_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

long brute_ff_count_p1_f2(int h) {
  long n = 0;
  const unsigned lim = 1u << (h + 1);
  for (unsigned a = 0; a < lim; ++a) {
    for (unsigned b = 0; b < lim; ++b) {
      if ((a | b) != 0 && gf2_gcd(a, b) == 1) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("height_ff examples") {
  CHECK(height_ff(ff(2, {"1", "t^2+1"})) == 2);
  CHECK(height_ff(ff(3, {"t", "t^2"})) == 1);
  CHECK(height_ff(ff(5, {"1", "1"})) == 0);
  CHECK_THROWS_AS(ff(2, {"0", "2"}), DomainError);
}

TEST_CASE("height_ff invariance under scaling and common factors") {
  const PrimePower q = PrimePower::from_q(3);
  auto F = field_for(3, 1);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(0, 2), deg(0, 3), scalar(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FqPoly> coords(3);
    bool any = false;
    for (auto& c : coords) {
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) c.push_back(static_cast<GaloisField::Elem>(coeff(rng)));
      while (!c.empty() && c.back() == 0) c.pop_back();
      any = any || !c.empty();
    }
    if (!any) continue;
    auto base = normalize_ff_point(q, coords);
    const auto s = static_cast<GaloisField::Elem>(scalar(rng));
    std::vector<FqPoly> scaled = coords;
    for (auto& c : scaled) {
      FqPoly out(c.size() + 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = F->mul(c[i], s);
        out[i] = F->add(out[i], v);
        out[i + 1] = F->add(out[i + 1], F->mul(v, 2));
      }
      while (!out.empty() && out.back() == 0) out.pop_back();
      c = out;
    }
    auto other = normalize_ff_point(q, scaled);
    CHECK(other.coords == base.coords);
    CHECK(height_ff(other) == height_ff(base));
  }
}

TEST_CASE("count_ff_points") {
  CHECK(count_ff_points(PrimePower::from_q(2), 1, 0) == 3);
  CHECK(count_ff_points(PrimePower::from_q(2), 1, 1) == 9);
  for (int h = 0; h <= 4; ++h) CHECK(count_ff_points(PrimePower::from_q(2), 1, h) == brute_ff_count_p1_f2(h));
  for (unsigned q : {2u, 3u, 4u}) {
    for (int n = 1; n <= 2; ++n) {
      CHECK(count_ff_points(PrimePower::from_q(q), n, 0) == point_count(Space::proj(n), PrimePower::from_q(q), 1));
    }
  }
  CHECK(count_ff_points(PrimePower::from_q(3), 2, 2, 1) == count_ff_points(PrimePower::from_q(3), 2, 2, 4));
  CHECK_THROWS_AS(count_ff_points(PrimePower::from_q(5), 3, 4), SizeCapExceeded);
}

TEST_CASE("rational function point normalization") {
  auto x = rf({"2*z", "2*z^2"}, 1);
  CHECK(x.coords[0] == parse_poly("1", VarStyle::Affine, 1));
  CHECK(x.coords[1] == parse_poly("z", VarStyle::Affine, 1));
  auto y = rf({"-3", "6*z1*z2"}, 2);
  CHECK(y.coords[0] == parse_poly("1", VarStyle::Affine, 2));
  CHECK(y.coords[1] == parse_poly("-2*z1*z2", VarStyle::Affine, 2));
  CHECK(int_poly_gcd_univariate(parse_poly("z^2-1", VarStyle::Affine), parse_poly("2*z^2+4*z+2", VarStyle::Affine)) ==
        parse_poly("z+1", VarStyle::Affine));
  CHECK_THROWS_AS(rf({"0", "0"}, 1), DomainError);
}

TEST_CASE("height_nv examples") {
  QuadratureConfig cfg;
  CHECK(height_nv(rf({"1", "z"}, 1), cfg).value == doctest::Approx(1 + 0.5 * std::log(2.0)).epsilon(1e-3));
  for (int m = 1; m <= 9; ++m) {
    auto h = height_nv(normalize_rf_point({IntPoly::constant(1, 1), IntPoly::constant(1, m)}), cfg);
    CHECK(h.value == doctest::Approx(std::log(m)).epsilon(1e-9));
  }
  auto one = height_nv(rf({"1", "1"}, 1), cfg);
  CHECK(std::abs(one.value) < 1e-12);
}

TEST_CASE("height_nv invariances") {
  QuadratureConfig cfg;
  auto a = height_nv(rf({"z1^2 - 3", "2*z2 + 1", "z1*z2"}, 2), cfg);
  auto b = height_nv(rf({"z1*z2", "z1^2 - 3", "2*z2 + 1"}, 2), cfg);
  auto c = height_nv(rf({"-z1^2 + 3", "-2*z2 - 1", "-z1*z2"}, 2), cfg);
  CHECK(std::abs(a.value - b.value) <= cfg.tolerance);
  CHECK(std::abs(a.value - c.value) <= cfg.tolerance);
  CHECK(a.value >= 0.0);
}

TEST_CASE("sh_set census") {
  QuadratureConfig cfg;
  auto r = sh_set_census(1, 0.25, 4.0, cfg);
  CHECK(r.count == 841);
  CHECK(r.coefficient_bound == 14);
  CHECK(r.degree_bound == 1);
  CHECK(r.all_heights_ok);
  CHECK(r.max_height <= 4.0 + 1e-3);
  CHECK(r.lower_bound == doctest::Approx(std::exp(1.0)));
  CHECK(r.count.get_d() >= r.lower_bound);

  auto tiny = sh_set_census(1, 0.25, 0.3, cfg);
  CHECK(tiny.count == 1);

  auto bigger = sh_set_census(1, 0.25, 5.0, cfg);
  CHECK(bigger.count >= r.count);
  CHECK(bigger.all_heights_ok);

  unsigned streamed = 0;
  ShSetOptions opts;
  opts.on_member = [&](const IntPoly&, const HeightValue& hv) {
    ++streamed;
    CHECK(hv.value <= 2.0 + 1e-3);
  };
  auto small = sh_set_census(1, 0.25, 2.0, cfg, opts);
  CHECK(streamed == small.count);

  ShSetOptions capped;
  capped.cap = 100;
  CHECK_THROWS_AS(sh_set_census(1, 0.25, 4.0, cfg, capped), SizeCapExceeded);
  CHECK_THROWS_AS(sh_set_census(1, 0.5, 4.0, cfg), DomainError);
}
