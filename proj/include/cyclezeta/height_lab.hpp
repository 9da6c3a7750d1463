#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "cyclezeta/galois_field.hpp"
#include "cyclezeta/polynomial.hpp"
#include "cyclezeta/prime_power.hpp"
#include "cyclezeta/quadrature.hpp"

namespace cyclezeta {

// Polynomial in t over F_q, lowest degree first, no trailing zeros.
using FqPoly = std::vector<GaloisField::Elem>;

int fq_degree(const FqPoly& f);  // -1 for zero
FqPoly fq_gcd(const GaloisField& F, FqPoly a, FqPoly b);  // monic, or empty if both zero

// A point of P^n(F_q(t)): divided by the gcd of its coordinates, then scaled
// so the first nonzero coordinate of least degree is monic.
struct FunctionFieldPoint {
  PrimePower q;
  std::vector<FqPoly> coords;
};

// DomainError if every coordinate is zero.
FunctionFieldPoint normalize_ff_point(const PrimePower& q, std::vector<FqPoly> coords);

// Coordinates given as integer polynomials in t, reduced mod p.
FunctionFieldPoint ff_point_from_int_polys(const PrimePower& q, const std::vector<IntPoly>& coords);

// max_i deg_t(coord_i) of the normalized point.
unsigned height_ff(const FunctionFieldPoint& x);

// Points of P^n(F_q(t)) of height <= h by normalized enumeration; the tuple
// space q^{(n+1)(h+1)} is capped at 10^7.
mpz_class count_ff_points(const PrimePower& q, int n, int h, unsigned threads = 1);

// A point of P^n(Q(z_1..z_d)) with integer polynomial coordinates: overall
// content 1, common factor removed, first nonzero coordinate with positive
// leading coefficient. For d = 1 the polynomial gcd is removed exactly; for
// d >= 2 only the content is.
struct RationalFunctionPoint {
  std::vector<IntPoly> coords;
  int nvars() const { return coords.empty() ? 0 : coords.front().nvars(); }
};

RationalFunctionPoint normalize_rf_point(std::vector<IntPoly> coords);

// Primitive gcd of univariate integer polynomials (positive leading coefficient).
IntPoly int_poly_gcd_univariate(IntPoly a, IntPoly b);

struct HeightValue {
  double value = 0.0;
  double error = 0.0;
  bool exact = false;
};

// sum_j max_i deg_{z_j}(coord_i) + int log max_i |coord_i| omega^d.
HeightValue height_nv(const RationalFunctionPoint& x, const QuadratureConfig& cfg);

struct ShSetCensus {
  mpz_class count;
  bool all_heights_ok = true;
  double lower_bound = 0.0;
  int degree_bound = 0;
  long coefficient_bound = 0;
  double max_height = 0.0;
  double max_height_error = 0.0;
};

struct ShSetOptions {
  std::uint64_t cap = 10000000;
  // Called in enumeration order for every member f with the height of (1 : f).
  std::function<void(const IntPoly&, const HeightValue&)> on_member;
};

// Integer polynomials f in z_1..z_d with deg_i f <= floor(a h) and
// |f|_inf <= floor(exp((1 - d a) h) / sqrt 2), each checked for
// h_nv((1 : f)) <= h + tolerance, alongside exp(a^d (1-2ad) h^{d+1} - a^d h^d).
ShSetCensus sh_set_census(int d, double a, double h, const QuadratureConfig& cfg, const ShSetOptions& opts = {});

}  // namespace cyclezeta
