#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclezeta/exact_counts.hpp"
#include "cyclezeta/polynomial.hpp"
#include "cyclezeta/quadrature.hpp"

namespace cyclezeta {

struct Norms {
  double inf = 0.0;
  double two = 0.0;
};

Norms norms(const ComplexPoly& f);
Norms norms(const IntPoly& f);

struct VMeasure {
  double value = 0.0;      // v(f_1, ..., f_l)
  double log_value = 0.0;  // the integral itself
  double log_error = 0.0;  // quadrature error estimate of log_value
  IntegralEstimate estimate;
};

// AllZero when every f_i vanishes.
VMeasure v_measure(const std::vector<ComplexPoly>& fs, const QuadratureConfig& cfg);

// Leading coefficient in z_i, as a polynomial in the remaining variables.
ComplexPoly leading_coefficient_in(const ComplexPoly& f, int i);

// max over variable orders sigma of |lc_sigma(f)|; ZeroPolynomial for f = 0.
double lc_sigma_max(const ComplexPoly& f);

// Multihomogeneous integer form in (X_1, Y_1, ..., X_n, Y_n) modulo sign.
class IntegerForm {
 public:
  // DomainError unless `form` is nonzero and multihomogeneous in each pair.
  // The coefficient of the lexicographically largest monomial is made positive.
  static IntegerForm from_poly(const IntPoly& form);

  const IntPoly& poly() const { return poly_; }
  const MultiDegree& multidegree() const { return k_; }
  int pairs() const { return static_cast<int>(k_.size()); }
  int total_degree() const;

  // p(x_1..x_n) = P(x_1, 1, ..., x_n, 1).
  IntPoly dehomogenized() const { return dehomogenize_pairs(poly_); }

  std::string to_string() const;

 private:
  IntPoly poly_;
  MultiDegree k_;
};

struct DeltaValue {
  double value = 0.0;
  double error = 0.0;
  bool exact = false;
};

// lambda * sum k_i + int log|p| omega^n.
DeltaValue delta_lambda(const IntegerForm& P, double lambda, const QuadratureConfig& cfg);

// Two-branch coefficient bound: exp(h log 2 / lambda) for lambda <= log 2,
// exp(h) otherwise.
double coefficient_bound_g(double h, double lambda);

struct Borderline {
  IntegerForm form;
  DeltaValue delta;
};

struct ArithDivisorCount {
  mpz_class count;
  double certified_bound = 0.0;  // sum over k of (2g+1)^{prod(k_i+1)}
  std::uint64_t searched = 0;
  std::uint64_t integrated = 0;  // candidates that needed quadrature
  std::vector<Borderline> borderline;
  std::vector<IntegerForm> members;  // filled when keep_members is set
};

struct ArithSearchOptions {
  std::uint64_t cap = 10000000;
  bool keep_members = false;
};

// Effective divisors D on (P^1_Z)^n with delta_lambda(D) <= h. Forms whose
// value lies within the guard band max(tolerance, quadrature error) of h are
// reported in `borderline` and excluded from `count`; exact values use no band.
ArithDivisorCount count_arith_divisors_bounded(int n, double lambda, double h, const QuadratureConfig& cfg,
                                               const ArithSearchOptions& opts = {});

struct NormSampleSpec {
  unsigned samples = 100;
  std::uint64_t seed = 0;
  int nvars = 2;  // each sample uses 1..nvars variables
  int maxdeg = 3;
  int coeff_bound = 10;
};

struct NormCheck {
  std::string name;
  unsigned checked = 0;
  unsigned warnings = 0;
  unsigned hard_failures = 0;
  double min_slack = INFINITY;
};

struct NormFailure {
  std::string check;
  std::string instance;
  double slack = 0.0;
  bool hard = false;
};

struct NormReport {
  unsigned instances = 0;
  std::vector<NormCheck> checks;
  std::vector<NormFailure> failures;
  unsigned hard_failures() const;
  unsigned warnings() const;
};

// Samples integer polynomials and evaluates both sides of each norm
// inequality in log form; slack >= 0 passes, slack in [-tolerance, 0) is a
// quadrature warning, anything lower is a hard failure.
NormReport verify_norm_props(const NormSampleSpec& spec, const QuadratureConfig& cfg);

// Uniformly random integer polynomial with deg_i <= maxdeg per variable and
// coefficients in [-bound, bound]; never zero.
IntPoly random_int_poly(std::uint64_t seed, std::uint64_t index, int nvars, int maxdeg, int bound);

}  // namespace cyclezeta
