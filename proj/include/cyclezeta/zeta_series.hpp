#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cyclezeta/prime_power.hpp"
#include "cyclezeta/space.hpp"

namespace cyclezeta {

// Truncated Z(X,H,l)(T) = sum_k n_k T^{k^{l+1}}, stored by k (never densely
// by exponent).
struct SparseSeries {
  struct Term {
    unsigned k;
    mpz_class exponent;  // k^{l+1}
    mpz_class coefficient;
  };

  Space space;
  PrimePower q;
  int l = 0;
  unsigned kmax = 0;
  std::vector<Term> terms;  // k = 0..kmax, terms[0].coefficient == 1
};

struct TailBound {
  double cprime = 0.0;
  double ratio = 0.0;  // |q^{C'} t|
  double bound = 0.0;  // ratio^{(kmax+1)^{l+1}} / (1 - ratio)
};

struct SeriesValue {
  double value = 0.0;
  TailBound tail;
};

struct ComplexSeriesValue {
  std::complex<double> value;
  TailBound tail;
};

// n_k from exact_counts for l in {0, dim-1, dim}; otherwise UnsupportedDimension.
SparseSeries local_zeta_series(const Space& space, const PrimePower& q, int l, unsigned kmax);

// Partial sum plus the geometric tail bound; RadiusError unless |q^{C'} t| < 1.
SeriesValue eval_with_tail(const SparseSeries& series, double t, double cprime);
ComplexSeriesValue eval_with_tail(const SparseSeries& series, std::complex<double> t, double cprime);

// A C' with n_k(P^n, O(1), l) <= q^{C' k^{l+1}} for all k >= 1 and q >= 2:
// 2n for l = 0 < n, 2^n for l = n-1 >= 1, 0 for l = n.
double tail_constant_pn(int n, int l);

struct LProduct {
  std::complex<double> value;
  double error_bound = 0.0;  // sum of per-factor tail bounds relative to each factor
  unsigned primes = 0;
  unsigned max_kmax = 0;
};

// prod_{p <= pmax} Z(P^n_{F_p}, O(1), l)(p^{-s}), factors truncated so each
// tail bound is below 1e-12.
LProduct l_function_partial(int n, int l, std::complex<double> s, std::uint64_t pmax, unsigned threads = 1);

struct SpecZAudit {
  std::uint64_t cycles = 0;
  bool bijective = false;
};

// sum_{m <= cutoff} m^{-s}; DomainError if s <= 1.
double spec_z_zeta_partial(double s, std::uint64_t cutoff);

// Enumerates effective 0-cycles sum n_p [p] on Spec Z with norm prod p^{n_p}
// <= cutoff and checks the norm map hits 1..cutoff exactly once each.
SpecZAudit spec_z_audit(std::uint64_t cutoff, double s, double* audited_sum = nullptr);

struct AbscissaSequence {
  std::vector<double> terms;  // terms[k-1] = log_q n_k / k^{l+1}
  std::optional<double> predicted_limit;
};

// Requires a closed form for n_k. The limit 1/(deg(H^n)^{n-1} n!) is only
// reported for l = dim-1 on P^n, where Pic is generated by H.
AbscissaSequence abscissa_sequence(const Space& space, const PrimePower& q, int l, unsigned kmax);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace cyclezeta
