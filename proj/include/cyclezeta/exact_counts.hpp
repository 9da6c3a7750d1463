#pragma once

#include <vector>

#include <gmpxx.h>

#include "cyclezeta/prime_power.hpp"
#include "cyclezeta/space.hpp"

namespace cyclezeta {

// deg_i of a divisor along each flattened projective factor.
using MultiDegree = std::vector<int>;

// Effective divisors on (P^1)^n with deg_i = e_i: (q^{prod(e_i+1)} - 1)/(q - 1).
mpz_class divisor_count_multidegree(const PrimePower& q, const MultiDegree& e);

// Effective degree-k divisors on P^n: (q^{C(n+k,n)} - 1)/(q - 1).
mpz_class divisor_count_pn(const PrimePower& q, int n, int k);

// h^0 of O(a_1,...,a_r) on the flattened product of projective spaces.
mpz_class section_dimension(const Space& space, const MultiDegree& a);

// Divisors of the given multidegree on any supported space.
mpz_class divisor_count_space(const Space& space, const PrimePower& q, const MultiDegree& a);

// Intersection numbers (H^{dim-1} . H_j) giving deg_H(D) = sum_j a_j c_j.
std::vector<mpz_class> divisor_degree_weights(const Space& space);

// Coefficients 1, n_1, ..., n_kmax of exp(sum_m N_m T^m / m).
std::vector<mpz_class> zero_cycle_series(const Space& space, const PrimePower& q, unsigned kmax);

// n_k(X, H, 0), the T^k coefficient of the Weil zeta function.
mpz_class zero_cycle_count(const Space& space, const PrimePower& q, unsigned k);

// n_k(X, H, dim): 1 when deg(H^dim) divides k, else 0.
mpz_class top_cycle_count(const Space& space, unsigned k);

// n_k(X, H, dim-1), summing over multidegrees of H-degree k.
mpz_class divisor_count_degree(const Space& space, const PrimePower& q, unsigned k);

// True when n_k(X, H, l) has a closed form here (l in {0, dim-1, dim}).
bool has_closed_form(const Space& space, int l);

// n_k(X, H, l) for closed-form dimensions; UnsupportedDimension otherwise.
mpz_class cycle_count(const Space& space, const PrimePower& q, int l, unsigned k);

}  // namespace cyclezeta
