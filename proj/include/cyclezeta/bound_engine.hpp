#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclezeta {

// A counting system: base bound B(h) on level n0 and fiber bound A(s, t),
// both supplied in natural-log form so large bounds stay representable.
// A must be nondecreasing in each argument.
struct CountingSystemSpec {
  int n0 = 0;
  int n = 0;
  std::function<double(double)> log_B;
  std::function<double(double, double)> log_A;
  double t0 = 0.0;
};

// log of B(h)^{n-n0+1} A(h,h)^{n-n0}. DomainError if h < t0 or n < n0.
double counting_system_log_bound(const CountingSystemSpec& spec, double h);

// exp of the above; +inf when it overflows.
double counting_system_bound(const CountingSystemSpec& spec, double h);

// The (P^1)^n, l >= 1 system: n0 = l+1, B(h) = (1+h)^{l+1} q^{(1+h)^{l+1}},
// A(s,t) = q^{st}.
CountingSystemSpec p1_product_system(double q, int n, int l);

// min{ a*b/c^2, sqrt(thetaD*thetaE*a*b)/c }. DomainError if c <= 0.
double product_cycle_bound(double deg_a_d, double deg_b_e, double deg_c, unsigned theta_d, unsigned theta_e);

// log2 of the pushforward bound: deg_pi * sum(a_i).
mpz_class pushforward_bound(unsigned long deg_pi, const std::vector<unsigned long>& mults);

struct ExplicitConstant {
  int n = 0;
  int l = 0;
  mpq_class value;
  std::vector<std::string> derivation;
};

// C'(n, l) for (P^1)^n: 3n when l = 0, n + (n-l)(2^{l+1}+l+2) when l >= 1
// (the leading n absorbs the binom(n,l) <= 2^n <= q^n subset factor).
ExplicitConstant explicit_constant_p1n(int n, int l);

// C(n, l) for P^n with C(l, l) = 1 and C(n,l) = C(n-1,l) + n^{l(l+1)} C'(n,l).
ExplicitConstant explicit_constant_pn(int n, int l);

}  // namespace cyclezeta
