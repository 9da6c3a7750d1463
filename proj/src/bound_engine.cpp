#include "cyclezeta/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

double counting_system_log_bound(const CountingSystemSpec& spec, double h) {
  if (h < spec.t0) throw DomainError("counting_system_bound: h below threshold t0");
  if (spec.n < spec.n0) throw DomainError("counting_system_bound: n must be >= n0");
  const int steps = spec.n - spec.n0;
  double log_b = spec.log_B(h);
  double acc = (steps + 1) * log_b;
  if (steps > 0) acc += steps * spec.log_A(h, h);
  return acc;
}

double counting_system_bound(const CountingSystemSpec& spec, double h) {
  const double lg = counting_system_log_bound(spec, h);
  if (lg > std::log(std::numeric_limits<double>::max())) return std::numeric_limits<double>::infinity();
  return std::exp(lg);
}

CountingSystemSpec p1_product_system(double q, int n, int l) {
  if (l < 1 || n < l + 1) throw DomainError("p1_product_system: need 1 <= l and n >= l+1");
  const double lq = std::log(q);
  CountingSystemSpec spec;
  spec.n0 = l + 1;
  spec.n = n;
  spec.t0 = 0.0;
  spec.log_B = [lq, l](double h) {
    const double base = std::pow(1.0 + h, l + 1);
    return (l + 1) * std::log1p(h) + base * lq;
  };
  spec.log_A = [lq](double s, double t) { return s * t * lq; };
  return spec;
}

double product_cycle_bound(double deg_a_d, double deg_b_e, double deg_c, unsigned theta_d, unsigned theta_e) {
  if (!(deg_c > 0)) throw DomainError("product_cycle_bound: degC must be positive");
  const double first = deg_a_d * deg_b_e / (deg_c * deg_c);
  const double second =
      std::sqrt(static_cast<double>(theta_d) * static_cast<double>(theta_e) * deg_a_d * deg_b_e) / deg_c;
  return std::min(first, second);
}

mpz_class pushforward_bound(unsigned long deg_pi, const std::vector<unsigned long>& mults) {
  if (deg_pi < 1) throw DomainError("pushforward_bound: deg(pi) must be >= 1");
  mpz_class sum = 0;
  for (auto a : mults) sum += a;
  return sum * deg_pi;
}

ExplicitConstant explicit_constant_p1n(int n, int l) {
  if (l < 0 || l > n) throw DomainError("explicit_constant_p1n: need 0 <= l <= n");
  ExplicitConstant c{n, l, 0, {}};
  if (l == n) {
    // Top-dimensional cycles a[X]: at most h+1 <= 2^h <= q^h of them.
    c.value = 1;
    c.derivation.push_back("C'(" + std::to_string(n) + "," + std::to_string(l) + ") = 1 (top dimension)");
  } else if (l == 0) {
    c.value = 3 * n;
    c.derivation.push_back("C'(" + std::to_string(n) + ",0) = 3n = " + c.value.get_str());
  } else {
    const long inner = (1L << (l + 1)) + l + 2;
    c.value = n + static_cast<long>(n - l) * inner;
    c.derivation.push_back("C'(" + std::to_string(n) + "," + std::to_string(l) + ") = n + (n-l)(2^{l+1}+l+2) = " +
                           std::to_string(n) + " + " + std::to_string(n - l) + "*" + std::to_string(inner) + " = " +
                           c.value.get_str());
  }
  return c;
}

ExplicitConstant explicit_constant_pn(int n, int l) {
  if (l < 0 || l > n) throw DomainError("explicit_constant_pn: need 0 <= l <= n");
  ExplicitConstant c{n, l, 1, {}};
  c.derivation.push_back("C(" + std::to_string(l) + "," + std::to_string(l) + ") = 1");
  for (int m = l + 1; m <= n; ++m) {
    const ExplicitConstant cp = explicit_constant_p1n(m, l);
    mpz_class factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(l * (l + 1)));
    const mpq_class prev = c.value;
    c.value = prev + mpq_class(factor) * cp.value;
    c.derivation.insert(c.derivation.end(), cp.derivation.begin(), cp.derivation.end());
    c.derivation.push_back("C(" + std::to_string(m) + "," + std::to_string(l) + ") = " + prev.get_str() + " + " +
                           factor.get_str() + "*" + cp.value.get_str() + " = " + c.value.get_str());
  }
  return c;
}

}  // namespace cyclezeta
