#include "cyclezeta/exact_counts.hpp"

#include <functional>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/field_census.hpp"

namespace cyclezeta {

namespace {

// Guard against exponents that would allocate absurd amounts of memory.
constexpr unsigned long kMaxExponentBits = 1ul << 26;

mpz_class projective_class_count(const PrimePower& q, const mpz_class& h0) {
  if (h0 == 0) return 0;
  if (!h0.fits_ulong_p() || h0.get_ui() > kMaxExponentBits) {
    throw SizeCapExceeded("divisor count exponent " + h0.get_str() + " is too large to materialize");
  }
  return (mpz_pow(q.q(), h0.get_ui()) - 1) / (q.q() - 1);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

mpz_class divisor_count_multidegree(const PrimePower& q, const MultiDegree& e) {
  mpz_class h0 = 1;
  for (int ei : e) {
    if (ei < 0) throw DomainError("multidegree entries must be non-negative");
    h0 *= ei + 1;
  }
  return projective_class_count(q, h0);
}

mpz_class divisor_count_pn(const PrimePower& q, int n, int k) {
  if (n < 1) throw DomainError("divisor_count_pn: n must be >= 1");
  if (k < 0) throw DomainError("divisor_count_pn: k must be >= 0");
  return projective_class_count(q, binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(n)));
}

mpz_class section_dimension(const Space& space, const MultiDegree& a) {
  const auto f = space.factors();
  if (a.size() != f.size()) {
    throw DomainError("multidegree has " + std::to_string(a.size()) + " entries, space " + space.to_string() +
                      " has " + std::to_string(f.size()) + " factors");
  }
  mpz_class h0 = 1;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (a[j] < 0) throw DomainError("multidegree entries must be non-negative");
    if (f[j] == 0 && a[j] != 0) return 0;  // nothing of positive degree on a point
    h0 *= binomial(static_cast<unsigned long>(f[j] + a[j]), static_cast<unsigned long>(f[j]));
  }
  return h0;
}

mpz_class divisor_count_space(const Space& space, const PrimePower& q, const MultiDegree& a) {
  return projective_class_count(q, section_dimension(space, a));
}

std::vector<mpz_class> divisor_degree_weights(const Space& space) {
  const auto f = space.factors();
  const int dim = space.dim();
  if (dim < 1) throw DomainError("divisors need dim >= 1");
  mpz_class denom = 1;
  for (int ni : f) denom *= factorial(static_cast<unsigned long>(ni));
  std::vector<mpz_class> c;
  c.reserve(f.size());
  for (int nj : f) c.push_back(factorial(static_cast<unsigned long>(dim - 1)) * nj / denom);
  return c;
}

std::vector<mpz_class> zero_cycle_series(const Space& space, const PrimePower& q, unsigned kmax) {
  std::vector<mpz_class> n(kmax + 1);
  for (unsigned m = 1; m <= kmax; ++m) n[m] = point_count(space, q, m);
  // Z' = (sum_m N_m T^{m-1}) Z, i.e. k c_k = sum_{m=1}^k N_m c_{k-m}.
  std::vector<mpz_class> c(kmax + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= kmax; ++k) {
    mpz_class acc = 0;
    for (unsigned m = 1; m <= k; ++m) acc += n[m] * c[k - m];
    if (acc % k != 0) throw InternalError("zero_cycle_series: non-integral coefficient at k=" + std::to_string(k));
    c[k] = acc / k;
  }
  return c;
}

mpz_class zero_cycle_count(const Space& space, const PrimePower& q, unsigned k) {
  return zero_cycle_series(space, q, k).back();
}

mpz_class top_cycle_count(const Space& space, unsigned k) { return (k % space.top_degree() == 0) ? 1 : 0; }

mpz_class divisor_count_degree(const Space& space, const PrimePower& q, unsigned k) {
  const auto f = space.factors();
  const auto c = divisor_degree_weights(space);
  MultiDegree a(f.size(), 0);
  mpz_class total = 0;
  std::function<void(std::size_t, mpz_class)> rec = [&](std::size_t j, mpz_class remaining) {
    if (j == f.size()) {
      if (remaining == 0) total += divisor_count_space(space, q, a);
      return;
    }
    if (c[j] == 0) {
      a[j] = 0;
      rec(j + 1, remaining);
      return;
    }
    for (int v = 0; c[j] * v <= remaining; ++v) {
      a[j] = v;
      rec(j + 1, remaining - c[j] * v);
    }
    a[j] = 0;
  };
  rec(0, mpz_class(k));
  return total;
}

bool has_closed_form(const Space& space, int l) {
  const int dim = space.dim();
  return l == 0 || l == dim || l == dim - 1;
}

mpz_class cycle_count(const Space& space, const PrimePower& q, int l, unsigned k) {
  const int dim = space.dim();
  if (l < 0 || l > dim) throw DomainError("cycle dimension l must satisfy 0 <= l <= dim");
  if (l == dim) return top_cycle_count(space, k);
  if (l == 0) return zero_cycle_count(space, q, k);
  if (l == dim - 1) return divisor_count_degree(space, q, k);
  throw UnsupportedDimension("no closed form or oracle for l=" + std::to_string(l) + " on " + space.to_string());
}

}  // namespace cyclezeta
