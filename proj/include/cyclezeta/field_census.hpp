#pragma once

#include <vector>

#include <gmpxx.h>

#include "cyclezeta/prime_power.hpp"
#include "cyclezeta/space.hpp"

namespace cyclezeta {

// b[d-1] = number of closed points of residue degree d, for d = 1..dmax.
struct ClosedPointCensus {
  Space space;
  PrimePower q;
  std::vector<mpz_class> b;

  unsigned dmax() const { return static_cast<unsigned>(b.size()); }
  const mpz_class& at(unsigned d) const { return b.at(d - 1); }
};

// N_m = #X(F_{q^m}).
mpz_class point_count(const Space& space, const PrimePower& q, unsigned m);

// Mobius inversion of N_1..N_dmax; throws InternalError if a b_d is not a
// non-negative integer.
ClosedPointCensus closed_point_census(const Space& space, const PrimePower& q, unsigned dmax);

// Number of monic irreducible polynomials of degree d over F_q.
mpz_class irreducible_count(const PrimePower& q, unsigned d);

// Memoized census. When CYCLEZETA_CACHE_DIR is set, results are read from and
// written to JSON files there, keyed by (space, q, dmax).
ClosedPointCensus cached_closed_point_census(const Space& space, const PrimePower& q, unsigned dmax);

}  // namespace cyclezeta
