#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclezeta/exact_counts.hpp"
#include "cyclezeta/galois_field.hpp"
#include "cyclezeta/prime_power.hpp"
#include "cyclezeta/space.hpp"

namespace cyclezeta {

// Hard cap on objects any oracle enumeration may produce or visit.
inline constexpr std::uint64_t kOracleCap = 1'000'000;

// A Frobenius orbit of geometric points. The key is the least orbit member's
// flattened, per-factor normalized coordinates in F_{q^degree}.
struct ClosedPoint {
  unsigned degree = 0;
  std::vector<std::uint32_t> key;

  auto operator<=>(const ClosedPoint&) const = default;
};

struct ZeroCycle {
  // Sorted by point, multiplicities >= 1.
  std::vector<std::pair<ClosedPoint, unsigned>> terms;

  unsigned degree() const;
  unsigned multiplicity(const ClosedPoint& p) const;
  auto operator<=>(const ZeroCycle&) const = default;

  static ZeroCycle from_terms(std::vector<std::pair<ClosedPoint, unsigned>> terms);
};

// A nonzero multihomogeneous form over F_q modulo scalars, first nonzero
// coefficient equal to 1. Coefficients follow monomials_for(space, e).
struct FormClass {
  MultiDegree multidegree;
  std::vector<std::uint32_t> coefficients;

  auto operator<=>(const FormClass&) const = default;
};

// Monomial exponent vectors of multidegree e: for each flattened factor of
// dimension n_j, the n_j + 1 exponents summing to e_j, concatenated.
// Ordered lexicographically descending in the exponent vector.
std::vector<std::vector<int>> monomials_for(const Space& space, const MultiDegree& e);

// Points of a space over extensions of F_q, and their Frobenius orbits.
class PointCatalog {
 public:
  PointCatalog(Space space, PrimePower q);

  const Space& space() const { return space_; }
  const PrimePower& q() const { return q_; }

  // F_{q^d} as F_p[t]/(least irreducible of degree e*d).
  std::shared_ptr<const GaloisField> field(unsigned d) const;

  // All points of X(F_{q^d}), per-factor normalized (first nonzero = 1).
  std::vector<std::vector<std::uint32_t>> rational_points(unsigned d) const;

  // Relative Frobenius x -> x^q on coordinates over F_{q^d}.
  std::vector<std::uint32_t> frobenius(const std::vector<std::uint32_t>& pt, unsigned d) const;

  // Orbit of a point over F_{q^d}, in Frobenius order.
  std::vector<std::vector<std::uint32_t>> orbit(const std::vector<std::uint32_t>& pt, unsigned d) const;

  // Closed point through a point given over F_{q^d}.
  ClosedPoint canonical(const std::vector<std::uint32_t>& pt, unsigned d) const;

  // Closed points of exact degree d, sorted by key.
  const std::vector<ClosedPoint>& closed_points(unsigned d) const;

  // The key coordinates pushed into F_{q^d}, for degree(p) | d.
  std::vector<std::uint32_t> embed(const ClosedPoint& p, unsigned d) const;

 private:
  const FieldEmbedding& embedding(unsigned small, unsigned big) const;

  Space space_;
  PrimePower q_;
  std::vector<int> factors_;
  mutable std::map<unsigned, std::vector<ClosedPoint>> closed_;
  mutable std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldEmbedding>> embeddings_;
};

// Divisors of exact multidegree e, one per form class, sorted.
// SizeCapExceeded when q^{h0} > 10^6.
std::vector<FormClass> enum_divisors(const Space& space, const PrimePower& q, const MultiDegree& e);

// Effective 0-cycles of degree exactly k, sorted.
std::vector<ZeroCycle> enum_zero_cycles(const Space& space, const PrimePower& q, unsigned k);

// Spec(F_{q^a} (x) F_{q^b}) has gcd(a,b) points, each of degree lcm(a,b).
struct ResidueProduct {
  unsigned count;
  unsigned degree;
  friend bool operator==(const ResidueProduct&, const ResidueProduct&) = default;
};
ResidueProduct residue_product_points(unsigned a, unsigned b);

// Closed points of X x Y lying over the pair (x, y), found by field arithmetic.
std::vector<ClosedPoint> points_over_pair(const PointCatalog& x_cat, const ClosedPoint& x, const PointCatalog& y_cat,
                                          const ClosedPoint& y);

enum class ProductSide { First, Second };

// p_*(z) or q_*(z) for a 0-cycle on a Product space, weighting by relative
// residue degrees.
ZeroCycle pushforward_zero_cycle(const Space& product, const PrimePower& q, const ZeroCycle& z, ProductSide which);

// Number of effective 0-cycles z on X x Y with p_*(z) = x and q_*(z) = y.
// SizeCapExceeded when deg(x) or deg(y) exceeds 8.
mpz_class fiber_count(const Space& x_space, const ZeroCycle& x, const Space& y_space, const ZeroCycle& y,
                      const PrimePower& q);

// alpha(x) = sum_i sqrt(a_i [kappa(x_i) : K]).
double alpha_weight(const ZeroCycle& x);

std::string to_string(const ClosedPoint& p);
std::string to_string(const ZeroCycle& z);

}  // namespace cyclezeta
