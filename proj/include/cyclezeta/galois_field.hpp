#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace cyclezeta {

// Polynomials over F_p as coefficient vectors, lowest degree first, trimmed.
using FpPoly = std::vector<std::uint32_t>;

bool fp_poly_is_irreducible(const FpPoly& f, std::uint32_t p);

// Lexicographically least monic irreducible of degree m over F_p, ordering
// by (c_{m-1}, ..., c_0) read as a base-p integer.
FpPoly least_irreducible(std::uint32_t p, unsigned m);

// F_{p^m} = F_p[t]/(m(t)) with the least irreducible modulus. Elements are
// encoded as integers sum c_i p^i, c_i the coefficient of t^i. Multiplication
// goes through discrete log tables, so the order is capped.
class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kMaxOrder = 1u << 22;

  GaloisField(std::uint32_t p, unsigned m);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  const FpPoly& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // a^(p^k): the k-th power of absolute Frobenius.
  Elem frobenius(Elem a, unsigned k) const;
  // Embeds c in F_p.
  Elem from_int(std::int64_t c) const;

  // Evaluates a polynomial with F_p coefficients at x.
  Elem eval_fp_poly(const FpPoly& f, Elem x) const;

 private:
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t order_;
  FpPoly modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

// Shared, lazily built fields keyed by (p, m).
std::shared_ptr<const GaloisField> field_for(std::uint32_t p, unsigned m);

// Embedding F_{p^a} -> F_{p^b} for a | b, sending the generator t to the
// least root of the small modulus inside the big field.
class FieldEmbedding {
 public:
  FieldEmbedding(std::shared_ptr<const GaloisField> small, std::shared_ptr<const GaloisField> big);

  GaloisField::Elem image(GaloisField::Elem a) const { return image_.at(a); }
  // Throws DomainError when b is not in the image.
  GaloisField::Elem preimage(GaloisField::Elem b) const;
  bool contains(GaloisField::Elem b) const { return preimage_.count(b) != 0; }

 private:
  std::shared_ptr<const GaloisField> small_;
  std::shared_ptr<const GaloisField> big_;
  std::vector<GaloisField::Elem> image_;
  std::unordered_map<GaloisField::Elem, GaloisField::Elem> preimage_;
};

}  // namespace cyclezeta
