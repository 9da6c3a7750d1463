#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cyclezeta {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Mobius function mu(n) for n >= 1.
int mobius(std::uint64_t n);

// q = p^e with p prime and e >= 1.
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned e);

  // Factors q as p^e; throws DomainError when q is not a prime power.
  static PrimePower from_q(std::uint64_t q);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  const mpz_class& q() const { return q_; }
  // q as a machine word; throws DomainError on overflow.
  std::uint64_t q_u64() const;

  std::string to_string() const { return q_.get_str(); }

  friend bool operator==(const PrimePower& a, const PrimePower& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

 private:
  std::uint64_t p_;
  unsigned e_;
  mpz_class q_;
};

// base^exp for a big base and machine exponent.
mpz_class mpz_pow(const mpz_class& base, unsigned long exp);

// log2 of a positive big integer, accurate to double precision.
double mpz_log2(const mpz_class& x);

}  // namespace cyclezeta
