#include "cyclezeta/prime_power.hpp"

#include <cmath>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set for n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

PrimePower::PrimePower(std::uint64_t p, unsigned e) : p_(p), e_(e) {
  if (!is_prime_u64(p)) throw DomainError("PrimePower: p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw DomainError("PrimePower: exponent must be >= 1");
  mpz_ui_pow_ui(q_.get_mpz_t(), p, e);
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  if (q < 2) throw DomainError("q must be a prime power >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower(q, 1);
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  return PrimePower(p, e);
}

std::uint64_t PrimePower::q_u64() const {
  if (!q_.fits_ulong_p()) throw DomainError("q does not fit in 64 bits");
  return q_.get_ui();
}

mpz_class mpz_pow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

double mpz_log2(const mpz_class& x) {
  if (sgn(x) <= 0) throw DomainError("mpz_log2: argument must be positive");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace cyclezeta
