#include "cyclezeta/galois_field.hpp"

#include <map>
#include <mutex>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

namespace {

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw DomainError("inv_mod: not invertible");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
  FpPoly result{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool fp_poly_is_irreducible(const FpPoly& f_in, std::uint32_t p) {
  FpPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: no factor of degree i <= m/2, i.e. gcd(x^{p^i} - x, f) = 1.
  FpPoly x{0, 1};
  FpPoly xp = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    FpPoly g = poly_gcd(f, poly_sub(xp, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly least_irreducible(std::uint32_t p, unsigned m) {
  if (m == 0) throw DomainError("least_irreducible: degree must be >= 1");
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < m; ++i) limit *= p;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    FpPoly f(m + 1, 0);
    f[m] = 1;
    std::uint64_t rest = idx;
    // idx enumerates (c_{m-1}, ..., c_0) in base p, most significant first.
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (fp_poly_is_irreducible(f, p)) return f;
  }
  throw InternalError("least_irreducible: none found");
}

GaloisField::GaloisField(std::uint32_t p, unsigned m) : p_(p), m_(m) {
  if (m < 1) throw DomainError("GaloisField: degree must be >= 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(order));
    order *= p;
    if (order > kMaxOrder) throw SizeCapExceeded("GaloisField: order p^m exceeds the table cap");
  }
  order_ = static_cast<std::uint32_t>(order);
  modulus_ = least_irreducible(p, m);

  // Find a generator of the multiplicative group.
  const std::uint64_t group = order_ - 1;
  const auto factors = prime_factors(group);
  Elem gen = 0;
  for (Elem g = 1; g < order_; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      Elem acc = 1, base = g;
      std::uint64_t e = group / r;
      while (e) {
        if (e & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen == 0 && order_ > 2) throw InternalError("GaloisField: no generator found");
  if (order_ == 2) gen = 1;

  exp_.assign(2 * group + 2, 0);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, gen);
  }
  for (std::uint64_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * pow_p_[i];
  }
  return r;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + p_ - db) % p_) * pow_p_[i];
  }
  return r;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  FpPoly pa, pb;
  for (unsigned i = 0; i < m_; ++i) {
    pa.push_back(a % p_);
    pb.push_back(b % p_);
    a /= p_;
    b /= p_;
  }
  trim(pa);
  trim(pb);
  FpPoly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  Elem out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p_[i];
  return out;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw DomainError("GaloisField: inverse of zero");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[static_cast<std::size_t>((static_cast<unsigned __int128>(log_[a]) * e) % group)];
}

GaloisField::Elem GaloisField::frobenius(Elem a, unsigned k) const {
  std::uint64_t e = 1;
  const std::uint64_t group = order_ - 1;
  for (unsigned i = 0; i < k; ++i) e = (e * p_) % (group == 0 ? 1 : group);
  if (a == 0) return 0;
  if (k % m_ == 0) return a;
  return pow(a, e == 0 ? group : e);
}

GaloisField::Elem GaloisField::from_int(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::eval_fp_poly(const FpPoly& f, Elem x) const {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), f[i]);
  return acc;
}

std::shared_ptr<const GaloisField> field_for(std::uint32_t p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_shared<const GaloisField>(p, m);
  return slot;
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const GaloisField> small, std::shared_ptr<const GaloisField> big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0) {
    throw DomainError("FieldEmbedding: degrees must divide and characteristics agree");
  }
  GaloisField::Elem root = 0;
  bool found = false;
  for (GaloisField::Elem x = 0; x < big_->order(); ++x) {
    if (big_->eval_fp_poly(small_->modulus(), x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("FieldEmbedding: modulus has no root in the larger field");

  const std::uint32_t p = small_->characteristic();
  image_.resize(small_->order());
  for (GaloisField::Elem a = 0; a < small_->order(); ++a) {
    GaloisField::Elem acc = 0, power = 1, rest = a;
    for (unsigned i = 0; i < small_->degree(); ++i) {
      const std::uint32_t c = rest % p;
      rest /= p;
      acc = big_->add(acc, big_->mul(c, power));
      power = big_->mul(power, root);
    }
    image_[a] = acc;
    preimage_.emplace(acc, a);
  }
}

GaloisField::Elem FieldEmbedding::preimage(GaloisField::Elem b) const {
  auto it = preimage_.find(b);
  if (it == preimage_.end()) throw DomainError("FieldEmbedding: element not in the subfield");
  return it->second;
}

}  // namespace cyclezeta
