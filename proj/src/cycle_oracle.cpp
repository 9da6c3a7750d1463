#include "cyclezeta/cycle_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/field_census.hpp"

namespace cyclezeta {

namespace {

constexpr std::uint64_t kPointCap = 1u << 22;
constexpr unsigned kFiberDegreeCap = 8;

// Flattened coordinate count: sum over factors of (n_j + 1).
std::size_t coordinate_count(const std::vector<int>& factors) {
  std::size_t total = 0;
  for (int n : factors) total += static_cast<std::size_t>(n) + 1;
  return total;
}

}  // namespace

unsigned ZeroCycle::degree() const {
  unsigned d = 0;
  for (const auto& [pt, mult] : terms) d += pt.degree * mult;
  return d;
}

unsigned ZeroCycle::multiplicity(const ClosedPoint& p) const {
  for (const auto& [pt, mult] : terms) {
    if (pt == p) return mult;
  }
  return 0;
}

ZeroCycle ZeroCycle::from_terms(std::vector<std::pair<ClosedPoint, unsigned>> terms) {
  std::map<ClosedPoint, unsigned> acc;
  for (auto& [pt, mult] : terms) {
    if (mult > 0) acc[pt] += mult;
  }
  ZeroCycle z;
  z.terms.assign(acc.begin(), acc.end());
  return z;
}

std::vector<std::vector<int>> monomials_for(const Space& space, const MultiDegree& e) {
  const auto factors = space.factors();
  if (e.size() != factors.size()) throw DomainError("multidegree length does not match the number of factors");
  // Per-factor exponent vectors, descending lexicographic.
  std::vector<std::vector<std::vector<int>>> per_factor;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (e[j] < 0) throw DomainError("multidegree entries must be non-negative");
    std::vector<std::vector<int>> list;
    std::vector<int> cur(static_cast<std::size_t>(factors[j]) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == cur.size()) {
        cur[i] = left;
        list.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, e[j]);
    per_factor.push_back(std::move(list));
  }
  std::vector<std::vector<int>> out{{}};
  for (const auto& list : per_factor) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (const auto& tail : list) {
        auto m = prefix;
        m.insert(m.end(), tail.begin(), tail.end());
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

PointCatalog::PointCatalog(Space space, PrimePower q) : space_(std::move(space)), q_(std::move(q)) {
  factors_ = space_.factors();
  if (q_.p() > 0xffffffffu) throw DomainError("PointCatalog: characteristic too large for table arithmetic");
}

std::shared_ptr<const GaloisField> PointCatalog::field(unsigned d) const {
  return field_for(static_cast<std::uint32_t>(q_.p()), q_.e() * d);
}

const FieldEmbedding& PointCatalog::embedding(unsigned small, unsigned big) const {
  auto& slot = embeddings_[{small, big}];
  if (!slot) slot = std::make_unique<FieldEmbedding>(field(small), field(big));
  return *slot;
}

std::vector<std::vector<std::uint32_t>> PointCatalog::rational_points(unsigned d) const {
  const mpz_class n = point_count(space_, q_, d);
  if (n > kPointCap) throw SizeCapExceeded("rational_points: " + n.get_str() + " points exceed the cap");
  const auto f = field(d);
  const std::uint32_t order = f->order();

  // Normalized points of each projective factor.
  std::vector<std::vector<std::vector<std::uint32_t>>> per_factor;
  for (int nj : factors_) {
    std::vector<std::vector<std::uint32_t>> pts;
    const std::size_t len = static_cast<std::size_t>(nj) + 1;
    for (std::size_t lead = 0; lead < len; ++lead) {
      const std::size_t free = len - lead - 1;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < free; ++i) total *= order;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> v(len, 0);
        v[lead] = 1;
        std::uint64_t rest = idx;
        for (std::size_t i = len; i-- > lead + 1;) {
          v[i] = static_cast<std::uint32_t>(rest % order);
          rest /= order;
        }
        pts.push_back(std::move(v));
      }
    }
    std::sort(pts.begin(), pts.end());
    per_factor.push_back(std::move(pts));
  }

  std::vector<std::vector<std::uint32_t>> out{{}};
  for (const auto& pts : per_factor) {
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(out.size() * pts.size());
    for (const auto& prefix : out) {
      for (const auto& tail : pts) {
        auto v = prefix;
        v.insert(v.end(), tail.begin(), tail.end());
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::uint32_t> PointCatalog::frobenius(const std::vector<std::uint32_t>& pt, unsigned d) const {
  const auto f = field(d);
  std::vector<std::uint32_t> out(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) out[i] = f->frobenius(pt[i], q_.e());
  return out;
}

std::vector<std::vector<std::uint32_t>> PointCatalog::orbit(const std::vector<std::uint32_t>& pt, unsigned d) const {
  std::vector<std::vector<std::uint32_t>> orb{pt};
  auto cur = frobenius(pt, d);
  while (cur != pt) {
    orb.push_back(cur);
    cur = frobenius(cur, d);
    if (orb.size() > d) throw InternalError("orbit longer than the field degree");
  }
  return orb;
}

ClosedPoint PointCatalog::canonical(const std::vector<std::uint32_t>& pt, unsigned d) const {
  const auto orb = orbit(pt, d);
  const unsigned s = static_cast<unsigned>(orb.size());
  if (d % s != 0) throw InternalError("orbit size does not divide the field degree");
  ClosedPoint cp;
  cp.degree = s;
  if (s == d) {
    cp.key = *std::min_element(orb.begin(), orb.end());
    return cp;
  }
  const FieldEmbedding& emb = embedding(s, d);
  bool first = true;
  for (const auto& member : orb) {
    std::vector<std::uint32_t> pulled(member.size());
    for (std::size_t i = 0; i < member.size(); ++i) pulled[i] = emb.preimage(member[i]);
    if (first || pulled < cp.key) cp.key = std::move(pulled);
    first = false;
  }
  return cp;
}

const std::vector<ClosedPoint>& PointCatalog::closed_points(unsigned d) const {
  auto it = closed_.find(d);
  if (it != closed_.end()) return it->second;
  std::vector<ClosedPoint> pts;
  for (const auto& pt : rational_points(d)) {
    const auto orb = orbit(pt, d);
    if (orb.size() != d) continue;
    if (*std::min_element(orb.begin(), orb.end()) != pt) continue;
    pts.push_back(ClosedPoint{d, pt});
  }
  std::sort(pts.begin(), pts.end());
  return closed_.emplace(d, std::move(pts)).first->second;
}

std::vector<std::uint32_t> PointCatalog::embed(const ClosedPoint& p, unsigned d) const {
  if (d % p.degree != 0) throw DomainError("embed: point degree must divide the target degree");
  if (d == p.degree) return p.key;
  const FieldEmbedding& emb = embedding(p.degree, d);
  std::vector<std::uint32_t> out(p.key.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = emb.image(p.key[i]);
  return out;
}

std::vector<FormClass> enum_divisors(const Space& space, const PrimePower& q, const MultiDegree& e) {
  const auto monos = monomials_for(space, e);
  const std::size_t h0 = monos.size();
  const std::uint64_t order = q.q_u64();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < h0; ++i) {
    if (total > kOracleCap / order) throw SizeCapExceeded("enum_divisors: q^h0 exceeds 10^6");
    total *= order;
  }
  const auto f = field_for(static_cast<std::uint32_t>(q.p()), q.e());

  std::set<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> coeffs(h0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = h0; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(rest % order);
      rest /= order;
    }
    std::size_t lead = 0;
    while (coeffs[lead] == 0) ++lead;
    const auto scale = f->inv(coeffs[lead]);
    std::vector<std::uint32_t> canon(h0);
    for (std::size_t i = 0; i < h0; ++i) canon[i] = f->mul(coeffs[i], scale);
    classes.insert(std::move(canon));
  }
  std::vector<FormClass> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(FormClass{e, c});
  return out;
}

std::vector<ZeroCycle> enum_zero_cycles(const Space& space, const PrimePower& q, unsigned k) {
  const mpz_class expected = zero_cycle_count(space, q, k);
  if (expected > kOracleCap) throw SizeCapExceeded("enum_zero_cycles: more than 10^6 cycles of degree " + std::to_string(k));
  PointCatalog cat(space, q);
  std::vector<ClosedPoint> pts;
  for (unsigned d = 1; d <= k; ++d) {
    const auto& cp = cat.closed_points(d);
    pts.insert(pts.end(), cp.begin(), cp.end());
  }

  std::vector<ZeroCycle> out;
  std::vector<std::pair<ClosedPoint, unsigned>> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (left == 0) {
      if (out.size() >= kOracleCap) throw SizeCapExceeded("enum_zero_cycles: cap reached");
      out.push_back(ZeroCycle{cur});
      return;
    }
    if (i == pts.size()) return;
    const unsigned deg = pts[i].degree;
    for (unsigned m = left / deg; m >= 1; --m) {
      cur.emplace_back(pts[i], m);
      rec(i + 1, left - m * deg);
      cur.pop_back();
    }
    rec(i + 1, left);
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

ResidueProduct residue_product_points(unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw DomainError("residue_product_points: degrees must be positive");
  return ResidueProduct{std::gcd(a, b), std::lcm(a, b)};
}

std::vector<ClosedPoint> points_over_pair(const PointCatalog& x_cat, const ClosedPoint& x, const PointCatalog& y_cat,
                                          const ClosedPoint& y) {
  if (!(x_cat.q() == y_cat.q())) throw DomainError("points_over_pair: base fields differ");
  const unsigned big = std::lcm(x.degree, y.degree);
  PointCatalog prod(Space::product(x_cat.space(), y_cat.space()), x_cat.q());
  const auto xs = x_cat.embed(x, big);
  const auto ys = y_cat.embed(y, big);
  std::set<ClosedPoint> found;
  auto cur = xs;
  // Every F_{q^big}-point over (x, y) is Frobenius-conjugate to one with the
  // second coordinate fixed at ys.
  for (unsigned s = 0; s < x.degree; ++s) {
    std::vector<std::uint32_t> pt = cur;
    pt.insert(pt.end(), ys.begin(), ys.end());
    found.insert(prod.canonical(pt, big));
    cur = x_cat.frobenius(cur, big);
  }
  return {found.begin(), found.end()};
}

ZeroCycle pushforward_zero_cycle(const Space& product, const PrimePower& q, const ZeroCycle& z, ProductSide which) {
  if (product.kind() != Space::Kind::Product) throw DomainError("pushforward_zero_cycle: space must be a Product");
  const Space& target = which == ProductSide::First ? product.left() : product.right();
  PointCatalog cat(target, q);
  const std::size_t split = coordinate_count(product.left().factors());
  std::vector<std::pair<ClosedPoint, unsigned>> terms;
  for (const auto& [w, c] : z.terms) {
    std::vector<std::uint32_t> coords;
    if (which == ProductSide::First) {
      coords.assign(w.key.begin(), w.key.begin() + static_cast<std::ptrdiff_t>(split));
    } else {
      coords.assign(w.key.begin() + static_cast<std::ptrdiff_t>(split), w.key.end());
    }
    ClosedPoint image = cat.canonical(coords, w.degree);
    const unsigned rel = w.degree / image.degree;
    terms.emplace_back(std::move(image), c * rel);
  }
  return ZeroCycle::from_terms(std::move(terms));
}

mpz_class fiber_count(const Space& x_space, const ZeroCycle& x, const Space& y_space, const ZeroCycle& y,
                      const PrimePower& q) {
  if (x.degree() > kFiberDegreeCap || y.degree() > kFiberDegreeCap) {
    throw SizeCapExceeded("fiber_count: cycle degrees are capped at 8");
  }
  PointCatalog x_cat(x_space, q);
  PointCatalog y_cat(y_space, q);

  struct Slot {
    std::size_t i, j;
    unsigned rel_x, rel_y;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    for (std::size_t j = 0; j < y.terms.size(); ++j) {
      const auto& xp = x.terms[i].first;
      const auto& yp = y.terms[j].first;
      for (const auto& w : points_over_pair(x_cat, xp, y_cat, yp)) {
        slots.push_back(Slot{i, j, w.degree / xp.degree, w.degree / yp.degree});
      }
    }
  }

  std::vector<unsigned> rem_x, rem_y;
  for (const auto& t : x.terms) rem_x.push_back(t.second);
  for (const auto& t : y.terms) rem_y.push_back(t.second);

  mpz_class count = 0;
  std::uint64_t visited = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (++visited > kOracleCap * 10) throw SizeCapExceeded("fiber_count: search too large");
    if (s == slots.size()) {
      if (std::all_of(rem_x.begin(), rem_x.end(), [](unsigned v) { return v == 0; }) &&
          std::all_of(rem_y.begin(), rem_y.end(), [](unsigned v) { return v == 0; })) {
        ++count;
      }
      return;
    }
    const Slot& sl = slots[s];
    const unsigned cap = std::min(rem_x[sl.i] / sl.rel_x, rem_y[sl.j] / sl.rel_y);
    for (unsigned c = 0; c <= cap; ++c) {
      rem_x[sl.i] -= c * sl.rel_x;
      rem_y[sl.j] -= c * sl.rel_y;
      rec(s + 1);
      rem_x[sl.i] += c * sl.rel_x;
      rem_y[sl.j] += c * sl.rel_y;
    }
  };
  rec(0);
  return count;
}

double alpha_weight(const ZeroCycle& x) {
  double a = 0.0;
  for (const auto& [pt, mult] : x.terms) a += std::sqrt(static_cast<double>(mult) * pt.degree);
  return a;
}

std::string to_string(const ClosedPoint& p) {
  std::ostringstream os;
  os << "deg" << p.degree << "[";
  for (std::size_t i = 0; i < p.key.size(); ++i) os << (i ? "," : "") << p.key[i];
  os << "]";
  return os.str();
}

std::string to_string(const ZeroCycle& z) {
  if (z.terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < z.terms.size(); ++i) {
    if (i) os << " + ";
    os << z.terms[i].second << "*" << to_string(z.terms[i].first);
  }
  return os.str();
}

}  // namespace cyclezeta
