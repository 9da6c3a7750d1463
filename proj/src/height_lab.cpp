#include "cyclezeta/height_lab.hpp"

#include <algorithm>
#include <cmath>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/parallel.hpp"

namespace cyclezeta {

namespace {

constexpr std::uint64_t kFfCap = 10000000;
constexpr std::uint64_t kTupleBlock = 16384;
constexpr std::uint64_t kCensusBlock = 256;

void trim(FqPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// a mod b, b nonzero.
FqPoly fq_mod(const GaloisField& F, FqPoly a, const FqPoly& b) {
  const auto inv_lc = F.inv(b.back());
  while (a.size() >= b.size()) {
    const auto factor = F.mul(a.back(), inv_lc);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

FqPoly fq_quotient(const GaloisField& F, FqPoly a, const FqPoly& b) {
  if (a.size() < b.size()) return {};
  FqPoly q(a.size() - b.size() + 1, 0);
  const auto inv_lc = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const auto factor = F.mul(a.back(), inv_lc);
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    trim(a);
  }
  trim(q);
  return q;
}

FqPoly fq_scale(const GaloisField& F, FqPoly a, GaloisField::Elem s) {
  for (auto& c : a) c = F.mul(c, s);
  trim(a);
  return a;
}

using ZPoly = std::vector<mpz_class>;  // lowest degree first

ZPoly to_z(const IntPoly& p) {
  ZPoly out(p.is_zero() ? 0 : p.degree_in(0) + 1);
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  return out;
}

IntPoly from_z(const ZPoly& z) {
  IntPoly p(1);
  for (std::size_t i = 0; i < z.size(); ++i) p.add_term(Exponent{static_cast<int>(i)}, z[i]);
  return p;
}

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void make_primitive(ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

ZPoly zquotient_exact(ZPoly a, const ZPoly& b) {
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    if (a.back() % b.back() != 0) throw InternalError("inexact polynomial division");
    const mpz_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    ztrim(a);
  }
  if (!a.empty()) throw InternalError("inexact polynomial division");
  ztrim(q);
  return q;
}

}  // namespace

int fq_degree(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

FqPoly fq_gcd(const GaloisField& F, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = fq_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return fq_scale(F, a, F.inv(a.back()));
}

FunctionFieldPoint normalize_ff_point(const PrimePower& q, std::vector<FqPoly> coords) {
  const auto F = field_for(static_cast<std::uint32_t>(q.p()), q.e());
  FqPoly g;
  for (auto& c : coords) {
    trim(c);
    for (auto x : c) {
      if (x >= F->order()) throw DomainError("coefficient outside F_q");
    }
    g = fq_gcd(*F, g, c);
  }
  if (g.empty()) throw DomainError("function-field point with all coordinates zero");
  int pick = -1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].empty()) coords[i] = fq_quotient(*F, coords[i], g);
    if (coords[i].empty()) continue;
    if (pick < 0 || coords[i].size() < coords[pick].size()) pick = static_cast<int>(i);
  }
  const auto s = F->inv(coords[pick].back());
  for (auto& c : coords) c = fq_scale(*F, c, s);
  return {q, std::move(coords)};
}

FunctionFieldPoint ff_point_from_int_polys(const PrimePower& q, const std::vector<IntPoly>& coords) {
  std::vector<FqPoly> out;
  const mpz_class p(static_cast<unsigned long>(q.p()));
  for (const auto& c : coords) {
    if (c.nvars() > 1) throw DomainError("function-field coordinates must be polynomials in t");
    FqPoly f;
    for (const auto& [e, coef] : c.terms()) {
      const int k = e.empty() ? 0 : e[0];
      if (static_cast<int>(f.size()) <= k) f.resize(k + 1, 0);
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), coef.get_mpz_t(), p.get_mpz_t());
      f[k] = static_cast<GaloisField::Elem>(r.get_ui());
    }
    out.push_back(std::move(f));
  }
  return normalize_ff_point(q, std::move(out));
}

unsigned height_ff(const FunctionFieldPoint& x) {
  const auto n = normalize_ff_point(x.q, x.coords);
  int h = 0;
  for (const auto& c : n.coords) h = std::max(h, fq_degree(c));
  return static_cast<unsigned>(h);
}

mpz_class count_ff_points(const PrimePower& q, int n, int h, unsigned threads) {
  if (n < 1 || h < 0) throw DomainError("count_ff_points: need n >= 1 and h >= 0");
  const mpz_class space = mpz_pow(q.q(), static_cast<unsigned long>((n + 1) * (h + 1)));
  if (space > kFfCap) throw SizeCapExceeded("q^{(n+1)(h+1)} = " + space.get_str() + " exceeds 10^7");
  const auto F = field_for(static_cast<std::uint32_t>(q.p()), q.e());
  const std::uint64_t Q = q.q_u64();
  const std::uint64_t total = space.get_ui();
  const std::size_t nblocks = (total + kTupleBlock - 1) / kTupleBlock;
  std::vector<std::uint64_t> counts(nblocks, 0);

  parallel_for_blocks(nblocks, threads, [&](std::size_t b) {
    std::vector<FqPoly> coords(n + 1);
    const std::uint64_t end = std::min<std::uint64_t>(total, (b + 1) * kTupleBlock);
    std::uint64_t local = 0;
    for (std::uint64_t idx = b * kTupleBlock; idx < end; ++idx) {
      std::uint64_t rest = idx;
      FqPoly g;
      int pick = -1;
      for (int i = 0; i <= n; ++i) {
        auto& c = coords[i];
        c.assign(h + 1, 0);
        for (int k = 0; k <= h; ++k) {
          c[k] = static_cast<GaloisField::Elem>(rest % Q);
          rest /= Q;
        }
        trim(c);
        if (!c.empty() && (pick < 0 || c.size() < coords[pick].size())) pick = i;
      }
      if (pick < 0 || coords[pick].back() != 1) continue;
      for (const auto& c : coords) {
        g = fq_gcd(*F, g, c);
        if (g.size() == 1) break;
      }
      if (g.size() == 1) ++local;
    }
    counts[b] = local;
  });

  mpz_class total_count = 0;
  for (auto c : counts) total_count += static_cast<unsigned long>(c);
  return total_count;
}

IntPoly int_poly_gcd_univariate(IntPoly a, IntPoly b) {
  if (a.nvars() > 1 || b.nvars() > 1) throw DomainError("univariate gcd needs one variable");
  ZPoly x = to_z(a), y = to_z(b);
  ztrim(x);
  ztrim(y);
  make_primitive(x);
  make_primitive(y);
  while (!y.empty()) {
    // Pseudo-remainder of x by y.
    ZPoly r = x;
    while (!r.empty() && r.size() >= y.size()) {
      const mpz_class lr = r.back();
      const std::size_t shift = r.size() - y.size();
      for (auto& c : r) c *= y.back();
      for (std::size_t i = 0; i < y.size(); ++i) r[shift + i] -= lr * y[i];
      ztrim(r);
    }
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty() && x.back() < 0) {
    for (auto& c : x) c = -c;
  }
  IntPoly out = from_z(x);
  if (a.nvars() == 0 && b.nvars() == 0) return IntPoly::constant(0, out.is_zero() ? mpz_class(0) : mpz_class(1));
  return out;
}

RationalFunctionPoint normalize_rf_point(std::vector<IntPoly> coords) {
  if (coords.empty()) throw DomainError("point needs coordinates");
  int nv = 0;
  for (const auto& c : coords) nv = std::max(nv, c.nvars());
  mpz_class cont = 0;
  for (auto& c : coords) {
    if (c.nvars() != nv) {
      IntPoly w(nv);
      for (const auto& [e, k] : c.terms()) {
        Exponent t(nv, 0);
        std::copy(e.begin(), e.end(), t.begin());
        w.add_term(t, k);
      }
      c = std::move(w);
    }
    const mpz_class cc = content(c);
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), cc.get_mpz_t());
  }
  if (cont == 0) throw DomainError("point with all coordinates zero");
  for (auto& c : coords) {
    IntPoly d(nv);
    for (const auto& [e, k] : c.terms()) {
      mpz_class r;
      mpz_divexact(r.get_mpz_t(), k.get_mpz_t(), cont.get_mpz_t());
      d.add_term(e, r);
    }
    c = std::move(d);
  }
  if (nv == 1) {
    IntPoly g(1);
    for (const auto& c : coords) g = int_poly_gcd_univariate(g, c);
    if (g.degree_in(0) > 0) {
      const ZPoly gz = to_z(g);
      for (auto& c : coords) {
        if (!c.is_zero()) c = from_z(zquotient_exact(to_z(c), gz));
      }
    }
  }
  for (auto& c : coords) {
    if (c.is_zero()) continue;
    if (c.terms().rbegin()->second < 0) {
      for (auto& x : coords) x = -x;
    }
    break;
  }
  return {std::move(coords)};
}

HeightValue height_nv(const RationalFunctionPoint& x, const QuadratureConfig& cfg) {
  const int nv = x.nvars();
  std::vector<int> dmax(nv, 0);
  std::vector<ComplexPoly> cs;
  for (const auto& c : x.coords) {
    const auto d = c.degrees();
    for (int j = 0; j < nv; ++j) dmax[j] = std::max(dmax[j], d[j]);
    cs.push_back(to_complex(c));
  }
  const auto est = integrate_log_max(cs, cfg);
  HeightValue hv;
  for (int dj : dmax) hv.value += dj;
  hv.value += est.value;
  hv.error = est.error;
  hv.exact = est.exact;
  return hv;
}

ShSetCensus sh_set_census(int d, double a, double h, const QuadratureConfig& cfg, const ShSetOptions& opts) {
  if (d < 1) throw DomainError("sh_set_census: d must be positive");
  if (!(a > 0) || !(1.0 - 2.0 * d * a > 0)) throw DomainError("sh_set_census: need a > 0 and 1 - 2da > 0");
  if (!(h > 0)) throw DomainError("sh_set_census: h must be positive");

  ShSetCensus out;
  out.degree_bound = static_cast<int>(std::floor(a * h));
  out.coefficient_bound = static_cast<long>(std::floor(std::exp((1.0 - d * a) * h) / std::sqrt(2.0)));
  const double ad = std::pow(a, d);
  out.lower_bound = std::exp(ad * (1.0 - 2.0 * a * d) * std::pow(h, d + 1) - ad * std::pow(h, d));

  std::vector<Exponent> monos;
  {
    Exponent e(d, 0);
    for (;;) {
      monos.push_back(e);
      int j = 0;
      while (j < d && e[j] == out.degree_bound) e[j++] = 0;
      if (j == d) break;
      ++e[j];
    }
  }
  const std::uint64_t base = 2 * out.coefficient_bound + 1;
  const mpz_class size = mpz_pow(mpz_class(static_cast<unsigned long>(base)), monos.size());
  if (size > opts.cap) throw SizeCapExceeded("sh_set_census box size " + size.get_str() + " exceeds cap");
  const std::uint64_t total = size.get_ui();
  const std::size_t nblocks = (total + kCensusBlock - 1) / kCensusBlock;

  struct BlockOut {
    bool ok = true;
    double max_h = -INFINITY;
    double max_err = 0.0;
    std::vector<HeightValue> heights;
  };
  std::vector<BlockOut> outs(nblocks);
  const bool stream = static_cast<bool>(opts.on_member);
  const IntPoly one = IntPoly::constant(d, mpz_class(1));

  auto candidate = [&](std::uint64_t idx) {
    IntPoly f(d);
    for (const auto& m : monos) {
      f.add_term(m, mpz_class(static_cast<long>(idx % base) - out.coefficient_bound));
      idx /= base;
    }
    return f;
  };

  parallel_for_blocks(nblocks, cfg.threads, [&](std::size_t b) {
    BlockOut& bo = outs[b];
    const std::uint64_t end = std::min<std::uint64_t>(total, (b + 1) * kCensusBlock);
    for (std::uint64_t idx = b * kCensusBlock; idx < end; ++idx) {
      const IntPoly f = candidate(idx);
      const HeightValue hv = height_nv(RationalFunctionPoint{{one, f}}, cfg);
      if (hv.value > h + cfg.tolerance) bo.ok = false;
      if (hv.value > bo.max_h) {
        bo.max_h = hv.value;
        bo.max_err = hv.error;
      }
      if (stream) bo.heights.push_back(hv);
    }
  });

  out.count = size;
  out.max_height = -INFINITY;
  for (std::size_t b = 0; b < nblocks; ++b) {
    out.all_heights_ok = out.all_heights_ok && outs[b].ok;
    if (outs[b].max_h > out.max_height) {
      out.max_height = outs[b].max_h;
      out.max_height_error = outs[b].max_err;
    }
    if (stream) {
      for (std::size_t i = 0; i < outs[b].heights.size(); ++i) {
        opts.on_member(candidate(b * kCensusBlock + i), outs[b].heights[i]);
      }
    }
  }
  return out;
}

}  // namespace cyclezeta
