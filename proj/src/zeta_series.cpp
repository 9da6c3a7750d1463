#include "cyclezeta/zeta_series.hpp"

#include <cmath>
#include <numbers>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/exact_counts.hpp"
#include "cyclezeta/parallel.hpp"

namespace cyclezeta {

namespace {

constexpr double kFactorTail = 1e-12;

double ln_mpz(const mpz_class& x) { return mpz_log2(x) * std::numbers::ln2; }

TailBound make_tail(const SparseSeries& series, double abs_t, double cprime) {
  TailBound tb;
  tb.cprime = cprime;
  tb.ratio = std::pow(series.q.q().get_d(), cprime) * abs_t;
  if (!(tb.ratio < 1.0)) throw RadiusError("|q^{C'} t| = " + std::to_string(tb.ratio) + " is not below 1");
  if (tb.ratio == 0.0) return tb;
  const double e = std::pow(static_cast<double>(series.kmax) + 1.0, series.l + 1);
  tb.bound = std::exp(e * std::log(tb.ratio)) / (1.0 - tb.ratio);
  return tb;
}

std::vector<mpz_class> pn_counts(int n, int l, const PrimePower& q, unsigned kmax) {
  const Space space = Space::proj(n);
  if (l == 0 && n > 0) return zero_cycle_series(space, q, kmax);
  std::vector<mpz_class> out;
  out.reserve(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) out.push_back(cycle_count(space, q, l, k));
  return out;
}

}  // namespace

SparseSeries local_zeta_series(const Space& space, const PrimePower& q, int l, unsigned kmax) {
  if (l < 0 || l > space.dim()) throw DomainError("local_zeta_series: need 0 <= l <= dim");
  if (!has_closed_form(space, l)) {
    throw UnsupportedDimension("no closed form for l=" + std::to_string(l) + " on " + space.to_string());
  }
  SparseSeries s{space, q, l, kmax, {}};
  std::vector<mpz_class> counts;
  if (l == 0 && space.dim() > 0) {
    counts = zero_cycle_series(space, q, kmax);
  } else {
    for (unsigned k = 0; k <= kmax; ++k) counts.push_back(cycle_count(space, q, l, k));
  }
  for (unsigned k = 0; k <= kmax; ++k) {
    mpz_class e = mpz_pow(mpz_class(k), static_cast<unsigned long>(l + 1));
    s.terms.push_back({k, std::move(e), counts[k]});
  }
  return s;
}

SeriesValue eval_with_tail(const SparseSeries& series, double t, double cprime) {
  SeriesValue out;
  out.tail = make_tail(series, std::fabs(t), cprime);
  double acc = 0.0;
  for (const auto& term : series.terms) {
    if (term.coefficient == 0) continue;
    if (term.exponent == 0) {
      acc += term.coefficient.get_d();
      continue;
    }
    if (t == 0.0) continue;
    const double e = term.exponent.get_d();
    const double mag = std::exp(ln_mpz(term.coefficient) + e * std::log(std::fabs(t)));
    const bool negative = t < 0.0 && mpz_odd_p(term.exponent.get_mpz_t());
    acc += negative ? -mag : mag;
  }
  out.value = acc;
  return out;
}

ComplexSeriesValue eval_with_tail(const SparseSeries& series, std::complex<double> t, double cprime) {
  ComplexSeriesValue out;
  out.tail = make_tail(series, std::abs(t), cprime);
  std::complex<double> acc = 0.0;
  const std::complex<double> log_t = t == 0.0 ? std::complex<double>(0.0) : std::log(t);
  for (const auto& term : series.terms) {
    if (term.coefficient == 0) continue;
    if (term.exponent == 0) {
      acc += term.coefficient.get_d();
      continue;
    }
    if (t == 0.0) continue;
    acc += std::exp(ln_mpz(term.coefficient) + term.exponent.get_d() * log_t);
  }
  out.value = acc;
  return out;
}

double tail_constant_pn(int n, int l) {
  if (l < 0 || l > n) throw DomainError("tail_constant_pn: need 0 <= l <= n");
  if (l == n) return 0.0;
  // n_k(P^n, 0) <= binom(k+n, n) q^{nk} <= (k+1)^n q^{nk} <= q^{2nk}.
  if (l == 0) return 2.0 * n;
  // n_k(P^n, n-1) <= q^{binom(n+k, n)} and binom(n+k, n) <= (2k)^n.
  if (l == n - 1) return std::ldexp(1.0, n);
  throw UnsupportedDimension("tail_constant_pn: no closed form for intermediate l");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

LProduct l_function_partial(int n, int l, std::complex<double> s, std::uint64_t pmax, unsigned threads) {
  if (n < 0) throw DomainError("l_function_partial: n must be >= 0");
  const double cprime = tail_constant_pn(n, l);
  const auto primes = primes_up_to(pmax);

  struct Factor {
    std::complex<double> value;
    double rel_error;
    unsigned kmax;
  };
  std::vector<Factor> factors(primes.size());
  constexpr std::size_t kBlock = 256;
  const std::size_t nblocks = (primes.size() + kBlock - 1) / kBlock;

  parallel_for_blocks(nblocks, threads, [&](std::size_t b) {
    const std::size_t end = std::min(primes.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      const std::uint64_t p = primes[i];
      const PrimePower q(p, 1);
      const double lp = std::log(static_cast<double>(p));
      const double ratio = std::exp((cprime - s.real()) * lp);
      if (!(ratio < 1.0)) {
        throw RadiusError("Re(s) too small: |p^{C'-s}| >= 1 at p = " + std::to_string(p));
      }
      unsigned kmax = 0;
      for (;; ++kmax) {
        const double e = std::pow(kmax + 1.0, l + 1);
        if (std::exp(e * std::log(ratio)) / (1.0 - ratio) < kFactorTail) break;
        if (kmax > 512) throw RadiusError("factor truncation did not reach the tail target");
      }
      const auto counts = pn_counts(n, l, q, kmax);
      SparseSeries series{Space::proj(n), q, l, kmax, {}};
      for (unsigned k = 0; k <= kmax; ++k) {
        series.terms.push_back({k, mpz_pow(mpz_class(k), static_cast<unsigned long>(l + 1)), counts[k]});
      }
      const auto val = eval_with_tail(series, std::exp(-s * lp), cprime);
      const double mag = std::abs(val.value);
      factors[i] = Factor{val.value, mag > val.tail.bound ? val.tail.bound / (mag - val.tail.bound) : INFINITY, kmax};
    }
  });

  LProduct out;
  out.value = 1.0;
  double log_err = 0.0;
  for (const auto& f : factors) {
    out.value *= f.value;
    log_err += f.rel_error;
    out.max_kmax = std::max(out.max_kmax, f.kmax);
  }
  out.primes = static_cast<unsigned>(primes.size());
  out.error_bound = std::abs(out.value) * std::expm1(log_err);
  return out;
}

double spec_z_zeta_partial(double s, std::uint64_t cutoff) {
  if (!(s > 1.0)) throw DomainError("spec_z_zeta_partial: s must exceed 1");
  // Summed from the small terms upward.
  double acc = 0.0;
  for (std::uint64_t m = cutoff; m >= 1; --m) acc += std::pow(static_cast<double>(m), -s);
  return acc;
}

SpecZAudit spec_z_audit(std::uint64_t cutoff, double s, double* audited_sum) {
  const auto primes = primes_up_to(cutoff);
  std::vector<std::uint32_t> hits(cutoff + 1, 0);
  SpecZAudit audit;
  // Each cycle sum n_p [p] is visited once, primes in ascending order.
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t norm) -> void {
    ++audit.cycles;
    ++hits[norm];
    for (std::size_t i = start; i < primes.size(); ++i) {
      if (norm > cutoff / primes[i]) break;
      self(self, i, norm * primes[i]);
    }
  };
  if (cutoff >= 1) rec(rec, 0, 1);
  audit.bijective = audit.cycles == cutoff;
  for (std::uint64_t m = 1; m <= cutoff; ++m) audit.bijective = audit.bijective && hits[m] == 1;
  if (audited_sum) {
    double acc = 0.0;
    for (std::uint64_t m = cutoff; m >= 1; --m) acc += hits[m] * std::pow(static_cast<double>(m), -s);
    *audited_sum = acc;
  }
  return audit;
}

AbscissaSequence abscissa_sequence(const Space& space, const PrimePower& q, int l, unsigned kmax) {
  if (l < 0 || l > space.dim()) throw DomainError("abscissa_sequence: need 0 <= l <= dim");
  if (!has_closed_form(space, l)) throw UnsupportedDimension("abscissa_sequence: no closed form for n_k");
  const auto series = local_zeta_series(space, q, l, kmax);
  const double log2q = mpz_log2(q.q());
  AbscissaSequence out;
  for (unsigned k = 1; k <= kmax; ++k) {
    const auto& c = series.terms[k].coefficient;
    const double denom = std::pow(static_cast<double>(k), l + 1);
    out.terms.push_back(c == 0 ? -INFINITY : mpz_log2(c) / log2q / denom);
  }
  const int dim = space.dim();
  const bool pic_rank_one = space.kind() == Space::Kind::ProjSpace || (space.kind() == Space::Kind::P1Power && dim == 1);
  if (pic_rank_one && dim >= 1 && l == dim - 1) {
    // deg(H^n) = 1 on P^n.
    double fact = 1.0;
    for (int i = 2; i <= dim; ++i) fact *= i;
    out.predicted_limit = 1.0 / (std::pow(static_cast<double>(space.top_degree()), dim - 1) * fact);
  }
  return out;
}

}  // namespace cyclezeta
