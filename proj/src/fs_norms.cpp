#include "cyclezeta/fs_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/parallel.hpp"

namespace cyclezeta {

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr double kRoundSlack = 1e-12;
constexpr std::uint64_t kCandidateBlock = 2048;

double log_mpz_abs(const mpz_class& x) {
  if (x == 0) return -INFINITY;
  return mpz_log2(abs(x)) * kLog2;
}

mpz_class inf_norm_exact(const IntPoly& f) {
  mpz_class best = 0;
  for (const auto& [e, c] : f.terms()) {
    if (abs(c) > best) best = abs(c);
  }
  return best;
}

mpz_class two_norm_sq_exact(const IntPoly& f) {
  mpz_class s = 0;
  for (const auto& [e, c] : f.terms()) s += c * c;
  return s;
}

std::vector<std::string> pair_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  return names;
}

// Monomials of multidegree k in the pair variables, largest exponent first.
std::vector<Exponent> pair_monomials(const MultiDegree& k) {
  std::vector<Exponent> out{Exponent{}};
  for (int ki : k) {
    std::vector<Exponent> next;
    for (const auto& prefix : out) {
      for (int a = ki; a >= 0; --a) {
        Exponent e = prefix;
        e.push_back(a);
        e.push_back(ki - a);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

void multidegrees_up_to(int n, int total, MultiDegree& cur, std::vector<MultiDegree>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    multidegrees_up_to(n, total - k, cur, out);
    cur.pop_back();
  }
}

void record(NormCheck& check, std::vector<NormFailure>& failures, double slack, double tol,
            const std::string& instance) {
  ++check.checked;
  check.min_slack = std::min(check.min_slack, slack);
  if (slack >= -kRoundSlack) return;
  const bool hard = slack < -tol;
  if (hard) {
    ++check.hard_failures;
  } else {
    ++check.warnings;
  }
  failures.push_back({check.name, instance, slack, hard});
}

}  // namespace

Norms norms(const ComplexPoly& f) {
  Norms n;
  double sq = 0.0;
  for (const auto& [e, c] : f.terms()) {
    n.inf = std::max(n.inf, std::abs(c));
    sq += std::norm(c);
  }
  n.two = std::sqrt(sq);
  return n;
}

Norms norms(const IntPoly& f) {
  Norms n;
  n.inf = inf_norm_exact(f).get_d();
  n.two = std::sqrt(two_norm_sq_exact(f).get_d());
  return n;
}

VMeasure v_measure(const std::vector<ComplexPoly>& fs, const QuadratureConfig& cfg) {
  VMeasure v;
  v.estimate = integrate_log_max(fs, cfg);
  v.log_value = v.estimate.value;
  v.log_error = v.estimate.error;
  v.value = std::exp(v.log_value);
  return v;
}

ComplexPoly leading_coefficient_in(const ComplexPoly& f, int i) {
  const int d = f.degree_in(i);
  ComplexPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] != d) continue;
    Exponent t = e;
    t[i] = 0;
    out.add_term(t, c);
  }
  return out;
}

double lc_sigma_max(const ComplexPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("lc_sigma_max of the zero polynomial");
  std::vector<int> order(f.nvars());
  std::iota(order.begin(), order.end(), 0);
  double best = 0.0;
  do {
    ComplexPoly g = f;
    for (int i : order) g = leading_coefficient_in(g, i);
    best = std::max(best, std::abs(g.terms().begin()->second));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

IntegerForm IntegerForm::from_poly(const IntPoly& form) {
  if (form.is_zero()) throw DomainError("integer form must be nonzero");
  if (form.nvars() < 2 || form.nvars() % 2 != 0) throw DomainError("integer form needs variables in (X_i, Y_i) pairs");
  const int n = form.nvars() / 2;
  IntegerForm out;
  out.k_.assign(n, -1);
  for (const auto& [e, c] : form.terms()) {
    for (int i = 0; i < n; ++i) {
      const int deg = e[2 * i] + e[2 * i + 1];
      if (out.k_[i] < 0) out.k_[i] = deg;
      if (out.k_[i] != deg) throw DomainError("form is not multihomogeneous in pair " + std::to_string(i + 1));
    }
  }
  out.poly_ = form.terms().rbegin()->second < 0 ? -form : form;
  return out;
}

int IntegerForm::total_degree() const { return std::accumulate(k_.begin(), k_.end(), 0); }

std::string IntegerForm::to_string() const { return cyclezeta::to_string(poly_, pair_names(pairs())); }

DeltaValue delta_lambda(const IntegerForm& P, double lambda, const QuadratureConfig& cfg) {
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  const IntPoly p = P.dehomogenized();
  DeltaValue d;
  const double base = lambda * P.total_degree();
  if (p.is_constant()) {
    d.value = base + log_mpz_abs(p.terms().begin()->second);
    d.exact = true;
    return d;
  }
  const auto est = integrate_log_max({to_complex(p)}, cfg);
  d.value = base + est.value;
  d.error = est.error;
  d.exact = est.exact;
  return d;
}

double coefficient_bound_g(double h, double lambda) {
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  return lambda <= kLog2 ? std::exp(h * kLog2 / lambda) : std::exp(h);
}

ArithDivisorCount count_arith_divisors_bounded(int n, double lambda, double h, const QuadratureConfig& cfg,
                                               const ArithSearchOptions& opts) {
  if (n < 1) throw DomainError("n must be positive");
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  if (!(h >= 0)) throw DomainError("h must be non-negative");

  const int kmax_total = static_cast<int>(std::floor(h / lambda + kRoundSlack));
  std::vector<MultiDegree> degrees;
  MultiDegree cur;
  multidegrees_up_to(n, kmax_total, cur, degrees);

  ArithDivisorCount result;
  const double g = coefficient_bound_g(h, lambda);
  for (const auto& k : degrees) {
    double m = 1.0;
    for (int ki : k) m *= ki + 1;
    result.certified_bound += std::pow(2.0 * g + 1.0, m);
  }

  struct Plan {
    MultiDegree k;
    std::vector<Exponent> monomials;
    long bound;
    std::uint64_t total;
  };
  std::vector<Plan> plans;
  mpz_class search = 0;
  for (const auto& k : degrees) {
    const int ktot = std::accumulate(k.begin(), k.end(), 0);
    const double gk = std::exp(h + ktot * (kLog2 - lambda)) * (1.0 + kRoundSlack);
    if (gk > 1e9) throw SizeCapExceeded("coefficient bound too large");
    const long bound = static_cast<long>(std::floor(gk));
    auto monos = pair_monomials(k);
    const mpz_class size = mpz_pow(mpz_class(2 * bound + 1), monos.size());
    search += size;
    if (search > opts.cap) {
      throw SizeCapExceeded("arithmetic divisor search exceeds cap " + std::to_string(opts.cap));
    }
    plans.push_back({k, std::move(monos), bound, size.get_ui()});
  }
  result.searched = search.get_ui();

  for (const auto& plan : plans) {
    if (plan.bound == 0) continue;
    const std::uint64_t base = 2 * plan.bound + 1;
    const int ktot = std::accumulate(plan.k.begin(), plan.k.end(), 0);
    const std::size_t nblocks = (plan.total + kCandidateBlock - 1) / kCandidateBlock;

    struct BlockOut {
      std::uint64_t accepted = 0;
      std::uint64_t integrated = 0;
      std::vector<Borderline> borderline;
      std::vector<IntegerForm> members;
    };
    std::vector<BlockOut> outs(nblocks);

    parallel_for_blocks(nblocks, cfg.threads, [&](std::size_t b) {
      BlockOut& out = outs[b];
      std::vector<long> coeffs(plan.monomials.size());
      const std::uint64_t end = std::min<std::uint64_t>(plan.total, (b + 1) * kCandidateBlock);
      for (std::uint64_t idx = b * kCandidateBlock; idx < end; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t j = plan.monomials.size(); j-- > 0;) {
          coeffs[j] = static_cast<long>(rest % base) - plan.bound;
          rest /= base;
        }
        // Canonical sign: first nonzero coefficient (largest monomial) positive.
        auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](long c) { return c != 0; });
        if (lead == coeffs.end() || *lead < 0) continue;

        IntPoly P(2 * n);
        for (std::size_t j = 0; j < coeffs.size(); ++j) P.add_term(plan.monomials[j], mpz_class(coeffs[j]));
        const IntegerForm form = IntegerForm::from_poly(P);
        const IntPoly p = form.dehomogenized();
        const double degree_term = lambda * ktot;

        bool accept = false;
        if (p.is_constant()) {
          accept = degree_term + log_mpz_abs(p.terms().begin()->second) <= h;
        } else {
          const ComplexPoly pc = to_complex(p);
          const double lower = degree_term + std::log(lc_sigma_max(pc));
          if (lower > h + kRoundSlack) continue;
          double dsum = 0.0;
          for (int dj : p.degrees()) dsum += dj;
          const double upper = degree_term + 0.5 * kLog2 * dsum + 0.5 * log_mpz_abs(two_norm_sq_exact(p));
          if (upper < h - kRoundSlack) {
            accept = true;
          } else {
            ++out.integrated;
            const auto est = integrate_log_max({pc}, cfg);
            const double value = degree_term + est.value;
            const double band = est.exact ? 0.0 : std::max(cfg.tolerance, est.error);
            if (value + band <= h) {
              accept = true;
            } else if (value - band <= h) {
              out.borderline.push_back({form, DeltaValue{value, est.error, est.exact}});
            }
          }
        }
        if (accept) {
          ++out.accepted;
          if (opts.keep_members) out.members.push_back(form);
        }
      }
    });

    for (auto& out : outs) {
      result.count += static_cast<unsigned long>(out.accepted);
      result.integrated += out.integrated;
      for (auto& bl : out.borderline) result.borderline.push_back(std::move(bl));
      for (auto& m : out.members) result.members.push_back(std::move(m));
    }
  }
  return result;
}

IntPoly random_int_poly(std::uint64_t seed, std::uint64_t index, int nvars, int maxdeg, int bound) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<int> d(nvars);
  for (auto& x : d) x = deg(rng);
  for (;;) {
    IntPoly f(nvars);
    Exponent e(nvars, 0);
    for (;;) {
      f.add_term(e, mpz_class(coef(rng)));
      int j = 0;
      while (j < nvars && e[j] == d[j]) e[j++] = 0;
      if (j == nvars) break;
      ++e[j];
    }
    if (!f.is_zero()) return f;
  }
}

unsigned NormReport::hard_failures() const {
  unsigned s = 0;
  for (const auto& c : checks) s += c.hard_failures;
  return s;
}

unsigned NormReport::warnings() const {
  unsigned s = 0;
  for (const auto& c : checks) s += c.warnings;
  return s;
}

NormReport verify_norm_props(const NormSampleSpec& spec, const QuadratureConfig& cfg) {
  if (spec.nvars < 1 || spec.nvars > 2) throw DomainError("verify_norm_props supports 1 or 2 variables");
  if (spec.maxdeg < 0 || spec.coeff_bound < 1) throw DomainError("invalid sample spec");
  NormReport report;
  report.checks = {{"norm_order"}, {"v_upper_inf"}, {"v_lower_two"}, {"product_inf"}, {"integer_lower"}};
  const double tol = cfg.tolerance;

  for (unsigned s = 0; s < spec.samples; ++s) {
    const int nv = 1 + static_cast<int>(s % spec.nvars);
    const IntPoly f = random_int_poly(spec.seed, 2 * s, nv, spec.maxdeg, spec.coeff_bound);
    const IntPoly g = random_int_poly(spec.seed, 2 * s + 1, nv, spec.maxdeg, spec.coeff_bound);
    const std::string name = cyclezeta::to_string(f, affine_names(nv));
    ++report.instances;

    const mpz_class finf = inf_norm_exact(f);
    const mpz_class f2sq = two_norm_sq_exact(f);
    const auto df = f.degrees();
    double box = 1.0, dsum = 0.0;
    for (int x : df) {
      box *= x + 1;
      dsum += x;
    }
    {
      // |f|_inf <= |f|_2 <= sqrt(prod(d_i+1)) |f|_inf, decided exactly.
      const double lo = 0.5 * log_mpz_abs(f2sq) - log_mpz_abs(finf);
      const double hi = 0.5 * std::log(box) + log_mpz_abs(finf) - 0.5 * log_mpz_abs(f2sq);
      const bool ok = finf * finf <= f2sq && f2sq <= mpz_class(static_cast<unsigned long>(box)) * finf * finf;
      record(report.checks[0], report.failures, ok ? std::max(0.0, std::min(lo, hi)) : -INFINITY, tol, name);
    }

    const ComplexPoly fc = to_complex(f);
    const auto est = integrate_log_max({fc}, cfg);
    const double I = est.value;
    record(report.checks[1], report.failures, dsum * kLog2 + I - log_mpz_abs(finf), tol, name);
    record(report.checks[2], report.failures, 0.5 * dsum * kLog2 + 0.5 * log_mpz_abs(f2sq) - I, tol, name);
    record(report.checks[4], report.failures, I - std::max(0.0, std::log(lc_sigma_max(fc))), tol, name);

    {
      const IntPoly fg = f * g;
      const auto dg = g.degrees();
      mpz_class factor = 1;
      for (int i = 0; i < nv; ++i) factor *= 1 + std::min(df[i], dg[i]);
      const mpz_class lhs = inf_norm_exact(fg);
      const mpz_class rhs = finf * inf_norm_exact(g) * factor;
      const double slack = log_mpz_abs(rhs) - log_mpz_abs(lhs);
      record(report.checks[3], report.failures, lhs <= rhs ? std::max(0.0, slack) : -INFINITY, tol,
             name + " ; " + cyclezeta::to_string(g, affine_names(nv)));
    }
  }
  return report;
}

}  // namespace cyclezeta
