#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cyclezeta/cycle_oracle.hpp"
#include "cyclezeta/bound_engine.hpp"
#include "cyclezeta/exact_counts.hpp"
#include "cyclezeta/fs_norms.hpp"
#include "cyclezeta/height_lab.hpp"
#include "cyclezeta/zeta_series.hpp"

using namespace cyclezeta;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome oracle_formula_equality() {
  Outcome o;
  unsigned cases = 0;
  for (unsigned qq : {2u, 3u}) {
    const PrimePower q = PrimePower::from_q(qq);
    for (int e1 = 0; e1 <= 9; ++e1) {
      ++cases;
      if (enum_divisors(Space::p1_power(1), q, {e1}).size() != divisor_count_multidegree(q, {e1})) {
        o.pass = false;
        o.detail += fmt(" mismatch (P1)^1 q=%u e=%d;", qq, e1);
      }
      for (int e2 = 0; (e1 + 1) * (e2 + 1) <= 10; ++e2) {
        ++cases;
        if (enum_divisors(Space::p1_power(2), q, {e1, e2}).size() != divisor_count_multidegree(q, {e1, e2})) {
          o.pass = false;
          o.detail += fmt(" mismatch (P1)^2 q=%u e=(%d,%d);", qq, e1, e2);
        }
      }
    }
    for (int k = 0; k <= 3; ++k) {
      ++cases;
      if (enum_divisors(Space::proj(2), q, {k}).size() != divisor_count_pn(q, 2, k)) {
        o.pass = false;
        o.detail += fmt(" mismatch P2 q=%u k=%d;", qq, k);
      }
    }
  }
  o.detail = fmt("%u cases", cases) + o.detail;
  return o;
}

Outcome weil_identity() {
  Outcome o;
  const PrimePower q = PrimePower::from_q(2);
  for (const Space& s : {Space::proj(1), Space::proj(2), Space::p1_power(2)}) {
    for (unsigned k = 0; k <= 3; ++k) {
      const mpz_class formula = zero_cycle_count(s, q, k);
      const std::size_t oracle = enum_zero_cycles(s, q, k).size();
      if (formula != oracle) {
        o.pass = false;
        o.detail += fmt(" %s k=%u formula=%s oracle=%zu;", s.to_string().c_str(), k, formula.get_str().c_str(), oracle);
      }
    }
  }
  const auto p1 = enum_zero_cycles(Space::proj(1), q, 2).size();
  const auto p1sq = enum_zero_cycles(Space::p1_power(2), q, 2).size();
  if (p1 != 7 || p1sq != 53) o.pass = false;
  o.detail = fmt("P1 k=2 -> %zu, P1xP1 k=2 -> %zu", p1, p1sq) + o.detail;
  return o;
}

Outcome fiber_bound() {
  Outcome o;
  const PrimePower q = PrimePower::from_q(2);
  const Space p1 = Space::proj(1);
  unsigned pairs = 0, violations = 0, nonzero = 0;
  for (unsigned k = 0; k <= 4; ++k) {
    const auto cycles = enum_zero_cycles(p1, q, k);
    for (const auto& x : cycles) {
      for (const auto& y : cycles) {
        ++pairs;
        const mpz_class c = fiber_count(p1, x, p1, y, q);
        if (c == 0) continue;
        ++nonzero;
        const double exponent = alpha_weight(x) * alpha_weight(y);
        if (mpz_log2(c) > exponent + 1e-12) ++violations;
      }
    }
  }
  o.pass = violations == 0 && pairs > 0;
  o.detail = fmt("%u pairs, %u with nonempty fiber, %u violations", pairs, nonzero, violations);
  return o;
}

Outcome explicit_constants() {
  Outcome o;
  unsigned checks = 0, violations = 0;
  for (unsigned qq : {2u, 3u}) {
    const PrimePower q = PrimePower::from_q(qq);
    for (int n = 1; n <= 2; ++n) {
      const double c = explicit_constant_p1n(n, 0).value.get_d();
      mpz_class total = 0;
      for (unsigned h = 0; h <= 4; ++h) {
        total += enum_zero_cycles(Space::p1_power(n), q, h).size();
        ++checks;
        if (mpz_log2(total) > c * h * std::log2(static_cast<double>(qq)) + 1e-12) ++violations;
      }
    }
  }
  {
    const PrimePower q = PrimePower::from_q(2);
    const double c = explicit_constant_pn(2, 1).value.get_d();
    mpz_class total = 0;
    for (int h = 0; h <= 3; ++h) {
      total += enum_divisors(Space::proj(2), q, {h}).size();
      ++checks;
      if (mpz_log2(total) > c * h * h + 1e-12) ++violations;
    }
  }
  o.pass = violations == 0;
  o.detail = fmt("%u checks, %u violations", checks, violations);
  return o;
}

Outcome norm_inequalities() {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-3;
  cfg.threads = worker_count();
  NormSampleSpec spec;
  spec.samples = 1000;
  spec.seed = 20240601;
  spec.nvars = 2;
  spec.maxdeg = 4;
  spec.coeff_bound = 10;
  const NormReport r = verify_norm_props(spec, cfg);
  Outcome o;
  std::set<std::string> names;
  double worst = INFINITY;
  for (const auto& c : r.checks) {
    names.insert(c.name);
    worst = std::min(worst, c.min_slack);
  }
  for (const char* need : {"norm_order", "v_upper_inf", "v_lower_two", "product_inf", "integer_lower"}) {
    if (!names.count(need)) {
      o.pass = false;
      o.detail += fmt(" missing check %s;", need);
    }
  }
  if (r.instances != 1000 || r.hard_failures() != 0 || !(worst >= -1e-3)) o.pass = false;
  o.detail = fmt("%u instances, %u hard failures, %u warnings, min slack %.3g", r.instances, r.hard_failures(),
                 r.warnings(), worst) +
             o.detail;
  return o;
}

Outcome v_closed_form() {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-7;
  cfg.max_nodes_per_dim = 4096;
  cfg.threads = worker_count();
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coord(-2.0, 2.0), lead(0.5, 2.0);
  std::uniform_int_distribution<int> degree(1, 4);
  Outcome o;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::complex<double> alpha = std::polar(lead(rng), coord(rng));
    ComplexPoly f = ComplexPoly::constant(1, alpha);
    double expect = std::abs(alpha);
    const ComplexPoly z = ComplexPoly::variable(1, 0);
    for (int j = degree(rng); j > 0; --j) {
      const std::complex<double> c(coord(rng), coord(rng));
      f = f * (z - ComplexPoly::constant(1, c));
      expect *= std::sqrt(1.0 + std::norm(c));
    }
    const double got = v_measure({f}, cfg).value;
    worst = std::max(worst, std::abs(got - expect));
  }
  o.pass = worst <= 1e-3;
  o.detail = fmt("50 polynomials, max |v - closed form| = %.3g", worst);
  return o;
}

IntPoly random_form(std::mt19937_64& rng, int pairs) {
  std::uniform_int_distribution<int> deg(0, 2), coeff(-5, 5);
  std::vector<int> k(pairs);
  for (auto& ki : k) ki = deg(rng);
  IntPoly p(2 * pairs);
  std::vector<int> e(pairs, 0);
  for (;;) {
    Exponent full(2 * pairs);
    for (int i = 0; i < pairs; ++i) {
      full[2 * i] = e[i];
      full[2 * i + 1] = k[i] - e[i];
    }
    p.add_term(full, coeff(rng));
    int j = 0;
    while (j < pairs && e[j] == k[j]) e[j++] = 0;
    if (j == pairs) break;
    ++e[j];
  }
  if (p.is_zero()) return random_form(rng, pairs);
  return p;
}

Outcome delta_facts() {
  QuadratureConfig cfg;
  cfg.threads = worker_count();
  Outcome o;
  double worst_log = 0.0;
  for (int m = 1; m <= 100; ++m) {
    const auto d = delta_lambda(IntegerForm::from_poly(IntPoly::constant(2, m)), 1.0, cfg);
    worst_log = std::max(worst_log, std::abs(d.value - std::log(m)));
  }
  std::mt19937_64 rng(4242);
  double worst_add = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int pairs = 1 + i % 2;
    IntPoly a = random_form(rng, pairs);
    IntPoly b = random_form(rng, pairs);
    const double da = delta_lambda(IntegerForm::from_poly(a), 1.0, cfg).value;
    const double db = delta_lambda(IntegerForm::from_poly(b), 1.0, cfg).value;
    const double dab = delta_lambda(IntegerForm::from_poly(a * b), 1.0, cfg).value;
    worst_add = std::max(worst_add, std::abs(dab - da - db));
  }
  const auto count = count_arith_divisors_bounded(1, 1.0, std::log(3.0), cfg);
  o.pass = worst_log <= 1e-6 && worst_add <= 2e-3 && count.count == 5 && count.borderline.empty();
  o.detail = fmt("max |delta(m) - log m| = %.3g, max additivity defect = %.3g, count = %s, borderline = %zu", worst_log,
                 worst_add, count.count.get_str().c_str(), count.borderline.size());
  return o;
}

double zeta_direct(double s) {
  const double m = 1e6;
  double sum = 0.0;
  for (long k = static_cast<long>(m); k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  return sum + std::pow(m, 1 - s) / (s - 1) - 0.5 * std::pow(m, -s) + s / 12.0 * std::pow(m, -s - 1);
}

Outcome l_product() {
  const double expect = zeta_direct(4.0) * zeta_direct(3.0);
  const auto lp = l_function_partial(1, 0, 4.0, 100000, worker_count());
  const double diff = std::abs(lp.value - std::complex<double>(expect, 0.0));
  Outcome o;
  o.pass = diff <= 1e-3;
  o.detail = fmt("L = %.9f, zeta(4)zeta(3) = %.9f, |diff| = %.3g, %u primes", lp.value.real(), expect, diff, lp.primes);
  return o;
}

Outcome spec_z() {
  const double partial = spec_z_zeta_partial(2.0, 10000);
  const double diff = std::abs(partial + 1.0 / 10000 - std::numbers::pi * std::numbers::pi / 6);
  const auto audit = spec_z_audit(50, 2.0);
  Outcome o;
  o.pass = diff <= 2e-4 && audit.bijective && audit.cycles == 50;
  o.detail = fmt("partial = %.9f, |partial + 1/cutoff - pi^2/6| = %.3g, audit cycles = %llu bijective = %s", partial,
                 diff, static_cast<unsigned long long>(audit.cycles), audit.bijective ? "yes" : "no");
  return o;
}

Outcome abscissa() {
  Outcome o;
  double worst = -INFINITY;
  struct Case {
    Space space;
    int l;
    double limit;
  };
  for (const Case& c : {Case{Space::proj(1), 0, 1.0}, Case{Space::proj(2), 1, 0.5}}) {
    const auto seq = abscissa_sequence(c.space, PrimePower::from_q(2), c.l, 20);
    if (!seq.predicted_limit || std::abs(*seq.predicted_limit - c.limit) > 1e-15) {
      o.pass = false;
      o.detail += " wrong predicted limit;";
    }
    for (unsigned k = 5; k <= 20; ++k) {
      const double excess = std::abs(seq.terms[k - 1] - c.limit) - 2.0 / k;
      worst = std::max(worst, excess);
      if (excess > 0) o.pass = false;
    }
  }
  o.detail = fmt("max(|term - limit| - 2/k) = %.3g", worst) + o.detail;
  return o;
}

Outcome heights() {
  QuadratureConfig cfg;
  cfg.threads = worker_count();
  const mpz_class ff = count_ff_points(PrimePower::from_q(2), 1, 1, cfg.threads);
  const auto one_z = normalize_rf_point({IntPoly::constant(1, 1), IntPoly::variable(1, 0)});
  const double hz = height_nv(one_z, cfg).value;
  const double hz_err = std::abs(hz - (1 + 0.5 * std::log(2.0)));
  const auto sh = sh_set_census(1, 0.25, 4.0, cfg);
  Outcome o;
  o.pass = ff == 9 && hz_err <= 1e-3 && sh.count == 841 && sh.count.get_d() >= sh.lower_bound && sh.all_heights_ok &&
           sh.max_height <= 4.0 + 1e-3;
  o.detail = fmt("ff count = %s, |h(1:z) - (1 + log2/2)| = %.3g, census = %s (lower bound %.4f), max height = %.5f",
                 ff.get_str().c_str(), hz_err, sh.count.get_str().c_str(), sh.lower_bound, sh.max_height);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equals closed-form divisor counts", oracle_formula_equality},
      {2, "zero-cycle counts equal enumeration", weil_identity},
      {3, "pushforward fiber bound", fiber_bound},
      {4, "explicit constants bound enumerated counts", explicit_constants},
      {5, "norm inequalities on 1000 seeded polynomials", norm_inequalities},
      {6, "v-measure closed form for linear factors", v_closed_form},
      {7, "arithmetic degree facts", delta_facts},
      {8, "partial Euler product against zeta(4)zeta(3)", l_product},
      {9, "Spec Z zeta partial sum and audit", spec_z},
      {10, "abscissa sequences approach their limits", abscissa},
      {11, "height censuses", heights},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
