#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclezeta/bound_engine.hpp"
#include "cyclezeta/cycle_oracle.hpp"
#include "cyclezeta/errors.hpp"
#include "cyclezeta/exact_counts.hpp"
#include "cyclezeta/field_census.hpp"
#include "cyclezeta/fs_norms.hpp"
#include "cyclezeta/height_lab.hpp"
#include "cyclezeta/poly_parser.hpp"
#include "cyclezeta/zeta_series.hpp"

namespace cyclezeta::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string kind;
  std::string space = "pn";
  int n = 1;
  std::uint64_t q = 2;
  std::vector<int> multidegree;
  std::optional<unsigned> k;
  unsigned m = 1;
  unsigned dmax = 1;
  int l = 0;
  unsigned kmax = 3;
  std::optional<double> t;
  std::optional<double> cprime;
  bool abscissa = false;
  bool audit = false;
  bool tsv = false;
  bool list = false;
  bool members = false;
  bool timing = false;

  double h = 1.0;
  double s = 2.0;
  double s_imag = 0.0;
  std::uint64_t pmax = 100;
  std::uint64_t cutoff = 100;
  double lambda = 1.0;
  int pairs = 0;
  int nvars = 0;
  std::vector<std::string> polys;
  std::string form;
  std::string coords;
  int d = 1;
  double a = 0.25;
  std::uint64_t cap = 10000000;

  double deg_ad = 0, deg_be = 0, deg_c = 1;
  unsigned theta_d = 0, theta_e = 0;
  unsigned long deg_pi = 1;
  std::vector<unsigned long> mults;

  unsigned samples = 100;
  std::optional<std::uint64_t> seed;
  int maxdeg = 3;
  int coeff_bound = 10;

  unsigned nodes = 0;
  unsigned max_nodes = 0;
  double tolerance = 1e-3;
  std::uint64_t mc_samples = 1000000;
  std::string scheme = "auto";
  unsigned threads = 1;
};

Space resolve_space(const Options& o) {
  if (o.space == "pn") return Space::proj(o.n);
  if (o.space == "p1xn") return Space::p1_power(o.n);
  return Space::parse(o.space);
}

QuadratureConfig quad_config(const Options& o) {
  QuadratureConfig c;
  c.nodes_per_dim = o.nodes;
  c.max_nodes_per_dim = o.max_nodes;
  c.tolerance = o.tolerance;
  c.sample_count = o.mc_samples;
  c.seed = o.seed;
  c.threads = o.threads;
  if (o.scheme == "tensor") c.scheme = QuadratureConfig::Scheme::TensorGauss;
  if (o.scheme == "montecarlo") c.scheme = QuadratureConfig::Scheme::MonteCarlo;
  return c;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

void add_quadrature_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.nodes, "Starting nodes per dimension (0 = default)");
  cmd->add_option("--max-nodes", o.max_nodes, "Largest nodes per dimension (0 = default)");
  cmd->add_option("--tolerance", o.tolerance, "Quadrature tolerance on the log integral");
  cmd->add_option("--mc-samples", o.mc_samples, "Monte Carlo sample count");
  cmd->add_option("--scheme", o.scheme, "auto, tensor or montecarlo")
      ->check(CLI::IsMember({"auto", "tensor", "montecarlo"}));
  cmd->add_option("--seed", o.seed, "Seed for randomized quadrature");
}

void add_space_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--space", o.space, "pn, p1xn, or a product such as P2xP1");
  cmd->add_option("--n", o.n, "Dimension parameter for pn / p1xn");
  cmd->add_option("--q", o.q, "Field size (a prime power)");
}

// Multidegrees a on the flattened factors with sum_j a_j c_j = k.
void multidegrees_of_degree(const std::vector<mpz_class>& w, unsigned k, MultiDegree& cur,
                            std::vector<MultiDegree>& out) {
  mpz_class used = 0;
  for (std::size_t j = 0; j < cur.size(); ++j) used += w[j] * cur[j];
  if (cur.size() == w.size()) {
    if (used == k) out.push_back(cur);
    return;
  }
  for (int a = 0; used + w[cur.size()] * a <= k; ++a) {
    cur.push_back(a);
    multidegrees_of_degree(w, k, cur, out);
    cur.pop_back();
  }
}

mpz_class oracle_divisors_of_degree(const Space& space, const PrimePower& q, unsigned k) {
  std::vector<MultiDegree> ds;
  MultiDegree cur;
  multidegrees_of_degree(divisor_degree_weights(space), k, cur, ds);
  mpz_class total = 0;
  for (const auto& e : ds) total += static_cast<unsigned long>(enum_divisors(space, q, e).size());
  return total;
}

json audit_entry(const mpz_class& formula, const std::function<mpz_class()>& oracle) {
  json a;
  try {
    const mpz_class v = oracle();
    a["oracle"] = v.get_str();
    a["match"] = v == formula;
    if (v != formula) {
      throw InternalError("audit mismatch: formula " + formula.get_str() + " vs oracle " + v.get_str());
    }
  } catch (const SizeCapExceeded& e) {
    a["skipped"] = e.what();
  }
  return a;
}

json cmd_count(const Options& o) {
  const Space space = resolve_space(o);
  const PrimePower q = PrimePower::from_q(o.q);
  json r;
  r["space"] = space.to_string();
  r["q"] = q.to_string();
  mpz_class value;
  std::function<mpz_class()> oracle;
  if (o.kind == "divisors") {
    if (!o.multidegree.empty()) {
      r["multidegree"] = o.multidegree;
      value = divisor_count_space(space, q, o.multidegree);
      oracle = [&] { return mpz_class(static_cast<unsigned long>(enum_divisors(space, q, o.multidegree).size())); };
    } else if (o.k) {
      r["k"] = *o.k;
      value = divisor_count_degree(space, q, *o.k);
      oracle = [&] { return oracle_divisors_of_degree(space, q, *o.k); };
    } else {
      throw DomainError("count divisors needs --multidegree or --k");
    }
  } else if (o.kind == "zero-cycles") {
    if (!o.k) throw DomainError("count zero-cycles needs --k");
    r["k"] = *o.k;
    value = zero_cycle_count(space, q, *o.k);
    oracle = [&] { return mpz_class(static_cast<unsigned long>(enum_zero_cycles(space, q, *o.k).size())); };
  } else if (o.kind == "points") {
    r["m"] = o.m;
    value = point_count(space, q, o.m);
  } else if (o.kind == "cycles") {
    if (!o.k) throw DomainError("count cycles needs --k");
    r["l"] = o.l;
    r["k"] = *o.k;
    value = cycle_count(space, q, o.l, *o.k);
    if (o.l == 0) {
      oracle = [&] { return mpz_class(static_cast<unsigned long>(enum_zero_cycles(space, q, *o.k).size())); };
    } else if (o.l == space.dim() - 1) {
      oracle = [&] { return oracle_divisors_of_degree(space, q, *o.k); };
    }
  }
  r["count"] = value.get_str();
  r["error"] = 0;
  r["provenance"] = "formula";
  if (o.audit) r["audit"] = oracle ? audit_entry(value, oracle) : json{{"skipped", "no oracle for this count"}};
  return r;
}

json cmd_enum(const Options& o, std::vector<std::string>& rows) {
  const Space space = resolve_space(o);
  const PrimePower q = PrimePower::from_q(o.q);
  json r;
  r["space"] = space.to_string();
  r["q"] = q.to_string();
  json items = json::array();
  if (o.kind == "divisors") {
    if (o.multidegree.empty()) throw DomainError("enum divisors needs --multidegree");
    r["multidegree"] = o.multidegree;
    const auto monos = monomials_for(space, o.multidegree);
    json mj = json::array();
    for (const auto& e : monos) mj.push_back(e);
    r["monomials"] = mj;
    for (const auto& f : enum_divisors(space, q, o.multidegree)) {
      items.push_back(f.coefficients);
      std::string row;
      for (std::size_t i = 0; i < f.coefficients.size(); ++i) row += (i ? "\t" : "") + std::to_string(f.coefficients[i]);
      rows.push_back(row);
    }
  } else if (o.kind == "zero-cycles") {
    if (!o.k) throw DomainError("enum zero-cycles needs --k");
    r["k"] = *o.k;
    for (const auto& z : enum_zero_cycles(space, q, *o.k)) {
      items.push_back(to_string(z));
      rows.push_back(to_string(z));
    }
  } else if (o.kind == "closed-points") {
    r["d"] = o.dmax;
    PointCatalog cat(space, q);
    const auto& pts = cat.closed_points(o.dmax);
    if (pts.size() > kOracleCap) throw SizeCapExceeded("too many closed points");
    for (const auto& p : pts) {
      items.push_back(to_string(p));
      rows.push_back(to_string(p));
    }
  }
  r["count"] = std::to_string(items.size());
  r["items"] = items;
  r["provenance"] = "oracle";
  return r;
}

json cmd_bound(const Options& o) {
  json r;
  if (o.kind == "constant") {
    const ExplicitConstant c = o.space == "p1xn" ? explicit_constant_p1n(o.n, o.l) : explicit_constant_pn(o.n, o.l);
    r["space"] = o.space == "p1xn" ? Space::p1_power(o.n).to_string() : Space::proj(o.n).to_string();
    r["l"] = o.l;
    r["value"] = c.value.get_str();
    r["error"] = 0;
    r["derivation"] = c.derivation;
  } else if (o.kind == "system") {
    const auto spec = p1_product_system(static_cast<double>(o.q), o.n, o.l);
    r["q"] = o.q;
    r["n"] = o.n;
    r["l"] = o.l;
    r["h"] = o.h;
    r["log_bound"] = counting_system_log_bound(spec, o.h);
    r["bound"] = counting_system_bound(spec, o.h);
    r["error"] = 0;
  } else if (o.kind == "product") {
    r["value"] = product_cycle_bound(o.deg_ad, o.deg_be, o.deg_c, o.theta_d, o.theta_e);
    r["error"] = 0;
  } else if (o.kind == "pushforward") {
    r["deg_pi"] = o.deg_pi;
    r["value"] = pushforward_bound(o.deg_pi, o.mults).get_str();
    r["error"] = 0;
  }
  r["provenance"] = "formula";
  return r;
}

double default_cprime(const Space& space, int l) {
  if (space.kind() == Space::Kind::ProjSpace) return tail_constant_pn(space.n(), l);
  if (space.kind() == Space::Kind::P1Power) return explicit_constant_p1n(space.n(), l).value.get_d();
  throw DomainError("no default C' for " + space.to_string() + "; pass --cprime");
}

json cmd_zeta(const Options& o, std::vector<std::string>& rows) {
  const Space space = resolve_space(o);
  const PrimePower q = PrimePower::from_q(o.q);
  const SparseSeries series = local_zeta_series(space, q, o.l, o.kmax);
  json r;
  r["space"] = space.to_string();
  r["q"] = q.to_string();
  r["l"] = o.l;
  r["kmax"] = o.kmax;
  json ex = json::array(), co = json::array();
  for (const auto& term : series.terms) {
    ex.push_back(term.exponent.get_str());
    co.push_back(term.coefficient.get_str());
    rows.push_back(std::to_string(term.k) + "\t" + term.exponent.get_str() + "\t" + term.coefficient.get_str());
  }
  r["exponents"] = ex;
  r["coefficients"] = co;
  r["provenance"] = "formula";
  if (o.t) {
    const double cp = o.cprime ? *o.cprime : default_cprime(space, o.l);
    const auto v = eval_with_tail(series, *o.t, cp);
    r["t"] = *o.t;
    r["cprime"] = cp;
    r["value"] = v.value;
    r["error"] = v.tail.bound;
    r["ratio"] = v.tail.ratio;
  }
  if (o.abscissa) {
    const auto ab = abscissa_sequence(space, q, o.l, o.kmax);
    json a;
    a["terms"] = ab.terms;
    a["predicted_limit"] = ab.predicted_limit ? json(*ab.predicted_limit) : json(nullptr);
    r["abscissa"] = a;
  }
  if (o.audit) {
    json checks = json::array();
    for (const auto& term : series.terms) {
      std::function<mpz_class()> oracle;
      const unsigned k = term.k;
      if (o.l == 0) {
        oracle = [&, k] { return mpz_class(static_cast<unsigned long>(enum_zero_cycles(space, q, k).size())); };
      } else if (o.l == space.dim() - 1) {
        oracle = [&, k] { return oracle_divisors_of_degree(space, q, k); };
      }
      json c = oracle ? audit_entry(term.coefficient, oracle) : json{{"skipped", "no oracle"}};
      c["k"] = k;
      checks.push_back(c);
    }
    r["audit"] = checks;
  }
  return r;
}

json cmd_lfun(const Options& o) {
  const auto lp = l_function_partial(o.n, o.l, {o.s, o.s_imag}, o.pmax, o.threads);
  json r;
  r["n"] = o.n;
  r["l"] = o.l;
  r["s"] = {o.s, o.s_imag};
  r["pmax"] = o.pmax;
  r["value"] = {lp.value.real(), lp.value.imag()};
  r["error"] = lp.error_bound;
  r["primes"] = lp.primes;
  r["max_kmax"] = lp.max_kmax;
  r["provenance"] = "formula";
  return r;
}

json cmd_speczeta(const Options& o) {
  json r;
  r["s"] = o.s;
  r["cutoff"] = o.cutoff;
  r["value"] = spec_z_zeta_partial(o.s, o.cutoff);
  // sum_{m > N} m^{-s} <= N^{1-s} / (s - 1)
  r["tail_bound"] = std::pow(static_cast<double>(o.cutoff), 1.0 - o.s) / (o.s - 1.0);
  r["error"] = 0;
  r["provenance"] = "formula";
  if (o.audit) {
    double sum = 0.0;
    const auto a = spec_z_audit(o.cutoff, o.s, &sum);
    r["audit"] = {{"cycles", a.cycles}, {"bijective", a.bijective}, {"sum", sum}};
    if (!a.bijective) throw InternalError("cycle to integer map is not bijective");
  }
  return r;
}

json cmd_norm(const Options& o) {
  if (o.polys.empty()) throw DomainError("norm needs at least one --poly");
  std::vector<ComplexPoly> cs;
  json per = json::array();
  for (const auto& text : o.polys) {
    const IntPoly f = parse_poly(text, VarStyle::Affine, o.nvars);
    const Norms nm = norms(f);
    json e{{"poly", to_string(f, affine_names(f.nvars()))}, {"inf", nm.inf}, {"two", nm.two}};
    if (!f.is_zero()) e["lc_sigma_max"] = lc_sigma_max(to_complex(f));
    per.push_back(e);
    cs.push_back(to_complex(f));
  }
  const VMeasure v = v_measure(cs, quad_config(o));
  json r;
  r["polys"] = per;
  r["v"] = v.value;
  r["log_v"] = v.log_value;
  r["error"] = v.log_error;
  r["exact"] = v.estimate.exact;
  r["nodes_per_dim"] = v.estimate.nodes_per_dim;
  r["provenance"] = "quadrature";
  return r;
}

json cmd_delta(const Options& o) {
  const IntegerForm P = IntegerForm::from_poly(parse_poly(o.form, VarStyle::Pairs, o.pairs));
  const DeltaValue d = delta_lambda(P, o.lambda, quad_config(o));
  json r;
  r["form"] = P.to_string();
  r["multidegree"] = P.multidegree();
  r["lambda"] = o.lambda;
  r["value"] = d.value;
  r["error"] = d.error;
  r["exact"] = d.exact;
  r["provenance"] = d.exact ? "formula" : "quadrature";
  return r;
}

json cmd_divcount(const Options& o, std::vector<std::string>& rows) {
  ArithSearchOptions so;
  so.cap = o.cap;
  so.keep_members = o.list;
  const auto res = count_arith_divisors_bounded(o.n, o.lambda, o.h, quad_config(o), so);
  json r;
  r["n"] = o.n;
  r["lambda"] = o.lambda;
  r["h"] = o.h;
  r["count"] = res.count.get_str();
  r["certified_bound"] = res.certified_bound;
  r["searched"] = res.searched;
  r["integrated"] = res.integrated;
  json bl = json::array();
  for (const auto& b : res.borderline) bl.push_back({{"form", b.form.to_string()}, {"delta", b.delta.value}, {"error", b.delta.error}});
  r["borderline"] = bl;
  r["error"] = 0;
  if (o.list) {
    json m = json::array();
    for (const auto& f : res.members) {
      m.push_back(f.to_string());
      rows.push_back(f.to_string());
    }
    r["members"] = m;
  }
  r["provenance"] = "search";
  return r;
}

json cmd_height(const Options& o) {
  json r;
  if (o.kind == "ff") {
    const PrimePower q = PrimePower::from_q(o.q);
    std::vector<IntPoly> cs;
    for (const auto& c : split(o.coords, ',')) cs.push_back(parse_poly(c, VarStyle::FunctionField, 1));
    const auto x = ff_point_from_int_polys(q, cs);
    json coords = json::array();
    for (const auto& c : x.coords) coords.push_back(c);
    r["q"] = q.to_string();
    r["normalized"] = coords;
    r["height"] = height_ff(x);
    r["error"] = 0;
    r["provenance"] = "formula";
  } else if (o.kind == "ff-count") {
    const PrimePower q = PrimePower::from_q(o.q);
    r["q"] = q.to_string();
    r["n"] = o.n;
    r["h"] = o.h;
    r["count"] = count_ff_points(q, o.n, static_cast<int>(o.h), o.threads).get_str();
    r["error"] = 0;
    r["provenance"] = "enumeration";
  } else if (o.kind == "nv") {
    std::vector<IntPoly> cs;
    for (const auto& c : split(o.coords, ',')) cs.push_back(parse_poly(c, VarStyle::Affine, o.nvars));
    const auto x = normalize_rf_point(cs);
    const auto hv = height_nv(x, quad_config(o));
    json coords = json::array();
    for (const auto& c : x.coords) coords.push_back(to_string(c, affine_names(c.nvars())));
    r["normalized"] = coords;
    r["height"] = hv.value;
    r["error"] = hv.error;
    r["exact"] = hv.exact;
    r["provenance"] = "quadrature";
  }
  return r;
}

void cmd_census(const Options& o, std::ostream& out) {
  if (o.kind == "closed-points") {
    const Space space = resolve_space(o);
    const PrimePower q = PrimePower::from_q(o.q);
    const auto c = cached_closed_point_census(space, q, o.dmax);
    for (unsigned d = 1; d <= c.dmax(); ++d) {
      out << json{{"space", space.to_string()}, {"q", q.to_string()}, {"d", d}, {"count", c.at(d).get_str()}}.dump()
          << "\n";
    }
  } else if (o.kind == "ff-points") {
    const PrimePower q = PrimePower::from_q(o.q);
    for (int h = 0; h <= static_cast<int>(o.h); ++h) {
      out << json{{"q", q.to_string()}, {"n", o.n}, {"h", h}, {"count", count_ff_points(q, o.n, h, o.threads).get_str()}}
                 .dump()
          << "\n";
    }
  } else if (o.kind == "sh-set") {
    ShSetOptions so;
    so.cap = o.cap;
    if (o.members) {
      so.on_member = [&](const IntPoly& f, const HeightValue& hv) {
        out << json{{"f", to_string(f, affine_names(f.nvars()))}, {"height", hv.value}, {"error", hv.error}}.dump()
            << "\n";
      };
    }
    const auto c = sh_set_census(o.d, o.a, o.h, quad_config(o), so);
    out << json{{"d", o.d},
                {"a", o.a},
                {"h", o.h},
                {"degree_bound", c.degree_bound},
                {"coefficient_bound", c.coefficient_bound},
                {"count", c.count.get_str()},
                {"all_heights_ok", c.all_heights_ok},
                {"max_height", c.max_height},
                {"error", c.max_height_error},
                {"lower_bound", c.lower_bound}}
               .dump()
        << "\n";
  }
}

json cmd_verify(const Options& o) {
  NormSampleSpec spec;
  spec.samples = o.samples;
  spec.seed = *o.seed;
  spec.nvars = o.nvars == 0 ? 2 : o.nvars;
  spec.maxdeg = o.maxdeg;
  spec.coeff_bound = o.coeff_bound;
  const NormReport rep = verify_norm_props(spec, quad_config(o));
  json r;
  r["samples"] = rep.instances;
  r["seed"] = spec.seed;
  r["hard_failures"] = rep.hard_failures();
  r["warnings"] = rep.warnings();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"warnings", c.warnings},
                      {"hard_failures", c.hard_failures},
                      {"min_slack", c.min_slack}});
  }
  r["checks"] = checks;
  json fails = json::array();
  for (const auto& f : rep.failures) {
    fails.push_back({{"check", f.check}, {"instance", f.instance}, {"slack", f.slack}, {"hard", f.hard}});
  }
  r["failures"] = fails;
  r["provenance"] = "quadrature";
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cycle counts, zeta series, Fubini-Study norms and heights"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--timing", o.timing, "Report elapsed time on stderr");

  auto* count = app.add_subcommand("count", "Exact cycle and point counts");
  count->add_option("kind", o.kind)->required()->check(CLI::IsMember({"divisors", "zero-cycles", "points", "cycles"}));
  add_space_options(count, o);
  count->add_option("--multidegree", o.multidegree)->delimiter(',');
  count->add_option("--k", o.k);
  count->add_option("--m", o.m);
  count->add_option("--l", o.l);
  count->add_flag("--audit", o.audit, "Re-derive through the enumeration oracle");

  auto* enumerate = app.add_subcommand("enum", "Enumerate cycles with the oracle");
  enumerate->add_option("kind", o.kind)->required()->check(CLI::IsMember({"divisors", "zero-cycles", "closed-points"}));
  add_space_options(enumerate, o);
  enumerate->add_option("--multidegree", o.multidegree)->delimiter(',');
  enumerate->add_option("--k", o.k);
  enumerate->add_option("--d", o.dmax);
  enumerate->add_flag("--tsv", o.tsv);

  auto* bound = app.add_subcommand("bound", "Counting-system and explicit bounds");
  bound->add_option("kind", o.kind)->required()->check(CLI::IsMember({"constant", "system", "product", "pushforward"}));
  bound->add_option("--space", o.space)->check(CLI::IsMember({"pn", "p1xn"}));
  bound->add_option("--n", o.n);
  bound->add_option("--l", o.l);
  bound->add_option("--q", o.q);
  bound->add_option("--h", o.h);
  bound->add_option("--deg-ad", o.deg_ad);
  bound->add_option("--deg-be", o.deg_be);
  bound->add_option("--deg-c", o.deg_c);
  bound->add_option("--theta-d", o.theta_d);
  bound->add_option("--theta-e", o.theta_e);
  bound->add_option("--deg-pi", o.deg_pi);
  bound->add_option("--mults", o.mults)->delimiter(',');

  auto* zeta = app.add_subcommand("zeta", "Truncated cycle zeta series");
  add_space_options(zeta, o);
  zeta->add_option("--l", o.l);
  zeta->add_option("--kmax", o.kmax);
  zeta->add_option("--t", o.t, "Evaluate at T = t with a tail bound");
  zeta->add_option("--cprime", o.cprime);
  zeta->add_flag("--abscissa", o.abscissa);
  zeta->add_flag("--audit", o.audit);
  zeta->add_flag("--tsv", o.tsv);

  auto* lfun = app.add_subcommand("lfun", "Partial Euler product over primes");
  lfun->add_option("--n", o.n);
  lfun->add_option("--l", o.l);
  lfun->add_option("--s", o.s);
  lfun->add_option("--s-imag", o.s_imag);
  lfun->add_option("--pmax", o.pmax);
  lfun->add_option("--threads", o.threads);

  auto* spec = app.add_subcommand("speczeta", "Zeta of 0-cycles on Spec Z");
  spec->add_option("--s", o.s);
  spec->add_option("--cutoff", o.cutoff);
  spec->add_flag("--audit", o.audit);

  auto* norm = app.add_subcommand("norm", "Coefficient norms and the v-measure");
  norm->add_option("--poly", o.polys)->required();
  norm->add_option("--nvars", o.nvars);
  norm->add_option("--threads", o.threads);
  add_quadrature_options(norm, o);

  auto* delta = app.add_subcommand("delta", "Arithmetic degree of div(P) on (P^1_Z)^n");
  delta->add_option("--form", o.form)->required();
  delta->add_option("--pairs", o.pairs);
  delta->add_option("--lambda", o.lambda);
  delta->add_option("--threads", o.threads);
  add_quadrature_options(delta, o);

  auto* divcount = app.add_subcommand("divcount", "Arithmetic divisors of bounded degree");
  divcount->add_option("--n", o.n);
  divcount->add_option("--lambda", o.lambda);
  divcount->add_option("--h", o.h);
  divcount->add_option("--cap", o.cap);
  divcount->add_option("--threads", o.threads);
  divcount->add_flag("--list", o.list);
  divcount->add_flag("--tsv", o.tsv);
  add_quadrature_options(divcount, o);

  auto* height = app.add_subcommand("height", "Heights over F_q(t) and Q(z)");
  height->add_option("kind", o.kind)->required()->check(CLI::IsMember({"ff", "ff-count", "nv"}));
  height->add_option("--q", o.q);
  height->add_option("--n", o.n);
  height->add_option("--h", o.h);
  height->add_option("--coords", o.coords, "Comma-separated coordinates");
  height->add_option("--nvars", o.nvars);
  height->add_option("--threads", o.threads);
  add_quadrature_options(height, o);

  auto* census = app.add_subcommand("census", "Censuses as JSON lines");
  census->add_option("kind", o.kind)->required()->check(CLI::IsMember({"closed-points", "ff-points", "sh-set"}));
  add_space_options(census, o);
  census->add_option("--dmax", o.dmax);
  census->add_option("--h", o.h);
  census->add_option("--d", o.d);
  census->add_option("--a", o.a);
  census->add_option("--cap", o.cap);
  census->add_option("--threads", o.threads);
  census->add_flag("--members", o.members);
  add_quadrature_options(census, o);

  auto* verify = app.add_subcommand("verify", "Property drivers");
  verify->add_option("kind", o.kind)->required()->check(CLI::IsMember({"norms"}));
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed)->required();
  verify->add_option("--nvars", o.nvars);
  verify->add_option("--maxdeg", o.maxdeg);
  verify->add_option("--coeff-bound", o.coeff_bound);
  verify->add_option("--nodes", o.nodes);
  verify->add_option("--max-nodes", o.max_nodes);
  verify->add_option("--tolerance", o.tolerance);
  verify->add_option("--threads", o.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> rows;
    json result;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "census") {
      cmd_census(o, out);
    } else {
      if (name == "count") result = cmd_count(o);
      if (name == "enum") result = cmd_enum(o, rows);
      if (name == "bound") result = cmd_bound(o);
      if (name == "zeta") result = cmd_zeta(o, rows);
      if (name == "lfun") result = cmd_lfun(o);
      if (name == "speczeta") result = cmd_speczeta(o);
      if (name == "norm") result = cmd_norm(o);
      if (name == "delta") result = cmd_delta(o);
      if (name == "divcount") result = cmd_divcount(o, rows);
      if (name == "height") result = cmd_height(o);
      if (name == "verify") result = cmd_verify(o);
      if (o.tsv) {
        for (const auto& row : rows) out << row << "\n";
      } else {
        json doc;
        doc["command"] = name;
        if (!o.kind.empty()) doc["kind"] = o.kind;
        for (auto& [key, value] : result.items()) doc[key] = value;
        out << doc.dump(2) << "\n";
      }
    }
    if (o.timing) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "elapsed " << secs << " s\n";
    }
    return kOk;
  } catch (const SizeCapExceeded& e) {
    err << "size cap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace cyclezeta::cli
