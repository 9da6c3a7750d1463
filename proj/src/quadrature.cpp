#include "cyclezeta/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/parallel.hpp"
#include "cyclezeta/simd/log_max.hpp"

namespace cyclezeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPointBlock = 4096;
constexpr std::size_t kOuterBlock = 64;
constexpr std::uint64_t kSampleBlock = 8192;

struct DiskNodes {
  std::vector<double> x, y, w;
};

// Nodes on the unit disk for variable `var`: Gauss-Legendre in r, trapezoid
// in theta with a per-variable phase, weights carrying r / (pi (1+r^2)^2).
DiskNodes disk_nodes(unsigned n, int var) {
  std::vector<double> gx, gw;
  gauss_legendre(n, gx, gw);
  const double phase = std::fmod((var + 1) * 0.6180339887498949, 1.0);
  DiskNodes d;
  d.x.reserve(n * n);
  d.y.reserve(n * n);
  d.w.reserve(n * n);
  for (unsigned a = 0; a < n; ++a) {
    const double r = 0.5 * (gx[a] + 1.0);
    const double den = 1.0 + r * r;
    const double wr = 0.5 * gw[a] * r / (kPi * den * den);
    for (unsigned b = 0; b < n; ++b) {
      const double th = 2.0 * kPi * (b + phase) / n;
      d.x.push_back(r * std::cos(th));
      d.y.push_back(r * std::sin(th));
      d.w.push_back(wr * 2.0 * kPi / n);
    }
  }
  return d;
}

// Polynomials with z_j -> 1/z_j (times z_j^{d_j}) for every j in `mask`.
std::vector<ComplexPoly> invert(const std::vector<ComplexPoly>& fs, const std::vector<int>& d, unsigned mask) {
  std::vector<ComplexPoly> out;
  for (const auto& f : fs) {
    ComplexPoly g(f.nvars());
    for (const auto& [e, c] : f.terms()) {
      Exponent t = e;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (mask & (1u << j)) t[j] = d[j] - e[j];
      }
      g.add_term(t, c);
    }
    out.push_back(std::move(g));
  }
  return out;
}

double one_variable_level(const std::vector<std::vector<ComplexPoly>>& pieces, int degree, unsigned n,
                          unsigned threads) {
  const DiskNodes nodes = disk_nodes(n, 0);
  double total = 0.0;
  for (const auto& fs : pieces) {
    const std::size_t stride = degree + 1;
    std::vector<double> re(fs.size() * stride, 0.0), im(fs.size() * stride, 0.0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (const auto& [e, c] : fs[i].terms()) {
        re[i * stride + e[0]] = c.real();
        im[i * stride + e[0]] = c.imag();
      }
    }
    const simd::PolyBatch batch{fs.size(), static_cast<std::size_t>(degree), re.data(), im.data()};
    const std::size_t npts = nodes.x.size();
    const std::size_t nblocks = (npts + kPointBlock - 1) / kPointBlock;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for_blocks(nblocks, threads, [&](std::size_t b) {
      const std::size_t lo = b * kPointBlock;
      const std::size_t len = std::min(kPointBlock, npts - lo);
      partial[b] = simd::weighted_log_abs_max({nodes.x.data() + lo, nodes.y.data() + lo, nodes.w.data() + lo, len}, batch);
    });
    for (double p : partial) total += p;
  }
  return total;
}

double two_variable_level(const std::vector<std::vector<ComplexPoly>>& pieces, const std::vector<int>& d, unsigned n,
                          unsigned threads) {
  const DiskNodes outer = disk_nodes(n, 0);
  const DiskNodes inner = disk_nodes(n, 1);
  const std::size_t stride = d[1] + 1;
  const simd::PointSet inner_pts{inner.x.data(), inner.y.data(), inner.w.data(), inner.x.size()};
  double total = 0.0;
  for (const auto& fs : pieces) {
    // coeff[i][e1][e2] dense over the box.
    std::vector<std::vector<std::complex<double>>> dense(fs.size(),
                                                         std::vector<std::complex<double>>((d[0] + 1) * stride));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (const auto& [e, c] : fs[i].terms()) dense[i][e[0] * stride + e[1]] = c;
    }
    const std::size_t nouter = outer.x.size();
    const std::size_t nblocks = (nouter + kOuterBlock - 1) / kOuterBlock;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for_blocks(nblocks, threads, [&](std::size_t b) {
      std::vector<double> re(fs.size() * stride), im(fs.size() * stride);
      std::vector<std::complex<double>> zpow(d[0] + 1);
      double acc = 0.0;
      const std::size_t end = std::min(nouter, (b + 1) * kOuterBlock);
      for (std::size_t o = b * kOuterBlock; o < end; ++o) {
        const std::complex<double> z1(outer.x[o], outer.y[o]);
        zpow[0] = 1.0;
        for (int k = 1; k <= d[0]; ++k) zpow[k] = zpow[k - 1] * z1;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          for (std::size_t k = 0; k < stride; ++k) {
            std::complex<double> c = 0.0;
            for (int e1 = 0; e1 <= d[0]; ++e1) c += dense[i][e1 * stride + k] * zpow[e1];
            re[i * stride + k] = c.real();
            im[i * stride + k] = c.imag();
          }
        }
        const simd::PolyBatch batch{fs.size(), stride - 1, re.data(), im.data()};
        acc += outer.w[o] * simd::weighted_log_abs_max(inner_pts, batch);
      }
      partial[b] = acc;
    });
    for (double p : partial) total += p;
  }
  return total;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

IntegralEstimate monte_carlo(const std::vector<ComplexPoly>& fs, const std::vector<int>& d, const QuadratureConfig& cfg) {
  if (!cfg.seed) throw DomainError("monte carlo quadrature requires an explicit seed");
  if (cfg.sample_count < 2) throw DomainError("monte carlo quadrature needs at least 2 samples");
  const std::uint64_t seed = *cfg.seed;
  const int n = static_cast<int>(d.size());
  const std::uint64_t total = cfg.sample_count;
  const std::size_t nblocks = (total + kSampleBlock - 1) / kSampleBlock;
  std::vector<double> sums(nblocks, 0.0), sqs(nblocks, 0.0);
  parallel_for_blocks(nblocks, cfg.threads, [&](std::size_t b) {
    std::vector<std::vector<std::complex<double>>> pw(n);
    for (int j = 0; j < n; ++j) pw[j].resize(d[j] + 1);
    double s = 0.0, s2 = 0.0;
    const std::uint64_t end = std::min<std::uint64_t>(total, (b + 1) * kSampleBlock);
    for (std::uint64_t m = b * kSampleBlock; m < end; ++m) {
      for (int j = 0; j < n; ++j) {
        const double u = uniform_at(seed, m * 2 * n + 2 * j);
        const double v = uniform_at(seed, m * 2 * n + 2 * j + 1);
        const double r = std::sqrt(u / (1.0 - u));
        const std::complex<double> z = std::polar(r, 2.0 * kPi * v);
        pw[j][0] = 1.0;
        for (int k = 1; k <= d[j]; ++k) pw[j][k] = pw[j][k - 1] * z;
      }
      double best = simd::kAbs2Floor;
      for (const auto& f : fs) {
        std::complex<double> val = 0.0;
        for (const auto& [e, c] : f.terms()) {
          std::complex<double> t = c;
          for (int j = 0; j < n; ++j) t *= pw[j][e[j]];
          val += t;
        }
        best = std::max(best, std::norm(val));
      }
      const double l = 0.5 * std::log(best);
      s += l;
      s2 += l * l;
    }
    sums[b] = s;
    sqs[b] = s2;
  });
  double s = 0.0, s2 = 0.0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    s += sums[b];
    s2 += sqs[b];
  }
  const double mean = s / total;
  const double var = std::max(0.0, (s2 - total * mean * mean) / (total - 1));
  IntegralEstimate est;
  est.value = mean;
  est.error = std::sqrt(var / total);
  est.samples = total;
  est.converged = est.error <= cfg.tolerance;
  return est;
}

}  // namespace

void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights) {
  static std::mutex mu;
  static std::map<unsigned, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> x(n), w(n);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (unsigned k = 1; k <= n; ++k) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    it = cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first;
  }
  nodes = it->second.first;
  weights = it->second.second;
}

double uniform_at(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ (counter * 0xd1b54a32d192ed03ULL));
  return ((bits >> 11) + 0.5) * 0x1.0p-53;
}

IntegralEstimate integrate_log_max(const std::vector<ComplexPoly>& fs_in, const QuadratureConfig& cfg) {
  std::vector<ComplexPoly> fs;
  int n = 0;
  for (const auto& f : fs_in) {
    n = std::max(n, f.nvars());
    if (!f.is_zero()) fs.push_back(f);
  }
  if (fs.empty()) throw AllZero("every polynomial is zero");
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DomainError("polynomials must share the same variables");
  }

  IntegralEstimate exact;
  exact.exact = true;
  // int log|z_j| omega = 0, so a lone monomial integrates to log|c|.
  if (fs.size() == 1 && fs.front().size() == 1) {
    exact.value = std::log(std::abs(fs.front().terms().begin()->second));
    return exact;
  }
  bool constant = true;
  for (const auto& f : fs) constant = constant && f.is_constant();
  if (constant) {
    double best = 0.0;
    for (const auto& f : fs) best = std::max(best, std::abs(f.terms().begin()->second));
    exact.value = std::log(best);
    return exact;
  }

  std::vector<int> d(n, 0);
  for (const auto& f : fs) {
    const auto df = f.degrees();
    for (int j = 0; j < n; ++j) d[j] = std::max(d[j], df[j]);
  }

  auto scheme = cfg.scheme;
  if (scheme == QuadratureConfig::Scheme::Auto) {
    scheme = n <= 2 ? QuadratureConfig::Scheme::TensorGauss : QuadratureConfig::Scheme::MonteCarlo;
  }
  if (scheme == QuadratureConfig::Scheme::MonteCarlo) return monte_carlo(fs, d, cfg);
  if (n > 2) throw DomainError("tensor quadrature supports at most two variables");

  unsigned start = cfg.nodes_per_dim ? cfg.nodes_per_dim : (n == 1 ? 64 : 16);
  unsigned stop = cfg.max_nodes_per_dim ? cfg.max_nodes_per_dim : (n == 1 ? 1024 : 64);
  if (start < 8) throw DomainError("nodes_per_dim must be at least 8");
  stop = std::max(stop, 2 * start);

  std::vector<std::vector<ComplexPoly>> pieces;
  for (unsigned mask = 0; mask < (1u << n); ++mask) pieces.push_back(invert(fs, d, mask));
  double shift = 0.0;
  for (int j = 0; j < n; ++j) shift += d[j];
  shift *= 0.5 * std::numbers::ln2;

  auto level = [&](unsigned nodes) {
    const double v = n == 1 ? one_variable_level(pieces, d[0], nodes, cfg.threads)
                            : two_variable_level(pieces, d, nodes, cfg.threads);
    return v + shift;
  };

  IntegralEstimate est;
  unsigned nodes = start;
  double prev = level(nodes);
  double diff = INFINITY;
  while (2 * nodes <= stop) {
    nodes *= 2;
    const double cur = level(nodes);
    diff = std::fabs(cur - prev);
    prev = cur;
    if (diff <= cfg.tolerance) break;
  }
  est.value = prev;
  est.error = diff;
  est.nodes_per_dim = nodes;
  est.converged = diff <= cfg.tolerance;
  return est;
}

}  // namespace cyclezeta
