#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclezeta/polynomial.hpp"

namespace cyclezeta {

struct QuadratureConfig {
  enum class Scheme { Auto, TensorGauss, MonteCarlo };

  Scheme scheme = Scheme::Auto;
  // Starting nodes per real direction (r and theta) per variable; 0 picks
  // 64 for one variable and 16 for two. Doubled until successive estimates
  // agree to `tolerance` or max_nodes_per_dim is reached.
  unsigned nodes_per_dim = 0;
  unsigned max_nodes_per_dim = 0;  // 0: 1024 for n = 1, 64 for n = 2
  std::uint64_t sample_count = 1000000;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-3;
  unsigned threads = 1;
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // 0 when exact
  unsigned nodes_per_dim = 0;
  std::uint64_t samples = 0;
  bool exact = false;
  bool converged = true;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights);

// int_{C^n} log max_i |f_i| omega_1 ^ ... ^ omega_n against the product
// Fubini-Study measure of total mass 1. Zero polynomials are skipped;
// AllZero if nothing remains.
IntegralEstimate integrate_log_max(const std::vector<ComplexPoly>& fs, const QuadratureConfig& cfg);

// Counter-based generator: the i-th uniform in (0, 1) of stream `seed`.
double uniform_at(std::uint64_t seed, std::uint64_t counter);

}  // namespace cyclezeta
