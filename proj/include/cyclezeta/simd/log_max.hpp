#pragma once

#include <cstddef>

namespace cyclezeta::simd {

// Quadrature nodes in structure-of-arrays layout.
struct PointSet {
  const double* x = nullptr;
  const double* y = nullptr;
  const double* w = nullptr;
  std::size_t size = 0;
};

// `count` univariate complex polynomials of a shared padded degree.
// Coefficient k of polynomial i lives at index i*(degree+1)+k.
struct PolyBatch {
  std::size_t count = 0;
  std::size_t degree = 0;
  const double* re = nullptr;
  const double* im = nullptr;
};

// Squared moduli below this floor are clamped before taking logs.
inline constexpr double kAbs2Floor = 1e-300;

// sum_j w_j * log max_i |p_i(x_j + i y_j)|.
double weighted_log_abs_max_scalar(const PointSet& pts, const PolyBatch& polys);
double weighted_log_abs_max_avx2(const PointSet& pts, const PolyBatch& polys);

enum class Isa { Scalar, Avx2 };

// AVX2+FMA when the CPU has them, unless CYCLEZETA_SIMD=scalar.
Isa active_isa();
const char* isa_name(Isa isa);

double weighted_log_abs_max(const PointSet& pts, const PolyBatch& polys);

}  // namespace cyclezeta::simd
