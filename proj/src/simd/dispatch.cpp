#include <cstdlib>
#include <cstring>

#include "cyclezeta/simd/log_max.hpp"

namespace cyclezeta::simd {

namespace {

Isa detect() {
  if (const char* forced = std::getenv("CYCLEZETA_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::Scalar;
  }
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
  return Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double weighted_log_abs_max(const PointSet& pts, const PolyBatch& polys) {
  if (active_isa() == Isa::Avx2) return weighted_log_abs_max_avx2(pts, polys);
  return weighted_log_abs_max_scalar(pts, polys);
}

}  // namespace cyclezeta::simd
