#include <algorithm>
#include <cmath>

#include "cyclezeta/simd/log_max.hpp"

namespace cyclezeta::simd {

double weighted_log_abs_max_scalar(const PointSet& pts, const PolyBatch& polys) {
  const std::size_t stride = polys.degree + 1;
  double acc = 0.0;
  for (std::size_t j = 0; j < pts.size; ++j) {
    const double x = pts.x[j];
    const double y = pts.y[j];
    double best = kAbs2Floor;
    for (std::size_t i = 0; i < polys.count; ++i) {
      const double* cr = polys.re + i * stride;
      const double* ci = polys.im + i * stride;
      double pr = cr[polys.degree];
      double pi = ci[polys.degree];
      for (std::size_t k = polys.degree; k-- > 0;) {
        const double nr = pr * x - pi * y + cr[k];
        const double ni = pr * y + pi * x + ci[k];
        pr = nr;
        pi = ni;
      }
      best = std::max(best, pr * pr + pi * pi);
    }
    acc += pts.w[j] * 0.5 * std::log(best);
  }
  return acc;
}

}  // namespace cyclezeta::simd
