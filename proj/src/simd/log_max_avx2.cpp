#include <cstdint>

#include <immintrin.h>

#include "cyclezeta/simd/log_max.hpp"

#define CZ_AVX2 __attribute__((target("avx2,fma")))

namespace cyclezeta::simd {

namespace {

// fdlibm log on four positive normal doubles.
CZ_AVX2 inline __m256d log4(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3ff0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  // Biased exponent as a double: (2^52 | e) - 2^52.
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, magic)), _mm256_set1_pd(4503599627370496.0));
  e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d f = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(f, _mm256_set1_pd(2.0)));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);

  __m256d t1 = _mm256_fmadd_pd(w, _mm256_set1_pd(1.531383769920937332e-01), _mm256_set1_pd(2.222219843214978396e-01));
  t1 = _mm256_fmadd_pd(w, t1, _mm256_set1_pd(3.999999999940941908e-01));
  t1 = _mm256_mul_pd(w, t1);
  __m256d t2 = _mm256_fmadd_pd(w, _mm256_set1_pd(1.479819860511658591e-01), _mm256_set1_pd(1.818357216161805012e-01));
  t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(2.857142874366239149e-01));
  t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(6.666666666666735130e-01));
  t2 = _mm256_mul_pd(z, t2);
  const __m256d r = _mm256_add_pd(t1, t2);

  const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(f, f));
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  // e*ln2_hi - ((hfsq - (s*(hfsq+R) + e*ln2_lo)) - f)
  const __m256d inner = _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r), _mm256_mul_pd(e, ln2_lo));
  return _mm256_fmsub_pd(e, ln2_hi, _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f));
}

CZ_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

CZ_AVX2 double weighted_log_abs_max_avx2(const PointSet& pts, const PolyBatch& polys) {
  const std::size_t stride = polys.degree + 1;
  const std::size_t full = pts.size & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < full; j += 4) {
    const __m256d x = _mm256_loadu_pd(pts.x + j);
    const __m256d y = _mm256_loadu_pd(pts.y + j);
    __m256d best = _mm256_set1_pd(kAbs2Floor);
    for (std::size_t i = 0; i < polys.count; ++i) {
      const double* cr = polys.re + i * stride;
      const double* ci = polys.im + i * stride;
      __m256d pr = _mm256_set1_pd(cr[polys.degree]);
      __m256d pi = _mm256_set1_pd(ci[polys.degree]);
      for (std::size_t k = polys.degree; k-- > 0;) {
        const __m256d nr = _mm256_fmsub_pd(pr, x, _mm256_fmsub_pd(pi, y, _mm256_set1_pd(cr[k])));
        const __m256d ni = _mm256_fmadd_pd(pr, y, _mm256_fmadd_pd(pi, x, _mm256_set1_pd(ci[k])));
        pr = nr;
        pi = ni;
      }
      best = _mm256_max_pd(best, _mm256_fmadd_pd(pr, pr, _mm256_mul_pd(pi, pi)));
    }
    const __m256d wl = _mm256_mul_pd(_mm256_loadu_pd(pts.w + j), log4(best));
    acc = _mm256_fmadd_pd(_mm256_set1_pd(0.5), wl, acc);
  }
  double total = hsum(acc);
  if (full < pts.size) {
    const PointSet rest{pts.x + full, pts.y + full, pts.w + full, pts.size - full};
    total += weighted_log_abs_max_scalar(rest, polys);
  }
  return total;
}

}  // namespace cyclezeta::simd
