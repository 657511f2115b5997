// AVX2 variants of the kernels in kernels.hpp. Built with -mavx2 -mfma; only
// reachable through the dispatcher after a cpuid check.

#include <immintrin.h>

#include <cmath>

#include "genspin/kernels.hpp"

namespace genspin::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + k), _mm256_loadu_pd(a + k));
    acc = _mm256_fmadd_pd(wa, _mm256_loadu_pd(b + k), acc);
  }
  double r = hsum(acc);
  for (; k < n; ++k) r += w[k] * a[k] * b[k];
  return r;
}

void axpby(double alpha, const double* a, double beta, const double* b, double* out,
           std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    // Unfused so results match the scalar reference bit for bit.
    const __m256d ta = _mm256_mul_pd(va, _mm256_loadu_pd(a + k));
    const __m256d tb = _mm256_mul_pd(vb, _mm256_loadu_pd(b + k));
    _mm256_storeu_pd(out + k, _mm256_add_pd(ta, tb));
  }
  for (; k < n; ++k) out[k] = alpha * a[k] + beta * b[k];
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  bool saw_nan = false;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d =
        _mm256_andnot_pd(sign_mask, _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
    saw_nan |= _mm256_movemask_pd(_mm256_cmp_pd(d, d, _CMP_UNORD_Q)) != 0;
    m = _mm256_max_pd(m, d);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = lanes[0];
  for (int l = 1; l < 4; ++l) r = lanes[l] > r ? lanes[l] : r;
  for (; k < n; ++k) {
    const double d = std::fabs(a[k] - b[k]);
    if (d > r || std::isnan(d)) r = d;
  }
  return saw_nan ? NAN : r;
}

std::size_t argmax_projection(const double* xs, const double* ys, std::size_t n, double ux,
                              double uy) {
  std::size_t k = 0;
  std::size_t best = 0;
  double best_val = -INFINITY;
  if (n >= 4) {
    const __m256d vux = _mm256_set1_pd(ux);
    const __m256d vuy = _mm256_set1_pd(uy);
    __m256d lane_best = _mm256_set1_pd(-INFINITY);
    __m256d lane_idx = _mm256_setzero_pd();
    __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);
    for (; k + 4 <= n; k += 4) {
      const __m256d v = _mm256_add_pd(_mm256_mul_pd(vux, _mm256_loadu_pd(xs + k)),
                                      _mm256_mul_pd(vuy, _mm256_loadu_pd(ys + k)));
      const __m256d gt = _mm256_cmp_pd(v, lane_best, _CMP_GT_OQ);
      lane_best = _mm256_blendv_pd(lane_best, v, gt);
      lane_idx = _mm256_blendv_pd(lane_idx, idx, gt);
      idx = _mm256_add_pd(idx, four);
    }
    alignas(32) double vals[4];
    alignas(32) double ids[4];
    _mm256_store_pd(vals, lane_best);
    _mm256_store_pd(ids, lane_idx);
    for (int l = 0; l < 4; ++l) {
      const auto id = static_cast<std::size_t>(ids[l]);
      if (vals[l] > best_val || (vals[l] == best_val && id < best)) {
        best_val = vals[l];
        best = id;
      }
    }
  }
  for (; k < n; ++k) {
    const double px = ux * xs[k];
    const double py = uy * ys[k];
    const double v = px + py;
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  return best;
}

}  // namespace

const Table& table() {
  static const Table t{Isa::Avx2, dot, weighted_dot, axpby, max_abs_diff, argmax_projection};
  return t;
}

}  // namespace genspin::kernels::avx2
