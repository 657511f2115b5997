#include "genspin/kernels.hpp"

#include <cmath>

namespace genspin::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += w[k] * a[k] * b[k];
  return acc;
}

void axpby_scalar(double alpha, const double* a, double beta, const double* b, double* out,
                  std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = alpha * a[k] + beta * b[k];
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = std::fabs(a[k] - b[k]);
    if (d > m || std::isnan(d)) m = d;
  }
  return m;
}

std::size_t argmax_projection_scalar(const double* xs, const double* ys, std::size_t n, double ux,
                                     double uy) {
  std::size_t best = 0;
  double best_val = -INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
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

const Table& scalar_table() {
  static const Table table{Isa::Scalar,        dot_scalar,          weighted_dot_scalar,
                           axpby_scalar,       max_abs_diff_scalar, argmax_projection_scalar};
  return table;
}

}  // namespace genspin::kernels
