#include <cstdlib>
#include <stdexcept>
#include <string>

#include "genspin/kernels.hpp"

namespace genspin::kernels {

#if defined(GENSPIN_HAVE_AVX2)
namespace avx2 {
const Table& table();
}
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const Table* avx2_table() {
#if defined(GENSPIN_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2::table() : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table& chosen = []() -> const Table& {
    if (const char* env = std::getenv("GENSPIN_KERNELS"); env && std::string(env) == "scalar") {
      return scalar_table();
    }
    if (const Table* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

namespace {
void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}
}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active().dot(a.data(), b.data(), a.size());
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  require_same_size(w.size(), a.size());
  require_same_size(a.size(), b.size());
  return active().weighted_dot(w.data(), a.data(), b.data(), a.size());
}

void axpby(double alpha, std::span<const double> a, double beta, std::span<const double> b,
           std::span<double> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), out.size());
  active().axpby(alpha, a.data(), beta, b.data(), out.data(), a.size());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active().max_abs_diff(a.data(), b.data(), a.size());
}

std::size_t argmax_projection(std::span<const double> xs, std::span<const double> ys, double ux,
                              double uy) {
  require_same_size(xs.size(), ys.size());
  if (xs.empty()) throw std::invalid_argument("argmax over an empty table");
  return active().argmax_projection(xs.data(), ys.data(), xs.size(), ux, uy);
}

}  // namespace genspin::kernels
