#pragma once

// Data-parallel inner loops shared by the normed-space and convex-body code.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into a separate translation unit and picked at
// runtime when the CPU supports it. Setting GENSPIN_KERNELS=scalar in the
// environment forces the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace genspin::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct Table {
  Isa isa;
  // sum_k a_k b_k
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_k w_k a_k b_k
  double (*weighted_dot)(const double* w, const double* a, const double* b, std::size_t n);
  // out_k = alpha a_k + beta b_k; out may alias a or b
  void (*axpby)(double alpha, const double* a, double beta, const double* b, double* out,
                std::size_t n);
  // max_k |a_k - b_k|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
  // argmax_k (ux xs_k + uy ys_k); ties resolve to the smallest index.
  // Products and sum are evaluated unfused so every variant sees identical values.
  std::size_t (*argmax_projection)(const double* xs, const double* ys, std::size_t n,
                                   double ux, double uy);
};

const Table& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const Table* avx2_table();

// The table used by the library. Chosen once, on first use.
const Table& active();

// Convenience wrappers over active().
double dot(std::span<const double> a, std::span<const double> b);
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
void axpby(double alpha, std::span<const double> a, double beta, std::span<const double> b,
           std::span<double> out);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
std::size_t argmax_projection(std::span<const double> xs, std::span<const double> ys, double ux,
                              double uy);

}  // namespace genspin::kernels
