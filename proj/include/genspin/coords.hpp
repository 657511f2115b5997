#pragma once

// Coordinate containers for the finite-dimensional base space X and its dual.
// Vector and DualFunctional share storage but are distinct types so a
// functional can never be passed where a point of X is expected.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "genspin/errors.hpp"
#include "genspin/kernels.hpp"

namespace genspin {

namespace detail {

template <class Derived>
class CoordArray {
 public:
  CoordArray() = default;
  explicit CoordArray(std::vector<double> coords) : c_(std::move(coords)) {
    for (double v : c_) {
      if (!std::isfinite(v)) throw InputError("coordinates must be finite");
    }
  }
  CoordArray(std::initializer_list<double> coords) : CoordArray(std::vector<double>(coords)) {}

  static Derived zeros(std::size_t dim) { return Derived(std::vector<double>(dim, 0.0)); }
  static Derived basis(std::size_t dim, std::size_t k) {
    std::vector<double> c(dim, 0.0);
    c.at(k) = 1.0;
    return Derived(std::move(c));
  }

  std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  std::span<const double> span() const noexcept { return c_; }
  const std::vector<double>& coords() const noexcept { return c_; }

  bool is_zero() const noexcept {
    for (double v : c_) {
      if (v != 0.0) return false;
    }
    return true;
  }

  friend Derived operator+(const Derived& a, const Derived& b) { return combine(1.0, a, 1.0, b); }
  friend Derived operator-(const Derived& a, const Derived& b) { return combine(1.0, a, -1.0, b); }
  friend Derived operator-(const Derived& a) {
    std::vector<double> c(a.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a[k];
    return Derived(std::move(c));
  }
  friend Derived operator*(double t, const Derived& a) {
    std::vector<double> c(a.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = t * a[k];
    return Derived(std::move(c));
  }
  friend bool operator==(const CoordArray& a, const CoordArray& b) { return a.c_ == b.c_; }

  // alpha a + beta b
  static Derived combine(double alpha, const Derived& a, double beta, const Derived& b) {
    if (a.dim() != b.dim()) throw InputError("dimension mismatch");
    std::vector<double> c(a.dim());
    kernels::axpby(alpha, a.span(), beta, b.span(), c);
    return Derived(std::move(c));
  }

 private:
  std::vector<double> c_;
};

}  // namespace detail

// Element of the base space X.
class Vector : public detail::CoordArray<Vector> {
 public:
  using CoordArray::CoordArray;
};

// Bounded linear functional on X. Coordinates are the pairing coordinates:
// the action on a Vector is sum_k coords_k * x_k, with any measure weights
// already folded in.
class DualFunctional : public detail::CoordArray<DualFunctional> {
 public:
  using CoordArray::CoordArray;
};

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace genspin
