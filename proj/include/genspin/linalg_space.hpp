#pragma once

// Finite-dimensional smooth, strictly convex normed spaces X: weighted l^p
// norms (a discrete-measure L^p), the Euclidean norm, and planar gauges of a
// centrally symmetric convex body. Each model supplies the norm, the norming
// functional (duality map) and the dual norm.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "genspin/convex_body.hpp"
#include "genspin/coords.hpp"
#include "genspin/rng.hpp"

namespace genspin {

enum class NormKind { PNorm, Euclidean, Gauge };

struct SpaceTolerances {
  double closed_form = 1e-12;
  double numeric = 1e-6;
  double solver_residual = 1e-10;
  int max_iterations = 100;
};

class NormModel {
 public:
  // ||x|| = (sum_k w_k |x_k|^p)^(1/p), 1 < p < inf, w_k > 0. p == 2 is routed
  // to the Euclidean model with the same weights.
  static NormModel pnorm(double p, std::vector<double> weights);
  static NormModel pnorm(double p, std::size_t dim);
  static NormModel euclidean(std::size_t dim);
  static NormModel euclidean(std::vector<double> weights);
  // Minkowski functional of an origin-symmetric certified planar body.
  static NormModel gauge(ConvexBody body, SpaceTolerances tol = {});

  NormKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return weights_.size(); }
  // 2 for Euclidean, unused for Gauge.
  double p() const noexcept { return p_; }
  // Conjugate exponent, 1/p + 1/q = 1.
  double q() const noexcept { return p_ / (p_ - 1.0); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  bool unit_weights() const noexcept;
  // Only for Gauge models.
  const ConvexBody& body() const;
  const SpaceTolerances& tolerances() const noexcept { return tol_; }
  // Tolerance appropriate for this model's duality map.
  double duality_tolerance() const noexcept {
    return kind_ == NormKind::Gauge ? tol_.numeric : tol_.closed_form;
  }
  std::string describe() const;

 private:
  NormModel(NormKind kind, double p, std::vector<double> weights,
            std::shared_ptr<const ConvexBody> body, SpaceTolerances tol);

  NormKind kind_;
  double p_;
  std::vector<double> weights_;
  std::shared_ptr<const ConvexBody> body_;
  SpaceTolerances tol_;
};

double norm(const NormModel& m, const Vector& x);

// The unique rho with rho(x) = ||x|| and dual norm 1. Throws InputError for
// x = 0 and NumericError when the gauge solver misses its residual target.
DualFunctional norming_functional(const NormModel& m, const Vector& x);

// Residual |theta*(phi) - theta_x| reached by the gauge solver for x.
// Exposed for diagnostics; zero for closed-form models.
double norming_residual(const NormModel& m, const Vector& x);

double dual_pair(const DualFunctional& rho, const Vector& y);

double dual_norm(const NormModel& m, const DualFunctional& rho);

// x / ||x||
Vector normalize(const NormModel& m, const Vector& x);

// Uniform direction in [-1,1]^dim scaled onto the unit sphere of m.
Vector random_unit_vector(const NormModel& m, Rng& rng);

struct StrictConvexityReport {
  std::size_t samples = 0;
  double min_margin = 0.0;  // min 1 - ||t x + (1-t) y||
  std::size_t failures = 0;
  bool pass = false;
};

struct SmoothnessReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;  // max |finite difference - duality map|
  double max_ratio = 0.0;      // max deviation / per-coordinate tolerance
  std::size_t failures = 0;
  bool pass = false;
};

StrictConvexityReport certify_strict_convexity(const NormModel& m, std::size_t n_samples,
                                               std::uint64_t seed);

SmoothnessReport certify_smoothness(const NormModel& m, std::size_t n_samples, double h,
                                    std::uint64_t seed);

// Smoothness check at one point; exposed for the on-axis cases.
SmoothnessReport smoothness_at(const NormModel& m, const Vector& unit_x, double h);

}  // namespace genspin
