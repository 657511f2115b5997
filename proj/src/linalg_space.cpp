#include "genspin/linalg_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "genspin/errors.hpp"
#include "genspin/kernels.hpp"
#include "genspin/rng.hpp"

namespace genspin {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double a : v) m = std::max(m, std::fabs(a));
  return m;
}

void validate_weights(const std::vector<double>& w) {
  if (w.empty()) throw InputError("dimension must be at least 1");
  for (double v : w) {
    if (!std::isfinite(v) || !(v > 0.0)) throw InputError("weights must be finite and > 0");
  }
}

Point2 as_point(const Vector& x) { return {x[0], x[1]}; }

// Weighted power sum with the largest magnitude factored out so that
// homogeneity survives extreme scales.
double scaled_pnorm(std::span<const double> w, std::span<const double> x, double p) {
  const double scale = max_abs(x);
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += w[k] * std::pow(std::fabs(x[k]) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

struct GaugeSolution {
  DualFunctional rho;
  double residual;
};

// Norming functional of a gauge: find the direction phi whose supporting
// line touches the boundary at x, by Newton on theta*(phi) - theta_x where
// theta*(phi) comes from the body's support query. Starts from the normal of
// the parametrized boundary at x.
GaugeSolution solve_gauge(const NormModel& m, const Vector& x) {
  const ConvexBody& body = m.body();
  const SpaceTolerances& tol = m.tolerances();
  const Point2 v = as_point(x);
  const double theta_x = body.angle_of(v);
  const Point2 n0 = body.outward_normal(theta_x);
  double phi = std::atan2(n0.y, n0.x);
  double residual = INFINITY;
  for (int it = 0; it <= tol.max_iterations; ++it) {
    const Point2 u{std::cos(phi), std::sin(phi)};
    const double theta_star = body.support_angle(u, theta_x);
    residual = std::fabs(wrap_difference(theta_star - theta_x));
    if (residual <= tol.solver_residual) {
      const Point2 touch = body.point(theta_x);
      const double level = dot(u, touch);
      if (!(level > 0.0)) throw NumericError("gauge duality map: degenerate support level", residual);
      return {DualFunctional{u.x / level, u.y / level}, residual};
    }
    if (it == tol.max_iterations) break;
    const Point2 du{-u.y, u.x};
    const double slope =
        -dot(du, body.tangent(theta_star)) / dot(u, body.second_derivative(theta_star));
    const double step = wrap_difference(theta_star - theta_x) / slope;
    if (!std::isfinite(step)) break;
    phi -= step;
  }
  throw NumericError("gauge duality map did not converge", residual);
}

// Canonical half-plane representative, so rho(-x) = -rho(x) holds exactly.
bool in_canonical_half(const Vector& x) { return x[1] > 0.0 || (x[1] == 0.0 && x[0] > 0.0); }

GaugeSolution gauge_functional(const NormModel& m, const Vector& x) {
  if (in_canonical_half(x)) return solve_gauge(m, x);
  GaugeSolution s = solve_gauge(m, -x);
  return {-s.rho, s.residual};
}

}  // namespace

NormModel::NormModel(NormKind kind, double p, std::vector<double> weights,
                     std::shared_ptr<const ConvexBody> body, SpaceTolerances tol)
    : kind_(kind), p_(p), weights_(std::move(weights)), body_(std::move(body)), tol_(tol) {}

NormModel NormModel::pnorm(double p, std::vector<double> weights) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw InputError("p must lie in the open interval (1, inf), got " + short_number(p));
  }
  validate_weights(weights);
  if (p == 2.0) return euclidean(std::move(weights));
  return NormModel(NormKind::PNorm, p, std::move(weights), nullptr, {});
}

NormModel NormModel::pnorm(double p, std::size_t dim) {
  return pnorm(p, std::vector<double>(dim, 1.0));
}

NormModel NormModel::euclidean(std::size_t dim) {
  return euclidean(std::vector<double>(dim, 1.0));
}

NormModel NormModel::euclidean(std::vector<double> weights) {
  validate_weights(weights);
  return NormModel(NormKind::Euclidean, 2.0, std::move(weights), nullptr, {});
}

NormModel NormModel::gauge(ConvexBody body, SpaceTolerances tol) {
  if (body.anchor() != Point2{}) throw InputError("gauge body must be anchored at the origin");
  if (!body.centrally_symmetric()) throw InputError("gauge body must be origin-symmetric");
  if (!(tol.numeric > 0.0) || !(tol.solver_residual >= 0.0) || tol.max_iterations < 0) {
    throw InputError("gauge tolerances must be non-negative");
  }
  return NormModel(NormKind::Gauge, 0.0, std::vector<double>(2, 1.0),
                   std::make_shared<const ConvexBody>(std::move(body)), tol);
}

bool NormModel::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

const ConvexBody& NormModel::body() const {
  if (!body_) throw InputError("norm model has no body");
  return *body_;
}

std::string NormModel::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case NormKind::PNorm:
      os << "pnorm(p=" << p_ << ", dim=" << dim() << (unit_weights() ? "" : ", weighted") << ")";
      break;
    case NormKind::Euclidean:
      os << "euclidean(dim=" << dim() << (unit_weights() ? "" : ", weighted") << ")";
      break;
    case NormKind::Gauge:
      os << "gauge(" << body_->describe() << ")";
      break;
  }
  return os.str();
}

double norm(const NormModel& m, const Vector& x) {
  require_same_dim(m.dim(), x.dim());
  switch (m.kind()) {
    case NormKind::PNorm:
      return scaled_pnorm(m.weights(), x.span(), m.p());
    case NormKind::Euclidean: {
      const double scale = max_abs(x.span());
      if (scale == 0.0) return 0.0;
      const Vector y = (1.0 / scale) * x;
      return scale * std::sqrt(kernels::weighted_dot(m.weights(), y.span(), y.span()));
    }
    case NormKind::Gauge:
      return m.body().gauge(as_point(x));
  }
  return 0.0;
}

DualFunctional norming_functional(const NormModel& m, const Vector& x) {
  require_same_dim(m.dim(), x.dim());
  if (x.is_zero()) throw InputError("the zero vector has no norming functional");
  const std::vector<double>& w = m.weights();
  switch (m.kind()) {
    case NormKind::PNorm: {
      const double n = norm(m, x);
      std::vector<double> g(x.dim());
      for (std::size_t k = 0; k < g.size(); ++k) {
        g[k] = w[k] * sign(x[k]) * std::pow(std::fabs(x[k]) / n, m.p() - 1.0);
      }
      return DualFunctional(std::move(g));
    }
    case NormKind::Euclidean: {
      const double n = norm(m, x);
      std::vector<double> g(x.dim());
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = w[k] * (x[k] / n);
      return DualFunctional(std::move(g));
    }
    case NormKind::Gauge:
      return gauge_functional(m, x).rho;
  }
  return DualFunctional::zeros(x.dim());
}

double norming_residual(const NormModel& m, const Vector& x) {
  require_same_dim(m.dim(), x.dim());
  if (x.is_zero()) throw InputError("the zero vector has no norming functional");
  if (m.kind() != NormKind::Gauge) return 0.0;
  return gauge_functional(m, x).residual;
}

double dual_pair(const DualFunctional& rho, const Vector& y) {
  require_same_dim(rho.dim(), y.dim());
  return kernels::dot(rho.span(), y.span());
}

double dual_norm(const NormModel& m, const DualFunctional& rho) {
  require_same_dim(m.dim(), rho.dim());
  if (rho.is_zero()) return 0.0;
  const std::vector<double>& w = m.weights();
  switch (m.kind()) {
    case NormKind::PNorm: {
      // Holder with respect to the weighted counting measure: rho_k = w_k beta_k,
      // dual norm = (sum_k w_k |beta_k|^q)^(1/q).
      std::vector<double> beta(rho.dim());
      for (std::size_t k = 0; k < beta.size(); ++k) beta[k] = rho[k] / w[k];
      return scaled_pnorm(w, beta, m.q());
    }
    case NormKind::Euclidean: {
      std::vector<double> beta(rho.dim());
      for (std::size_t k = 0; k < beta.size(); ++k) beta[k] = rho[k] / w[k];
      return scaled_pnorm(w, beta, 2.0);
    }
    case NormKind::Gauge:
      return m.body().support_value({rho[0], rho[1]});
  }
  return 0.0;
}

Vector normalize(const NormModel& m, const Vector& x) {
  const double n = norm(m, x);
  if (n == 0.0) throw InputError("cannot normalize the zero vector");
  return (1.0 / n) * x;
}

Vector random_unit_vector(const NormModel& m, Rng& rng) {
  std::vector<double> c(m.dim());
  for (;;) {
    for (double& v : c) v = rng.uniform(-1.0, 1.0);
    if (max_abs(c) >= 1e-3) break;
  }
  return normalize(m, Vector(c));
}

StrictConvexityReport certify_strict_convexity(const NormModel& m, std::size_t n_samples,
                                               std::uint64_t seed) {
  if (n_samples == 0) throw InputError("n_samples must be at least 1");
  Rng rng(seed);
  StrictConvexityReport rep;
  rep.samples = n_samples;
  rep.min_margin = INFINITY;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const Vector x = random_unit_vector(m, rng);
    Vector y = random_unit_vector(m, rng);
    while (kernels::max_abs_diff(x.span(), y.span()) < 1e-6) y = random_unit_vector(m, rng);
    double t = rng.uniform();
    while (t == 0.0) t = rng.uniform();
    const double margin = 1.0 - norm(m, Vector::combine(t, x, 1.0 - t, y));
    rep.min_margin = std::min(rep.min_margin, margin);
    if (!(margin > 0.0)) ++rep.failures;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

SmoothnessReport smoothness_at(const NormModel& m, const Vector& unit_x, double h) {
  if (!(h > 0.0)) throw InputError("finite-difference step must be > 0");
  const DualFunctional rho = norming_functional(m, unit_x);
  const double eps = std::numeric_limits<double>::epsilon();
  const double wmax = *std::max_element(m.weights().begin(), m.weights().end());
  const double p = m.p();
  double curvature = 1.0;
  if (m.kind() == NormKind::PNorm) curvature = std::max(1.0, (p - 1.0) * (p - 1.0));
  if (m.kind() == NormKind::Gauge) curvature = 10.0;
  const double base = wmax * (10.0 * curvature * h * h + 100.0 * eps / h) +
                      (m.kind() == NormKind::Gauge ? 1e-2 * m.tolerances().numeric : 0.0);

  SmoothnessReport rep;
  rep.samples = 1;
  std::vector<double> shifted(unit_x.coords());
  for (std::size_t k = 0; k < unit_x.dim(); ++k) {
    shifted[k] = unit_x[k] + h;
    const double up = norm(m, Vector(shifted));
    shifted[k] = unit_x[k] - h;
    const double down = norm(m, Vector(shifted));
    shifted[k] = unit_x[k];
    const double fd = (up - down) / (2.0 * h);
    double tol = base;
    if (m.kind() == NormKind::PNorm && p < 3.0) {
      // The third derivative carries |x_k|^(p-3); near zero the error is
      // bounded by the Holder modulus h^(p-1) instead.
      const double a = std::fabs(unit_x[k]);
      const double near_axis = a == 0.0 ? INFINITY : 2.0 * h * h * std::pow(a, p - 3.0);
      tol += wmax * std::min(near_axis, 4.0 * std::pow(h, p - 1.0));
    }
    const double dev = std::fabs(fd - rho[k]);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    rep.max_ratio = std::max(rep.max_ratio, dev / tol);
    if (!(dev <= tol)) ++rep.failures;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

SmoothnessReport certify_smoothness(const NormModel& m, std::size_t n_samples, double h,
                                    std::uint64_t seed) {
  if (n_samples == 0) throw InputError("n_samples must be at least 1");
  Rng rng(seed);
  SmoothnessReport rep;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SmoothnessReport one = smoothness_at(m, random_unit_vector(m, rng), h);
    rep.samples += 1;
    rep.max_deviation = std::max(rep.max_deviation, one.max_deviation);
    rep.max_ratio = std::max(rep.max_ratio, one.max_ratio);
    if (!one.pass) ++rep.failures;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

}  // namespace genspin
