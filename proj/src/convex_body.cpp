#include "genspin/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "genspin/errors.hpp"
#include "genspin/kernels.hpp"

namespace genspin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |v|^e with the limits 0^e = 0 (e > 0), 1 (e == 0), +inf (e < 0).
double pow_abs(double v, double e) {
  const double a = std::fabs(v);
  if (a == 0.0) return e > 0.0 ? 0.0 : (e == 0.0 ? 1.0 : INFINITY);
  return std::pow(a, e);
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

RadialJet pball_jet(double p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double S = pow_abs(c, p) + pow_abs(s, p);
  const double A = sign(c) * pow_abs(c, p - 1.0);
  const double B = sign(s) * pow_abs(s, p - 1.0);
  const double dS = p * (B * c - A * s);
  // |c|^(p-2) s^2 and |s|^(p-2) c^2; each product vanishes on the axis where
  // its second factor is zero, and is unbounded on the other axis when p < 2.
  const double tc = (s == 0.0) ? 0.0 : pow_abs(c, p - 2.0) * s * s;
  const double ts = (c == 0.0) ? 0.0 : pow_abs(s, p - 2.0) * c * c;
  const double ddS = p * ((p - 1.0) * (tc + ts) - S);
  const double r = std::pow(S, -1.0 / p);
  const double dr = -(1.0 / p) * std::pow(S, -1.0 / p - 1.0) * dS;
  const double ddr = -(1.0 / p) * ((-1.0 / p - 1.0) * std::pow(S, -1.0 / p - 2.0) * dS * dS +
                                   std::pow(S, -1.0 / p - 1.0) * ddS);
  return {r, dr, ddr};
}

}  // namespace

double length(Point2 a) { return std::hypot(a.x, a.y); }

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double wrap_difference(double dtheta) {
  double d = std::fmod(dtheta, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  if (d > std::numbers::pi) d -= kTwoPi;
  return d;
}

// Periodic cubic spline through equally spaced samples on [0, 2pi).
struct ConvexBody::Spline {
  std::vector<double> y;
  std::vector<double> m;  // second derivatives at the knots
  double h;

  explicit Spline(std::vector<double> values) : y(std::move(values)) {
    const std::size_t n = y.size();
    h = kTwoPi / static_cast<double>(n);
    // Cyclic system m[i-1] + 4 m[i] + m[i+1] = rhs[i], solved by
    // Sherman-Morrison around a plain tridiagonal sweep.
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double prev = y[(i + n - 1) % n];
      const double next = y[(i + 1) % n];
      rhs[i] = 6.0 * (next - 2.0 * y[i] + prev) / (h * h);
    }
    const double alpha = 1.0;  // corner entries
    const double beta = 1.0;
    const double gamma = -4.0;
    std::vector<double> diag(n, 4.0);
    diag[0] = 4.0 - gamma;
    diag[n - 1] = 4.0 - alpha * beta / gamma;
    auto solve = [&](const std::vector<double>& r) {
      std::vector<double> c(n), d(n), x(n);
      c[0] = 1.0 / diag[0];
      d[0] = r[0] / diag[0];
      for (std::size_t i = 1; i < n; ++i) {
        const double denom = diag[i] - c[i - 1];
        c[i] = 1.0 / denom;
        d[i] = (r[i] - d[i - 1]) / denom;
      }
      x[n - 1] = d[n - 1];
      for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
      return x;
    };
    const std::vector<double> x = solve(rhs);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    const std::vector<double> z = solve(u);
    const double fact =
        (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
    m.resize(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = x[i] - fact * z[i];
  }

  RadialJet eval(double theta) const {
    const std::size_t n = y.size();
    const double t = wrap_angle(theta);
    auto i = static_cast<std::size_t>(std::floor(t / h));
    if (i >= n) i = n - 1;
    const std::size_t j = (i + 1) % n;
    const double b = (t - static_cast<double>(i) * h) / h;
    const double a = 1.0 - b;
    const double r = a * y[i] + b * y[j] + ((a * a * a - a) * m[i] + (b * b * b - b) * m[j]) * h * h / 6.0;
    const double dr = (y[j] - y[i]) / h - (3.0 * a * a - 1.0) / 6.0 * h * m[i] +
                      (3.0 * b * b - 1.0) / 6.0 * h * m[j];
    const double ddr = a * m[i] + b * m[j];
    return {r, dr, ddr};
  }
};

ConvexBody::ConvexBody(BodyKind kind, double param, std::vector<double> table, Point2 anchor)
    : kind_(kind), param_(param), table_(std::move(table)), anchor_(anchor) {
  if (kind_ == BodyKind::Custom) spline_ = std::make_shared<const Spline>(table_);
  build_and_certify();
}

ConvexBody ConvexBody::disk() { return ConvexBody(BodyKind::Disk, 0.0, {}, {}); }

ConvexBody ConvexBody::pball(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InputError("p-ball exponent must lie in (1, inf), got " + short_number(p));
  }
  return ConvexBody(BodyKind::PBall, p, {}, {});
}

ConvexBody ConvexBody::limacon(double eps) {
  if (!(eps >= 0.0) || !(eps < 1.0)) {
    throw InputError("limacon eps must lie in [0, 1), got " + short_number(eps));
  }
  return ConvexBody(BodyKind::Limacon, eps, {}, {});
}

ConvexBody ConvexBody::custom(std::vector<double> r_table, Point2 anchor) {
  if (r_table.size() < 8) throw InputError("custom body needs at least 8 radial samples");
  for (double r : r_table) {
    if (!std::isfinite(r) || !(r > 0.0)) throw InputError("custom radii must be finite and > 0");
  }
  if (!std::isfinite(anchor.x) || !std::isfinite(anchor.y)) {
    throw InputError("custom anchor must be finite");
  }
  return ConvexBody(BodyKind::Custom, 0.0, std::move(r_table), anchor);
}

std::string ConvexBody::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case BodyKind::Disk:
      os << "disk";
      break;
    case BodyKind::PBall:
      os << "pball(p=" << param_ << ")";
      break;
    case BodyKind::Limacon:
      os << "limacon(eps=" << param_ << ")";
      break;
    case BodyKind::Custom:
      os << "custom(" << table_.size() << " samples)";
      break;
  }
  return os.str();
}

RadialJet ConvexBody::radial(double theta) const {
  switch (kind_) {
    case BodyKind::Disk:
      return {1.0, 0.0, 0.0};
    case BodyKind::PBall:
      return pball_jet(param_, theta);
    case BodyKind::Limacon:
      return {1.0 + param_ * std::cos(theta), -param_ * std::sin(theta),
              -param_ * std::cos(theta)};
    case BodyKind::Custom:
      return spline_->eval(theta);
  }
  return {};
}

Point2 ConvexBody::point(double theta) const {
  const double r = radial(theta).r;
  return {anchor_.x + r * std::cos(theta), anchor_.y + r * std::sin(theta)};
}

Point2 ConvexBody::tangent(double theta) const {
  const RadialJet j = radial(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {j.dr * c - j.r * s, j.dr * s + j.r * c};
}

Point2 ConvexBody::second_derivative(double theta) const {
  const RadialJet j = radial(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {j.ddr * c - 2.0 * j.dr * s - j.r * c, j.ddr * s + 2.0 * j.dr * c - j.r * s};
}

Point2 ConvexBody::outward_normal(double theta) const {
  const Point2 t = tangent(theta);
  const double len = length(t);
  return {t.y / len, -t.x / len};
}

double ConvexBody::angle_of(Point2 v) const {
  return wrap_angle(std::atan2(v.y - anchor_.y, v.x - anchor_.x));
}

double ConvexBody::gauge(Point2 v) const {
  const Point2 d = v - anchor_;
  const double len = length(d);
  if (len == 0.0) return 0.0;
  return len / radial(angle_of(v)).r;
}

void ConvexBody::build_and_certify() {
  const std::size_t n = kGridPoints;
  const double h = kTwoPi / static_cast<double>(n);
  xs_.resize(n);
  ys_.resize(n);
  std::vector<double> kappa(n);
  std::vector<double> normal_angle(n);
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = h * static_cast<double>(i);
    const RadialJet j = radial(theta);
    if (!std::isfinite(j.r) || !std::isfinite(j.dr) || !(j.r > 0.0)) finite = false;
    xs_[i] = anchor_.x + j.r * std::cos(theta);
    ys_[i] = anchor_.y + j.r * std::sin(theta);
    kappa[i] = j.r * j.r + 2.0 * j.dr * j.dr - j.r * j.ddr;
    const Point2 nrm = outward_normal(theta);
    normal_angle[i] = std::atan2(nrm.y, nrm.x);
  }

  BodyCertificate cert;
  cert.grid_points = n;
  cert.min_curvature_proxy = INFINITY;
  bool nonneg = true;
  std::vector<bool> near_zero(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = kappa[i];
    const double scale = std::max(1.0, xs_[i] * xs_[i] + ys_[i] * ys_[i]);
    if (std::isnan(k) || k < -1e-12 * scale) nonneg = false;
    if (!std::isnan(k)) cert.min_curvature_proxy = std::min(cert.min_curvature_proxy, k);
    if (k <= 1e-12 * scale) {
      near_zero[i] = true;
      ++cert.near_zero_curvature_points;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (near_zero[i] && near_zero[(i + 1) % n]) cert.isolated_zeros = false;
    const double turn = std::fabs(wrap_difference(normal_angle[(i + 1) % n] - normal_angle[i]));
    if (std::isnan(turn)) {
      finite = false;
    } else {
      cert.max_normal_turn = std::max(cert.max_normal_turn, turn);
    }
  }
  cert.smooth = finite && cert.max_normal_turn <= 0.2;
  cert.strictly_convex = finite && nonneg && cert.isolated_zeros;
  cert_ = cert;
  if (!cert.smooth || !cert.strictly_convex) {
    std::ostringstream os;
    os << "body " << describe() << " failed certification: min curvature proxy "
       << cert.min_curvature_proxy << ", adjacent near-zero curvature "
       << (cert.isolated_zeros ? "no" : "yes") << ", max normal turn " << cert.max_normal_turn;
    throw InputError(os.str());
  }

  symmetric_ = true;
  const double ax = anchor_.x;
  const double ay = anchor_.y;
  for (std::size_t i = 0; i < n / 2 && symmetric_; ++i) {
    const double dx = (xs_[i] - ax) + (xs_[i + n / 2] - ax);
    const double dy = (ys_[i] - ay) + (ys_[i + n / 2] - ay);
    const double scale = std::hypot(xs_[i] - ax, ys_[i] - ay);
    if (std::hypot(dx, dy) > 1e-12 * std::max(1.0, scale)) symmetric_ = false;
  }
}

double ConvexBody::refine_support(Point2 u, double lo, double hi, double start) const {
  auto g = [&](double t) { return dot(u, tangent(t)); };
  const double h = kTwoPi / static_cast<double>(kGridPoints);
  // <u, omega> is unimodal along the boundary; widen until the derivative
  // brackets its zero.
  for (int widen = 0; widen < 8 && g(lo) < 0.0; ++widen) lo -= h;
  for (int widen = 0; widen < 8 && g(hi) > 0.0; ++widen) hi += h;
  double theta = start;
  double gv = g(theta);
  for (int it = 0; it < kSolverMaxIterations; ++it) {
    if (gv == 0.0) return wrap_angle(theta);
    if (gv > 0.0) {
      lo = theta;
    } else {
      hi = theta;
    }
    const double gp = dot(u, second_derivative(theta));
    double next = theta - gv / gp;
    if (!std::isfinite(next) || !(gp < 0.0) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::fabs(next - theta) < kSolverStepTol || hi - lo < 1e-14) return wrap_angle(next);
    theta = next;
    gv = g(theta);
  }
  throw NumericError("support query on " + describe() + " did not converge", std::fabs(gv));
}

double ConvexBody::support_angle(Point2 u) const {
  if (!std::isfinite(u.x) || !std::isfinite(u.y) || (u.x == 0.0 && u.y == 0.0)) {
    throw InputError("support direction must be finite and nonzero");
  }
  const std::size_t i = kernels::argmax_projection(xs_, ys_, u.x, u.y);
  const double h = kTwoPi / static_cast<double>(kGridPoints);
  const double theta = h * static_cast<double>(i);
  return refine_support(u, theta - h, theta + h, theta);
}

double ConvexBody::support_angle(Point2 u, double warm_start) const {
  const double h = kTwoPi / static_cast<double>(kGridPoints);
  const double lo = warm_start - h;
  const double hi = warm_start + h;
  if (dot(u, tangent(lo)) >= 0.0 && dot(u, tangent(hi)) <= 0.0) {
    return refine_support(u, lo, hi, warm_start);
  }
  return support_angle(u);
}

double ConvexBody::support_value(Point2 u) const { return dot(u, point(support_angle(u))); }

}  // namespace genspin
