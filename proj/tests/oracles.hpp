#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical paths: norms, duality maps and body geometry are recomputed
// from their defining formulas, and convex-body extrema are found by brute
// force over a dense boundary grid.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

inline double lp_norm(const std::vector<double>& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return std::pow(s, 1.0 / p);
}

// (sign(a_k) |a_k|^(p-1)) for a unit vector a of l^p.
inline std::vector<double> lp_dual(const std::vector<double>& x, double p) {
  std::vector<double> b(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) b[k] = sgn(x[k]) * std::pow(std::fabs(x[k]), p - 1.0);
  return b;
}

// P(f|e) = (1 + sum_k sign(a_k)|a_k|^(p-1) b_k) / 2 for unit x = (a_k), y = (b_k).
inline double lp_tp(const std::vector<double>& x, const std::vector<double>& y, double p) {
  const std::vector<double> rho = lp_dual(x, p);
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += rho[k] * y[k];
  return 0.5 * (1.0 + s);
}

// l^p transition curves for e = (1, 0), f = (b, .).
inline double figure1_forward(double beta) { return 0.5 * (1.0 + beta); }
inline double figure1_backward(double beta, double p) {
  return 0.5 * (1.0 + sgn(beta) * std::pow(std::fabs(beta), p - 1.0));
}

struct Elem {
  std::vector<double> x;
  double s;
};

// (x (+) s) o (y (+) t) = (t x + s y) (+) (<x|y> + s t)
inline Elem spin_product(const Elem& a, const Elem& b) {
  Elem r{std::vector<double>(a.x.size()), 0.0};
  double ip = 0.0;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    r.x[k] = b.s * a.x[k] + a.s * b.x[k];
    ip += a.x[k] * b.x[k];
  }
  r.s = ip + a.s * b.s;
  return r;
}

// Same product written through the polarization of an arbitrary norm:
// (t x + s y) (+) (s t + (||x+y||^2 - ||x-y||^2) / 4).
inline Elem polarization_product(const Elem& a, const Elem& b,
                                 const std::function<double(const std::vector<double>&)>& nrm) {
  Elem r{std::vector<double>(a.x.size()), 0.0};
  std::vector<double> plus(a.x.size()), minus(a.x.size());
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    r.x[k] = b.s * a.x[k] + a.s * b.x[k];
    plus[k] = a.x[k] + b.x[k];
    minus[k] = a.x[k] - b.x[k];
  }
  const double np = nrm(plus);
  const double nm = nrm(minus);
  r.s = a.s * b.s + 0.25 * (np * np - nm * nm);
  return r;
}

// Dense-grid stand-in for a planar body given by its radial function.
class GridBody {
 public:
  GridBody(std::function<double(double)> radius, std::size_t n = 100000) : radius_(std::move(radius)) {
    xs_.resize(n);
    ys_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      const double r = radius_(t);
      xs_[i] = r * std::cos(t);
      ys_[i] = r * std::sin(t);
    }
  }

  double max_projection(double ux, double uy) const {
    double m = -INFINITY;
    for (std::size_t i = 0; i < xs_.size(); ++i) m = std::max(m, ux * xs_[i] + uy * ys_[i]);
    return m;
  }
  double min_projection(double ux, double uy) const { return -max_projection(-ux, -uy); }

  std::pair<double, double> argmin_projection(double ux, double uy) const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (ux * xs_[i] + uy * ys_[i] < ux * xs_[best] + uy * ys_[best]) best = i;
    }
    return {xs_[best], ys_[best]};
  }

  // Outward unit normal from a central-difference tangent.
  std::pair<double, double> normal(double theta, double h = 1e-6) const {
    auto pt = [&](double t) {
      const double r = radius_(t);
      return std::pair{r * std::cos(t), r * std::sin(t)};
    };
    const auto [x1, y1] = pt(theta + h);
    const auto [x0, y0] = pt(theta - h);
    const double tx = x1 - x0;
    const double ty = y1 - y0;
    const double len = std::hypot(tx, ty);
    return {ty / len, -tx / len};
  }

 private:
  std::function<double(double)> radius_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

inline double limacon_radius(double eps, double t) { return 1.0 + eps * std::cos(t); }
inline double pball_radius(double p, double t) {
  return std::pow(std::pow(std::fabs(std::cos(t)), p) + std::pow(std::fabs(std::sin(t)), p), -1.0 / p);
}

}  // namespace oracle
