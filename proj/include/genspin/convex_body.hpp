#pragma once

// Smooth strictly convex compact planar bodies in radial form
//   omega(theta) = anchor + r(theta) (cos theta, sin theta).
//
// Construction certifies the body numerically: the polar curvature proxy
// r^2 + 2 r'^2 - r r'' must be nonnegative on a dense grid, with zeros only
// at isolated grid points (no flat boundary segment), and the outward normal
// must turn continuously (no corner). A body that fails is rejected with
// InputError.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace genspin {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend Point2 operator*(double t, Point2 a) { return {t * a.x, t * a.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double length(Point2 a);

enum class BodyKind { Disk, PBall, Limacon, Custom };

// r and its first two derivatives in theta.
struct RadialJet {
  double r;
  double dr;
  double ddr;
};

struct BodyCertificate {
  std::size_t grid_points = 0;
  double min_curvature_proxy = 0.0;
  std::size_t near_zero_curvature_points = 0;
  bool isolated_zeros = true;
  double max_normal_turn = 0.0;  // radians between neighbouring grid normals
  bool smooth = false;
  bool strictly_convex = false;
};

class ConvexBody {
 public:
  static constexpr std::size_t kGridPoints = 4096;
  static constexpr double kSolverStepTol = 1e-12;
  static constexpr int kSolverMaxIterations = 100;

  static ConvexBody disk();
  static ConvexBody pball(double p);
  static ConvexBody limacon(double eps = 0.3);
  // Equally spaced samples of r over [0, 2pi); interpolated by a periodic cubic spline.
  static ConvexBody custom(std::vector<double> r_table, Point2 anchor = {});

  BodyKind kind() const noexcept { return kind_; }
  // p for PBall, eps for Limacon, unused otherwise.
  double parameter() const noexcept { return param_; }
  const std::vector<double>& r_table() const noexcept { return table_; }
  Point2 anchor() const noexcept { return anchor_; }
  std::string describe() const;
  const BodyCertificate& certificate() const noexcept { return cert_; }

  RadialJet radial(double theta) const;
  Point2 point(double theta) const;
  Point2 tangent(double theta) const;         // d omega / d theta
  Point2 second_derivative(double theta) const;  // d^2 omega / d theta^2
  Point2 outward_normal(double theta) const;  // unit

  // Polar angle of v around the anchor, in [0, 2pi).
  double angle_of(Point2 v) const;
  // Minkowski functional of the body centered at its anchor.
  double gauge(Point2 v) const;

  // Boundary parameter where <u, omega> is maximal: grid bracketing over the
  // stored boundary table, then safeguarded Newton on d/dtheta <u, omega>.
  // Throws NumericError if the refinement does not converge.
  double support_angle(Point2 u) const;
  double support_angle(Point2 u, double warm_start) const;
  // max over the body of <u, .>
  double support_value(Point2 u) const;

  // Symmetric about the anchor on the certification grid (within 1e-12 relative).
  bool centrally_symmetric() const noexcept { return symmetric_; }

  const std::vector<double>& grid_x() const noexcept { return xs_; }
  const std::vector<double>& grid_y() const noexcept { return ys_; }

 private:
  struct Spline;

  ConvexBody(BodyKind kind, double param, std::vector<double> table, Point2 anchor);
  void build_and_certify();
  double refine_support(Point2 u, double lo, double hi, double start) const;

  BodyKind kind_;
  double param_;
  std::vector<double> table_;
  Point2 anchor_;
  std::shared_ptr<const Spline> spline_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  BodyCertificate cert_;
  bool symmetric_ = false;
};

// Wrap an angle into [0, 2pi).
double wrap_angle(double theta);
// Wrap an angle difference into (-pi, pi].
double wrap_difference(double dtheta);

}  // namespace genspin
