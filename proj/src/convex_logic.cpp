#include "genspin/convex_logic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "genspin/errors.hpp"
#include "genspin/rng.hpp"
#include "genspin/spin_factor.hpp"

namespace genspin {

BoundaryPoint boundary_point(const ConvexBody& body, double theta) {
  if (!std::isfinite(theta)) throw InputError("boundary angle must be finite");
  const double t = wrap_angle(theta);
  return {t, body.point(t)};
}

Point2 outward_normal(const ConvexBody& body, const BoundaryPoint& w) {
  return body.outward_normal(w.theta);
}

BoundaryPoint antipodal(const ConvexBody& body, const BoundaryPoint& w) {
  const Point2 u = outward_normal(body, w);
  const double guess = wrap_angle(w.theta + std::numbers::pi);
  return boundary_point(body, body.support_angle(-u, guess));
}

AffineAtom affine_atom(const ConvexBody& body, const BoundaryPoint& w) {
  const Point2 u = outward_normal(body, w);
  const BoundaryPoint opposite = antipodal(body, w);
  const AffineAtom e{u, dot(u, w.coords), dot(u, opposite.coords)};
  if (!(e.hi - e.lo > 0.0)) {
    throw NumericError("degenerate slab for affine atom", e.hi - e.lo);
  }
  return e;
}

double evaluate(const AffineAtom& e, Point2 v) { return (dot(e.normal, v) - e.lo) / (e.hi - e.lo); }

double tp_convex(const ConvexBody& body, const BoundaryPoint& w1, const BoundaryPoint& w2) {
  return evaluate(affine_atom(body, w2), w1.coords);
}

double eq6_defect_convex(const ConvexBody& body, const BoundaryPoint& w1,
                         const BoundaryPoint& w2) {
  const AffineAtom e2 = affine_atom(body, w2);
  const BoundaryPoint w1c = antipodal(body, w1);
  return std::fabs(evaluate(e2, w1.coords) + evaluate(e2, w1c.coords) - 1.0);
}

Vector dual_atom_direction(const ConvexBody& q_ball, const NormModel& p_model,
                           const BoundaryPoint& w) {
  const NormModel q_model = NormModel::pnorm(q_ball.parameter(), p_model.dim());
  const DualFunctional x = norming_functional(q_model, Vector{w.coords.x, w.coords.y});
  return Vector(x.coords());
}

CorrespondenceReport duality_correspondence_check(const ConvexBody& q_ball, const NormModel& p_model,
                                                  std::size_t n_pairs, std::uint64_t seed,
                                                  double tolerance) {
  if (q_ball.kind() != BodyKind::PBall && q_ball.kind() != BodyKind::Disk) {
    throw InputError("duality correspondence needs a p-ball body");
  }
  if (p_model.dim() != 2 || p_model.kind() == NormKind::Gauge || !p_model.unit_weights()) {
    throw InputError("duality correspondence needs an unweighted planar l^p model");
  }
  const double q = q_ball.kind() == BodyKind::Disk ? 2.0 : q_ball.parameter();
  const double p = p_model.p();
  if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw InputError("exponents are not conjugate: 1/p + 1/q != 1");
  }
  const NormModel q_model = NormModel::pnorm(q, 2);
  const SpinFactor spin(p_model);
  auto atom_for = [&](const BoundaryPoint& w) {
    const DualFunctional x = norming_functional(q_model, Vector{w.coords.x, w.coords.y});
    return spin.atom(Vector(x.coords()));
  };

  Rng rng(seed);
  CorrespondenceReport rep;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const BoundaryPoint w1 = boundary_point(q_ball, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const BoundaryPoint w2 = boundary_point(q_ball, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const double convex = tp_convex(q_ball, w1, w2);
    const double algebraic = spin.transition_probability(atom_for(w2), atom_for(w1));
    rep.max_deviation = std::max(rep.max_deviation, std::fabs(convex - algebraic));
    ++rep.pairs;
  }
  rep.pass = rep.max_deviation <= tolerance;
  return rep;
}

Eq6Search search_eq6_violation(const ConvexBody& body, std::size_t n) {
  if (n == 0) throw InputError("search grid must be nonempty");
  std::vector<BoundaryPoint> pts;
  std::vector<BoundaryPoint> opposite;
  std::vector<AffineAtom> atoms;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(boundary_point(body, 2.0 * std::numbers::pi * static_cast<double>(i) /
                                           static_cast<double>(n)));
    opposite.push_back(antipodal(body, pts.back()));
    atoms.push_back(affine_atom(body, pts.back()));
  }
  Eq6Search best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d =
          std::fabs(evaluate(atoms[j], pts[i].coords) + evaluate(atoms[j], opposite[i].coords) - 1.0);
      if (d > best.max_defect) best = {d, pts[i].theta, pts[j].theta};
    }
  }
  return best;
}

}  // namespace genspin
