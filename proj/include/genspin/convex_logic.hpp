#pragma once

// Binary quantum logic of a smooth strictly convex planar body K. The logic's
// atoms are the affine functions e_w on K that equal 1 at a boundary point w
// and 0 at its antipodal point w' (where the parallel supporting line
// touches). States are point evaluations, so the transition probability
// between atoms is P(e_w2 | e_w1) = e_w2(w1).

#include <cstddef>
#include <cstdint>

#include "genspin/convex_body.hpp"
#include "genspin/linalg_space.hpp"

namespace genspin {

struct BoundaryPoint {
  double theta;
  Point2 coords;
};

BoundaryPoint boundary_point(const ConvexBody& body, double theta);

// Unit outward normal of the (unique) supporting line at w.
Point2 outward_normal(const ConvexBody& body, const BoundaryPoint& w);

// Boundary point where <u_w, .> is minimal over K.
BoundaryPoint antipodal(const ConvexBody& body, const BoundaryPoint& w);

struct AffineAtom {
  Point2 normal;
  double hi;  // max over K of <normal, .>, attained at w
  double lo;  // min over K of <normal, .>, attained at w'
};

AffineAtom affine_atom(const ConvexBody& body, const BoundaryPoint& w);

// (<u, v> - lo) / (hi - lo)
double evaluate(const AffineAtom& e, Point2 v);

// P(e_w2 | e_w1) = e_w2(w1)
double tp_convex(const ConvexBody& body, const BoundaryPoint& w1, const BoundaryPoint& w2);

// |P(e_w2 | e_w1) + P(e_w2 | e_w1') - 1|
double eq6_defect_convex(const ConvexBody& body, const BoundaryPoint& w1,
                         const BoundaryPoint& w2);

struct CorrespondenceReport {
  std::size_t pairs = 0;
  double max_deviation = 0.0;
  bool pass = false;
};

// For K the q-ball and X = l^p with 1/p + 1/q = 1: each boundary point w of K
// is matched with the spin-factor atom whose direction is the q-norming
// functional of w (so point evaluation at w is that atom's state), and
// tp_convex is compared with the spin-factor transition probability.
// Pairs are seeded random boundary angles; tolerance decides pass.
CorrespondenceReport duality_correspondence_check(const ConvexBody& q_ball, const NormModel& p_model,
                                                  std::size_t n_pairs, std::uint64_t seed,
                                                  double tolerance);

// The atom direction in X = l^p (unit weights) matched with boundary point w of the q-ball.
Vector dual_atom_direction(const ConvexBody& q_ball, const NormModel& p_model,
                           const BoundaryPoint& w);

struct Eq6Search {
  double max_defect = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

// Exhaustive scan of eq6_defect_convex over an n x n grid of boundary angles.
Eq6Search search_eq6_violation(const ConvexBody& body, std::size_t n);

}  // namespace genspin
