#include "genspin/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "genspin/convex_logic.hpp"
#include "genspin/errors.hpp"
#include "genspin/kernels.hpp"
#include "genspin/linalg_space.hpp"
#include "genspin/pillow.hpp"
#include "genspin/rng.hpp"
#include "genspin/spin_factor.hpp"

namespace genspin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Recorder {
 public:
  Recorder(CheckReport& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}

  void at_most(std::string name, double measured, double bound, std::string detail = {}) {
    push(std::move(name), measured, bound, Relation::AtMost, measured <= bound, std::move(detail));
  }
  void at_least(std::string name, double measured, double bound, std::string detail = {}) {
    push(std::move(name), measured, bound, Relation::AtLeast, measured >= bound, std::move(detail));
  }
  void above(std::string name, double measured, double bound, std::string detail = {}) {
    push(std::move(name), measured, bound, Relation::AtLeast, measured > bound, std::move(detail));
  }
  void equal(std::string name, double measured, double expected, bool pass, std::string detail = {}) {
    push(std::move(name), measured, expected, Relation::Equal, pass, std::move(detail));
  }

 private:
  void push(std::string name, double measured, double bound, Relation rel, bool pass,
            std::string detail) {
    rep_.checks.push_back({suite_, std::move(name), measured, bound, rel, pass, std::move(detail)});
  }

  CheckReport& rep_;
  std::string suite_;
};

std::vector<NormModel> space_models() {
  std::vector<NormModel> ms;
  ms.push_back(NormModel::euclidean(3));
  ms.push_back(NormModel::pnorm(1.5, 3));
  ms.push_back(NormModel::pnorm(3.0, 3));
  ms.push_back(NormModel::pnorm(4.0, 2));
  ms.push_back(NormModel::pnorm(3.0, std::vector<double>{1.0, 2.0, 0.5, 3.0}));
  ms.push_back(NormModel::gauge(ConvexBody::pball(3.0)));
  ms.push_back(NormModel::gauge(ConvexBody::disk()));
  return ms;
}

std::vector<NormModel> spin_models() {
  std::vector<NormModel> ms;
  ms.push_back(NormModel::euclidean(1));
  ms.push_back(NormModel::euclidean(3));
  ms.push_back(NormModel::pnorm(1.5, 3));
  ms.push_back(NormModel::pnorm(3.0, 3));
  ms.push_back(NormModel::pnorm(10.0, 3));
  ms.push_back(NormModel::pnorm(3.0, std::vector<double>{1.0, 2.0, 0.5}));
  ms.push_back(NormModel::gauge(ConvexBody::pball(3.0)));
  return ms;
}

Vector random_vector(std::size_t dim, Rng& rng, double lo = -1.0, double hi = 1.0) {
  std::vector<double> c(dim);
  for (double& v : c) v = rng.uniform(lo, hi);
  return Vector(std::move(c));
}

void run_space(Recorder& rec, std::uint64_t seed, const CheckOptions& opts) {
  std::uint64_t stream = 100;
  for (const NormModel& m : space_models()) {
    const std::string label = m.describe();
    Rng rng(derive_seed(seed, stream++));
    double pair_dev = 0.0;
    double dual_dev = 0.0;
    double homog_dev = 0.0;
    double odd_dev = 0.0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const Vector x = random_unit_vector(m, rng);
      const DualFunctional rho = norming_functional(m, x);
      pair_dev = std::max(pair_dev, std::fabs(dual_pair(rho, x) - 1.0));
      dual_dev = std::max(dual_dev, std::fabs(dual_norm(m, rho) - 1.0));
      const Vector y = random_vector(m.dim(), rng);
      const double c = rng.uniform(-4.0, 4.0);
      homog_dev = std::max(homog_dev, std::fabs(norm(m, c * y) - std::fabs(c) * norm(m, y)));
      odd_dev = std::max(odd_dev,
                         kernels::max_abs_diff(norming_functional(m, -x).span(), (-rho).span()));
    }
    const double dtol = m.duality_tolerance();
    rec.at_most(label + ": rho_x(x) = 1", pair_dev, dtol);
    rec.at_most(label + ": dual norm of rho_x = 1", dual_dev, dtol);
    rec.at_most(label + ": norm(c x) = |c| norm(x)", homog_dev, opts.closed_form_tol);
    rec.at_most(label + ": rho_{-x} = -rho_x", odd_dev, opts.closed_form_tol);

    const StrictConvexityReport sc =
        certify_strict_convexity(m, opts.samples, derive_seed(seed, stream++));
    rec.above(label + ": strict convexity min margin", sc.min_margin, 0.0,
              std::to_string(sc.failures) + " failures");
    const SmoothnessReport sm =
        certify_smoothness(m, std::min<std::size_t>(opts.samples, 200), 1e-5,
                           derive_seed(seed, stream++));
    rec.at_most(label + ": smoothness deviation / tolerance", sm.max_ratio, 1.0,
                "max deviation " + short_number(sm.max_deviation));
  }
}

void run_spin(Recorder& rec, std::uint64_t seed, const CheckOptions& opts) {
  std::uint64_t stream = 200;
  for (const NormModel& m : spin_models()) {
    const SpinFactor A(m);
    const std::string label = m.describe();
    const std::size_t d = m.dim();
    Rng rng(derive_seed(seed, stream++));
    auto random_atom = [&] { return A.atom(random_unit_vector(m, rng)); };

    double additivity = 0.0;
    double strong_min = INFINITY;
    double spectral_norm = 0.0;
    std::size_t positivity_mismatch = 0;
    std::size_t square_negative = 0;
    double eq6 = 0.0;
    double sym_max = 0.0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const LogicElement e = random_atom();
      const LogicElement f = random_atom();
      const State mu{rng.uniform() * norming_functional(m, random_unit_vector(m, rng))};
      for (const State& s : {mu, A.trace_state()}) {
        additivity = std::max(additivity, std::fabs(A.eval_state_logic(s, e) +
                                                    A.eval_state_logic(s, A.orthocomplement(e)) -
                                                    1.0));
      }
      if (!A.equal(e, f)) {
        const DualFunctional diff = A.state_of_atom(e).rho - A.state_of_atom(f).rho;
        strong_min = std::min(strong_min, dual_norm(m, diff));
      }
      const double s = rng.uniform(-3.0, 3.0);
      const double t = rng.uniform(-3.0, 3.0);
      const OUElement combo = s * A.element(e) + t * A.element(A.orthocomplement(e));
      spectral_norm = std::max(spectral_norm,
                               std::fabs(A.ou_norm(combo) - std::max(std::fabs(s), std::fabs(t))));
      const OUElement a{random_vector(d, rng), rng.uniform(-2.0, 2.0)};
      const SpectralForm sf = A.spectral_decompose(a);
      if (A.is_positive(a) != (sf.lambda_minus >= -A.tolerances().positivity)) ++positivity_mismatch;
      if (!A.is_positive(A.power(a, 2))) ++square_negative;
      eq6 = std::max(eq6, A.eq6_defect(e, f));
      sym_max = std::max(sym_max, A.symmetry_defect(e, f));
    }
    rec.at_most(label + ": mu(e) + mu(e') = 1", additivity, opts.closed_form_tol);
    rec.above(label + ": distinct atoms have distinct states", strong_min, 0.0);
    rec.at_most(label + ": ||s e + t e'|| = max(|s|,|t|)", spectral_norm, opts.closed_form_tol);
    rec.equal(label + ": positivity iff lambda_- >= 0", static_cast<double>(positivity_mismatch), 0.0,
              positivity_mismatch == 0);
    rec.equal(label + ": a^2 >= 0", static_cast<double>(square_negative), 0.0, square_negative == 0);
    rec.at_most(label + ": P(f|e) + P(f|e') = 1", eq6, opts.closed_form_tol);
    if (m.kind() == NormKind::Euclidean) {
      rec.at_most(label + ": max symmetry defect", sym_max, 1e-10);
    } else {
      rec.above(label + ": max symmetry defect (searched)", sym_max, 0.05);
    }

    // Idempotents of [0, 1] are exactly the extreme points.
    std::size_t idem_mismatch = 0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const LogicElement e = random_atom();
      const double t = rng.uniform();
      std::vector<OUElement> candidates{A.element(e), A.element(A.zero()), A.unit(),
                                        t * A.element(e), OUElement{0.5 * t * e.direction(), 0.5},
                                        OUElement::zero(d) + t * A.unit()};
      for (const OUElement& a : candidates) {
        const OUElement sq = A.power(a, 2);
        const bool idempotent = A.ou_norm(sq - a) <= 1e-9;
        const bool in_interval = A.is_positive(a) && A.is_positive(A.unit() - a);
        if ((idempotent && in_interval) != A.is_extreme_unit_interval(a)) ++idem_mismatch;
      }
    }
    rec.equal(label + ": idempotent in [0,1] iff extreme", static_cast<double>(idem_mismatch), 0.0,
              idem_mismatch == 0);

    const LogicElement e = random_atom();
    const LogicElement f = random_atom();
    const DoubleCountReport dc =
        A.verify_double_count({e, A.orthocomplement(e)}, {f, A.orthocomplement(f)});
    rec.at_most(label + ": double count over {e,e'} and {f,f'}",
                std::fabs(dc.total_by_f - dc.total_by_e), 1e-9,
                short_number(dc.total_by_f) + " vs " + short_number(dc.total_by_e));

    double bilinear = 0.0;
    for (int i = 0; i < 512; ++i) {
      const OUElement a{random_vector(d, rng), rng.uniform(-1.0, 1.0)};
      const OUElement b{random_vector(d, rng), rng.uniform(-1.0, 1.0)};
      const OUElement c{random_vector(d, rng), rng.uniform(-1.0, 1.0)};
      bilinear = std::max(bilinear, A.bilinearity_defect(a, b, c));
    }
    if (m.kind() == NormKind::Euclidean) {
      rec.at_most(label + ": bilinearity defect", bilinear, 1e-10);
    } else if (d > 1) {
      rec.at_least(label + ": bilinearity defect (searched)", bilinear, 1e-3);
    }

    if (m.kind() == NormKind::PNorm && m.unit_weights() && d >= 2) {
      // One-parameter family e = (1,0,...), f = (b, (1-|b|^p)^(1/p), 0, ...).
      const LogicElement e0 = A.atom(Vector::basis(d, 0));
      auto family = [&](double b) {
        std::vector<double> c(d, 0.0);
        c[0] = b;
        c[1] = std::pow(1.0 - std::pow(std::fabs(b), m.p()), 1.0 / m.p());
        return A.atom(Vector(c));
      };
      double point_sym = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double b = -1.0 + 2.0 * i / 200.0;
        point_sym = std::max(point_sym, std::fabs(A.transition_probability(e0, family(b)) +
                                                  A.transition_probability(e0, family(-b)) - 1.0));
      }
      rec.at_most(label + ": P(b) + P(-b) = 1", point_sym, opts.closed_form_tol);
    }
  }
}

void run_convex(Recorder& rec, std::uint64_t seed, const CheckOptions& opts) {
  const std::size_t pairs = std::min<std::size_t>(opts.samples, 200);
  const ConvexBody limacon = ConvexBody::limacon(0.3);
  rec.above("limacon(0.3): curvature proxy minimum", limacon.certificate().min_curvature_proxy, 0.0,
            limacon.certificate().strictly_convex && limacon.certificate().smooth ? "certified"
                                                                                  : "not certified");
  const Eq6Search search = search_eq6_violation(limacon, 128);
  rec.at_least("limacon(0.3): searched eq6 violation", search.max_defect, 0.01,
               "theta1=" + short_number(search.theta1) + " theta2=" + short_number(search.theta2));

  std::vector<ConvexBody> bodies{ConvexBody::disk(), ConvexBody::pball(1.5), ConvexBody::pball(3.0),
                                 ConvexBody::pball(4.0), limacon};
  std::uint64_t stream = 300;
  for (const ConvexBody& K : bodies) {
    Rng rng(derive_seed(seed, stream++));
    const std::string label = K.describe();
    double eq6 = 0.0;
    double complement = 0.0;
    double range_violation = 0.0;
    double diag = 0.0;
    double anti = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const BoundaryPoint w1 = boundary_point(K, rng.uniform(0.0, kTwoPi));
      const BoundaryPoint w2 = boundary_point(K, rng.uniform(0.0, kTwoPi));
      if (K.centrally_symmetric()) eq6 = std::max(eq6, eq6_defect_convex(K, w1, w2));
      const AffineAtom e = affine_atom(K, w1);
      const AffineAtom ec = affine_atom(K, antipodal(K, w1));
      const double t = rng.uniform();
      const Point2 v = t * w2.coords + (1.0 - t) * antipodal(K, w2).coords;
      for (const Point2 p : {v, w2.coords}) {
        complement = std::max(complement, std::fabs(evaluate(e, p) + evaluate(ec, p) - 1.0));
      }
      const double tp = tp_convex(K, w1, w2);
      range_violation = std::max({range_violation, -tp, tp - 1.0});
      diag = std::max(diag, std::fabs(tp_convex(K, w1, w1) - 1.0));
      anti = std::max(anti, std::fabs(tp_convex(K, w1, antipodal(K, w1))));
    }
    if (K.centrally_symmetric()) rec.at_most(label + ": eq6 defect", eq6, 1e-8);
    rec.at_most(label + ": e_w + e_w' = 1 on K", complement, 1e-10);
    rec.at_most(label + ": tp outside [0,1]", range_violation, 1e-12);
    rec.at_most(label + ": tp(w|w) = 1", diag, 1e-10);
    rec.at_most(label + ": tp(w'|w) = 0", anti, 1e-8);
  }

  {
    const ConvexBody disk = ConvexBody::disk();
    const SpinFactor A(NormModel::euclidean(2));
    Rng rng(derive_seed(seed, stream++));
    double dev = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(pairs, 100); ++i) {
      const BoundaryPoint w1 = boundary_point(disk, rng.uniform(0.0, kTwoPi));
      const BoundaryPoint w2 = boundary_point(disk, rng.uniform(0.0, kTwoPi));
      const LogicElement e = A.atom(Vector{w1.coords.x, w1.coords.y});
      const LogicElement f = A.atom(Vector{w2.coords.x, w2.coords.y});
      dev = std::max(dev, std::fabs(tp_convex(disk, w1, w2) - A.transition_probability(f, e)));
    }
    rec.at_most("disk vs euclidean spin factor", dev, 1e-8);
  }
  const CorrespondenceReport corr = duality_correspondence_check(
      ConvexBody::pball(1.5), NormModel::pnorm(3.0, 2), 50, derive_seed(seed, stream++), 1e-6);
  rec.at_most("pball(1.5) vs l^3 spin factor under duality", corr.max_deviation, 1e-6);
}

void run_pillow(Recorder& rec) {
  const PillowReport r = pillow_report();
  auto exact = [&](const std::string& name, Rational got, Rational want) {
    rec.equal(name, got.to_double(), want.to_double(), got == want, got.str() + " vs " + want.str());
  };
  for (PillowAtom f : kPillowVertices) {
    const std::string fk(pillow_name(f));
    exact("P(" + fk + "|e)", pillow_tp(f, PillowAtom::E), Rational(1, 3));
    exact("P(" + fk + "|e')", pillow_tp(f, PillowAtom::EPrime), Rational(1, 3));
    exact("P(e|" + fk + ")", pillow_tp(PillowAtom::E, f), Rational(1, 2));
    exact("P(e'|" + fk + ")", pillow_tp(PillowAtom::EPrime, f), Rational(1, 2));
  }
  exact("sum_k P(f_k|e)", r.sum_vertices_given_e, 1);
  exact("sum_k P(e|f_k)", r.sum_e_given_vertices, Rational(3, 2));
  exact("P(f_k|e) + P(f_k|e')", r.vertex_eq6_sum, Rational(2, 3));
  exact("eq6 defect", r.eq6_defect, Rational(1, 3));
  rec.equal("rows over orthogonal decompositions sum to 1", r.rows_sum_to_one ? 1.0 : 0.0, 1.0,
            r.rows_sum_to_one);
  rec.equal("pillow double count", r.total_by_vertices.to_double(), r.total_by_poles.to_double(),
            r.total_by_vertices != r.total_by_poles && r.total_by_vertices == Rational(3) &&
                r.total_by_poles == Rational(2),
            r.total_by_vertices.str() + " != " + r.total_by_poles.str());
  rec.equal("transition probabilities symmetric", r.symmetric ? 1.0 : 0.0, 0.0, !r.symmetric,
            r.symmetric ? "symmetric" : "non-symmetric");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names{"all", "spin", "convex", "pillow", "space"};
  return names;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = passed();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json cj;
    cj["suite"] = c.suite;
    cj["name"] = c.name;
    cj["measured"] = c.measured;
    cj["relation"] = c.relation == Relation::AtMost ? "<=" : (c.relation == Relation::AtLeast ? ">=" : "==");
    cj["bound"] = c.bound;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j;
}

CheckReport run_checks(std::string_view suite, std::uint64_t seed, const CheckOptions& opts) {
  const auto& names = check_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown check suite \"" + std::string(suite) + "\"");
  }
  CheckReport rep;
  rep.suite = std::string(suite);
  rep.seed = seed;
  const bool all = suite == "all";
  if (all || suite == "space") {
    Recorder rec(rep, "space");
    run_space(rec, seed, opts);
  }
  if (all || suite == "spin") {
    Recorder rec(rep, "spin");
    run_spin(rec, seed, opts);
  }
  if (all || suite == "convex") {
    Recorder rec(rep, "convex");
    run_convex(rec, seed, opts);
  }
  if (all || suite == "pillow") {
    Recorder rec(rep, "pillow");
    run_pillow(rec);
  }
  return rep;
}

}  // namespace genspin
