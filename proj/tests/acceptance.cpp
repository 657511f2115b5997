// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "genspin/commands.hpp"
#include "genspin/convex_logic.hpp"
#include "genspin/linalg_space.hpp"
#include "genspin/pillow.hpp"
#include "genspin/rng.hpp"
#include "genspin/spin_factor.hpp"
#include "oracles.hpp"

using namespace genspin;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<NormModel> all_models() {
  return {NormModel::euclidean(1),
          NormModel::euclidean(3),
          NormModel::euclidean(std::vector<double>{0.5, 1.0, 2.0}),
          NormModel::pnorm(1.5, 3),
          NormModel::pnorm(3.0, 3),
          NormModel::pnorm(10.0, 3),
          NormModel::pnorm(1.3, 4),
          NormModel::pnorm(3.0, std::vector<double>{0.2, 1.0, 3.0, 1.5}),
          NormModel::gauge(ConvexBody::pball(3.0)),
          NormModel::gauge(ConvexBody::pball(1.5)),
          NormModel::gauge(ConvexBody::disk())};
}

OUElement random_element(Rng& rng, std::size_t dim) {
  std::vector<double> x(dim);
  for (double& v : x) v = rng.uniform(-2, 2);
  return {Vector(std::move(x)), rng.uniform(-2, 2)};
}

double max_diff(const OUElement& a, const oracle::Elem& b) {
  double m = std::fabs(a.s - b.s);
  for (std::size_t k = 0; k < a.x.dim(); ++k) m = std::max(m, std::fabs(a.x[k] - b.x[k]));
  return m;
}

Outcome hilbert_symmetry() {
  Rng rng(101);
  double sym = 0.0;
  double eq6 = 0.0;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const SpinFactor f(NormModel::euclidean(dim));
    for (int i = 0; i < 1000; ++i) {
      const LogicElement e = f.atom(random_unit_vector(f.model(), rng));
      const LogicElement g = f.atom(random_unit_vector(f.model(), rng));
      sym = std::max(sym, f.symmetry_defect(e, g));
      eq6 = std::max(eq6, f.eq6_defect(e, g));
    }
  }
  return {sym <= 1e-10 && eq6 <= 1e-12, "max symmetry " + fmt("%.3g", sym) + ", max eq6 " + fmt("%.3g", eq6)};
}

Outcome non_symmetry() {
  bool ok = true;
  std::string detail;
  for (double p : {1.5, 3.0, 10.0}) {
    const SpinFactor f(NormModel::pnorm(p, 2));
    const double beta = 0.5;
    const LogicElement e = f.atom(Vector{1.0, 0.0});
    const LogicElement g = f.atom(Vector{beta, std::pow(1.0 - std::pow(beta, p), 1.0 / p)});
    const double measured = f.symmetry_defect(e, g);
    const double expected = 0.5 * std::fabs(beta - std::pow(beta, p - 1.0));
    const double err = std::fabs(measured - expected);
    ok = ok && err <= 1e-12;
    if (p == 3.0) ok = ok && std::fabs(measured - 0.125) <= 1e-12;
    detail += "p=" + fmt("%g", p) + ": " + fmt("%.12g", measured) + " (err " + fmt("%.2g", err) + ") ";
  }
  return {ok, detail};
}

Outcome figure1_curves() {
  std::ostringstream out;
  const std::vector<double> ps{1.3, 1.5, 2.0, 3.0, 10.0};
  const std::size_t n = 201;
  cli::figure1(ps, n, out);
  std::vector<std::vector<double>> rows;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  if (rows.size() != n) return {false, "wrong row count"};
  bool endpoints = true;
  double point_sym = 0.0;
  double p2 = 0.0;
  double oracle_err = 0.0;
  for (std::size_t c = 0; c < ps.size(); ++c) {
    const std::size_t fwd = 1 + 2 * c;
    const std::size_t bwd = fwd + 1;
    endpoints = endpoints && rows.front()[0] == -1.0 && rows.front()[bwd] == 0.0;
    endpoints = endpoints && rows[n / 2][0] == 0.0 && rows[n / 2][bwd] == 0.5;
    endpoints = endpoints && rows.back()[0] == 1.0 && rows.back()[bwd] == 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double beta = rows[i][0];
      point_sym = std::max(point_sym, std::fabs(rows[i][bwd] + rows[n - 1 - i][bwd] - 1.0));
      point_sym = std::max(point_sym, std::fabs(rows[i][fwd] + rows[n - 1 - i][fwd] - 1.0));
      oracle_err = std::max(oracle_err, std::fabs(rows[i][fwd] - oracle::figure1_forward(beta)));
      oracle_err = std::max(oracle_err, std::fabs(rows[i][bwd] - oracle::figure1_backward(beta, ps[c])));
      if (ps[c] == 2.0) p2 = std::max(p2, std::fabs(rows[i][fwd] - rows[i][bwd]));
    }
  }
  const bool ok = endpoints && point_sym <= 1e-12 && p2 <= 1e-12 && oracle_err <= 1e-12;
  return {ok, std::string("endpoints ") + (endpoints ? "exact" : "WRONG") + ", point symmetry " +
                  fmt("%.3g", point_sym) + ", p=2 gap " + fmt("%.3g", p2) + ", oracle " + fmt("%.3g", oracle_err)};
}

Outcome eq6_all_models() {
  Rng rng(104);
  double worst = 0.0;
  for (const NormModel& m : all_models()) {
    const SpinFactor f(m);
    for (int i = 0; i < 1000; ++i) {
      const LogicElement e = f.atom(random_unit_vector(m, rng));
      const LogicElement g = f.atom(random_unit_vector(m, rng));
      worst = std::max(worst, f.eq6_defect(e, g));
    }
  }
  return {worst <= 1e-12, "max eq6 " + fmt("%.3g", worst) + " over 11 models"};
}

Outcome pillow_values() {
  using PA = PillowAtom;
  bool ok = true;
  for (PA f : kPillowVertices) {
    ok = ok && pillow_tp(f, PA::E) == Rational(1, 3) && pillow_tp(f, PA::EPrime) == Rational(1, 3);
    ok = ok && pillow_tp(PA::E, f) == Rational(1, 2) && pillow_tp(PA::EPrime, f) == Rational(1, 2);
    ok = ok && pillow_tp(f, PA::E) + pillow_tp(f, PA::EPrime) == Rational(2, 3);
  }
  Rational sum;
  for (PA f : kPillowVertices) sum = sum + pillow_tp(PA::E, f);
  ok = ok && sum == Rational(3, 2);
  // Double count of P(e_l | f_k) with families {e, e'} and {f1, f2, f3}.
  Rational by_rows;
  for (PA f : kPillowVertices) {
    for (PA e : kPillowPoles) by_rows = by_rows + pillow_tp(e, f);
  }
  Rational by_cols;
  for (PA e : kPillowPoles) {
    for (PA f : kPillowVertices) by_cols = by_cols + pillow_tp(f, e);
  }
  ok = ok && by_rows == Rational(3) && by_cols == Rational(2);
  const PillowReport r = pillow_report();
  ok = ok && r.total_by_vertices == Rational(3) && r.total_by_poles == Rational(2) && !r.symmetric;
  return {ok, "sum P(e|f_k) = " + sum.str() + ", double count " + by_rows.str() + " != " + by_cols.str()};
}

Outcome order_unit_identity() {
  Rng rng(106);
  double worst = 0.0;
  for (const NormModel& m : all_models()) {
    const SpinFactor f(m);
    for (int i = 0; i < 1000; ++i) {
      const LogicElement e = f.atom(random_unit_vector(m, rng));
      const double s = rng.uniform(-5, 5);
      const double t = rng.uniform(-5, 5);
      const OUElement a = s * f.element(e) + t * f.element(f.orthocomplement(e));
      worst = std::max(worst, std::fabs(f.ou_norm(a) - std::max(std::fabs(s), std::fabs(t))));
    }
  }
  return {worst <= 1e-12, "max deviation " + fmt("%.3g", worst)};
}

Outcome spectral_calculus() {
  Rng rng(107);
  double recon = 0.0;
  double idem = 0.0;
  std::size_t not_positive = 0;
  for (const NormModel& m : all_models()) {
    const SpinFactor f(m);
    for (int i = 0; i < 1000; ++i) {
      const OUElement a = random_element(rng, m.dim());
      recon = std::max(recon, f.ou_norm(a - f.reconstruct(f.spectral_decompose(a))));
      if (!f.is_positive(f.power(a, 2))) ++not_positive;
      const OUElement g = f.element(f.atom(random_unit_vector(m, rng)));
      idem = std::max(idem, f.ou_norm(f.power(g, 2) - g));
    }
    for (const OUElement& g : {f.unit(), OUElement::zero(m.dim())}) {
      idem = std::max(idem, f.ou_norm(f.power(g, 2) - g));
    }
  }
  return {recon <= 1e-12 && idem <= 1e-12 && not_positive == 0,
          "reconstruction " + fmt("%.3g", recon) + ", idempotence " + fmt("%.3g", idem) +
              ", non-positive squares " + std::to_string(not_positive)};
}

Outcome product_characterization() {
  Rng rng(108);
  double bilinear = 0.0;
  double closed = 0.0;
  for (std::size_t dim : {1u, 2u, 3u, 4u}) {
    const SpinFactor f(NormModel::euclidean(dim));
    for (int i = 0; i < 512; ++i) {
      const OUElement a = random_element(rng, dim);
      const OUElement b = random_element(rng, dim);
      const OUElement c = random_element(rng, dim);
      bilinear = std::max(bilinear, f.bilinearity_defect(a, b, c));
      closed = std::max(closed, max_diff(f.jordan_product(a, b),
                                         oracle::spin_product({a.x.coords(), a.s}, {b.x.coords(), b.s})));
    }
  }
  const SpinFactor f3(NormModel::pnorm(3.0, 2));
  double found = 0.0;
  for (int i = 0; i < 512; ++i) {
    found = std::max(found, f3.bilinearity_defect(random_element(rng, 2), random_element(rng, 2),
                                                  random_element(rng, 2)));
  }
  return {bilinear <= 1e-10 && closed <= 1e-12 && found >= 1e-3,
          "euclidean bilinearity " + fmt("%.3g", bilinear) + ", closed form " + fmt("%.3g", closed) +
              ", p=3 search " + fmt("%.4g", found)};
}

Outcome convex_spin_equivalence() {
  const ConvexBody d = ConvexBody::disk();
  const SpinFactor spin(NormModel::euclidean(2));
  Rng rng(109);
  double disk = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t1 = rng.uniform(0, 2 * kPi);
    const double t2 = rng.uniform(0, 2 * kPi);
    const double conv = tp_convex(d, boundary_point(d, t1), boundary_point(d, t2));
    const double sp = spin.transition_probability(spin.atom(Vector{std::cos(t2), std::sin(t2)}),
                                                  spin.atom(Vector{std::cos(t1), std::sin(t1)}));
    disk = std::max(disk, std::fabs(conv - sp));
  }
  const CorrespondenceReport q =
      duality_correspondence_check(ConvexBody::pball(1.5), NormModel::pnorm(3.0, 2), 50, 109, 1e-6);
  return {disk <= 1e-8 && q.pass && q.pairs == 50 && q.max_deviation <= 1e-6,
          "disk " + fmt("%.3g", disk) + ", q=1.5 vs p=3 " + fmt("%.3g", q.max_deviation)};
}

Outcome limacon_violation() {
  const ConvexBody k = ConvexBody::limacon(0.3);
  const BodyCertificate& c = k.certificate();
  const Eq6Search s = search_eq6_violation(k, 128);
  double symmetric = 0.0;
  for (const ConvexBody& b : {ConvexBody::disk(), ConvexBody::pball(1.5), ConvexBody::pball(3.0),
                              ConvexBody::pball(4.0)}) {
    symmetric = std::max(symmetric, search_eq6_violation(b, 128).max_defect);
  }
  const bool ok = c.smooth && c.strictly_convex && s.max_defect >= 0.01 && symmetric <= 1e-8;
  return {ok, std::string("limacon certified ") + (c.smooth && c.strictly_convex ? "yes" : "no") +
                  ", max eq6 " + fmt("%.5g", s.max_defect) + ", symmetric bodies " + fmt("%.3g", symmetric)};
}

Outcome gauge_duality() {
  double worst = 0.0;
  for (double p : {1.5, 3.0}) {
    const NormModel g = NormModel::gauge(ConvexBody::pball(p));
    Rng rng(111);
    for (int i = 0; i < 200; ++i) {
      const Vector u = random_unit_vector(g, rng);
      // Put u exactly on the l^p sphere before asking for the closed form.
      const double n = oracle::lp_norm(u.coords(), p);
      const std::vector<double> x{u[0] / n, u[1] / n};
      const std::vector<double> ref = oracle::lp_dual(x, p);
      const DualFunctional rho = norming_functional(g, Vector(x));
      worst = std::max({worst, std::fabs(rho[0] - ref[0]), std::fabs(rho[1] - ref[1])});
    }
  }
  return {worst <= 1e-6, "max coordinate deviation " + fmt("%.3g", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"hilbert symmetry", hilbert_symmetry},
      {"non-symmetry for p != 2", non_symmetry},
      {"l^p curve endpoints and symmetry", figure1_curves},
      {"complement rule in every spin factor", eq6_all_models},
      {"pillow exact values", pillow_values},
      {"order-unit norm identity", order_unit_identity},
      {"spectral calculus", spectral_calculus},
      {"product characterization", product_characterization},
      {"convex-spin equivalence", convex_spin_equivalence},
      {"non-ball complement violation", limacon_violation},
      {"numerical duality map", gauge_duality},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.2f s)\n", failures, criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
