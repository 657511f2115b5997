#include "genspin/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "genspin/convex_logic.hpp"
#include "genspin/errors.hpp"
#include "genspin/json_io.hpp"
#include "genspin/rng.hpp"

namespace genspin::cli {

using io::format_double;

namespace {

std::string p_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace

void figure1(const std::vector<double>& p_list, std::size_t n_points, std::ostream& out) {
  if (n_points < 3) throw InputError("figure1 needs at least 3 grid points");
  if (p_list.empty()) throw InputError("figure1 needs at least one exponent");
  std::vector<SpinFactor> spins;
  for (double p : p_list) spins.emplace_back(NormModel::pnorm(p, 2));

  out << "beta1";
  for (double p : p_list) out << ",forward_p" << p_label(p) << ",backward_p" << p_label(p);
  out << "\n";
  for (std::size_t i = 0; i < n_points; ++i) {
    const double beta = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n_points - 1);
    out << format_double(beta);
    for (std::size_t k = 0; k < p_list.size(); ++k) {
      const SpinFactor& A = spins[k];
      const double p = p_list[k];
      const LogicElement e = A.atom(Vector{1.0, 0.0});
      const double second = std::pow(1.0 - std::pow(std::fabs(beta), p), 1.0 / p);
      const LogicElement f = A.atom(Vector{beta, second});
      out << "," << format_double(A.transition_probability(f, e)) << ","
          << format_double(A.transition_probability(e, f));
    }
    out << "\n";
  }
}

DefectScan defect_scan(const std::vector<double>& p_list, std::size_t dim, std::size_t n_pairs,
                       std::uint64_t seed) {
  if (p_list.empty()) throw InputError("defect-scan needs at least one exponent");
  if (dim < 1) throw InputError("dimension must be at least 1");
  if (n_pairs < 1) throw InputError("defect-scan needs at least one pair");
  std::vector<double> ps = p_list;
  std::sort(ps.begin(), ps.end());

  Rng rng(seed);
  std::vector<std::pair<Vector, Vector>> raw;
  raw.reserve(n_pairs);
  auto draw = [&] {
    for (;;) {
      std::vector<double> c(dim);
      double m = 0.0;
      for (double& v : c) {
        v = rng.uniform(-1.0, 1.0);
        m = std::max(m, std::fabs(v));
      }
      if (m >= 1e-3) return Vector(std::move(c));
    }
  };
  for (std::size_t i = 0; i < n_pairs; ++i) {
    Vector a = draw();
    Vector b = draw();
    raw.emplace_back(std::move(a), std::move(b));
  }

  DefectScan scan;
  for (double p : ps) {
    const SpinFactor A(NormModel::pnorm(p, dim));
    DefectScanRow row{p, 0.0, 0.0, 0.0, 0.0};
    for (const auto& [a, b] : raw) {
      const LogicElement e = A.atom(a, AtomPolicy::Lenient);
      const LogicElement f = A.atom(b, AtomPolicy::Lenient);
      const double sym = A.symmetry_defect(e, f);
      const double eq6 = A.eq6_defect(e, f);
      row.max_symmetry = std::max(row.max_symmetry, sym);
      row.max_eq6 = std::max(row.max_eq6, eq6);
      row.mean_symmetry += sym;
      row.mean_eq6 += eq6;
    }
    row.mean_symmetry /= static_cast<double>(n_pairs);
    row.mean_eq6 /= static_cast<double>(n_pairs);
    scan.rows.push_back(row);
  }

  scan.monotone_trend = true;
  for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
    const DefectScanRow& lo = scan.rows[i];
    const DefectScanRow& hi = scan.rows[i + 1];
    if (hi.p <= 2.0) {
      // Below 2: moving right approaches 2, so the defect must not grow.
      if (hi.max_symmetry > lo.max_symmetry) scan.monotone_trend = false;
    } else if (lo.p >= 2.0) {
      if (hi.max_symmetry < lo.max_symmetry) scan.monotone_trend = false;
    }
  }
  return scan;
}

void write_defect_scan(const DefectScan& scan, std::ostream& out) {
  out << "p,max_symmetry_defect,mean_symmetry_defect,max_eq6_defect,mean_eq6_defect,monotone_trend\n";
  for (const DefectScanRow& r : scan.rows) {
    out << format_double(r.p) << "," << format_double(r.max_symmetry) << ","
        << format_double(r.mean_symmetry) << "," << format_double(r.max_eq6) << ","
        << format_double(r.mean_eq6) << "," << (scan.monotone_trend ? 1 : 0) << "\n";
  }
}

void tpmatrix(const SpinFactor& spin, const std::vector<LogicElement>& atoms, std::ostream& out) {
  const auto m = spin.tp_matrix(atoms);
  out << "from,to,p_forward,p_backward,symmetry_defect,eq6_defect\n";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      out << i << "," << j << "," << format_double(m[i][j]) << "," << format_double(m[j][i])
          << "," << format_double(std::fabs(m[i][j] - m[j][i])) << ","
          << format_double(spin.eq6_defect(atoms[i], atoms[j])) << "\n";
    }
  }
}

void convex_sweep(const ConvexBody& body, std::size_t n, std::ostream& out) {
  if (n < 1) throw InputError("convex sweep needs at least one angle");
  std::vector<BoundaryPoint> pts;
  std::vector<AffineAtom> atoms;
  std::vector<BoundaryPoint> opposite;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(boundary_point(body, 2.0 * std::numbers::pi * static_cast<double>(i) /
                                           static_cast<double>(n)));
    atoms.push_back(affine_atom(body, pts.back()));
    opposite.push_back(antipodal(body, pts.back()));
  }
  out << "theta1,theta2,p_forward,p_backward,eq6_defect\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double forward = evaluate(atoms[j], pts[i].coords);
      const double backward = evaluate(atoms[i], pts[j].coords);
      const double eq6 = std::fabs(forward + evaluate(atoms[j], opposite[i].coords) - 1.0);
      out << format_double(pts[i].theta) << "," << format_double(pts[j].theta) << ","
          << format_double(forward) << "," << format_double(backward) << "," << format_double(eq6)
          << "\n";
    }
  }
}

nlohmann::ordered_json spectral(const SpinFactor& spin, const OUElement& a) {
  const SpectralForm sf = spin.spectral_decompose(a);
  nlohmann::ordered_json j;
  j["lambda_plus"] = sf.lambda_plus;
  j["lambda_minus"] = sf.lambda_minus;
  j["atom"] = sf.atom.direction().coords();
  j["scalar_flag"] = sf.scalar_flag;
  return j;
}

}  // namespace genspin::cli
