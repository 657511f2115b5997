#pragma once

// Implementations behind the `genspin` subcommands. Each writes its output to
// a stream so the CLI stays a thin argument parser and tests can drive the
// commands directly. CSV: comma separated, header row, LF line ends, numbers
// printed with 17 significant digits.

#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "genspin/convex_body.hpp"
#include "genspin/spin_factor.hpp"

namespace genspin::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kNumericError = 3 };

inline const std::vector<double> kDefaultPList{1.3, 1.5, 2.0, 3.0, 10.0};

// Columns: beta1, then forward_p<p>, backward_p<p> per exponent. Values come
// from the spin-factor library with e = Atom((1,0)) and
// f = Atom((beta1, (1 - |beta1|^p)^(1/p))).
void figure1(const std::vector<double>& p_list, std::size_t n_points, std::ostream& out);

struct DefectScanRow {
  double p;
  double max_symmetry;
  double mean_symmetry;
  double max_eq6;
  double mean_eq6;
};

struct DefectScan {
  std::vector<DefectScanRow> rows;  // sorted by p
  // Max symmetry defect grows as p moves away from 2 on either side.
  bool monotone_trend = false;
};

// The same seeded raw direction pairs are normalized under every exponent.
DefectScan defect_scan(const std::vector<double>& p_list, std::size_t dim, std::size_t n_pairs,
                       std::uint64_t seed);
void write_defect_scan(const DefectScan& scan, std::ostream& out);

// Rows for every ordered pair (i, j):
// from,to,p_forward,p_backward,symmetry_defect,eq6_defect with
// p_forward = P(atom_j | atom_i).
void tpmatrix(const SpinFactor& spin, const std::vector<LogicElement>& atoms, std::ostream& out);

// n x n grid of boundary angles: theta1,theta2,p_forward,p_backward,eq6_defect
// with p_forward = P(e_theta2 | e_theta1).
void convex_sweep(const ConvexBody& body, std::size_t n, std::ostream& out);

nlohmann::ordered_json spectral(const SpinFactor& spin, const OUElement& a);

}  // namespace genspin::cli
