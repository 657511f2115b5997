// genspin: transition probabilities in generalized spin factors and convex
// body logics. Subcommands: figure1, defect-scan, tpmatrix, convex, spectral,
// pillow, check. Exit codes: 0 ok, 1 check failure, 2 input error,
// 3 numeric failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "genspin/checks.hpp"
#include "genspin/commands.hpp"
#include "genspin/errors.hpp"
#include "genspin/json_io.hpp"
#include "genspin/pillow.hpp"

namespace {

using namespace genspin;

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw InputError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> parse_p_list(const std::string& text) {
  if (text.empty()) return cli::kDefaultPList;
  std::vector<double> ps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ps.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad exponent \"" + item + "\" in --p");
    }
  }
  return ps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition probabilities in generalized spin factors and convex-body logics"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::string p_text;
  std::size_t samples = 0;
  std::optional<double> tol;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file (default: stdout)");
  };

  auto* fig = app.add_subcommand("figure1", "Transition probability curves for l^p, beta1 in [-1,1]");
  std::size_t points = 201;
  fig->add_option("--p", p_text, "Comma-separated exponents (default 1.3,1.5,2,3,10)");
  fig->add_option("--points", points, "Grid points on [-1,1]")->check(CLI::Range(3, 1000000));
  common(fig);

  auto* scan = app.add_subcommand("defect-scan", "Symmetry and eq6 defects over seeded atom pairs");
  std::size_t dim = 3;
  scan->add_option("--p", p_text, "Comma-separated exponents");
  scan->add_option("--dim", dim, "Dimension of X")->check(CLI::Range(1, 4096));
  scan->add_option("--samples", samples, "Number of atom pairs (default 1000)");
  scan->add_option("--seed", seed, "Seed");
  common(scan);

  auto* tpm = app.add_subcommand("tpmatrix", "Transition probability table for a list of atoms");
  std::string atoms_path;
  tpm->add_option("--atoms", atoms_path, "Atoms JSON file or inline JSON {\"atoms\":[...], \"model\":{...}}")->required();
  tpm->add_option("--model", model_path, "Model JSON (overrides the model in the atoms file)");
  common(tpm);

  auto* cvx = app.add_subcommand("convex", "Sweep transition probabilities on a convex body");
  std::string body_arg;
  cvx->add_option("--body,--model", body_arg, "Body JSON file or inline JSON")->required();
  cvx->add_option("--samples", samples, "Angles per axis (default 8)");
  common(cvx);

  auto* spec = app.add_subcommand("spectral", "Spectral decomposition of x (+) s");
  std::string element_arg;
  spec->add_option("--model", model_path, "Model JSON file or inline JSON")->required();
  spec->add_option("--element", element_arg, "Element JSON {\"x\":[...],\"s\":...}")->required();
  common(spec);

  auto* pil = app.add_subcommand("pillow", "Triangular pillow transition probabilities");
  bool report_flag = false;
  bool json_only = false;
  pil->add_flag("--report", report_flag, "Emit the full report");
  pil->add_flag("--json", json_only, "JSON only (no text section)");
  common(pil);

  auto* chk = app.add_subcommand("check", "Run invariant suites");
  std::string suite = "all";
  chk->add_option("--suite", suite, "all|spin|convex|pillow|space");
  chk->add_option("--seed", seed, "Seed");
  chk->add_option("--samples", samples, "Samples per check (default 1000)");
  chk->add_option("--tol", tol, "Bound for closed-form identities (default 1e-12)");
  common(chk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kInputError;
  }

  try {
    if (*fig) {
      const std::vector<double> ps = parse_p_list(p_text);
      std::ostringstream buf;
      cli::figure1(ps, points, buf);
      Output out(out_path);
      out.stream() << buf.str();
      out.finish();
    } else if (*scan) {
      const cli::DefectScan result =
          cli::defect_scan(parse_p_list(p_text), dim, samples ? samples : 1000, seed);
      Output out(out_path);
      cli::write_defect_scan(result, out.stream());
      out.finish();
    } else if (*tpm) {
      io::AtomList list = io::atoms_from_json(io::json_argument(atoms_path));
      if (!model_path.empty()) list.model = io::model_from_json(io::json_argument(model_path));
      if (!list.model) throw InputError("no model given (atoms file or --model)");
      const SpinFactor spin(*list.model);
      std::vector<LogicElement> atoms;
      for (const Vector& v : list.directions) atoms.push_back(spin.atom(v, list.policy));
      std::ostringstream buf;
      cli::tpmatrix(spin, atoms, buf);
      Output out(out_path);
      out.stream() << buf.str();
      out.finish();
    } else if (*cvx) {
      const ConvexBody body = io::body_from_json(io::json_argument(body_arg));
      std::ostringstream buf;
      cli::convex_sweep(body, samples ? samples : 8, buf);
      Output out(out_path);
      out.stream() << buf.str();
      out.finish();
    } else if (*spec) {
      const nlohmann::json mj = io::json_argument(model_path);
      const SpinFactor spin(io::model_from_json(mj.contains("model") ? mj.at("model") : mj));
      const OUElement a = io::element_from_json(io::json_argument(element_arg));
      Output out(out_path);
      out.stream() << cli::spectral(spin, a).dump(2) << "\n";
      out.finish();
    } else if (*pil) {
      const PillowReport r = pillow_report();
      Output out(out_path);
      if (!json_only) out.stream() << r.to_text();
      if (report_flag || json_only) out.stream() << r.to_json().dump(2) << "\n";
      out.finish();
    } else if (*chk) {
      CheckOptions opts;
      if (samples) opts.samples = samples;
      if (tol) opts.closed_form_tol = *tol;
      const CheckReport rep = run_checks(suite, seed, opts);
      Output out(out_path);
      out.stream() << rep.to_json().dump(2) << "\n";
      out.finish();
      for (const CheckResult& c : rep.checks) {
        if (!c.pass) std::cerr << "FAIL [" << c.suite << "] " << c.name << "\n";
      }
      return rep.passed() ? cli::kOk : cli::kCheckFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return cli::kNumericError;
  }
  return cli::kOk;
}
