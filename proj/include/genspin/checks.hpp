#pragma once

// Invariant suites run by `genspin check`. Every check records the measured
// quantity, the bound it is held to and whether it passed; the JSON form is
// deterministic for a given seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace genspin {

enum class Relation { AtMost, AtLeast, Equal };

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  Relation relation = Relation::AtMost;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

struct CheckOptions {
  std::size_t samples = 1000;
  // Bound for identities that hold in closed form.
  double closed_form_tol = 1e-12;
};

// Suites: "space", "spin", "convex", "pillow", "all". Unknown names raise InputError.
CheckReport run_checks(std::string_view suite, std::uint64_t seed, const CheckOptions& opts = {});

const std::vector<std::string>& check_suite_names();

// Independent stream per (seed, stream) pair.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace genspin
