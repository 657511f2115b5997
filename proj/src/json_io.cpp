#include "genspin/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "genspin/errors.hpp"

namespace genspin::io {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(number(v, what));
  return out;
}

std::string kind_of(const json& j) {
  const json& k = require(j, "kind");
  if (!k.is_string()) throw InputError("\"kind\" must be a string");
  return k.get<std::string>();
}

std::size_t dim_of(const json& j) {
  const json& d = require(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw InputError("\"dim\" must be a positive integer");
  }
  return static_cast<std::size_t>(d.get<long long>());
}

}  // namespace

ConvexBody body_from_json(const json& j) {
  const std::string kind = kind_of(j);
  if (kind == "disk") return ConvexBody::disk();
  if (kind == "pball") return ConvexBody::pball(number(require(j, "p"), "p"));
  if (kind == "limacon") {
    return ConvexBody::limacon(j.contains("eps") ? number(j.at("eps"), "eps") : 0.3);
  }
  if (kind == "custom") {
    Point2 anchor{};
    if (j.contains("anchor")) {
      const std::vector<double> a = numbers(j.at("anchor"), "anchor");
      if (a.size() != 2) throw InputError("anchor must have two coordinates");
      anchor = {a[0], a[1]};
    }
    return ConvexBody::custom(numbers(require(j, "r_table"), "r_table"), anchor);
  }
  throw InputError("unknown body kind \"" + kind + "\"");
}

NormModel model_from_json(const json& j) {
  const std::string kind = kind_of(j);
  if (kind == "pnorm" || kind == "euclidean") {
    std::vector<double> weights;
    if (j.contains("weights")) {
      weights = numbers(j.at("weights"), "weights");
      if (j.contains("dim") && dim_of(j) != weights.size()) {
        throw InputError("\"dim\" disagrees with the number of weights");
      }
    } else {
      weights.assign(dim_of(j), 1.0);
    }
    if (kind == "euclidean") return NormModel::euclidean(std::move(weights));
    return NormModel::pnorm(number(require(j, "p"), "p"), std::move(weights));
  }
  if (kind == "gauge") {
    if (j.contains("dim") && dim_of(j) != 2) throw InputError("gauge models are planar (dim 2)");
    SpaceTolerances tol;
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      if (!t.is_object()) throw InputError("\"tolerances\" must be an object");
      if (t.contains("numeric")) tol.numeric = number(t.at("numeric"), "numeric");
      if (t.contains("solver_residual")) {
        tol.solver_residual = number(t.at("solver_residual"), "solver_residual");
      }
      if (t.contains("max_iterations")) {
        const json& it = t.at("max_iterations");
        if (!it.is_number_integer()) throw InputError("\"max_iterations\" must be an integer");
        tol.max_iterations = it.get<int>();
      }
    }
    return NormModel::gauge(body_from_json(require(j, "body")), tol);
  }
  throw InputError("unknown model kind \"" + kind + "\"");
}

nlohmann::ordered_json model_to_json(const NormModel& m) {
  nlohmann::ordered_json j;
  switch (m.kind()) {
    case NormKind::PNorm:
      j["kind"] = "pnorm";
      j["p"] = m.p();
      break;
    case NormKind::Euclidean:
      j["kind"] = "euclidean";
      break;
    case NormKind::Gauge:
      j["kind"] = "gauge";
      j["body"] = m.body().describe();
      break;
  }
  j["dim"] = m.dim();
  if (m.kind() != NormKind::Gauge) j["weights"] = m.weights();
  return j;
}

Vector vector_from_json(const json& j) { return Vector(numbers(j, "vector")); }

OUElement element_from_json(const json& j) {
  return {vector_from_json(require(j, "x")), number(require(j, "s"), "s")};
}

AtomList atoms_from_json(const json& j) {
  AtomList list;
  if (j.contains("model")) list.model = model_from_json(j.at("model"));
  const json& atoms = require(j, "atoms");
  if (!atoms.is_array() || atoms.empty()) throw InputError("\"atoms\" must be a nonempty array");
  for (const json& a : atoms) list.directions.push_back(vector_from_json(a));
  if (j.contains("policy")) {
    const json& pj = j.at("policy");
    const std::string p = pj.is_string() ? pj.get<std::string>() : std::string();
    if (p == "strict") {
      list.policy = AtomPolicy::Strict;
    } else if (p == "lenient") {
      list.policy = AtomPolicy::Lenient;
    } else {
      throw InputError("policy must be \"strict\" or \"lenient\"");
    }
  }
  return list;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(text);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace genspin::io
