#pragma once

// JSON descriptors:
//   model:   {"kind":"pnorm","p":3.0,"dim":2,"weights":[1,1]}
//            {"kind":"euclidean","dim":3}            (optional "weights")
//            {"kind":"gauge","body":{...body...}}
//   body:    {"kind":"disk"} | {"kind":"pball","p":3.0} | {"kind":"limacon","eps":0.3}
//            {"kind":"custom","r_table":[...], "anchor":[x,y]}
//   atoms:   {"atoms":[[1,0],[0.5,0.866]], "model":{...}, "policy":"strict"|"lenient"}
//   element: {"x":[0.6,0.8], "s":2.0}
// Malformed input raises InputError.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genspin/convex_body.hpp"
#include "genspin/linalg_space.hpp"
#include "genspin/spin_factor.hpp"

namespace genspin::io {

ConvexBody body_from_json(const nlohmann::json& j);
NormModel model_from_json(const nlohmann::json& j);
nlohmann::ordered_json model_to_json(const NormModel& m);

Vector vector_from_json(const nlohmann::json& j);
OUElement element_from_json(const nlohmann::json& j);

struct AtomList {
  std::optional<NormModel> model;
  std::vector<Vector> directions;
  AtomPolicy policy = AtomPolicy::Strict;
};
AtomList atoms_from_json(const nlohmann::json& j);

// Reads and parses a file; InputError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& path);
// Parses `text` if it looks like inline JSON, otherwise reads it as a path.
nlohmann::json json_argument(const std::string& text);

// printf("%.17g"); round-trips every double.
std::string format_double(double v);

}  // namespace genspin::io
