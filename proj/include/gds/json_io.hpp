#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gds/local_function.hpp"
#include "gds/phase_space.hpp"
#include "gds/system.hpp"

namespace gds {

using nlohmann::json;

// Function specs: {"type":"threshold","k":<int>} or
//                 {"type":"table","bits":"<2^m chars of 0/1>"}.
json function_to_json(const LocalFunction& f);
LocalFunction function_from_json(const json& j, int expected_arity, int vertex);

// System files: {"n":int,"edges":[[i,j],...],"functions":[...]} with an
// optional "driver":"sds"|"pds" hint.
json system_to_json(const SystemDescription& sys,
                    const std::optional<std::string>& driver = std::nullopt);
SystemDescription system_from_json(const json& j);

struct LoadedSystem {
  SystemDescription system;
  std::optional<std::string> driver;  // the file's driver hint, if any
};
LoadedSystem load_system(const std::string& path);

// Partial functions: {"n":int,"entries":{"<state>":0|1,...}}.
json partial_to_json(const PartialFunction& g);
PartialFunction partial_from_json(const json& j);
PartialFunction load_partial(const std::string& path);

// Phase-space exports.
json phase_space_to_json(const PhaseSpace& ps);
std::string phase_space_to_dot(const PhaseSpace& ps);

}  // namespace gds
