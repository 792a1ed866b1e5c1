#include "gds/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gds {

json function_to_json(const LocalFunction& f) {
  if (f.type() == FnType::threshold)
    return json{{"type", "threshold"}, {"k", f.threshold_k()}};
  return json{{"type", "table"}, {"bits", f.bits_str()}};
}

LocalFunction function_from_json(const json& j, int expected_arity, int vertex) {
  std::string where = "vertex " + std::to_string(vertex);
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw std::invalid_argument(where + ": function spec needs a string 'type' field");
  std::string type = j.at("type").get<std::string>();
  if (type == "threshold") {
    if (!j.contains("k") || !j.at("k").is_number_integer() || j.at("k").get<int>() < 0)
      throw std::invalid_argument(where + ": threshold needs a non-negative integer 'k'");
    return LocalFunction::threshold(expected_arity, j.at("k").get<int>());
  }
  if (type == "table") {
    if (!j.contains("bits") || !j.at("bits").is_string())
      throw std::invalid_argument(where + ": table needs a 'bits' string");
    std::string bits = j.at("bits").get<std::string>();
    if (bits.size() != (std::size_t(1) << expected_arity))
      throw std::invalid_argument(where + ": table length " + std::to_string(bits.size()) +
                                  " != 2^" + std::to_string(expected_arity));
    return LocalFunction::table(expected_arity, bits);
  }
  throw std::invalid_argument(where + ": unknown function type '" + type + "'");
}

json system_to_json(const SystemDescription& sys, const std::optional<std::string>& driver) {
  json j;
  j["n"] = sys.n();
  json edges = json::array();
  for (auto [a, b] : sys.graph().edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  json fns = json::array();
  for (const LocalFunction& f : sys.functions()) fns.push_back(function_to_json(f));
  j["functions"] = std::move(fns);
  if (driver) j["driver"] = *driver;
  return j;
}

SystemDescription system_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("system: top level must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("system: field 'n' must be an integer");
  int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxStateBits)
    throw std::invalid_argument("system: field 'n' out of range (1.." +
                                std::to_string(kMaxStateBits) + ")");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw std::invalid_argument("system: field 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("system: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g(n, edges);
  if (!j.contains("functions") || !j.at("functions").is_array())
    throw std::invalid_argument("system: field 'functions' must be an array");
  if (static_cast<int>(j.at("functions").size()) != n)
    throw std::invalid_argument("system: field 'functions' must list exactly " +
                                std::to_string(n) + " entries");
  std::vector<LocalFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int arity = static_cast<int>(g.closed_neighborhood(i).size());
    fns.push_back(function_from_json(j.at("functions")[i - 1], arity, i));
  }
  return SystemDescription(std::move(g), std::move(fns));
}

LoadedSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("system file " + path + ": " + e.what());
  }
  std::optional<std::string> driver;
  if (j.is_object() && j.contains("driver") && j.at("driver").is_string())
    driver = j.at("driver").get<std::string>();
  return {system_from_json(j), driver};
}

json partial_to_json(const PartialFunction& g) {
  json entries = json::object();
  for (const auto& [x, v] : g.items()) entries[x.str()] = v ? 1 : 0;
  return json{{"n", g.n()}, {"entries", std::move(entries)}};
}

PartialFunction partial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("partial function: field 'n' must be an integer");
  PartialFunction g(j.at("n").get<int>());
  if (!j.contains("entries") || !j.at("entries").is_object())
    throw std::invalid_argument("partial function: field 'entries' must be an object");
  for (const auto& [key, val] : j.at("entries").items()) {
    State x = State::parse(key);
    bool b;
    if (val.is_boolean())
      b = val.get<bool>();
    else if (val.is_number_integer() && (val.get<int>() == 0 || val.get<int>() == 1))
      b = val.get<int>() == 1;
    else
      throw std::invalid_argument("partial function: entry '" + key + "' must be 0 or 1");
    g.set(x, b);
  }
  return g;
}

PartialFunction load_partial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open partial-function file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("partial-function file " + path + ": " + e.what());
  }
  return partial_from_json(j);
}

json phase_space_to_json(const PhaseSpace& ps) {
  json succ = json::object();
  for (std::uint64_t u = 0; u < ps.size(); ++u) {
    State x(ps.n(), static_cast<std::uint32_t>(u));
    succ[x.str()] = ps.successor(x).str();
  }
  json goe = json::array();
  for (const State& x : ps.goe_states()) goe.push_back(x.str());
  json cycles = json::array();
  for (const auto& cyc : ps.cycles()) {
    json c = json::array();
    for (const State& x : cyc) c.push_back(x.str());
    cycles.push_back(std::move(c));
  }
  return json{{"successor", std::move(succ)}, {"goe", std::move(goe)},
              {"cycles", std::move(cycles)}};
}

std::string phase_space_to_dot(const PhaseSpace& ps) {
  std::ostringstream out;
  out << "digraph phase_space {\n";
  // Style periodic states, then list edges in lexicographic state order.
  std::vector<State> states;
  states.reserve(ps.size());
  for (std::uint64_t u = 0; u < ps.size(); ++u)
    states.emplace_back(ps.n(), static_cast<std::uint32_t>(u));
  std::sort(states.begin(), states.end());
  for (const State& x : states)
    if (ps.is_periodic(x)) out << "  \"" << x.str() << "\" [shape=doublecircle];\n";
  for (const State& x : states)
    out << "  \"" << x.str() << "\" -> \"" << ps.successor(x).str() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gds
