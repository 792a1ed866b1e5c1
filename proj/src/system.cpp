#include "gds/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gds {

SystemDescription::SystemDescription(Graph graph, std::vector<LocalFunction> functions)
    : graph_(std::move(graph)), functions_(std::move(functions)) {
  if (static_cast<int>(functions_.size()) != graph_.n())
    throw std::invalid_argument("SystemDescription: need one function per vertex");
  for (int i = 1; i <= graph_.n(); ++i) {
    int want = static_cast<int>(graph_.closed_neighborhood(i).size());
    int got = functions_[i - 1].arity();
    if (got != want)
      throw std::invalid_argument("SystemDescription: vertex " + std::to_string(i) +
                                  ": function arity " + std::to_string(got) +
                                  " != |N[" + std::to_string(i) + "]| = " +
                                  std::to_string(want));
  }
  monotone_ = true;
  for (const LocalFunction& f : functions_)
    if (!is_monotone_total(f, kMaxStateBits).monotone) {
      monotone_ = false;
      break;
    }
}

State restrict_state(const State& x, const std::vector<int>& vertices) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    if (x.get(vertices[j])) bits |= std::uint32_t(1) << j;
  return State(static_cast<int>(vertices.size()), bits);
}

State inflate_step(const SystemDescription& sys, int vertex, const State& x) {
  if (vertex < 1 || vertex > sys.n())
    throw std::invalid_argument("inflate_step: vertex out of range");
  const auto& nbhd = sys.graph().closed_neighborhood(vertex);
  bool value = sys.function(vertex).eval(restrict_state(x, nbhd));
  return x.with(vertex, value);
}

State sds_step(const SystemDescription& sys, const UpdateSchedule& pi, const State& x) {
  if (pi.n() != sys.n()) throw std::invalid_argument("sds_step: schedule size mismatch");
  if (x.n() != sys.n()) throw std::invalid_argument("sds_step: state size mismatch");
  State cur = x;
  for (int pos = 1; pos <= pi.n(); ++pos) cur = inflate_step(sys, pi.at(pos), cur);
  return cur;
}

State pds_step(const SystemDescription& sys, const State& x) {
  if (x.n() != sys.n()) throw std::invalid_argument("pds_step: state size mismatch");
  std::uint32_t bits = 0;
  for (int i = 1; i <= sys.n(); ++i) {
    const auto& nbhd = sys.graph().closed_neighborhood(i);
    if (sys.function(i).eval(restrict_state(x, nbhd)))
      bits |= std::uint32_t(1) << (i - 1);
  }
  return State(sys.n(), bits);
}

State Driver::step(const SystemDescription& sys, const State& x) const {
  if (kind == Kind::sds) return sds_step(sys, *schedule, x);
  return pds_step(sys, x);
}

std::string Driver::str() const {
  if (kind == Kind::sds) return "sds(" + schedule->str() + ")";
  return "pds";
}

Trajectory trajectory(const SystemDescription& sys, const Driver& driver, const State& start,
                      std::uint64_t max_steps) {
  if (max_steps == 0) max_steps = std::uint64_t(1) << sys.n();
  std::unordered_map<std::uint32_t, std::size_t> seen;
  std::vector<State> orbit;
  State cur = start;
  for (std::uint64_t step = 0;; ++step) {
    auto it = seen.find(cur.bits());
    if (it != seen.end()) {
      std::size_t s = it->second;
      Trajectory out;
      out.transient.assign(orbit.begin(), orbit.begin() + s);
      out.cycle.assign(orbit.begin() + s, orbit.end());
      // Rotate so the cycle starts at its minimum lex-index state.
      std::size_t best = 0;
      for (std::size_t i = 1; i < out.cycle.size(); ++i)
        if (out.cycle[i] < out.cycle[best]) best = i;
      std::rotate(out.cycle.begin(), out.cycle.begin() + best, out.cycle.end());
      return out;
    }
    if (step >= max_steps) {
      Trajectory out;
      out.transient = std::move(orbit);
      out.truncated = true;
      return out;
    }
    seen.emplace(cur.bits(), orbit.size());
    orbit.push_back(cur);
    cur = driver.step(sys, cur);
  }
}

}  // namespace gds
