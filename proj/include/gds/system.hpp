#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gds/graph.hpp"
#include "gds/local_function.hpp"
#include "gds/schedule.hpp"
#include "gds/state.hpp"

namespace gds {

/// A graph plus one local function per vertex, with arity of f_i equal to
/// |N[i]|. Evaluated sequentially (with a schedule) or in parallel.
///
/// Immutable after construction; the monotone flag is computed eagerly so
/// monotone-only analyses can reject non-monotone systems up front.
class SystemDescription {
 public:
  SystemDescription(Graph graph, std::vector<LocalFunction> functions);

  int n() const { return graph_.n(); }
  const Graph& graph() const { return graph_; }
  const LocalFunction& function(int vertex) const { return functions_[vertex - 1]; }
  const std::vector<LocalFunction>& functions() const { return functions_; }

  /// true iff every local function is monotone.
  bool monotone() const { return monotone_; }

 private:
  Graph graph_;
  std::vector<LocalFunction> functions_;
  bool monotone_ = false;
};

/// Restriction of X to the given vertices (ascending), as an assignment State.
State restrict_state(const State& x, const std::vector<int>& vertices);

/// F_i(X): X with coordinate i replaced by f_i evaluated on N[i].
State inflate_step(const SystemDescription& sys, int vertex, const State& x);

/// F_pi(X): inflations applied in schedule order, each reading prior updates.
State sds_step(const SystemDescription& sys, const UpdateSchedule& pi, const State& x);

/// Parallel map: every coordinate computed from the original X.
State pds_step(const SystemDescription& sys, const State& x);

/// Which update map drives an analysis: sequential under a schedule, or
/// parallel.
struct Driver {
  enum class Kind { sds, pds };
  Kind kind = Kind::pds;
  std::optional<UpdateSchedule> schedule;

  static Driver sds(UpdateSchedule pi) { return {Kind::sds, std::move(pi)}; }
  static Driver pds() { return {Kind::pds, std::nullopt}; }

  State step(const SystemDescription& sys, const State& x) const;
  std::string str() const;
};

struct Trajectory {
  std::vector<State> transient;
  std::vector<State> cycle;  // rotated to start at its minimum lex-index state
  bool truncated = false;    // set when max_steps elapsed before a repeat
};

/// Iterates the chosen map from `start` until the first repeated state, then
/// splits the orbit into transient prefix and cycle. max_steps = 0 means
/// 2^n, which always suffices; smaller caps yield a truncated result.
Trajectory trajectory(const SystemDescription& sys, const Driver& driver, const State& start,
                      std::uint64_t max_steps = 0);

}  // namespace gds
