#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gds/system.hpp"

namespace gds {

/// The parallel system whose one-step map equals F_pi of the input SDS.
///
/// Coordinate functions are tabulated from the sequential map over all 2^n
/// states; the output graph connects i and j iff either tabulated coordinate
/// function actually depends on the other's variable, and each function is
/// emitted as a truth table over its closed neighborhood. A monotone input
/// yields a monotone output.
SystemDescription parallelize(const SystemDescription& sys, const UpdateSchedule& pi,
                              int n_cap = kDefaultNCap);

enum class SeqStatus { ok, conflict, non_monotone };

/// Outcome of attempting to realize a parallel map as a sequential system
/// under a fixed schedule.
struct SequentializationResult {
  SeqStatus status = SeqStatus::ok;

  /// Present when status == ok: one arity-n function per vertex (vertex
  /// order); running them sequentially under pi reproduces the parallel map.
  std::vector<LocalFunction> derived_functions;

  /// Two input states forced onto the same intermediate state with different
  /// required outputs (status == conflict).
  std::optional<std::pair<State, State>> conflict_witness;

  /// Violating comparable pair inside the constrained domain A_i
  /// (status == non_monotone).
  std::optional<std::pair<State, State>> monotonicity_witness;

  /// Vertex the witness belongs to.
  int witness_vertex = 0;

  /// A_i per vertex (index v-1): the intermediate states on which f_v is
  /// actually constrained. Computed for every status.
  std::vector<std::vector<State>> domains;

  /// The derived SDS on the complete graph. Throws unless status == ok.
  SystemDescription derived_system() const;
};

/// Derives the sequentialization of a monotone PDS with respect to pi.
///
/// For each input state X and schedule position t, the intermediate state
/// W_t(X) agrees with the parallel image on the already-fired vertices
/// pi_1..pi_{t-1} and with X elsewhere; vertex pi_t is constrained to output
/// its parallel image at W_t(X). Conflicting constraints mean no
/// sequentialization under pi exists at all; otherwise the constraints form
/// partial functions which admit a monotone sequentialization iff each is
/// monotone on its domain, in which case they are completed by
/// monotone_extend.
SequentializationResult derive_sequentialization(const SystemDescription& pds,
                                                 const UpdateSchedule& pi,
                                                 int n_cap = kDefaultNCap);

/// The maximal-cycle monotone parallel system: the middle layer (states with
/// exactly floor(n/2) ones, in increasing lex-index order) advances
/// cyclically; everything strictly above it maps to all-ones, everything
/// strictly below to all-zeros. Emitted on the complete graph with one
/// 2^n-entry table per vertex. Its unique nontrivial limit cycle has length
/// C(n, floor(n/2)), which no sequential monotone system can reach.
SystemDescription goles_pds(int n, int n_cap = kDefaultNCap);

}  // namespace gds
