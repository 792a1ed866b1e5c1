#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gds/schedule.hpp"
#include "gds/system.hpp"

namespace gds {

struct BuildOptions {
  int n_cap = kDefaultNCap;  // refuse to allocate 2^n past this
  bool parallel = true;      // fill the successor array with worker threads
};

/// The functional graph on all 2^n states under one update map.
///
/// Stores the full successor array (the graph has out-degree 1, so this is
/// the exact representation), in-degrees, the limit cycles, and for every
/// state the cycle its trajectory eventually reaches.
///
/// Canonical form: each cycle is rotated to start at its minimum lex-index
/// state; cycles are ordered by length descending, ties by first state.
class PhaseSpace {
 public:
  static PhaseSpace build(const SystemDescription& sys, const Driver& driver,
                          const BuildOptions& opts = {});

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << n_; }

  State successor(const State& x) const { return State(n_, successor_[x.bits()]); }
  std::uint32_t in_degree(const State& x) const { return in_degree_[x.bits()]; }
  bool is_goe(const State& x) const { return in_degree_[x.bits()] == 0; }
  bool is_periodic(const State& x) const { return on_cycle_[x.bits()] != 0; }
  bool is_fixed_point(const State& x) const { return successor_[x.bits()] == x.bits(); }

  /// Index into cycles() of the cycle X eventually reaches.
  int cycle_of(const State& x) const { return component_[x.bits()]; }

  const std::vector<std::vector<State>>& cycles() const { return cycles_; }
  std::vector<State> goe_states() const;      // sorted
  std::vector<State> fixed_points() const;    // sorted
  std::size_t max_cycle_length() const;

  const std::vector<std::uint32_t>& successor_raw() const { return successor_; }

 private:
  int n_ = 0;
  std::vector<std::uint32_t> successor_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<std::uint8_t> on_cycle_;
  std::vector<std::int32_t> component_;
  std::vector<std::vector<State>> cycles_;
};

/// Extremal fixed points of a monotone SDS, found by iterating the map from
/// all-zeros and all-ones (no 2^n enumeration). Throws NotMonotone otherwise.
struct LatticeExtrema {
  State min_fp;
  State max_fp;
};
LatticeExtrema lattice_extrema(const SystemDescription& sys, const UpdateSchedule& pi);

enum class Verdict {
  goe,
  reaches_fixed_point,
  fixed_point,
  nontrivial_periodic,
  transient_to_cycle,
};

/// Certificate that X lies in an [S_{kind,k}]_pi orbit: the class member
/// sigma with sigma . S_{kind,k} = X.
struct OrbitCertificate {
  SKind kind = SKind::S0;
  int k = 0;
  UpdateSchedule sigma;
};

struct Classification {
  State state;
  Verdict verdict = Verdict::transient_to_cycle;
  /// nullopt when the alpha class overflowed and membership is unknown.
  std::optional<bool> orbit_applicable;
  std::optional<OrbitCertificate> certificate;
};

/// Classifies one state of a monotone SDS.
///
/// Orbit membership is decided first (S0 before S1, class members in lex
/// order). When a certificate exists the verdict comes from one application
/// of the map: equal -> fixed point; the certificate kind's decreasing
/// direction or incomparability -> GoE; the increasing direction -> reaches
/// a fixed point. No certificate: the verdict is read from the phase space
/// (built on demand when `ps` is null).
///
/// When a phase space is supplied and membership is known, the theorem
/// "orbit states are GoE or reach a fixed point" is re-checked against it;
/// a violation throws std::logic_error (falsification alarm, not a silent
/// assumption).
Classification classify_state(const SystemDescription& sys, const UpdateSchedule& pi,
                              const State& x, const PhaseSpace* ps = nullptr,
                              std::size_t alpha_cap = kDefaultClassCap);

/// Verifies that h = F_{pi_k} o ... o F_{pi_1} maps every phase-space edge of
/// (G,f,pi) to an edge of (G,f,tau^k.pi): h(F_pi(X)) = F_{pi_tau^k}(h(X)) for
/// all X.
bool shift_homomorphism_check(const SystemDescription& sys, const UpdateSchedule& pi, int k);

/// true iff the cycle-length multisets of pi and tau^k.pi coincide and the
/// prefix map h restricted to periodic states is a bijection onto the shifted
/// system's periodic states.
bool cycle_equivalence_check(const SystemDescription& sys, const UpdateSchedule& pi, int k);

/// Longest limit cycle vs the Sperner bound C(n, floor(n/2)). For a monotone
/// SDS the bound is strict; `strict` is returned rather than asserted so a
/// violation can be surfaced as a falsification alarm.
struct MaxCycleAudit {
  std::size_t max_len = 0;
  std::uint64_t bound = 0;
  bool strict = false;
};
MaxCycleAudit max_cycle_audit(const SystemDescription& sys, const UpdateSchedule& pi);

const char* verdict_name(Verdict v);

}  // namespace gds
