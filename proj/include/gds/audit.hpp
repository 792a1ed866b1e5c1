#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gds/system.hpp"

namespace gds::audit {

/// Sweep sizes for the theorem audits. Defaults match the checked claims:
/// exhaustive graph/threshold/schedule sweeps at n = sweep_n, plus seeded
/// random monotone truth-table systems at n = 4.
struct Config {
  int sweep_n = 3;
  int samples = 1000;
  std::uint32_t seed = 12345;
  std::size_t alpha_cap = kDefaultClassCap;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult run_orbit_sweep(const Config& cfg);
CriterionResult run_cycle_bound(const Config& cfg);
CriterionResult run_goles_witness(const Config& cfg);
CriterionResult run_lym_sperner(const Config& cfg);
CriterionResult run_knaster_tarski(const Config& cfg);
CriterionResult run_probability_bound(const Config& cfg);
CriterionResult run_bipartite_bound(const Config& cfg);
CriterionResult run_tau_shift(const Config& cfg);
CriterionResult run_round_trips(const Config& cfg);

/// All nine criteria, in order.
std::vector<CriterionResult> run_all(const Config& cfg = {});

// Sweep machinery (shared with the test suites).

/// All 2^C(n,2) labeled simple graphs on n vertices.
std::vector<Graph> all_graphs(int n);

/// All n! schedules.
std::vector<UpdateSchedule> all_schedules(int n);

/// Every assignment of per-vertex thresholds k in 0..deg(i)+k_extra.
void for_each_threshold_system(const Graph& g, int k_extra,
                               const std::function<void(const SystemDescription&)>& fn);

/// Random monotone function as a table: a disjunction of up to three random
/// conjunctions of inputs (constants included).
LocalFunction random_monotone_table(int arity, std::mt19937& rng);

/// Random graph (edge probability 1/2) with random monotone table functions.
SystemDescription random_monotone_system(int n, std::mt19937& rng);

}  // namespace gds::audit
