#include "gds/audit.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "gds/phase_space.hpp"
#include "gds/transforms.hpp"

namespace gds::audit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// All states of every [S_{0,k}]_pi and [S_{1,k}]_pi orbit, k = 0..n.
std::set<State> orbit_union(const Graph& g, const UpdateSchedule& pi, std::size_t cap) {
  std::set<State> u;
  for (int k = 0; k <= g.n(); ++k)
    for (SKind kind : {SKind::S0, SKind::S1}) {
      auto orbit = s_orbit(g, pi, kind, k, cap);
      u.insert(orbit.begin(), orbit.end());
    }
  return u;
}

bool goe_or_reaches_fp(const PhaseSpace& ps, const State& x) {
  return ps.is_goe(x) || ps.cycles()[ps.cycle_of(x)].size() == 1;
}

CriterionResult finish(int number, std::string name, bool passed, std::string detail,
                       Clock::time_point t0) {
  return {number, std::move(name), passed, std::move(detail), seconds_since(t0)};
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) edges.push_back(pairs[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<UpdateSchedule> all_schedules(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::vector<UpdateSchedule> out;
  do {
    out.push_back(UpdateSchedule(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

void for_each_threshold_system(const Graph& g, int k_extra,
                               const std::function<void(const SystemDescription&)>& fn) {
  int n = g.n();
  std::vector<int> kmax(n);
  for (int i = 1; i <= n; ++i) kmax[i - 1] = g.degree(i) + k_extra;
  std::vector<int> k(n, 0);
  while (true) {
    std::vector<LocalFunction> fns;
    fns.reserve(n);
    for (int i = 1; i <= n; ++i)
      fns.push_back(LocalFunction::threshold(
          static_cast<int>(g.closed_neighborhood(i).size()), k[i - 1]));
    fn(SystemDescription(g, std::move(fns)));
    int pos = 0;
    while (pos < n && k[pos] == kmax[pos]) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
}

LocalFunction random_monotone_table(int arity, std::mt19937& rng) {
  // Random monotone DNF: f(x) = OR over terms of (term subset of x's ones).
  // Zero terms gives the constant 0; an empty term gives the constant 1.
  std::uniform_int_distribution<int> term_count(0, 3);
  std::uniform_int_distribution<std::uint32_t> subset(0, (std::uint32_t(1) << arity) - 1);
  int t = term_count(rng);
  std::vector<std::uint32_t> terms;
  for (int i = 0; i < t; ++i) terms.push_back(subset(rng));
  std::vector<bool> bits(std::size_t(1) << arity);
  for (std::uint32_t idx = 0; idx < bits.size(); ++idx) {
    std::uint32_t ones = assignment_from_index(idx, arity).bits();
    bool v = false;
    for (std::uint32_t term : terms)
      if ((term & ~ones) == 0) {
        v = true;
        break;
      }
    bits[idx] = v;
  }
  return LocalFunction::table(arity, std::move(bits));
}

SystemDescription random_monotone_system(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  Graph g(n, edges);
  std::vector<LocalFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i)
    fns.push_back(random_monotone_table(static_cast<int>(g.closed_neighborhood(i).size()), rng));
  return SystemDescription(std::move(g), std::move(fns));
}

CriterionResult run_orbit_sweep(const Config& cfg) {
  auto t0 = Clock::now();
  std::uint64_t checked = 0;
  std::string violation;
  for (const Graph& g : all_graphs(cfg.sweep_n)) {
    auto schedules = all_schedules(cfg.sweep_n);
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      for (const UpdateSchedule& pi : schedules) {
        if (!violation.empty()) return;
        PhaseSpace ps = PhaseSpace::build(sys, Driver::sds(pi));
        for (const State& x : orbit_union(g, pi, cfg.alpha_cap)) {
          ++checked;
          if (!goe_or_reaches_fp(ps, x))
            violation = "state " + x.str() + " under schedule " + pi.str();
        }
      }
    });
    if (!violation.empty()) break;
  }
  std::ostringstream detail;
  if (violation.empty())
    detail << checked << " orbit states checked, all GoE or reaching a fixed point";
  else
    detail << "violation: " << violation;
  return finish(1, "orbit-classification-sweep", violation.empty(), detail.str(), t0);
}

CriterionResult run_cycle_bound(const Config& cfg) {
  auto t0 = Clock::now();
  std::uint64_t systems = 0;
  std::string violation;
  auto check = [&](const SystemDescription& sys) {
    ++systems;
    for (const UpdateSchedule& pi : all_schedules(sys.n())) {
      MaxCycleAudit a = max_cycle_audit(sys, pi);
      if (!a.strict && violation.empty())
        violation = "cycle length " + std::to_string(a.max_len) + " >= bound " +
                     std::to_string(a.bound) + " under " + pi.str();
    }
  };
  for (const Graph& g : all_graphs(cfg.sweep_n)) {
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      if (violation.empty()) check(sys);
    });
    if (!violation.empty()) break;
  }
  std::mt19937 rng(cfg.seed);
  for (int s = 0; s < cfg.samples && violation.empty(); ++s)
    check(random_monotone_system(4, rng));
  std::ostringstream detail;
  if (violation.empty())
    detail << systems << " systems (exhaustive n=" << cfg.sweep_n << " + " << cfg.samples
           << " random n=4), all cycles below the Sperner bound";
  else
    detail << "violation: " << violation;
  return finish(2, "cycle-length-bound", violation.empty(), detail.str(), t0);
}

CriterionResult run_goles_witness(const Config& cfg) {
  auto t0 = Clock::now();
  (void)cfg;
  std::ostringstream detail;
  SystemDescription sys = goles_pds(4);
  PhaseSpace ps = PhaseSpace::build(sys, Driver::pds());
  bool cycle_ok = ps.max_cycle_length() == 6;
  bool mono_ok = sys.monotone();
  bool never_ok = true;
  for (const UpdateSchedule& pi : all_schedules(4)) {
    SequentializationResult r = derive_sequentialization(sys, pi);
    if (r.status == SeqStatus::ok) {
      never_ok = false;
      detail << "sequentialization unexpectedly OK under " << pi.str() << "; ";
    }
  }
  bool passed = cycle_ok && mono_ok && never_ok;
  if (passed)
    detail << "parallel cycle length 6 = C(4,2), all tables monotone, "
           << "no monotone sequentialization over 24 schedules";
  else
    detail << "cycle length " << ps.max_cycle_length() << ", monotone=" << mono_ok;
  return finish(3, "goles-witness", passed, detail.str(), t0);
}

CriterionResult run_lym_sperner(const Config& cfg) {
  auto t0 = Clock::now();
  std::ostringstream detail;
  bool passed = true;

  // Every nonempty antichain of F_2^4, by direct enumeration of all subsets.
  int n = 4;
  std::vector<State> states;
  for (std::uint32_t u = 0; u < 16; ++u) states.emplace_back(n, u);
  std::uint64_t middle = 0;
  for (int i = 0; i < 16; ++i)
    if (states[i].count_ones() == 2) middle |= std::uint64_t(1) << i;
  std::uint64_t antichains = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << 16); ++mask) {
    std::vector<State> a;
    for (int i = 0; i < 16; ++i)
      if ((mask >> i) & 1u) a.push_back(states[i]);
    if (!is_antichain(a)) continue;
    ++antichains;
    LymReport rep = lym_report(a);
    if (!rep.lym_sum.le_one()) {
      passed = false;
      detail << "LYM sum " << rep.lym_sum.str() << " > 1 for an antichain; ";
    }
    if (a.size() > sperner_bound(n)) {
      passed = false;
      detail << "antichain of size " << a.size() << " exceeds the Sperner bound; ";
    }
    if (a.size() == sperner_bound(n) && mask != middle) {
      passed = false;
      detail << "maximum antichain other than the middle layer; ";
    }
  }
  if (antichains != 167) {
    passed = false;
    detail << "expected 167 nonempty antichains of F_2^4, found " << antichains << "; ";
  }

  // Theta size formula against brute force over all n! schedules, n <= 6.
  for (int m = 1; m <= 6; ++m) {
    auto schedules = all_schedules(m);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << m); ++u) {
      State x(m, u);
      std::uint64_t brute = 0;
      for (const UpdateSchedule& pi : schedules) {
        int zeros = x.count_zeros();
        bool match = true;
        for (int pos = 1; pos <= m; ++pos)
          if (x.get(pi.at(pos)) != (pos > zeros)) {
            match = false;
            break;
          }
        if (match) ++brute;
      }
      if (theta_set(x, ThetaKind::zero, false).size != static_cast<uint128>(brute)) {
        passed = false;
        detail << "theta size mismatch at " << x.str() << "; ";
      }
    }
  }
  if (passed)
    detail << antichains << " antichains verified; theta sizes match brute force up to n=6";
  (void)cfg;
  return finish(4, "lym-sperner", passed, detail.str(), t0);
}

CriterionResult run_knaster_tarski(const Config& cfg) {
  auto t0 = Clock::now();
  std::uint64_t systems = 0;
  std::string violation;
  for (const Graph& g : all_graphs(cfg.sweep_n)) {
    auto schedules = all_schedules(cfg.sweep_n);
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      if (!violation.empty()) return;
      ++systems;
      for (const UpdateSchedule& pi : schedules) {
        LatticeExtrema ex = lattice_extrema(sys, pi);
        if (!(sds_step(sys, pi, ex.min_fp) == ex.min_fp) ||
            !(sds_step(sys, pi, ex.max_fp) == ex.max_fp)) {
          violation = "extremum not fixed under " + pi.str();
          return;
        }
        PhaseSpace ps = PhaseSpace::build(sys, Driver::sds(pi));
        std::size_t fixed = ps.fixed_points().size();
        bool nontrivial = ps.max_cycle_length() > 1;
        if (nontrivial && fixed < 2) {
          violation = "nontrivial cycle with fewer than two fixed points under " + pi.str();
          return;
        }
        for (const auto& cyc : ps.cycles())
          for (const State& x : cyc)
            if (!leq(ex.min_fp, x) || !leq(x, ex.max_fp)) {
              violation = "periodic state " + x.str() + " outside [MIN, MAX] under " + pi.str();
              return;
            }
      }
    });
    if (!violation.empty()) break;
  }
  std::ostringstream detail;
  if (violation.empty())
    detail << systems << " systems: MIN/MAX fixed, periodic states sandwiched, "
           << "two fixed points whenever a nontrivial cycle exists";
  else
    detail << "violation: " << violation;
  return finish(5, "knaster-tarski-extrema", violation.empty(), detail.str(), t0);
}

CriterionResult run_probability_bound(const Config& cfg) {
  auto t0 = Clock::now();
  int n = cfg.sweep_n;
  std::uint64_t systems = 0;
  std::string violation;
  // Exact count over all (state, schedule) pairs; the bound n / 2^(n-1)
  // becomes count * 2^(n-1) >= n * 2^n * n!.
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t total = (std::uint64_t(1) << n) * fact;
  for (const Graph& g : all_graphs(n)) {
    auto schedules = all_schedules(n);
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      if (!violation.empty()) return;
      ++systems;
      std::uint64_t good = 0;
      for (const UpdateSchedule& pi : schedules) {
        PhaseSpace ps = PhaseSpace::build(sys, Driver::sds(pi));
        for (std::uint64_t u = 0; u < ps.size(); ++u)
          if (goe_or_reaches_fp(ps, State(n, static_cast<std::uint32_t>(u)))) ++good;
      }
      // good / total >= n / 2^(n-1)  <=>  good * 2^(n-1) >= n * total
      if (good * (std::uint64_t(1) << (n - 1)) < static_cast<std::uint64_t>(n) * total)
        violation = "fraction " + std::to_string(good) + "/" + std::to_string(total) +
                    " below the bound";
    });
    if (!violation.empty()) break;
  }
  std::ostringstream detail;
  if (violation.empty())
    detail << systems << " systems, every per-system (state, schedule) fraction >= " << n
           << "/" << (1 << (n - 1));
  else
    detail << "violation: " << violation;
  return finish(6, "probability-bound", violation.empty(), detail.str(), t0);
}

CriterionResult run_bipartite_bound(const Config& cfg) {
  auto t0 = Clock::now();
  (void)cfg;
  // K_{2,2}: parts {1,2} and {3,4}, schedule u1 u2 v1 v2 = 1,2,3,4.
  Graph g(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  UpdateSchedule pi = UpdateSchedule::identity(4);
  std::uint64_t systems = 0;
  std::string violation;
  std::vector<int> k(4, 0);
  while (true) {
    std::vector<LocalFunction> fns;
    for (int i = 1; i <= 4; ++i) fns.push_back(LocalFunction::threshold(3, k[i - 1]));
    SystemDescription sys(g, std::move(fns));
    ++systems;
    PhaseSpace ps = PhaseSpace::build(sys, Driver::sds(pi));
    std::uint64_t good = 0;
    for (std::uint64_t u = 0; u < ps.size(); ++u)
      if (goe_or_reaches_fp(ps, State(4, static_cast<std::uint32_t>(u)))) ++good;
    // Bound: (2^{m+1} + 2^{n+1} - 4) / 2^{m+n} = 12/16 for m = n = 2.
    if (good < 12 && violation.empty())
      violation = "only " + std::to_string(good) + "/16 states GoE-or-reach-FP at thresholds " +
                  std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                  std::to_string(k[2]) + "," + std::to_string(k[3]);
    int pos = 0;
    while (pos < 4 && k[pos] == 3) k[pos++] = 0;
    if (pos == 4) break;
    ++k[pos];
  }
  std::ostringstream detail;
  if (violation.empty())
    detail << systems << " threshold systems on K_{2,2}, all fractions >= 3/4";
  else
    detail << "violation: " << violation;
  return finish(7, "bipartite-bound", violation.empty(), detail.str(), t0);
}

CriterionResult run_tau_shift(const Config& cfg) {
  auto t0 = Clock::now();
  std::uint64_t checks = 0;
  std::string violation;
  for (const Graph& g : all_graphs(cfg.sweep_n)) {
    auto schedules = all_schedules(cfg.sweep_n);
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      if (!violation.empty()) return;
      for (const UpdateSchedule& pi : schedules)
        for (int k = 0; k <= sys.n(); ++k) {
          ++checks;
          if (!shift_homomorphism_check(sys, pi, k)) {
            violation = "homomorphism fails for " + pi.str() + ", k=" + std::to_string(k);
            return;
          }
          if (!cycle_equivalence_check(sys, pi, k)) {
            violation = "cycle equivalence fails for " + pi.str() + ", k=" + std::to_string(k);
            return;
          }
        }
    });
    if (!violation.empty()) break;
  }
  std::ostringstream detail;
  if (violation.empty())
    detail << checks << " (system, schedule, k) triples: shift homomorphism and "
           << "cycle equivalence hold";
  else
    detail << "violation: " << violation;
  return finish(8, "tau-shift-structure", violation.empty(), detail.str(), t0);
}

CriterionResult run_round_trips(const Config& cfg) {
  auto t0 = Clock::now();
  std::string violation;
  std::uint64_t systems = 0, partials = 0;

  // parallelize then derive_sequentialization must return OK and reproduce
  // the sequential map pointwise.
  for (const Graph& g : all_graphs(std::min(cfg.sweep_n, 3))) {
    auto schedules = all_schedules(g.n());
    for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      if (!violation.empty()) return;
      ++systems;
      for (const UpdateSchedule& pi : schedules) {
        SystemDescription par = parallelize(sys, pi);
        std::uint64_t size = std::uint64_t(1) << sys.n();
        for (std::uint64_t u = 0; u < size; ++u) {
          State x(sys.n(), static_cast<std::uint32_t>(u));
          if (!(pds_step(par, x) == sds_step(sys, pi, x))) {
            violation = "parallelization differs from the sequential map at " + x.str();
            return;
          }
        }
        SequentializationResult r = derive_sequentialization(par, pi);
        if (r.status != SeqStatus::ok) {
          violation = "round-trip sequentialization not OK under " + pi.str();
          return;
        }
        SystemDescription back = r.derived_system();
        for (std::uint64_t u = 0; u < size; ++u) {
          State x(sys.n(), static_cast<std::uint32_t>(u));
          if (!(sds_step(back, pi, x) == pds_step(par, x))) {
            violation = "derived SDS differs from the parallel map at " + x.str();
            return;
          }
        }
      }
    });
    if (!violation.empty()) break;
  }

  // monotone_extend: exhaustive over all monotone partial functions for
  // n <= 3, plus seeded samples at n = 4 and 5 from restrictions of random
  // monotone tables to random domains.
  auto check_extend = [&](const PartialFunction& g) {
    if (!is_monotone_partial(g).monotone) return;
    ++partials;
    LocalFunction ext = monotone_extend(g);
    for (const auto& [x, v] : g.items())
      if (ext.eval(x) != v) {
        violation = "extension disagrees with its input at " + x.str();
        return;
      }
    if (!is_monotone_total(ext).monotone)
      violation = "extension is not monotone";
  };
  for (int n = 1; n <= 3 && violation.empty(); ++n) {
    int size = 1 << n;
    std::vector<int> assign(size, 0);  // 0 absent, 1 -> value 0, 2 -> value 1
    while (violation.empty()) {
      PartialFunction g(n);
      for (int u = 0; u < size; ++u)
        if (assign[u] != 0) g.set(State(n, static_cast<std::uint32_t>(u)), assign[u] == 2);
      check_extend(g);
      int pos = 0;
      while (pos < size && assign[pos] == 2) assign[pos++] = 0;
      if (pos == size) break;
      ++assign[pos];
    }
  }
  std::mt19937 rng(cfg.seed + 1);
  for (int n = 4; n <= 5 && violation.empty(); ++n) {
    for (int s = 0; s < cfg.samples / 4; ++s) {
      LocalFunction src = random_monotone_table(n, rng);
      PartialFunction g(n);
      std::bernoulli_distribution keep(0.4);
      for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u)
        if (keep(rng)) {
          State x(n, u);
          g.set(x, src.eval(x));
        }
      check_extend(g);
      if (!violation.empty()) break;
    }
  }

  std::ostringstream detail;
  if (violation.empty())
    detail << systems << " systems round-tripped; " << partials
           << " monotone partial functions extended and re-verified";
  else
    detail << "violation: " << violation;
  return finish(9, "round-trips", violation.empty(), detail.str(), t0);
}

std::vector<CriterionResult> run_all(const Config& cfg) {
  return {run_orbit_sweep(cfg),      run_cycle_bound(cfg),   run_goles_witness(cfg),
          run_lym_sperner(cfg),      run_knaster_tarski(cfg), run_probability_bound(cfg),
          run_bipartite_bound(cfg),  run_tau_shift(cfg),     run_round_trips(cfg)};
}

}  // namespace gds::audit
