#include "gds/phase_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "gds/errors.hpp"

namespace gds {

namespace {

void require_monotone(const SystemDescription& sys, const char* op) {
  if (!sys.monotone())
    throw NotMonotone(std::string(op) + ": system is not monotone");
}

std::vector<State> sorted_states(int n, const std::vector<std::uint32_t>& raw) {
  std::vector<State> out;
  out.reserve(raw.size());
  for (std::uint32_t u : raw) out.emplace_back(n, u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PhaseSpace PhaseSpace::build(const SystemDescription& sys, const Driver& driver,
                             const BuildOptions& opts) {
  int n = sys.n();
  if (n > opts.n_cap)
    throw CapExceeded("PhaseSpace::build: n exceeds cap (" + std::to_string(opts.n_cap) + ")");
  if (driver.kind == Driver::Kind::sds && driver.schedule->n() != n)
    throw std::invalid_argument("PhaseSpace::build: schedule size mismatch");

  PhaseSpace ps;
  ps.n_ = n;
  std::size_t size = std::size_t(1) << n;
  ps.successor_.resize(size);

  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t u = lo; u < hi; ++u)
      ps.successor_[u] = driver.step(sys, State(n, static_cast<std::uint32_t>(u))).bits();
  };
  unsigned workers = std::thread::hardware_concurrency();
  if (opts.parallel && size >= (std::size_t(1) << 16) && workers > 1) {
    std::vector<std::thread> pool;
    std::size_t chunk = (size + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      if (lo >= size) break;
      pool.emplace_back(fill, lo, std::min(size, lo + chunk));
    }
    for (auto& t : pool) t.join();
  } else {
    fill(0, size);
  }

  ps.in_degree_.assign(size, 0);
  for (std::size_t u = 0; u < size; ++u) ++ps.in_degree_[ps.successor_[u]];

  // Functional-graph cycle detection with path marking: every state is
  // visited O(1) times.
  ps.on_cycle_.assign(size, 0);
  ps.component_.assign(size, -1);
  std::vector<std::uint8_t> color(size, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::uint32_t> path;
  std::vector<std::vector<std::uint32_t>> raw_cycles;
  for (std::size_t s = 0; s < size; ++s) {
    if (color[s] != 0) continue;
    path.clear();
    std::uint32_t u = static_cast<std::uint32_t>(s);
    while (color[u] == 0) {
      color[u] = 1;
      path.push_back(u);
      u = ps.successor_[u];
    }
    if (color[u] == 1) {
      // Found a new cycle starting at u somewhere on the current path.
      std::size_t pos = path.size();
      while (pos > 0 && path[pos - 1] != u) --pos;
      --pos;
      std::vector<std::uint32_t> cyc(path.begin() + pos, path.end());
      int idx = static_cast<int>(raw_cycles.size());
      for (std::uint32_t v : cyc) {
        ps.on_cycle_[v] = 1;
        ps.component_[v] = idx;
      }
      raw_cycles.push_back(std::move(cyc));
    }
    int idx = ps.component_[u];
    for (std::uint32_t v : path) {
      color[v] = 2;
      ps.component_[v] = idx;
    }
  }

  // Canonical form: rotate each cycle to its minimum lex state, order cycles
  // by length descending with ties by first state.
  std::vector<std::vector<State>> cycles;
  cycles.reserve(raw_cycles.size());
  for (const auto& raw : raw_cycles) {
    std::vector<State> cyc;
    cyc.reserve(raw.size());
    for (std::uint32_t u : raw) cyc.emplace_back(n, u);
    std::size_t best = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i)
      if (cyc[i] < cyc[best]) best = i;
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::vector<int> order(cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cycles[a].size() != cycles[b].size()) return cycles[a].size() > cycles[b].size();
    return cycles[a].front() < cycles[b].front();
  });
  std::vector<int> remap(cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<int>(i);
    ps.cycles_.push_back(std::move(cycles[order[i]]));
  }
  for (std::size_t u = 0; u < size; ++u) ps.component_[u] = remap[ps.component_[u]];
  return ps;
}

std::vector<State> PhaseSpace::goe_states() const {
  std::vector<std::uint32_t> raw;
  for (std::size_t u = 0; u < in_degree_.size(); ++u)
    if (in_degree_[u] == 0) raw.push_back(static_cast<std::uint32_t>(u));
  return sorted_states(n_, raw);
}

std::vector<State> PhaseSpace::fixed_points() const {
  std::vector<std::uint32_t> raw;
  for (const auto& cyc : cycles_)
    if (cyc.size() == 1) raw.push_back(cyc.front().bits());
  return sorted_states(n_, raw);
}

std::size_t PhaseSpace::max_cycle_length() const {
  std::size_t best = 0;
  for (const auto& cyc : cycles_) best = std::max(best, cyc.size());
  return best;
}

LatticeExtrema lattice_extrema(const SystemDescription& sys, const UpdateSchedule& pi) {
  require_monotone(sys, "lattice_extrema");
  // From all-zeros the iterates form a monotone chain, so a fixed point is
  // reached within n strict increases; likewise from all-ones.
  auto limit = [&](State x) {
    for (int guard = 0; guard <= sys.n() + 1; ++guard) {
      State next = sds_step(sys, pi, x);
      if (next == x) return x;
      x = next;
    }
    throw std::logic_error("lattice_extrema: monotone chain failed to stabilize");
  };
  return {limit(State::zeros(sys.n())), limit(State::ones(sys.n()))};
}

namespace {

// Certificate search: X can only be sigma.S_{0,k} for k = (number of zeros),
// and sigma.S_{1,k} for k = (number of ones). Scans S0 first, class members
// in lexicographic order.
std::optional<OrbitCertificate> find_certificate(const SystemDescription& sys,
                                                 const UpdateSchedule& pi, const State& x,
                                                 std::size_t alpha_cap) {
  AlphaClass cls = alpha_class(sys.graph(), pi, alpha_cap);
  for (SKind kind : {SKind::S0, SKind::S1}) {
    int k = kind == SKind::S0 ? x.count_zeros() : x.count_ones();
    State base = s_state(kind, k, x.n());
    for (const UpdateSchedule& sigma : cls.members)
      if (act_state(sigma, base) == x) return OrbitCertificate{kind, k, sigma};
  }
  return std::nullopt;
}

}  // namespace

Classification classify_state(const SystemDescription& sys, const UpdateSchedule& pi,
                              const State& x, const PhaseSpace* ps, std::size_t alpha_cap) {
  require_monotone(sys, "classify_state");
  if (x.n() != sys.n()) throw std::invalid_argument("classify_state: state size mismatch");

  Classification out;
  out.state = x;
  try {
    out.certificate = find_certificate(sys, pi, x, alpha_cap);
    out.orbit_applicable = out.certificate.has_value();
  } catch (const CapExceeded&) {
    out.orbit_applicable = std::nullopt;  // unknown; fall back to the phase space
  }

  State fx = sds_step(sys, pi, x);
  if (fx == x) {
    out.verdict = Verdict::fixed_point;
    return out;
  }

  if (out.certificate) {
    // One map application decides: the certificate kind's increasing
    // direction reaches a fixed point (monotone chain); the decreasing
    // direction and incomparability are GoE.
    bool up = leq(x, fx);
    bool down = leq(fx, x);
    if (out.certificate->kind == SKind::S0)
      out.verdict = up ? Verdict::reaches_fixed_point : Verdict::goe;
    else
      out.verdict = down ? Verdict::reaches_fixed_point : Verdict::goe;
    if (ps) {
      bool ok = ps->is_goe(x) || ps->cycles()[ps->cycle_of(x)].size() == 1;
      if (!ok)
        throw std::logic_error(
            "classify_state: orbit state is neither GoE nor reaches a fixed point "
            "(theorem violation) at " + x.str());
    }
    return out;
  }

  // No certificate: decide from comparability, then the phase space.
  if (leq(x, fx) || leq(fx, x)) {
    out.verdict = Verdict::reaches_fixed_point;
    return out;
  }
  PhaseSpace local = ps ? PhaseSpace() : PhaseSpace::build(sys, Driver::sds(pi));
  const PhaseSpace& space = ps ? *ps : local;
  if (space.is_periodic(x))
    out.verdict = Verdict::nontrivial_periodic;  // length-1 handled above
  else if (space.is_goe(x))
    out.verdict = Verdict::goe;
  else if (space.cycles()[space.cycle_of(x)].size() == 1)
    out.verdict = Verdict::reaches_fixed_point;
  else
    out.verdict = Verdict::transient_to_cycle;
  return out;
}

bool shift_homomorphism_check(const SystemDescription& sys, const UpdateSchedule& pi, int k) {
  int n = sys.n();
  if (k < 0 || k > n) throw std::invalid_argument("shift_homomorphism_check: k out of range");
  UpdateSchedule shifted = tau_shift(pi, k);
  auto h = [&](State x) {
    for (int pos = 1; pos <= k; ++pos) x = inflate_step(sys, pi.at(pos), x);
    return x;
  };
  std::size_t size = std::size_t(1) << n;
  for (std::size_t u = 0; u < size; ++u) {
    State x(n, static_cast<std::uint32_t>(u));
    if (!(h(sds_step(sys, pi, x)) == sds_step(sys, shifted, h(x)))) return false;
  }
  return true;
}

bool cycle_equivalence_check(const SystemDescription& sys, const UpdateSchedule& pi, int k) {
  int n = sys.n();
  if (k < 0 || k > n) throw std::invalid_argument("cycle_equivalence_check: k out of range");
  PhaseSpace a = PhaseSpace::build(sys, Driver::sds(pi), {kMaxStateBits, true});
  PhaseSpace b = PhaseSpace::build(sys, Driver::sds(tau_shift(pi, k)), {kMaxStateBits, true});

  std::multiset<std::size_t> lens_a, lens_b;
  for (const auto& c : a.cycles()) lens_a.insert(c.size());
  for (const auto& c : b.cycles()) lens_b.insert(c.size());
  if (lens_a != lens_b) return false;

  // h restricted to periodic states must biject onto the shifted system's
  // periodic states.
  auto h = [&](State x) {
    for (int pos = 1; pos <= k; ++pos) x = inflate_step(sys, pi.at(pos), x);
    return x;
  };
  std::set<State> image, target;
  std::size_t periodic_a = 0;
  for (const auto& c : a.cycles())
    for (const State& x : c) {
      ++periodic_a;
      image.insert(h(x));
    }
  for (const auto& c : b.cycles()) target.insert(c.begin(), c.end());
  return image.size() == periodic_a && image == target;
}

MaxCycleAudit max_cycle_audit(const SystemDescription& sys, const UpdateSchedule& pi) {
  require_monotone(sys, "max_cycle_audit");
  PhaseSpace ps = PhaseSpace::build(sys, Driver::sds(pi));
  MaxCycleAudit out;
  out.max_len = ps.max_cycle_length();
  out.bound = sperner_bound(sys.n());
  out.strict = out.max_len < out.bound;
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::goe: return "GOE";
    case Verdict::reaches_fixed_point: return "REACHES_FIXED_POINT";
    case Verdict::fixed_point: return "FIXED_POINT";
    case Verdict::nontrivial_periodic: return "NONTRIVIAL_PERIODIC";
    case Verdict::transient_to_cycle: return "TRANSIENT_TO_CYCLE";
  }
  return "?";
}

}  // namespace gds
