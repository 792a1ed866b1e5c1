#include "gds/transforms.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "gds/errors.hpp"

namespace gds {

namespace {

void check_cap(int n, int n_cap, const char* op) {
  if (n > n_cap)
    throw CapExceeded(std::string(op) + ": n exceeds cap (" + std::to_string(n_cap) + ")");
}

// Truth table over the closed neighborhood `nbhd`, reading coordinate values
// of the global map `image_bit` at states that are zero outside the
// neighborhood (valid once the function is known constant there).
LocalFunction table_over(const std::vector<int>& nbhd,
                         const std::function<bool(std::uint32_t)>& image_bit) {
  int m = static_cast<int>(nbhd.size());
  std::vector<bool> bits(std::size_t(1) << m);
  for (std::uint32_t idx = 0; idx < bits.size(); ++idx) {
    State a = assignment_from_index(idx, m);
    std::uint32_t full = 0;
    for (int j = 1; j <= m; ++j)
      if (a.get(j)) full |= std::uint32_t(1) << (nbhd[j - 1] - 1);
    bits[idx] = image_bit(full);
  }
  return LocalFunction::table(m, std::move(bits));
}

}  // namespace

SystemDescription parallelize(const SystemDescription& sys, const UpdateSchedule& pi,
                              int n_cap) {
  int n = sys.n();
  check_cap(n, n_cap, "parallelize");
  if (pi.n() != n) throw std::invalid_argument("parallelize: schedule size mismatch");

  // The parallelization's coordinate functions are the coordinates of the
  // sequential map itself: once vertex i fires it is never rewritten within
  // the pass, so its final value is the value written at its position.
  std::size_t size = std::size_t(1) << n;
  std::vector<std::uint32_t> succ(size);
  for (std::size_t u = 0; u < size; ++u)
    succ[u] = sds_step(sys, pi, State(n, static_cast<std::uint32_t>(u))).bits();

  auto depends = [&](int i, int j) {
    std::uint32_t jm = std::uint32_t(1) << (j - 1);
    std::uint32_t im = std::uint32_t(1) << (i - 1);
    for (std::size_t u = 0; u < size; ++u)
      if (((succ[u] ^ succ[u ^ jm]) & im) != 0) return true;
    return false;
  };

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (depends(i, j) || depends(j, i)) edges.emplace_back(i, j);
  Graph g(n, edges);

  std::vector<LocalFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::uint32_t im = std::uint32_t(1) << (i - 1);
    fns.push_back(table_over(g.closed_neighborhood(i),
                             [&](std::uint32_t full) { return (succ[full] & im) != 0; }));
  }
  return SystemDescription(std::move(g), std::move(fns));
}

SystemDescription SequentializationResult::derived_system() const {
  if (status != SeqStatus::ok)
    throw std::logic_error("SequentializationResult: no derived system (status not OK)");
  int n = derived_functions.front().arity();
  return SystemDescription(Graph::complete(n), derived_functions);
}

SequentializationResult derive_sequentialization(const SystemDescription& pds,
                                                 const UpdateSchedule& pi, int n_cap) {
  int n = pds.n();
  check_cap(n, n_cap, "derive_sequentialization");
  if (pi.n() != n)
    throw std::invalid_argument("derive_sequentialization: schedule size mismatch");
  if (!pds.monotone())
    throw NotMonotone("derive_sequentialization: input system is not monotone");

  std::size_t size = std::size_t(1) << n;
  std::vector<std::uint32_t> target(size);
  for (std::size_t u = 0; u < size; ++u)
    target[u] = pds_step(pds, State(n, static_cast<std::uint32_t>(u))).bits();

  SequentializationResult out;
  out.domains.resize(n);

  // Position t constrains vertex pi_t at the intermediate states that agree
  // with the parallel image on the already-fired prefix and with the input
  // elsewhere.
  std::vector<PartialFunction> constraints(n, PartialFunction(n));
  std::uint32_t prefix_mask = 0;
  bool conflicted = false;
  for (int t = 1; t <= n; ++t) {
    int v = pi.at(t);
    std::uint32_t vm = std::uint32_t(1) << (v - 1);
    std::map<std::uint32_t, std::pair<bool, std::uint32_t>> seen;  // W -> (value, source X)
    for (std::size_t u = 0; u < size; ++u) {
      std::uint32_t w = (static_cast<std::uint32_t>(u) & ~prefix_mask) |
                        (target[u] & prefix_mask);
      bool value = (target[u] & vm) != 0;
      auto [it, inserted] = seen.emplace(w, std::make_pair(value, static_cast<std::uint32_t>(u)));
      if (!inserted && it->second.first != value && !conflicted) {
        conflicted = true;
        out.status = SeqStatus::conflict;
        out.conflict_witness = std::make_pair(State(n, it->second.second),
                                              State(n, static_cast<std::uint32_t>(u)));
        out.witness_vertex = v;
      }
    }
    auto& dom = out.domains[v - 1];
    for (const auto& [w, val] : seen) {
      dom.emplace_back(n, w);
      if (!conflicted) constraints[v - 1].set(State(n, w), val.first);
    }
    std::sort(dom.begin(), dom.end());
    prefix_mask |= vm;
  }
  if (conflicted) return out;

  for (int t = 1; t <= n; ++t) {
    int v = pi.at(t);
    MonotonicityVerdict verdict = is_monotone_partial(constraints[v - 1]);
    if (!verdict.monotone) {
      out.status = SeqStatus::non_monotone;
      out.monotonicity_witness = verdict.witness;
      out.witness_vertex = v;
      return out;
    }
  }

  out.status = SeqStatus::ok;
  out.derived_functions.reserve(n);
  for (int v = 1; v <= n; ++v)
    out.derived_functions.push_back(monotone_extend(constraints[v - 1]));
  return out;
}

SystemDescription goles_pds(int n, int n_cap) {
  if (n < 2) throw std::invalid_argument("goles_pds: n must be at least 2");
  check_cap(n, n_cap, "goles_pds");

  // Middle layer in increasing lex-index order.
  std::size_t size = std::size_t(1) << n;
  int half = n / 2;
  std::vector<State> layer;
  for (std::size_t u = 0; u < size; ++u) {
    State s(n, static_cast<std::uint32_t>(u));
    if (s.count_ones() == half) layer.push_back(s);
  }
  std::sort(layer.begin(), layer.end());
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < layer.size(); ++i) pos[layer[i].bits()] = i;

  std::uint32_t all = (std::uint32_t(1) << n) - 1;
  std::vector<std::uint32_t> image(size);
  for (std::size_t u = 0; u < size; ++u) {
    int pc = std::popcount(static_cast<std::uint32_t>(u));
    if (pc == half)
      image[u] = layer[(pos[static_cast<std::uint32_t>(u)] + 1) % layer.size()].bits();
    else if (pc > half)
      image[u] = all;  // strictly above some middle-layer state
    else
      image[u] = 0;    // strictly below some middle-layer state
  }

  std::vector<LocalFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::uint32_t im = std::uint32_t(1) << (i - 1);
    std::vector<bool> bits(size);
    for (std::size_t u = 0; u < size; ++u)
      bits[State(n, static_cast<std::uint32_t>(u)).lex_index()] = (image[u] & im) != 0;
    fns.push_back(LocalFunction::table(n, std::move(bits)));
  }
  return SystemDescription(Graph::complete(n), std::move(fns));
}

}  // namespace gds
