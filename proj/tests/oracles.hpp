// Naive reference implementations used to derive expected values. Everything
// here works on '0'/'1' strings and plain int vectors, independently of the
// library's bit-packed representations, so the two routes can disagree.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// state string "011" means x_1=0, x_2=1, x_3=1.

inline bool o_leq(const std::string& a, const std::string& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == '1' && b[i] == '0') return false;
  return true;
}

inline bool o_comparable(const std::string& a, const std::string& b) {
  return o_leq(a, b) || o_leq(b, a);
}

inline std::vector<std::string> o_all_states(int n) {
  std::vector<std::string> out;
  std::string s(n, '0');
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(s);
      return;
    }
    s[i] = '0';
    rec(i + 1);
    s[i] = '1';
    rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool o_is_antichain(const std::vector<std::string>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] != a[j] && o_comparable(a[i], a[j])) return false;
  return true;
}

/// All nonempty antichains of {0,1}^n (n small).
inline std::vector<std::vector<std::string>> o_all_antichains(int n) {
  auto states = o_all_states(n);
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << states.size()); ++mask) {
    std::vector<std::string> a;
    for (std::size_t i = 0; i < states.size(); ++i)
      if ((mask >> i) & 1u) a.push_back(states[i]);
    if (o_is_antichain(a)) out.push_back(std::move(a));
  }
  return out;
}

inline std::uint64_t o_binomial(int n, int k) {
  // Pascal's triangle.
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return (k < 0 || k > n) ? 0 : c[n][k];
}

// A naive system: closed neighborhoods as sorted vertex lists (1-based) and
// local rules as functions of the neighborhood values in ascending vertex
// order.
struct NaiveSystem {
  int n = 0;
  std::vector<std::vector<int>> nbhd;                        // index 0 unused
  std::vector<std::function<int(const std::vector<int>&)>> rule;  // index 0 unused
};

inline NaiveSystem o_threshold_system(int n, const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<int>& thresholds) {
  NaiveSystem sys;
  sys.n = n;
  sys.nbhd.resize(n + 1);
  sys.rule.resize(n + 1);
  std::vector<std::set<int>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (int i = 1; i <= n; ++i) {
    sys.nbhd[i].push_back(i);
    for (int j : adj[i]) sys.nbhd[i].push_back(j);
    std::sort(sys.nbhd[i].begin(), sys.nbhd[i].end());
    int k = thresholds[i - 1];
    sys.rule[i] = [k](const std::vector<int>& vals) {
      int sum = 0;
      for (int v : vals) sum += v;
      return sum >= k ? 1 : 0;
    };
  }
  return sys;
}

inline std::string o_inflate(const NaiveSystem& sys, int vertex, std::string state) {
  std::vector<int> vals;
  for (int v : sys.nbhd[vertex]) vals.push_back(state[v - 1] - '0');
  state[vertex - 1] = static_cast<char>('0' + sys.rule[vertex](vals));
  return state;
}

inline std::string o_sds_step(const NaiveSystem& sys, const std::vector<int>& order,
                              std::string state) {
  for (int v : order) state = o_inflate(sys, v, state);
  return state;
}

inline std::string o_pds_step(const NaiveSystem& sys, const std::string& state) {
  std::string out = state;
  for (int v = 1; v <= sys.n; ++v) {
    std::vector<int> vals;
    for (int u : sys.nbhd[v]) vals.push_back(state[u - 1] - '0');
    out[v - 1] = static_cast<char>('0' + sys.rule[v](vals));
  }
  return out;
}

/// Orbit of a state split at the first repeat: (transient, cycle), with the
/// cycle rotated to its lexicographically smallest state.
inline std::pair<std::vector<std::string>, std::vector<std::string>> o_trajectory(
    const std::function<std::string(const std::string&)>& step, std::string x) {
  std::vector<std::string> orbit;
  std::map<std::string, std::size_t> seen;
  while (!seen.count(x)) {
    seen[x] = orbit.size();
    orbit.push_back(x);
    x = step(x);
  }
  std::size_t s = seen[x];
  std::vector<std::string> transient(orbit.begin(), orbit.begin() + s);
  std::vector<std::string> cycle(orbit.begin() + s, orbit.end());
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycle.size(); ++i)
    if (cycle[i] < cycle[best]) best = i;
  std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
  return {transient, cycle};
}

inline std::vector<std::vector<int>> o_all_perms(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Schedules pi with x_{pi_1} = ... = x_{pi_k} = 0 and the rest 1, by direct
/// check over all n! permutations.
inline std::set<std::vector<int>> o_theta_zero(const std::string& x) {
  int n = static_cast<int>(x.size());
  int zeros = static_cast<int>(std::count(x.begin(), x.end(), '0'));
  std::set<std::vector<int>> out;
  for (const auto& pi : o_all_perms(n)) {
    bool ok = true;
    for (int pos = 0; pos < n; ++pos) {
      char want = pos < zeros ? '0' : '1';
      if (x[pi[pos] - 1] != want) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(pi);
  }
  return out;
}

/// Literal lower-set maximum extension over string states, visiting absent
/// states in (popcount, string) order and taking the max over the full
/// strict lower set each time.
inline std::map<std::string, int> o_monotone_extend(const std::map<std::string, int>& g,
                                                    int n) {
  std::map<std::string, int> val = g;
  auto states = o_all_states(n);
  std::vector<std::string> todo;
  for (const auto& s : states)
    if (!val.count(s)) todo.push_back(s);
  std::stable_sort(todo.begin(), todo.end(), [](const std::string& a, const std::string& b) {
    auto ca = std::count(a.begin(), a.end(), '1');
    auto cb = std::count(b.begin(), b.end(), '1');
    if (ca != cb) return ca < cb;
    return a < b;
  });
  for (const auto& y : todo) {
    int m = 0;
    for (const auto& [z, v] : val)
      if (z != y && o_leq(z, y) && v > m) m = v;
    val[y] = m;
  }
  return val;
}

}  // namespace oracle
