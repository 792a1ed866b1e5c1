#include "gds/schedule.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "gds/errors.hpp"

namespace gds {

UpdateSchedule::UpdateSchedule(std::vector<int> one_line) : order_(std::move(one_line)) {
  int n = static_cast<int>(order_.size());
  if (n < 1 || n > kMaxStateBits)
    throw std::invalid_argument("UpdateSchedule: size out of range");
  std::vector<bool> seen(n + 1, false);
  for (int v : order_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("UpdateSchedule: not a permutation of 1..n");
    seen[v] = true;
  }
}

UpdateSchedule UpdateSchedule::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return UpdateSchedule(std::move(v));
}

UpdateSchedule UpdateSchedule::parse(std::string_view csv) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos);
    if (tok.empty()) throw std::invalid_argument("UpdateSchedule: empty entry");
    int x = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("UpdateSchedule: invalid character in schedule");
      x = x * 10 + (c - '0');
    }
    v.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return UpdateSchedule(std::move(v));
}

std::string UpdateSchedule::str() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(order_[i]);
  }
  return out;
}

UpdateSchedule UpdateSchedule::inverse() const {
  std::vector<int> inv(order_.size());
  for (int i = 1; i <= n(); ++i) inv[at(i) - 1] = i;
  return UpdateSchedule(std::move(inv));
}

UpdateSchedule compose(const UpdateSchedule& g, const UpdateSchedule& h) {
  if (g.n() != h.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> r(g.n());
  for (int i = 1; i <= g.n(); ++i) r[i - 1] = g.at(h.at(i));
  return UpdateSchedule(std::move(r));
}

State act_state(const UpdateSchedule& g, const State& x) {
  if (g.n() != x.n()) throw std::invalid_argument("act_state: size mismatch");
  UpdateSchedule inv = g.inverse();
  std::uint32_t bits = 0;
  for (int i = 1; i <= x.n(); ++i)
    if (x.get(inv.at(i))) bits |= std::uint32_t(1) << (i - 1);
  return State(x.n(), bits);
}

UpdateSchedule act_schedule(const UpdateSchedule& g, const UpdateSchedule& pi) {
  if (g.n() != pi.n()) throw std::invalid_argument("act_schedule: size mismatch");
  UpdateSchedule inv = g.inverse();
  std::vector<int> r(pi.n());
  for (int i = 1; i <= pi.n(); ++i) r[i - 1] = pi.at(inv.at(i));
  return UpdateSchedule(std::move(r));
}

UpdateSchedule tau_shift(const UpdateSchedule& pi, int k) {
  int n = pi.n();
  k = ((k % n) + n) % n;
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = pi.at(((i + k) % n) + 1);
  return UpdateSchedule(std::move(r));
}

AlphaClass alpha_class(const Graph& g, const UpdateSchedule& pi, std::size_t cap) {
  if (g.n() != pi.n()) throw std::invalid_argument("alpha_class: size mismatch");
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(pi.order());
  queue.push_back(pi.order());
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k + 1 < g.n(); ++k) {
      if (g.adjacent(cur[k], cur[k + 1])) continue;
      std::swap(cur[k], cur[k + 1]);
      if (seen.insert(cur).second) {
        if (seen.size() > cap) throw CapExceeded("alpha_class: class size exceeds cap");
        queue.push_back(cur);
      }
      std::swap(cur[k], cur[k + 1]);
    }
  }
  AlphaClass out{pi, {}};
  out.members.reserve(seen.size());
  for (const auto& v : seen) out.members.push_back(UpdateSchedule(v));
  return out;
}

std::vector<State> s_orbit(const Graph& g, const UpdateSchedule& pi, SKind kind, int k,
                           std::size_t cap) {
  State base = s_state(kind, k, g.n());
  std::set<State> orbit;
  for (const UpdateSchedule& sigma : alpha_class(g, pi, cap).members)
    orbit.insert(act_state(sigma, base));
  return {orbit.begin(), orbit.end()};
}

namespace {

std::vector<int> vertices_with_value(const State& x, bool value) {
  std::vector<int> out;
  for (int i = 1; i <= x.n(); ++i)
    if (x.get(i) == value) out.push_back(i);
  return out;
}

}  // namespace

ThetaSet theta_set(const State& x, ThetaKind kind, bool materialize, std::size_t cap) {
  ThetaSet out;
  out.x = x;
  out.kind = kind;
  int zeros = x.count_zeros();
  out.size = factorial128(zeros) * factorial128(x.n() - zeros);
  if (!materialize) return out;
  if (out.size > static_cast<uint128>(cap))
    throw CapExceeded("theta_set: materialization exceeds cap");

  // Members are exactly (any order of the prefix block)(any order of the
  // suffix block); nested next_permutation yields them lexicographically.
  std::vector<int> prefix = vertices_with_value(x, kind == ThetaKind::one);
  std::vector<int> suffix = vertices_with_value(x, kind != ThetaKind::one);
  std::vector<UpdateSchedule> members;
  members.reserve(static_cast<std::size_t>(out.size));
  do {
    std::vector<int> suf = suffix;
    std::sort(suf.begin(), suf.end());
    do {
      std::vector<int> full = prefix;
      full.insert(full.end(), suf.begin(), suf.end());
      members.push_back(UpdateSchedule(std::move(full)));
    } while (std::next_permutation(suf.begin(), suf.end()));
  } while (std::next_permutation(prefix.begin(), prefix.end()));
  out.members = std::move(members);
  return out;
}

bool theta_disjointness_check(const State& x, const State& y, std::size_t cap) {
  if (x.n() != y.n())
    throw std::invalid_argument("theta_disjointness_check: dimension mismatch");
  auto tx = theta_set(x, ThetaKind::zero, true, cap);
  auto ty = theta_set(y, ThetaKind::zero, true, cap);
  std::set<UpdateSchedule> sx(tx.members->begin(), tx.members->end());
  for (const UpdateSchedule& s : *ty.members)
    if (sx.count(s)) return false;
  return true;
}

}  // namespace gds
