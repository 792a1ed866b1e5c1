#include "gds/local_function.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gds/errors.hpp"

namespace gds {

LocalFunction LocalFunction::threshold(int arity, int k) {
  if (arity < 1 || arity > kMaxStateBits)
    throw std::invalid_argument("LocalFunction: arity out of range");
  if (k < 0) throw std::invalid_argument("LocalFunction: threshold k must be >= 0");
  LocalFunction f(arity, FnType::threshold);
  f.k_ = k;
  return f;
}

LocalFunction LocalFunction::table(int arity, std::vector<bool> bits) {
  if (arity < 1 || arity > kMaxStateBits)
    throw std::invalid_argument("LocalFunction: arity out of range");
  if (bits.size() != (std::size_t(1) << arity))
    throw std::invalid_argument("LocalFunction: table length != 2^arity");
  LocalFunction f(arity, FnType::table);
  f.bits_ = std::move(bits);
  return f;
}

LocalFunction LocalFunction::table(int arity, std::string_view bits01) {
  std::vector<bool> bits;
  bits.reserve(bits01.size());
  for (char c : bits01) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("LocalFunction: table bits must be 0/1");
    bits.push_back(c == '1');
  }
  return table(arity, std::move(bits));
}

int LocalFunction::threshold_k() const {
  if (type_ != FnType::threshold)
    throw std::logic_error("LocalFunction: not a threshold function");
  return k_;
}

const std::vector<bool>& LocalFunction::bits() const {
  if (type_ != FnType::table) throw std::logic_error("LocalFunction: not a table function");
  return bits_;
}

std::string LocalFunction::bits_str() const {
  std::vector<bool> t = tabulate();
  std::string out(t.size(), '0');
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i]) out[i] = '1';
  return out;
}

bool LocalFunction::eval(const State& assignment) const {
  if (assignment.n() != arity_)
    throw std::invalid_argument("LocalFunction::eval: arity mismatch");
  if (type_ == FnType::threshold) return assignment.count_ones() >= k_;
  return bits_[assignment.lex_index()];
}

std::vector<bool> LocalFunction::tabulate() const {
  if (type_ == FnType::table) return bits_;
  std::vector<bool> t(std::size_t(1) << arity_);
  for (std::uint32_t idx = 0; idx < t.size(); ++idx)
    t[idx] = std::popcount(idx) >= k_;  // popcount is index-convention agnostic
  return t;
}

State assignment_from_index(std::uint32_t index, int arity) {
  std::uint32_t bits = 0;
  for (int j = 1; j <= arity; ++j)
    bits |= ((index >> (arity - j)) & 1u) << (j - 1);
  return State(arity, bits);
}

MonotonicityVerdict is_monotone_total(const LocalFunction& f, int arity_cap) {
  int m = f.arity();
  if (m > arity_cap) throw CapExceeded("is_monotone_total: arity exceeds cap");
  // Covering pairs suffice: any comparable pair decomposes into single-bit
  // steps. Scan order fixes the reported witness.
  for (std::uint32_t idx = 0; idx < (std::uint32_t(1) << m); ++idx) {
    State x = assignment_from_index(idx, m);
    if (!f.eval(x)) continue;
    for (int c = 1; c <= m; ++c) {
      if (x.get(c)) continue;
      State y = x.with(c, true);
      if (!f.eval(y)) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

PartialFunction::PartialFunction(int n) : n_(n) {
  if (n < 1 || n > kMaxStateBits)
    throw std::invalid_argument("PartialFunction: n out of range");
}

bool PartialFunction::contains(const State& x) const {
  return x.n() == n_ && entries_.count(x.bits()) != 0;
}

std::optional<bool> PartialFunction::get(const State& x) const {
  if (x.n() != n_) throw std::invalid_argument("PartialFunction: dimension mismatch");
  auto it = entries_.find(x.bits());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PartialFunction::set(const State& x, bool value) {
  if (x.n() != n_) throw std::invalid_argument("PartialFunction: dimension mismatch");
  auto [it, inserted] = entries_.emplace(x.bits(), value);
  if (!inserted && it->second != value)
    throw std::invalid_argument("PartialFunction: conflicting value for " + x.str());
}

std::vector<std::pair<State, bool>> PartialFunction::items() const {
  std::vector<std::pair<State, bool>> out;
  out.reserve(entries_.size());
  for (const auto& [bits, v] : entries_) out.emplace_back(State(n_, bits), v);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MonotonicityVerdict is_monotone_partial(const PartialFunction& g) {
  auto items = g.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j) continue;
      const auto& [x, gx] = items[i];
      const auto& [y, gy] = items[j];
      if (leq(x, y) && gx && !gy) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

LocalFunction monotone_extend(const PartialFunction& g) {
  MonotonicityVerdict v = is_monotone_partial(g);
  if (!v.monotone)
    throw NotMonotone("monotone_extend: input not monotone on its domain",
                      std::make_pair(v.witness->first.str(), v.witness->second.str()));

  int n = g.n();
  std::size_t size = std::size_t(1) << n;
  std::vector<std::int8_t> val(size, -1);
  for (const auto& [x, b] : g.items()) val[x.bits()] = b ? 1 : 0;

  // Linear extension of the lattice order: popcount, then lex index. Every
  // state strictly below u is assigned by the time u is visited, so the max
  // over the lower set equals the max over the immediate lower covers.
  std::vector<std::uint32_t> todo;
  for (std::uint32_t u = 0; u < size; ++u)
    if (val[u] < 0) todo.push_back(u);
  std::sort(todo.begin(), todo.end(), [n](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return State(n, a).lex_index() < State(n, b).lex_index();
  });
  for (std::uint32_t u : todo) {
    std::int8_t m = 0;  // empty lower set defaults to 0
    for (std::uint32_t rest = u; rest != 0; rest &= rest - 1) {
      std::uint32_t low = u & ~(rest & (~rest + 1));
      if (val[low] > m) m = val[low];
    }
    val[u] = m;
  }

  std::vector<bool> table(size);
  for (std::uint32_t u = 0; u < size; ++u)
    table[State(n, u).lex_index()] = val[u] > 0;
  return LocalFunction::table(n, std::move(table));
}

}  // namespace gds
