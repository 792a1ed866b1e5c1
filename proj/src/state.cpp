#include "gds/state.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gds {

// --- 128-bit helpers ---------------------------------------------------

std::string u128_str(uint128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

uint128 u128_gcd(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint128 factorial128(int n) {
  if (n < 0 || n > 34) throw std::invalid_argument("factorial128: n out of range");
  uint128 r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint128>(i);
  return r;
}

Rational Rational::make(uint128 n, uint128 d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  uint128 g = u128_gcd(n, d);
  if (g == 0) g = 1;  // n == 0
  return Rational{n / g, d / g};
}

std::string Rational::str() const { return u128_str(num) + "/" + u128_str(den); }

// --- State -------------------------------------------------------------

State::State(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxStateBits) throw std::invalid_argument("State: n out of range");
  if (n < 32 && (bits >> n) != 0)
    throw std::invalid_argument("State: set bit at position >= n");
}

State State::ones(int n) {
  if (n < 1 || n > kMaxStateBits) throw std::invalid_argument("State: n out of range");
  return State(n, (std::uint32_t(1) << n) - 1);
}

State State::parse(std::string_view text) {
  int n = static_cast<int>(text.size());
  if (n < 1 || n > kMaxStateBits)
    throw std::invalid_argument("State: text length out of range");
  std::uint32_t bits = 0;
  for (int j = 0; j < n; ++j) {
    char c = text[j];
    if (c == '1')
      bits |= std::uint32_t(1) << j;
    else if (c != '0')
      throw std::invalid_argument("State: invalid character in state string");
  }
  return State(n, bits);
}

std::string State::str() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j)
    if ((bits_ >> j) & 1u) out[j] = '1';
  return out;
}

State State::with(int vertex, bool value) const {
  if (vertex < 1 || vertex > n_) throw std::invalid_argument("State: vertex out of range");
  std::uint32_t mask = std::uint32_t(1) << (vertex - 1);
  return State(n_, value ? (bits_ | mask) : (bits_ & ~mask));
}

int State::count_ones() const { return std::popcount(bits_); }

std::uint32_t State::lex_index() const {
  std::uint32_t idx = 0;
  for (int j = 1; j <= n_; ++j)
    idx = (idx << 1) | ((bits_ >> (j - 1)) & 1u);
  return idx;
}

// --- Order and antichains ----------------------------------------------

bool leq(const State& x, const State& y) {
  if (x.n() != y.n()) throw std::invalid_argument("leq: dimension mismatch");
  return (x.bits() & ~y.bits()) == 0;
}

bool comparable(const State& x, const State& y) { return leq(x, y) || leq(y, x); }

State s_state(SKind kind, int k, int n) {
  if (n < 1 || n > kMaxStateBits) throw std::invalid_argument("s_state: n out of range");
  if (k < 0 || k > n) throw std::invalid_argument("s_state: k out of range");
  std::uint32_t all = (std::uint32_t(1) << n) - 1;
  std::uint32_t low = (std::uint32_t(1) << k) - 1;  // coordinates 1..k
  return State(n, kind == SKind::S0 ? (all & ~low) : low);
}

namespace {

std::vector<State> dedup(const std::vector<State>& a) {
  std::vector<State> v = a;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty()) {
    for (const State& s : v)
      if (s.n() != v.front().n())
        throw std::invalid_argument("state set: members have mixed dimensions");
  }
  return v;
}

}  // namespace

bool is_antichain(const std::vector<State>& a) {
  std::vector<State> v = dedup(a);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (comparable(v[i], v[j])) return false;
  return true;
}

LymReport lym_report(const std::vector<State>& a) {
  std::vector<State> v = dedup(a);
  LymReport rep;
  rep.antichain = is_antichain(v);
  if (v.empty()) {
    rep.lym_sum = Rational::make(0, 1);
    return rep;
  }
  rep.n = v.front().n();
  for (const State& s : v) ++rep.counts[s.count_zeros()];
  // Exact sum over the common denominator n!: a_k / C(n,k) = a_k k! (n-k)! / n!.
  uint128 num = 0;
  for (const auto& [k, ak] : rep.counts)
    num += static_cast<uint128>(ak) * factorial128(k) * factorial128(rep.n - k);
  rep.lym_sum = Rational::make(num, factorial128(rep.n));
  return rep;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 62) throw std::invalid_argument("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint128 r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<uint128>(n - k + i) / static_cast<uint128>(i);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t sperner_bound(int n) {
  if (n < 1) throw std::invalid_argument("sperner_bound: n must be positive");
  return binomial(n, n / 2);
}

}  // namespace gds
