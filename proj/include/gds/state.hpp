#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gds/rational.hpp"

namespace gds {

/// Hard storage limit for packed states (bits live in a uint32_t).
inline constexpr int kMaxStateBits = 30;

/// Default cap for operations that enumerate or allocate 2^n states.
inline constexpr int kDefaultNCap = 24;

/// A system configuration: one bit per vertex of F_2^n.
///
/// Vertices are 1-based externally; bit j-1 of `bits` holds the state x_j of
/// vertex j. The text form is an n-character '0'/'1' string whose j-th
/// character (left to right) is x_j, so "011" means x_1=0, x_2=1, x_3=1.
class State {
 public:
  State() = default;
  State(int n, std::uint32_t bits);  // throws if bits has a set bit at position >= n

  static State zeros(int n) { return State(n, 0); }
  static State ones(int n);
  static State parse(std::string_view text);

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  std::string str() const;

  bool get(int vertex) const { return (bits_ >> (vertex - 1)) & 1u; }
  State with(int vertex, bool value) const;
  State flipped(int vertex) const { return with(vertex, !get(vertex)); }

  int count_ones() const;
  int count_zeros() const { return n_ - count_ones(); }

  /// Numeric value of str() read as a binary number (vertex 1 = most
  /// significant bit). This is the canonical ordering/indexing key used for
  /// truth-table indices, cycle rotation, and all deterministic enumeration
  /// orders; it coincides with lexicographic order of the string form.
  std::uint32_t lex_index() const;

  friend bool operator==(const State& a, const State& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Total container/display order by (n, lex_index). This is NOT the
  /// coordinatewise lattice order; see leq().
  friend bool operator<(const State& a, const State& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.lex_index() < b.lex_index();
  }

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// Coordinatewise partial order on F_2^n: true iff x_i <= y_i for all i.
/// Throws std::invalid_argument on dimension mismatch.
bool leq(const State& x, const State& y);

/// true iff leq(x, y) or leq(y, x).
bool comparable(const State& x, const State& y);

enum class SKind { S0, S1 };

/// The split states S_{0,k} / S_{1,k}: S0 has zeros in coordinates 1..k and
/// ones in k+1..n; S1 is the complementary pattern (ones then zeros).
State s_state(SKind kind, int k, int n);

/// true iff no two distinct members are comparable under leq.
/// Empty and singleton sets are antichains. Duplicates are ignored.
bool is_antichain(const std::vector<State>& a);

/// Per-level counts and the exact LYM sum of a state set.
struct LymReport {
  int n = 0;
  std::map<int, std::uint64_t> counts;  // k (zero-coordinate count) -> a_k
  Rational lym_sum;                     // sum_k a_k / C(n,k), exact
  bool antichain = false;
};

/// Counts members by number of zero coordinates and forms the exact rational
/// sum_k a_k / C(n,k). The report is computed whether or not the input is an
/// antichain; the LYM bound (sum <= 1) is only a theorem for antichains.
LymReport lym_report(const std::vector<State>& a);

/// C(n, floor(n/2)): the Sperner bound on antichain size in F_2^n.
std::uint64_t sperner_bound(int n);

/// Exact binomial coefficient; throws on overflow (n > 62) or bad arguments.
std::uint64_t binomial(int n, int k);

}  // namespace gds
