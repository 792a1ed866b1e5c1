#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gds/graph.hpp"
#include "gds/rational.hpp"
#include "gds/state.hpp"

namespace gds {

/// Default cap on alpha-class sizes and theta-set materialization. Both can
/// be factorial in n, so enumeration fails loudly instead of truncating.
inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// A permutation of the vertices 1..n in one-line form. Doubles as an update
/// schedule (the order vertices fire) and as a group element acting on states
/// and schedules.
class UpdateSchedule {
 public:
  explicit UpdateSchedule(std::vector<int> one_line);
  static UpdateSchedule identity(int n);
  static UpdateSchedule parse(std::string_view csv);  // "2,4,1"

  int n() const { return static_cast<int>(order_.size()); }
  int at(int pos) const { return order_[pos - 1]; }  // 1-based position
  const std::vector<int>& order() const { return order_; }
  std::string str() const;

  UpdateSchedule inverse() const;

  friend bool operator==(const UpdateSchedule& a, const UpdateSchedule& b) {
    return a.order_ == b.order_;
  }
  friend bool operator<(const UpdateSchedule& a, const UpdateSchedule& b) {
    return a.order_ < b.order_;
  }

 private:
  std::vector<int> order_;
};

/// Composition (g o h)(i) = g(h(i)).
UpdateSchedule compose(const UpdateSchedule& g, const UpdateSchedule& h);

/// Left action of S_n on states: coordinate i of the result is x_{g^-1(i)}.
State act_state(const UpdateSchedule& g, const State& x);

/// Left action on schedules: entry i of the result is pi_{g^-1(i)}.
UpdateSchedule act_schedule(const UpdateSchedule& g, const UpdateSchedule& pi);

/// Cyclic left rotation by k (mod n): pi_{k+1} ... pi_n pi_1 ... pi_k.
UpdateSchedule tau_shift(const UpdateSchedule& pi, int k);

/// The alpha-equivalence class of a schedule: its closure under swapping
/// consecutive entries that are non-adjacent in G. All members induce the
/// same composite update map.
struct AlphaClass {
  UpdateSchedule representative;
  std::vector<UpdateSchedule> members;  // lexicographic order
};

/// BFS closure over the legal-swap move set. Throws CapExceeded if the class
/// grows past `cap` (it is factorial for sparse graphs).
AlphaClass alpha_class(const Graph& g, const UpdateSchedule& pi,
                       std::size_t cap = kDefaultClassCap);

/// The orbit [S_{kind,k}]_pi = { sigma . s_state(kind,k,n) : sigma in
/// [pi]_alpha }, deduplicated and sorted.
std::vector<State> s_orbit(const Graph& g, const UpdateSchedule& pi, SKind kind, int k,
                           std::size_t cap = kDefaultClassCap);

enum class ThetaKind { zero, one };

/// The schedules that present X as a split state: for kind zero, those pi
/// with x_{pi_1} = ... = x_{pi_k} = 0 and the rest 1 (k = number of zero
/// coordinates of X). |theta| = z! * (n-z)! where z = count of zeros.
struct ThetaSet {
  State x;
  ThetaKind kind = ThetaKind::zero;
  uint128 size = 0;
  std::optional<std::vector<UpdateSchedule>> members;  // lexicographic when materialized
};

ThetaSet theta_set(const State& x, ThetaKind kind, bool materialize,
                   std::size_t cap = kDefaultClassCap);

/// Brute-force oracle for the disjointness lemma: materializes theta_0(X) and
/// theta_0(Y) and reports whether their intersection is empty.
bool theta_disjointness_check(const State& x, const State& y,
                              std::size_t cap = kDefaultClassCap);

}  // namespace gds
