#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gds/state.hpp"

namespace gds {

enum class FnType { threshold, table };

/// A Boolean function on a vertex's closed neighborhood.
///
/// Two representations: a simple threshold (1 iff at least k inputs are 1)
/// or an explicit truth table with 2^arity entries. Table entries are indexed
/// with the smallest neighborhood vertex as the most significant bit, i.e.
/// entry index of an assignment equals State::lex_index().
class LocalFunction {
 public:
  static LocalFunction threshold(int arity, int k);
  static LocalFunction table(int arity, std::vector<bool> bits);
  static LocalFunction table(int arity, std::string_view bits01);

  int arity() const { return arity_; }
  FnType type() const { return type_; }
  int threshold_k() const;                 // valid for threshold functions
  const std::vector<bool>& bits() const;   // valid for table functions
  std::string bits_str() const;            // table form as a 0/1 string

  /// Evaluate on an assignment of the closed neighborhood, given as a State
  /// of length arity whose coordinate j is the value of the j-th smallest
  /// neighborhood vertex. Throws on arity mismatch.
  bool eval(const State& assignment) const;

  /// Truth-table form of this function (tabulates thresholds).
  std::vector<bool> tabulate() const;

  friend bool operator==(const LocalFunction& a, const LocalFunction& b) {
    return a.arity_ == b.arity_ && a.type_ == b.type_ && a.k_ == b.k_ && a.bits_ == b.bits_;
  }

 private:
  LocalFunction(int arity, FnType type) : arity_(arity), type_(type) {}
  int arity_ = 0;
  FnType type_ = FnType::threshold;
  int k_ = 0;
  std::vector<bool> bits_;
};

/// Assignment whose truth-table index is `index` (inverse of lex_index()).
State assignment_from_index(std::uint32_t index, int arity);

struct MonotonicityVerdict {
  bool monotone = false;
  /// Violating covering pair (x, y) with leq(x, y), f(x)=1, f(y)=0.
  /// Present iff monotone is false.
  std::optional<std::pair<State, State>> witness;
};

/// Exhaustive monotonicity check over all covering pairs. Assignments are
/// scanned in increasing truth-table index order, flipping zero coordinates
/// in ascending order, so the reported witness is deterministic.
MonotonicityVerdict is_monotone_total(const LocalFunction& f, int arity_cap = kDefaultNCap);

/// A Boolean function defined on a subset of F_2^n.
class PartialFunction {
 public:
  explicit PartialFunction(int n);

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const State& x) const;
  std::optional<bool> get(const State& x) const;

  /// Define g(x) = value. Throws on dimension mismatch or a conflicting
  /// redefinition of the same point.
  void set(const State& x, bool value);

  /// Domain/value pairs ordered by State's canonical order.
  std::vector<std::pair<State, bool>> items() const;

 private:
  int n_ = 0;
  std::map<std::uint32_t, bool> entries_;  // keyed by packed bits
};

/// Monotonicity over all comparable pairs within the domain only.
MonotonicityVerdict is_monotone_partial(const PartialFunction& g);

/// Extends a monotone partial function to a monotone total function on
/// F_2^n, returned as a truth table of arity n.
///
/// States outside the domain are visited in increasing popcount order (ties
/// by lex index) and assigned the maximum of the already-assigned values on
/// their strict lower set, with 0 for an empty lower set. The visiting order
/// is any linear extension of the lattice order, so every state's full lower
/// set is assigned when it is reached and the result is order-independent.
///
/// Throws NotMonotone (carrying the witness pair) on non-monotone input.
LocalFunction monotone_extend(const PartialFunction& g);

}  // namespace gds
