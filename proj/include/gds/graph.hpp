#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gds {

/// Simple undirected graph on vertices 1..n (no loops, no duplicate edges).
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph edgeless(int n);

  int n() const { return n_; }
  bool adjacent(int i, int j) const { return (adj_[i] >> (j - 1)) & 1u; }
  int degree(int i) const;

  /// N[i] = {i} union neighbors, sorted ascending.
  const std::vector<int>& closed_neighborhood(int i) const { return nbhd_[i]; }

  /// Normalized edge list (i < j, sorted).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint32_t> adj_;        // adjacency bitmask rows, 1-based
  std::vector<std::vector<int>> nbhd_;    // closed neighborhoods, 1-based
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace gds
