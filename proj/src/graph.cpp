#include "gds/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gds/state.hpp"

namespace gds {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1 || n > kMaxStateBits) throw std::invalid_argument("Graph: n out of range");
  adj_.assign(n + 1, 0);
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (i == j)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(i));
    if (adjacent(i, j))
      throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(std::min(i, j)) +
                                  "," + std::to_string(std::max(i, j)) + "}");
    adj_[i] |= std::uint32_t(1) << (j - 1);
    adj_[j] |= std::uint32_t(1) << (i - 1);
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  nbhd_.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      if (j == i || adjacent(i, j)) nbhd_[i].push_back(j);
  }
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

int Graph::degree(int i) const {
  return static_cast<int>(nbhd_[i].size()) - 1;
}

}  // namespace gds
