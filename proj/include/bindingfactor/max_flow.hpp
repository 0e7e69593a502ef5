#pragma once

#include <cstdint>
#include <vector>

namespace bindingfactor {

/// Dinic's algorithm on an explicit residual network with integral
/// capacities. Arcs are kept in insertion order, so flows are deterministic.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  /// Returns the arc id (flow on it is readable after solve()).
  int add_arc(int from, int to, std::int64_t capacity);
  std::int64_t solve(int source, int sink);

  std::int64_t flow(int arc) const;
  int node_count() const noexcept { return static_cast<int>(head_.size()); }
  /// Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t capacity;
    std::int64_t original;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int v, int sink, std::int64_t limit);

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace bindingfactor
