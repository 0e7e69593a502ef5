#include "bindingfactor/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

MaxFlow::MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count())
    throw ArgumentError("flow arc endpoint out of range");
  if (capacity < 0) throw ArgumentError("negative capacity");
  const int id = static_cast<int>(arcs_.size());
  // Appending keeps each node's arc list in reverse insertion order; solve()
  // reverses the lists once so traversal follows insertion order.
  arcs_.push_back({to, head_[static_cast<std::size_t>(from)], capacity, capacity});
  head_[static_cast<std::size_t>(from)] = id;
  arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0, 0});
  head_[static_cast<std::size_t>(to)] = id + 1;
  return id;
}

std::int64_t MaxFlow::flow(int arc) const {
  const auto& a = arcs_.at(static_cast<std::size_t>(arc));
  return a.original - a.capacity;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> queue;
  level_[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const auto& a = arcs_[static_cast<std::size_t>(e)];
      if (a.capacity > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::push(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (int& e = cursor_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
    auto& a = arcs_[static_cast<std::size_t>(e)];
    if (a.capacity <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1)
      continue;
    const auto pushed = push(a.to, sink, std::min(limit, a.capacity));
    if (pushed > 0) {
      a.capacity -= pushed;
      arcs_[static_cast<std::size_t>(e ^ 1)].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::solve(int source, int sink) {
  if (source == sink) throw ArgumentError("source equals sink");
  // Reverse every adjacency list once so arcs are scanned in insertion order.
  for (auto& h : head_) {
    int prev = -1;
    for (int e = h; e != -1;) {
      const int next = arcs_[static_cast<std::size_t>(e)].next;
      arcs_[static_cast<std::size_t>(e)].next = prev;
      prev = e;
      e = next;
    }
    h = prev;
  }
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_ = head_;
    while (const auto pushed = push(source, sink, std::numeric_limits<std::int64_t>::max()))
      total += pushed;
  }
  // Restore the construction-time list order for any later solve().
  for (auto& h : head_) {
    int prev = -1;
    for (int e = h; e != -1;) {
      const int next = arcs_[static_cast<std::size_t>(e)].next;
      arcs_[static_cast<std::size_t>(e)].next = prev;
      prev = e;
      e = next;
    }
    h = prev;
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::queue<int> queue;
  seen[static_cast<std::size_t>(source)] = true;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const auto& a = arcs_[static_cast<std::size_t>(e)];
      if (a.capacity > 0 && !seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace bindingfactor
