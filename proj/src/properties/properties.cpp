#include "bindingfactor/properties.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/max_flow.hpp"

namespace bindingfactor {

Toughness toughness(const Graph& g, int max_order) {
  const int n = g.order();
  if (is_complete(g)) return Toughness{true, Rational(0)};
  if (n > max_order || n > 64)
    throw CapacityError("toughness enumerates all vertex subsets",
                        static_cast<std::size_t>(std::min(max_order, 64)));
  const auto nn = static_cast<std::size_t>(n);
  const std::uint64_t all = low_mask(nn);
  bool found = false;
  Rational best(0);
  for (std::uint64_t s = 0; s <= all; ++s) {
    const int c = count_components(g, VertexSet::from_mask(nn, all & ~s));
    if (c <= 1) continue;
    const Rational ratio(std::popcount(s), c);
    if (!found || ratio < best) {
      best = ratio;
      found = true;
    }
  }
  return Toughness{false, best};
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  int run(std::uint64_t candidates) {
    expand(candidates, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t cand, int size) {
    if (!cand) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy colouring: colour classes are independent in adj_, so a clique
    // inside cand uses at most one vertex per class.
    std::vector<std::pair<int, int>> order;
    std::uint64_t uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t avail = uncoloured;
      while (avail) {
        const int v = std::countr_zero(avail);
        const std::uint64_t bit = std::uint64_t{1} << v;
        avail &= ~bit & ~adj_[static_cast<std::size_t>(v)];
        uncoloured &= ~bit;
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (size + it->second <= best_) return;
      const int v = it->first;
      expand(cand & adj_[static_cast<std::size_t>(v)], size + 1);
      cand &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

}  // namespace

int independence_number(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order || n > 64)
    throw CapacityError("independence number search",
                        static_cast<std::size_t>(std::min(max_order, 64)));
  const std::uint64_t all = low_mask(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> complement(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    complement[static_cast<std::size_t>(v)] = all & ~g.row(v) & ~(std::uint64_t{1} << v);
  return CliqueSearch(std::move(complement)).run(all);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return std::max(n - 1, 0);
  if (!is_connected(g)) return 0;
  constexpr std::int64_t kUnbounded = std::numeric_limits<int>::max();
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      // Vertex v splits into in-node 2v and out-node 2v+1 joined by capacity 1.
      MaxFlow network(2 * n);
      for (Vertex v = 0; v < n; ++v) {
        network.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kUnbounded : 1);
        for (Vertex w : g.neighbor_list(v)) network.add_arc(2 * v + 1, 2 * w, kUnbounded);
      }
      best = std::min<int>(best, static_cast<int>(network.solve(2 * s + 1, 2 * t)));
    }
  }
  return best;
}

std::pair<int, int> degree_extremes(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("degree extremes of the empty graph");
  int lo = g.degree(0);
  int hi = lo;
  for (Vertex v = 1; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi};
}

}  // namespace bindingfactor
