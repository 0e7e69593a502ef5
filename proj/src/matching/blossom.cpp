#include <numeric>
#include <queue>
#include <vector>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/matching.hpp"

namespace bindingfactor {

namespace {

// Edmonds' blossom algorithm with explicit base tracking, O(n^3).
class Blossom {
 public:
  Blossom(const Graph& g, const VertexSet& alive)
      : g_(g), alive_(alive), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_), seen_(n_) {}

  std::vector<int> run() {
    // Greedy start; ascending order keeps the outcome reproducible.
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_.contains(v) || match_[v] != -1) continue;
      for (Vertex w : g_.neighbor_list(v))
        if (alive_.contains(w) && match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (!alive_.contains(root) || match_[root] != -1) continue;
      for (int t = find_augmenting_path(root); t != -1;) {
        const int pt = parent_[t];
        const int next = match_[pt];
        match_[t] = pt;
        match_[pt] = t;
        t = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::fill(seen_.begin(), seen_.end(), false);
    for (;;) {
      a = base_[a];
      seen_[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    std::queue<int> queue;
    used_[root] = true;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbor_list(v)) {
        if (!alive_.contains(to) || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  const VertexSet& alive_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> seen_;
};

}  // namespace

Matching max_matching(const Graph& g) { return max_matching(g, g.vertices()); }

Matching max_matching(const Graph& g, const VertexSet& alive) {
  require_vertex_set(g, alive, "alive");
  const auto mate = Blossom(g, alive).run();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  return Matching::from_edges(static_cast<std::size_t>(g.order()), std::move(edges));
}

}  // namespace bindingfactor
