#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bindingfactor/vertex_set.hpp"

namespace bindingfactor {

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbourhoods are kept both as bitsets (set algebra) and as a flat
/// ascending adjacency array (traversals). Every mutation-like operation
/// returns a new Graph, so instances can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ArgumentError on loops, repeated edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Adjacency given as one bitmask per vertex (n <= 64). Must be symmetric
  /// and loop-free.
  static Graph from_masks(std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return nbrs_.size() / 2; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> neighbor_list(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Row bitmask of v; n <= 64 only.
  std::uint64_t row(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)].mask(); }
  bool fits_word() const noexcept { return n_ <= 64; }

  VertexSet vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }
  /// Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void build_lists();

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> nbrs_;
};

/// Vertices with at least k neighbours in s (for k = 1, the neighbourhood of s).
VertexSet lambda_k(const Graph& g, const VertexSet& s, int k);

/// Connected components of the subgraph induced by u, sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& u);

/// Number of components of G[u]; allocation-free for n <= 64.
int count_components(const Graph& g, const VertexSet& u);

/// Edges with one end in s and the other in t, each edge counted once even
/// when s and t overlap; count_edges_between(g, t, t) is the edge count of G[t].
std::size_t count_edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Copy of g without the listed edges; throws ArgumentError on a non-edge.
Graph remove_edges(const Graph& g, std::span<const Edge> edges);

/// Subgraph on the same vertex set keeping only the listed edges.
Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges);

/// One side of a proper 2-colouring (each component's smallest vertex on the
/// returned side), or nullopt when g has an odd cycle.
std::optional<VertexSet> bipartition(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_complete(const Graph& g);
bool is_connected(const Graph& g);

/// Checks that s is a vertex set of g (same universe); throws ArgumentError.
void require_vertex_set(const Graph& g, const VertexSet& s, const char* what);

}  // namespace bindingfactor
