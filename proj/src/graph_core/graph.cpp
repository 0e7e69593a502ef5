#include "bindingfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ArgumentError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  build_lists();
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw ArgumentError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " outside vertex range");
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    auto& row = adj_[static_cast<std::size_t>(e.u)];
    if (row.contains(e.v))
      throw ArgumentError("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    row.insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  build_lists();
}

Graph Graph::from_masks(std::span<const std::uint64_t> rows) {
  if (rows.size() > 64) throw ArgumentError("from_masks supports at most 64 vertices");
  const auto n = rows.size();
  Graph g;
  g.n_ = static_cast<int>(n);
  g.adj_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((rows[v] >> v) & 1U) throw ArgumentError("self-loop in adjacency mask");
    for (auto m = rows[v]; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      if (u >= n || !((rows[u] >> v) & 1U))
        throw ArgumentError("adjacency masks are not symmetric");
    }
    g.adj_.push_back(VertexSet::from_mask(n, rows[v]));
  }
  g.build_lists();
  return g;
}

void Graph::build_lists() {
  offsets_.assign(1, 0);
  nbrs_.clear();
  offsets_.reserve(static_cast<std::size_t>(n_) + 1);
  for (const auto& row : adj_) {
    for (Vertex u : row) nbrs_.push_back(u);
    offsets_.push_back(static_cast<int>(nbrs_.size()));
  }
}

std::span<const Vertex> Graph::neighbor_list(Vertex v) const {
  if (v < 0 || v >= n_) throw ArgumentError("vertex out of range");
  const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const Vertex>(nbrs_).subspan(b, e - b);
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbor_list(v).size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbor_list(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void require_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw ArgumentError(std::string(what) + " is over a universe of " +
                        std::to_string(s.universe()) + " vertices, graph has " +
                        std::to_string(g.order()));
}

VertexSet lambda_k(const Graph& g, const VertexSet& s, int k) {
  require_vertex_set(g, s, "s");
  if (k < 1) throw ArgumentError("k must be positive");
  VertexSet out = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v)
    if ((g.neighbors(v) & s).size() >= static_cast<std::size_t>(k)) out.insert(v);
  return out;
}

namespace {

std::uint64_t grow_component(const Graph& g, std::uint64_t seed, std::uint64_t allowed) {
  std::uint64_t comp = seed;
  std::uint64_t frontier = seed;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto m = frontier; m; m &= m - 1) next |= g.row(std::countr_zero(m));
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& u) {
  require_vertex_set(g, u, "u");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<VertexSet> out;
  if (g.fits_word()) {
    std::uint64_t rest = u.mask();
    while (rest) {
      const auto comp = grow_component(g, rest & (~rest + 1), rest);
      out.push_back(VertexSet::from_mask(n, comp));
      rest &= ~comp;
    }
    return out;
  }
  VertexSet rest = u;
  while (!rest.empty()) {
    VertexSet comp(n);
    std::deque<Vertex> queue{rest.front()};
    comp.insert(rest.front());
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbor_list(v))
        if (rest.contains(w) && !comp.contains(w)) {
          comp.insert(w);
          queue.push_back(w);
        }
    }
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

int count_components(const Graph& g, const VertexSet& u) {
  if (!g.fits_word()) return static_cast<int>(components(g, u).size());
  require_vertex_set(g, u, "u");
  int count = 0;
  std::uint64_t rest = u.mask();
  while (rest) {
    rest &= ~grow_component(g, rest & (~rest + 1), rest);
    ++count;
  }
  return count;
}

std::size_t count_edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_vertex_set(g, s, "s");
  require_vertex_set(g, t, "t");
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    const bool forward = s.contains(e.u) && t.contains(e.v);
    const bool backward = t.contains(e.u) && s.contains(e.v);
    if (forward || backward) ++count;
  }
  return count;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> removed(edges.begin(), edges.end());
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  for (const Edge& e : removed)
    if (!g.has_edge(e.u, e.v))
      throw ArgumentError("cannot remove non-edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v));
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  return Graph(g.order(), kept);
}

Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges)
    if (!g.has_edge(e.u, e.v))
      throw ArgumentError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " is not in the graph");
  return Graph(g.order(), edges);
}

std::optional<VertexSet> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  VertexSet side = g.empty_set();
  for (Vertex root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] != -1) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const int c = colour[static_cast<std::size_t>(v)];
      if (c == 0) side.insert(v);
      for (Vertex w : g.neighbor_list(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - c;
          queue.push_back(w);
        } else if (cw == c) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_vertex_set(g, s, "s");
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_vertex_set(g, s, "s");
  const auto need = s.size();
  for (Vertex v : s)
    if ((g.neighbors(v) & s).size() + 1 != need) return false;
  return true;
}

bool is_complete(const Graph& g) {
  const auto n = g.order();
  return g.edge_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
}

bool is_connected(const Graph& g) { return count_components(g, g.vertices()) <= 1; }

}  // namespace bindingfactor
