#include <algorithm>
#include <bit>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/matching.hpp"
#include "bindingfactor/max_flow.hpp"

namespace bindingfactor {

namespace {

constexpr int kHallMaxSide = 30;

void require_side(const Graph& g, const VertexSet& x) {
  require_vertex_set(g, x, "x");
  if (!is_independent(g, x)) throw ArgumentError("side x is not an independent set");
}

void require_bipartite_side(const Graph& g, const VertexSet& x) {
  require_side(g, x);
  if (!is_independent(g, x.complement()))
    throw ArgumentError("complement of x is not independent; x is not a bipartition side");
}

// Submasks of `pool` in ascending numeric order, starting with the empty set.
template <typename Visit>
bool ascending_submasks(std::uint64_t pool, Visit&& visit) {
  std::uint64_t s = 0;
  for (;;) {
    if (visit(s)) return true;
    if (s == pool) return false;
    s = (s - pool) & pool;
  }
}

}  // namespace

std::optional<VertexSet> hall_violator(const Graph& g, const VertexSet& x) {
  require_side(g, x);
  if (x.size() > static_cast<std::size_t>(kHallMaxSide) || !g.fits_word())
    throw CapacityError("hall_violator enumerates subsets of x", kHallMaxSide);
  std::uint64_t found = 0;
  const bool any = ascending_submasks(x.mask(), [&](std::uint64_t s) {
    std::uint64_t nbrs = 0;
    for (auto m = s; m; m &= m - 1) nbrs |= g.row(std::countr_zero(m));
    if (std::popcount(nbrs) < std::popcount(s)) {
      found = s;
      return true;
    }
    return false;
  });
  if (!any) return std::nullopt;
  return VertexSet::from_mask(static_cast<std::size_t>(g.order()), found);
}

int lebensold_value(const Graph& g, const VertexSet& x, const VertexSet& s, int k) {
  require_side(g, x);
  require_vertex_set(g, s, "s");
  if (!s.is_subset_of(x)) throw ArgumentError("s must be a subset of x");
  if (k < 1) throw ArgumentError("k must be positive");
  int total = 0;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (x.contains(y)) continue;
    total += std::min<int>(k, static_cast<int>((g.neighbors(y) & s).size()));
  }
  return total;
}

std::variant<MatchingFamily, VertexSet> disjoint_x_covering_matchings(const Graph& g,
                                                                      const VertexSet& x,
                                                                      int k) {
  require_bipartite_side(g, x);
  if (k < 1) throw ArgumentError("k must be positive");
  const int n = g.order();
  const int source = n;
  const int sink = n + 1;
  MaxFlow network(n + 2);
  std::vector<std::pair<Edge, int>> edge_arcs;
  for (Vertex v = 0; v < n; ++v) {
    if (x.contains(v)) {
      network.add_arc(source, v, k);
      for (Vertex y : g.neighbor_list(v)) edge_arcs.emplace_back(Edge(v, y), network.add_arc(v, y, 1));
    } else {
      network.add_arc(v, sink, k);
    }
  }
  const auto flow = network.solve(source, sink);
  const auto need = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(x.size());

  if (flow == need) {
    std::vector<Edge> chosen;
    for (const auto& [e, arc] : edge_arcs)
      if (network.flow(arc) == 1) chosen.push_back(e);
    const Graph sub = spanning_subgraph(g, chosen);
    const auto colours = bipartite_edge_color(sub, k);
    std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(k));
    for (const auto& [e, c] : colours) classes[static_cast<std::size_t>(c)].push_back(e);
    MatchingFamily family;
    for (auto& cls : classes) {
      Matching m = Matching::from_edges(static_cast<std::size_t>(n), std::move(cls));
      if (!x.is_subset_of(m.covered)) throw Error("internal: colour class does not cover x");
      family.push_back(std::move(m));
    }
    return family;
  }

  if (g.fits_word() && x.size() <= static_cast<std::size_t>(kLebensoldExhaustiveMax)) {
    std::uint64_t found = 0;
    ascending_submasks(x.mask(), [&](std::uint64_t s) {
      const auto set = VertexSet::from_mask(static_cast<std::size_t>(n), s);
      if (lebensold_value(g, x, set, k) < k * std::popcount(s)) {
        found = s;
        return true;
      }
      return false;
    });
    return VertexSet::from_mask(static_cast<std::size_t>(n), found);
  }
  const auto reach = network.source_side(source);
  VertexSet violator(static_cast<std::size_t>(n));
  for (Vertex v : x)
    if (reach[static_cast<std::size_t>(v)]) violator.insert(v);
  return violator;
}

std::map<Edge, int> bipartite_edge_color(const Graph& g, int k) {
  if (!bipartition(g)) throw ArgumentError("edge colouring requires a bipartite graph");
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > k)
      throw ArgumentError("k = " + std::to_string(k) + " is below the maximum degree");
  // at[v][c]: neighbour joined to v by the edge of colour c, or -1.
  std::vector<std::vector<int>> at(static_cast<std::size_t>(n),
                                   std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), -1));
  auto free_colour = [&](Vertex v) {
    const auto& row = at[static_cast<std::size_t>(v)];
    return static_cast<int>(std::find(row.begin(), row.end(), -1) - row.begin());
  };
  for (const Edge& e : g.edges()) {
    const int a = free_colour(e.u);
    const int b = free_colour(e.v);
    if (at[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(a)] != -1) {
      // Swap colours a and b along the alternating path that starts at e.v
      // with colour a. In a bipartite graph the path cannot reach e.u.
      std::vector<std::pair<int, int>> path;
      int cur = e.v;
      int c = a;
      while (at[static_cast<std::size_t>(cur)][static_cast<std::size_t>(c)] != -1) {
        const int next = at[static_cast<std::size_t>(cur)][static_cast<std::size_t>(c)];
        path.emplace_back(cur, next);
        cur = next;
        c = (c == a) ? b : a;
      }
      c = a;
      for (const auto& [p, q] : path) {
        at[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] = -1;
        at[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] = -1;
        c = (c == a) ? b : a;
      }
      c = b;
      for (const auto& [p, q] : path) {
        at[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] = q;
        at[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] = p;
        c = (c == a) ? b : a;
      }
    }
    at[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(a)] = e.v;
    at[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(a)] = e.u;
  }
  std::map<Edge, int> colouring;
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < k; ++c) {
      const int w = at[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (w > v) colouring.emplace(Edge(v, w), c);
    }
  return colouring;
}

}  // namespace bindingfactor
