#include "bindingfactor/factors.hpp"

#include <algorithm>
#include <bit>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/matching.hpp"

namespace bindingfactor {

void OrderedPartition::validate(const Graph& g) const {
  require_vertex_set(g, s, "S");
  require_vertex_set(g, t, "T");
  require_vertex_set(g, u, "U");
  if (s.intersects(t) || s.intersects(u) || t.intersects(u))
    throw ArgumentError("ordered partition parts overlap");
  if ((s | t | u) != g.vertices()) throw ArgumentError("ordered partition does not cover V(G)");
}

std::vector<VertexSet> odd_components(const Graph& g, const OrderedPartition& p, int k) {
  p.validate(g);
  std::vector<VertexSet> out;
  for (auto& c : components(g, p.u)) {
    std::size_t to_t = 0;
    for (Vertex v : c) to_t += (g.neighbors(v) & p.t).size();
    if ((static_cast<std::size_t>(k) * c.size() + to_t) % 2 == 1) out.push_back(std::move(c));
  }
  return out;
}

int delta(const Graph& g, const OrderedPartition& p, int k) {
  if (k < 1) throw ArgumentError("k must be positive");
  const auto odd = odd_components(g, p, k);
  const VertexSet rest = p.s.complement();
  int sum = 0;
  for (Vertex v : p.t) sum += static_cast<int>((g.neighbors(v) & rest).size());
  return k * static_cast<int>(p.s.size()) - k * static_cast<int>(p.t.size()) + sum -
         static_cast<int>(odd.size());
}

std::optional<FactorSubgraph> find_k_factor(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("k must be positive");
  const int n = g.order();
  if ((n * k) % 2 != 0) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < k) return std::nullopt;

  // Gadget: one external node per (vertex, incident edge) and d(v)-k internal
  // nodes per vertex joined to all of v's external nodes. External nodes of
  // the two ends of an edge are joined; a perfect matching of the gadget
  // leaves exactly k external nodes of v matched across edges.
  std::vector<int> first_external(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) first_external[v + 1] = first_external[v] + g.degree(v);
  const int externals = first_external[n];
  int next_node = externals;
  std::vector<Edge> gadget_edges;
  std::vector<std::pair<Edge, Edge>> crossing;  // gadget edge -> original edge
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbor_list(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (w < v) continue;
      const auto wn = g.neighbor_list(w);
      const auto j = static_cast<int>(std::lower_bound(wn.begin(), wn.end(), v) - wn.begin());
      const Edge link(first_external[v] + static_cast<int>(i), first_external[w] + j);
      gadget_edges.push_back(link);
      crossing.emplace_back(link, Edge(v, w));
    }
    for (int extra = 0; extra < g.degree(v) - k; ++extra) {
      const int inner = next_node++;
      for (int i = 0; i < g.degree(v); ++i) gadget_edges.emplace_back(first_external[v] + i, inner);
    }
  }
  const Graph gadget(next_node, gadget_edges);
  const Matching pm = max_matching(gadget);
  if (2 * static_cast<int>(pm.size()) != gadget.order()) return std::nullopt;

  std::sort(crossing.begin(), crossing.end());
  FactorSubgraph factor;
  factor.k = k;
  for (const Edge& e : pm.edges) {
    const auto it = std::lower_bound(crossing.begin(), crossing.end(), std::make_pair(e, Edge()));
    if (it != crossing.end() && it->first == e) factor.edges.push_back(it->second);
  }
  std::sort(factor.edges.begin(), factor.edges.end());

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : factor.edges) {
    if (!g.has_edge(e.u, e.v)) throw Error("internal: gadget produced a non-edge");
    ++deg[e.u];
    ++deg[e.v];
  }
  if (std::any_of(deg.begin(), deg.end(), [k](int d) { return d != k; }))
    throw Error("internal: gadget matching is not a k-factor");
  return factor;
}

namespace {

struct BarrierSearch {
  const Graph& g;
  int n;
  int k;
  std::vector<std::uint64_t> rows;

  // Deficiency of (S, T, rest) with masks; rest = complement of S and T.
  int deficiency(std::uint64_t s, std::uint64_t t) const {
    const std::uint64_t all = low_mask(static_cast<std::size_t>(n));
    const std::uint64_t not_s = all & ~s;
    std::uint64_t u = not_s & ~t;
    int value = k * std::popcount(s) - k * std::popcount(t);
    for (auto m = t; m; m &= m - 1) value += std::popcount(rows[std::countr_zero(m)] & not_s);
    while (u) {
      std::uint64_t comp = u & (~u + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (auto m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
        next &= u & ~comp;
        comp |= next;
        frontier = next;
      }
      int parity = k * std::popcount(comp);
      for (auto m = comp; m; m &= m - 1) parity += std::popcount(rows[std::countr_zero(m)] & t);
      value -= parity & 1;
      u &= ~comp;
    }
    return value;
  }
};

}  // namespace

std::optional<BarrierCertificate> find_maxmin_barrier(const Graph& g, int k, int max_order) {
  if (k < 1) throw ArgumentError("k must be positive");
  const int n = g.order();
  if (n > max_order || n > 64)
    throw CapacityError("barrier search over 3^" + std::to_string(n) + " partitions",
                        static_cast<std::size_t>(std::min(max_order, 64)));
  BarrierSearch search{g, n, k, {}};
  for (Vertex v = 0; v < n; ++v) search.rows.push_back(g.row(v));
  const std::uint64_t all = low_mask(static_cast<std::size_t>(n));

  // S by decreasing size, ascending value within a size.
  std::vector<std::uint64_t> by_size;
  by_size.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 0; s <= all; ++s) by_size.push_back(s);
  std::stable_sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) > std::popcount(b);
  });

  bool found = false;
  int best_s_size = -1;
  int best_t_size = 0;
  std::uint64_t best_s = 0;
  std::uint64_t best_t = 0;
  for (const std::uint64_t s : by_size) {
    const int s_size = std::popcount(s);
    if (found && s_size < best_s_size) break;
    const std::uint64_t rest = all & ~s;
    // Ascending submasks of rest.
    std::uint64_t t = 0;
    for (;;) {
      const int t_size = std::popcount(t);
      const bool can_improve = !found || t_size < best_t_size ||
                               (t_size == best_t_size && (s < best_s || (s == best_s && t < best_t)));
      if (can_improve && search.deficiency(s, t) < 0) {
        found = true;
        best_s_size = s_size;
        best_t_size = t_size;
        best_s = s;
        best_t = t;
      }
      if (t == rest) break;
      t = (t - rest) & rest;
    }
  }
  if (!found) return std::nullopt;

  BarrierCertificate cert;
  const auto nn = static_cast<std::size_t>(n);
  cert.partition = {VertexSet::from_mask(nn, best_s), VertexSet::from_mask(nn, best_t),
                    VertexSet::from_mask(nn, all & ~best_s & ~best_t)};
  cert.k = k;
  cert.deficiency = delta(g, cert.partition, k);
  cert.odd_components = odd_components(g, cert.partition, k);
  cert.maxmin = true;
  return cert;
}

BarrierPropertyReport check_barrier_properties(const Graph& g,
                                               const std::optional<BarrierCertificate>& b) {
  BarrierPropertyReport report;
  if (!b) return report;
  const auto& p = b->partition;
  p.validate(g);
  const int k = b->k;
  if (delta(g, p, k) != b->deficiency)
    throw ArgumentError("barrier deficiency does not match the graph");
  report.applicable = true;

  const auto odd = odd_components(g, p, k);
  std::vector<VertexSet> even;
  for (auto& c : components(g, p.u))
    if (std::find(odd.begin(), odd.end(), c) == odd.end()) even.push_back(std::move(c));
  auto e = [&](Vertex w, const VertexSet& set) {
    return static_cast<int>((g.neighbors(w) & set).size());
  };

  report.small_u_to_t = true;
  for (Vertex w : p.u)
    if (e(w, p.t) > k - 1) report.small_u_to_t = false;
  for (const auto& c : even)
    for (Vertex w : c)
      if (e(w, p.t) > k - 2) report.small_u_to_t = false;

  report.sparse_t = true;
  report.odd_component_bound = true;
  report.even_component_bound = true;
  for (Vertex w : p.t) {
    const int inside = e(w, p.t);
    if (inside > k - 2) report.sparse_t = false;
    for (const auto& c : odd)
      if (inside + e(w, c) > k - 1) report.odd_component_bound = false;
    int to_even = 0;
    for (const auto& c : even) to_even += e(w, c);
    if (inside + to_even > k - 2) report.even_component_bound = false;
  }
  return report;
}

}  // namespace bindingfactor
