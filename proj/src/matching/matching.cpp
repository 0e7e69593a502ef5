#include "bindingfactor/matching.hpp"

#include <algorithm>
#include <bit>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

Matching Matching::from_edges(std::size_t universe, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  Matching m;
  m.covered = VertexSet(universe);
  for (const Edge& e : edges) {
    if (m.covered.contains(e.u) || m.covered.contains(e.v))
      throw ArgumentError("edges share an endpoint; not a matching");
    m.covered.insert(e.u);
    m.covered.insert(e.v);
  }
  m.edges = std::move(edges);
  return m;
}

MatchingFamily::MatchingFamily(std::vector<Matching> matchings) {
  for (auto& m : matchings) push_back(std::move(m));
}

void MatchingFamily::push_back(Matching m) {
  for (const auto& other : matchings_)
    for (const Edge& e : m.edges)
      if (std::binary_search(other.edges.begin(), other.edges.end(), e))
        throw ArgumentError("matchings are not edge-disjoint");
  matchings_.push_back(std::move(m));
}

std::vector<Edge> MatchingFamily::union_edges() const {
  std::vector<Edge> out;
  for (const auto& m : matchings_) out.insert(out.end(), m.edges.begin(), m.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int odd_components_masked(const Graph& g, std::uint64_t rest) {
  int odd = 0;
  while (rest) {
    std::uint64_t comp = rest & (~rest + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto m = frontier; m; m &= m - 1) next |= g.row(std::countr_zero(m));
      next &= rest & ~comp;
      comp |= next;
      frontier = next;
    }
    odd += std::popcount(comp) & 1;
    rest &= ~comp;
  }
  return odd;
}

}  // namespace

int tutte_q(const Graph& g, const VertexSet& u) {
  require_vertex_set(g, u, "u");
  if (g.fits_word()) return odd_components_masked(g, low_mask(g.order()) & ~u.mask());
  int odd = 0;
  for (const auto& c : components(g, u.complement())) odd += static_cast<int>(c.size() % 2);
  return odd;
}

PerfectMatchingResult perfect_matching(const Graph& g) {
  PerfectMatchingResult out;
  const int n = g.order();
  Matching m = max_matching(g);
  if (2 * static_cast<int>(m.size()) == n) {
    out.matching = std::move(m);
    return out;
  }
  if (n > kTutteWitnessMaxOrder) return out;
  const std::uint64_t all = low_mask(static_cast<std::size_t>(n));
  for (std::uint64_t u = 0; u <= all; ++u) {
    const int q = odd_components_masked(g, all & ~u);
    if (q > std::popcount(u)) {
      out.witness = TutteWitness{VertexSet::from_mask(static_cast<std::size_t>(n), u), q};
      return out;
    }
  }
  throw Error("internal: no Tutte violator although no perfect matching exists");
}

HypomatchableResult hypomatchable(const Graph& g) {
  HypomatchableResult out;
  const int n = g.order();
  if (n == 0) return out;
  if (n % 2 == 0) {
    out.failing_vertex = 0;
    return out;
  }
  VertexSet alive = g.vertices();
  for (Vertex v = 0; v < n; ++v) {
    alive.erase(v);
    Matching m = max_matching(g, alive);
    alive.insert(v);
    if (2 * static_cast<int>(m.size()) != n - 1) {
      out.near_perfect.clear();
      out.failing_vertex = v;
      return out;
    }
    out.near_perfect.push_back(std::move(m));
  }
  out.hypomatchable = true;
  return out;
}

DisjointMatchingsResult disjoint_near_perfect_matchings(const Graph& g, int t) {
  if (t < 0) throw ArgumentError("t must be nonnegative");
  DisjointMatchingsResult out;
  const int target = g.order() / 2;
  Graph residual = g;
  for (int step = 1; step <= t; ++step) {
    Matching m = max_matching(residual);
    if (static_cast<int>(m.size()) != target) {
      out.failure = PipelineFailure{step, residual};
      return out;
    }
    residual = remove_edges(residual, m.edges);
    out.family.push_back(std::move(m));
  }
  return out;
}

}  // namespace bindingfactor
