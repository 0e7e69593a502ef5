#include <doctest.h>

#include <algorithm>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/matching.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

bool valid_matching(const Graph& g, const Matching& m) {
  VertexSet seen = g.empty_set();
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v) || seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.insert(e.u);
    seen.insert(e.v);
  }
  return seen == m.covered;
}

}  // namespace

TEST_CASE("max_matching examples") {
  CHECK(max_matching(k(4)).size() == 2);
  CHECK(max_matching(cycle(5)).size() == 2);
  Matching p = max_matching(petersen());
  CHECK(p.size() == 5);
  CHECK(valid_matching(petersen(), p));
  CHECK(max_matching(Graph(0)).size() == 0);
}

TEST_CASE("max_matching agrees with brute force on all graphs up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Graph g = from_mask_bits(n, bits);
      Matching m = max_matching(g);
      REQUIRE(valid_matching(g, m));
      REQUIRE(static_cast<int>(m.size()) == oracle::max_matching_size(g));
    }
  }
}

TEST_CASE("max_matching on a restricted vertex set") {
  Graph c6 = cycle(6);
  VertexSet alive = c6.vertices();
  alive.erase(0);
  Matching m = max_matching(c6, alive);
  CHECK(m.size() == 2);
  CHECK_FALSE(m.covered.contains(0));
}

TEST_CASE("blossom is deterministic") {
  Graph p = petersen();
  CHECK(max_matching(p).edges == max_matching(p).edges);
}

TEST_CASE("tutte_q examples") {
  Graph st = star3();
  CHECK(tutte_q(st, vs(st, {0})) == 3);
  CHECK(tutte_q(k(4), k(4).empty_set()) == 0);
  Graph c5 = cycle(5);
  CHECK(tutte_q(c5, vs(c5, {0})) == 0);
}

TEST_CASE("perfect_matching examples") {
  auto a = perfect_matching(k(4));
  REQUIRE(a.matching);
  CHECK(a.matching->size() == 2);
  CHECK_FALSE(a.witness);

  auto b = perfect_matching(star3());
  CHECK_FALSE(b.matching);
  REQUIRE(b.witness);
  CHECK(b.witness->u.to_vector() == std::vector<Vertex>{0});
  CHECK(b.witness->odd_count == 3);

  auto c = perfect_matching(cycle(5));
  REQUIRE(c.witness);
  CHECK(c.witness->u.empty());
  CHECK(c.witness->odd_count == 1);
}

TEST_CASE("hypomatchable examples") {
  auto a = hypomatchable(k(5));
  CHECK(a.hypomatchable);
  CHECK(a.near_perfect.size() == 5);
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(a.near_perfect[v].size() == 2);
    CHECK_FALSE(a.near_perfect[v].covered.contains(static_cast<Vertex>(v)));
  }
  CHECK(hypomatchable(cycle(5)).hypomatchable);
  auto p3 = hypomatchable(path(3));
  CHECK_FALSE(p3.hypomatchable);
  CHECK(p3.failing_vertex == 1);
  CHECK(hypomatchable(Graph(1)).hypomatchable);
  CHECK_FALSE(hypomatchable(k(4)).hypomatchable);
}

TEST_CASE("disjoint near-perfect matchings examples") {
  auto a = disjoint_near_perfect_matchings(k(6), 2);
  REQUIRE(a.ok());
  CHECK(a.family.size() == 2);
  auto all = a.family.union_edges();
  CHECK(all.size() == 6);
  for (const auto& m : a.family.matchings()) CHECK(m.size() == 3);

  CHECK(disjoint_near_perfect_matchings(k(4), 1).ok());
  auto c = disjoint_near_perfect_matchings(cycle(4), 2);
  REQUIRE(c.ok());
  CHECK(c.family.union_edges().size() == 4);

  auto bad = disjoint_near_perfect_matchings(cycle(4), 3);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure->step == 3);
  CHECK(bad.failure->residual.edge_count() == 0);

  auto odd = disjoint_near_perfect_matchings(k(5), 2);
  REQUIRE(odd.ok());
  for (const auto& m : odd.family.matchings()) CHECK(m.size() == 2);
}

TEST_CASE("matching family rejects shared edges") {
  Matching m = Matching::from_edges(4, {Edge(0, 1)});
  MatchingFamily f;
  f.push_back(m);
  CHECK_THROWS_AS(f.push_back(m), ArgumentError);
  CHECK_THROWS_AS(Matching::from_edges(4, {Edge(0, 1), Edge(1, 2)}), ArgumentError);
}

TEST_CASE("hall_violator examples") {
  Graph k22 = kab(2, 2);
  CHECK_FALSE(hall_violator(k22, vs(k22, {0, 1})));
  Graph st = star3();
  auto v = hall_violator(st, vs(st, {1, 2, 3}));
  REQUIRE(v);
  CHECK(v->to_vector() == std::vector<Vertex>{1, 2});
  Graph three_k2 = Graph(6, {Edge(0, 3), Edge(1, 4), Edge(2, 5)});
  CHECK_FALSE(hall_violator(three_k2, vs(three_k2, {0, 1, 2})));
  CHECK_THROWS_AS(hall_violator(k(3), vs(k(3), {0, 1})), ArgumentError);
}

TEST_CASE("lebensold_value examples") {
  Graph k33 = kab(3, 3);
  VertexSet x = vs(k33, {0, 1, 2});
  CHECK(lebensold_value(k33, x, x, 3) == 9);
  CHECK(lebensold_value(k33, x, x, 2) == 6);
  Graph st = star3();
  VertexSet leaves = vs(st, {1, 2, 3});
  CHECK(lebensold_value(st, leaves, leaves, 2) == 2);
}

TEST_CASE("disjoint X-covering matchings examples") {
  Graph k33 = kab(3, 3);
  VertexSet x = vs(k33, {0, 1, 2});
  auto a = disjoint_x_covering_matchings(k33, x, 3);
  REQUIRE(std::holds_alternative<MatchingFamily>(a));
  const auto& fam = std::get<MatchingFamily>(a);
  CHECK(fam.size() == 3);
  CHECK(fam.union_edges().size() == 9);
  for (const auto& m : fam.matchings()) CHECK(x.is_subset_of(m.covered));

  Graph st = star3();
  auto b = disjoint_x_covering_matchings(st, vs(st, {1, 2, 3}), 1);
  REQUIRE(std::holds_alternative<VertexSet>(b));
  const auto& s = std::get<VertexSet>(b);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 2});
  CHECK(lebensold_value(st, vs(st, {1, 2, 3}), s, 1) == 1);

  Graph c6 = cycle(6);
  auto c = disjoint_x_covering_matchings(c6, vs(c6, {0, 2, 4}), 2);
  REQUIRE(std::holds_alternative<MatchingFamily>(c));
  CHECK(std::get<MatchingFamily>(c).size() == 2);
}

TEST_CASE("bipartite edge colouring examples") {
  auto proper = [](const Graph& g, const std::map<Edge, int>& col, int kk) {
    if (col.size() != g.edge_count()) return false;
    for (const auto& [e, c] : col) {
      if (c < 0 || c >= kk) return false;
      for (const auto& [f, d] : col)
        if (e < f && c == d && (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)) return false;
    }
    return true;
  };
  Graph c6 = cycle(6);
  auto a = bipartite_edge_color(c6, 2);
  CHECK(proper(c6, a, 2));
  Graph k33 = kab(3, 3);
  auto b = bipartite_edge_color(k33, 3);
  CHECK(proper(k33, b, 3));
  for (int c = 0; c < 3; ++c)
    CHECK(std::count_if(b.begin(), b.end(), [c](const auto& p) { return p.second == c; }) == 3);
  Graph p4 = path(4);
  auto d = bipartite_edge_color(p4, 2);
  CHECK(proper(p4, d, 2));
  CHECK(d.at(Edge(0, 1)) != d.at(Edge(1, 2)));
  CHECK(d.at(Edge(1, 2)) != d.at(Edge(2, 3)));
  CHECK_THROWS_AS(bipartite_edge_color(k33, 2), ArgumentError);
  CHECK_THROWS_AS(bipartite_edge_color(cycle(5), 2), ArgumentError);
}
