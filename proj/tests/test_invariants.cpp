#include <doctest.h>

#include <random>

#include "bindingfactor/binding.hpp"
#include "bindingfactor/factors.hpp"
#include "bindingfactor/graph6.hpp"
#include "bindingfactor/harness.hpp"
#include "bindingfactor/matching.hpp"
#include "bindingfactor/properties.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

VertexSet random_subset(std::mt19937& rng, int n) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (rng() & 1) s.insert(v);
  return s;
}

template <typename F>
void all_graphs(int max_n, F f) {
  for (int n = 0; n <= max_n; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) f(from_mask_bits(n, bits));
  }
}

}  // namespace

TEST_CASE("graph6 round trip on random graphs up to 62 vertices") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 63);
    Graph g = random_graph(rng, n, 0.3);
    REQUIRE(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("lambda_k is monotone in k and excludes a k-set") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.5);
    VertexSet s = random_subset(rng, n);
    for (int kk = 1; kk <= 4; ++kk) REQUIRE(lambda_k(g, s, kk + 1).is_subset_of(lambda_k(g, s, kk)));
    int kk = static_cast<int>(s.size());
    if (kk >= 1) REQUIRE_FALSE(lambda_k(g, s, kk).intersects(s));
  }
}

TEST_CASE("components partition the set and no edge crosses them") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g = random_graph(rng, n, 0.25);
    VertexSet u = random_subset(rng, n);
    auto comps = components(g, u);
    VertexSet seen = g.empty_set();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      REQUIRE_FALSE(comps[i].intersects(seen));
      seen |= comps[i];
      if (i > 0) REQUIRE(comps[i - 1].front() < comps[i].front());
      for (std::size_t j = i + 1; j < comps.size(); ++j) REQUIRE(count_edges_between(g, comps[i], comps[j]) == 0);
    }
    REQUIRE(seen == u);
  }
}

TEST_CASE("count_edges_between is symmetric and counts G[s] once") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.5);
    VertexSet s = random_subset(rng, n), t = random_subset(rng, n);
    REQUIRE(count_edges_between(g, s, t) == count_edges_between(g, t, s));
    std::size_t inside = 0;
    for (const Edge& e : g.edges()) inside += s.contains(e.u) && s.contains(e.v);
    REQUIRE(count_edges_between(g, s, s) == inside);
  }
}

TEST_CASE("beta_k equals the naive reference up to 5 vertices") {
  all_graphs(5, [](const Graph& g) {
    for (int kk = 1; kk <= 4; ++kk) {
      auto b = beta_k(g, kk);
      auto o = oracle::beta(g, kk);
      REQUIRE((b.outcome == BindingOutcome::DefinedZero) == o.defined_zero);
      if (o.defined_zero) continue;
      REQUIRE(o.feasible);
      REQUIRE(b.value == o.value);
      REQUIRE(b.witness->mask() == o.witness);
    }
  });
}

TEST_CASE("beta_k_bipartite equals the naive reference") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (const Graph& g : bindingfactor::harness::enumerate_graphs(bindingfactor::harness::GraphSource::bipartite(a, b))) {
        const std::uint64_t x = (std::uint64_t{1} << a) - 1;
        for (int kk = 1; kk <= 3; ++kk) {
          auto r = beta_k_bipartite(g, VertexSet::from_mask(static_cast<std::size_t>(g.order()), x), kk);
          auto o = oracle::beta(g, kk, x);
          REQUIRE((r.outcome == BindingOutcome::DefinedZero) == o.defined_zero);
          if (!o.defined_zero) {
            REQUIRE(r.value == o.value);
            REQUIRE(r.witness->mask() == o.witness);
          }
        }
      }
}

TEST_CASE("binding monotonicity, upper bound and feasibility up to 6 vertices") {
  all_graphs(6, [](const Graph& g) {
    const int n = g.order();
    Rational prev;
    for (int kk = 1; kk <= 4; ++kk) {
      auto b = beta_k(g, kk);
      Rational v = b.as_rational();
      if (kk > 1) REQUIRE(prev >= v);
      prev = v;
      if (n >= kk) {
        REQUIRE(b.outcome == BindingOutcome::Value);
        REQUIRE(b.feasible_count > 0);
        REQUIRE(v <= Rational(n - kk, kk));
        if (kk >= 2 && v > 0) {
          REQUIRE_FALSE(bipartition(g).has_value());
          REQUIRE(is_connected(g));
        }
      }
    }
  });
}

TEST_CASE("beta at n = 2k and >= 1 forces a complete graph") {
  for (int kk : {2, 3}) {
    all_graphs(2 * kk, [kk](const Graph& g) {
      if (g.order() != 2 * kk) return;
      if (at_least_one(beta_k(g, kk))) REQUIRE(is_complete(g));
    });
  }
}

TEST_CASE("perfect matching outcome agrees with brute force on random graphs up to 10 vertices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 6));
    auto r = perfect_matching(g);
    REQUIRE(r.matching.has_value() != r.witness.has_value());
    const bool brute = 2 * oracle::max_matching_size(g) == n;
    REQUIRE(r.matching.has_value() == brute);
    if (r.witness) REQUIRE(tutte_q(g, r.witness->u) > static_cast<int>(r.witness->u.size()));
  }
}

TEST_CASE("edge colouring is proper with at most k colours") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (rng() % 2) edges.emplace_back(x, a + y);
    Graph g(a + b, edges);
    int maxdeg = g.order() ? degree_extremes(g).second : 0;
    int kk = maxdeg + static_cast<int>(rng() % 2);
    auto col = bipartite_edge_color(g, kk);
    REQUIRE(col.size() == g.edge_count());
    std::map<std::pair<Vertex, int>, int> used;
    for (const auto& [e, c] : col) {
      REQUIRE(c >= 0);
      REQUIRE(c < std::max(kk, 1));
      REQUIRE(++used[{e.u, c}] == 1);
      REQUIRE(++used[{e.v, c}] == 1);
    }
  }
}

TEST_CASE("barrier certificates recompute and respect the parity floor") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    int kk = 1 + static_cast<int>(rng() % 3);
    if (n * kk % 2) continue;
    Graph g = random_graph(rng, n, 0.5);
    auto b = find_maxmin_barrier(g, kk);
    REQUIRE(b.has_value() == !find_k_factor(g, kk).has_value());
    if (b) {
      REQUIRE(delta(g, b->partition, kk) == b->deficiency);
      REQUIRE(b->deficiency <= -2);
      REQUIRE(b->deficiency % 2 == 0);
      REQUIRE(odd_components(g, b->partition, kk) == b->odd_components);
      REQUIRE(check_barrier_properties(g, b).all());
    }
  }
}

TEST_CASE("vertex connectivity never exceeds minimum degree") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.5);
    REQUIRE(vertex_connectivity(g) <= degree_extremes(g).first);
  }
}

TEST_CASE("toughness is at least beta^k when positive, up to 6 vertices") {
  all_graphs(6, [](const Graph& g) {
    for (int kk : {2, 3}) {
      Rational b = beta_k(g, kk).as_rational();
      if (b > 0) REQUIRE(toughness(g).at_least(b));
    }
  });
}
