#include <doctest.h>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/properties.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("toughness examples") {
  auto c4 = toughness(cycle(4));
  CHECK_FALSE(c4.infinite);
  CHECK(c4.value == Rational(1));
  CHECK(toughness(k(5)).infinite);
  CHECK(toughness(star3()).value == Rational(1, 3));
  CHECK(toughness(Graph(3)).value == Rational(0));
  CHECK(toughness(k(5)).at_least(Rational(1000)));
  CHECK_THROWS_AS(toughness(Graph(17)), CapacityError);
  CHECK(toughness(petersen()).value == Rational(4, 3));
}

TEST_CASE("independence examples") {
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(k(4)) == 1);
  CHECK(independence_number(petersen()) == 4);
  CHECK(independence_number(Graph(0)) == 0);
  CHECK(independence_number(Graph(7)) == 7);
  CHECK_THROWS_AS(independence_number(Graph(31)), CapacityError);
}

TEST_CASE("independence agrees with brute force on all graphs up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Graph g = from_mask_bits(n, bits);
      int best = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (is_independent(g, VertexSet::from_mask(static_cast<std::size_t>(n), s)))
          best = std::max(best, std::popcount(s));
      REQUIRE(independence_number(g) == best);
    }
  }
}

TEST_CASE("vertex connectivity examples") {
  CHECK(vertex_connectivity(kab(3, 3)) == 3);
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(petersen()) == 3);
  CHECK(vertex_connectivity(k(5)) == 4);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  CHECK(vertex_connectivity(path(4)) == 1);
}

TEST_CASE("vertex connectivity agrees with brute force up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Graph g = from_mask_bits(n, bits);
      int best = n - 1;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int rest = n - std::popcount(s);
        if (rest < 2) continue;
        VertexSet keep = VertexSet::from_mask(static_cast<std::size_t>(n), ~s & ((std::uint64_t{1} << n) - 1));
        if (count_components(g, keep) > 1) best = std::min(best, std::popcount(s));
      }
      REQUIRE(vertex_connectivity(g) == best);
      if (n >= 1) REQUIRE(vertex_connectivity(g) <= degree_extremes(g).first);
    }
  }
}

TEST_CASE("degree extremes") {
  CHECK(degree_extremes(star3()) == std::pair{1, 3});
  CHECK(degree_extremes(cycle(6)) == std::pair{2, 2});
  CHECK(degree_extremes(split_tight(8, 2)) == std::pair{3, 7});
  CHECK_THROWS_AS(degree_extremes(Graph(0)), ArgumentError);
}
