#pragma once

#include <utility>

#include "bindingfactor/graph.hpp"
#include "bindingfactor/rational.hpp"

namespace bindingfactor {

/// Toughness value; infinite exactly for complete graphs.
struct Toughness {
  bool infinite = false;
  Rational value{0};

  /// Exact comparison; infinity exceeds every rational.
  bool at_least(const Rational& r) const { return infinite || value >= r; }
};

inline constexpr int kToughnessMaxOrder = 16;
inline constexpr int kIndependenceMaxOrder = 30;

/// min |S| / c(G - S) over all S with c(G - S) > 1. Exhaustive over subsets.
Toughness toughness(const Graph& g, int max_order = kToughnessMaxOrder);

/// alpha(G) by branch and bound on the complement with greedy-colouring bounds.
int independence_number(const Graph& g, int max_order = kIndependenceMaxOrder);

/// kappa(G): n-1 for complete graphs, 0 when disconnected, otherwise the
/// minimum number of internally vertex-disjoint paths over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// (min degree, max degree); ArgumentError on the empty graph.
std::pair<int, int> degree_extremes(const Graph& g);

}  // namespace bindingfactor
