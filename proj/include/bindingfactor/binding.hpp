#pragma once

#include <cstdint>
#include <optional>

#include "bindingfactor/graph.hpp"
#include "bindingfactor/rational.hpp"

namespace bindingfactor {

enum class BindingOutcome {
  Value,          // genuine minimum over a nonempty domain
  DefinedZero,    // size convention: |G| < k (or |X| < k for the bipartite variant)
  NoFeasibleSet,  // minimised domain is empty; no convention is assumed
};

struct BindingValue {
  BindingOutcome outcome = BindingOutcome::Value;
  Rational value{0};
  /// Minimising set; absent for DefinedZero, NoFeasibleSet and the
  /// complete-bipartite special case of bind_bipartite.
  std::optional<VertexSet> witness;
  std::uint64_t feasible_count = 0;

  /// Value for comparisons: DefinedZero compares as 0. Throws ArgumentError
  /// for NoFeasibleSet.
  Rational as_rational() const;
};

/// Largest order accepted by the exhaustive binding enumerators.
inline constexpr int kBindingMaxOrder = 32;

/// k-th binding number: min |L^k(S)|/|S| over |S| >= k with L^k(S) != V(G),
/// where L^k(S) is lambda_k. The witness is the minimiser with the smallest
/// bitset value. DefinedZero when |G| < k.
BindingValue beta_k(const Graph& g, int k);

/// Weak bipartite k-th binding number: min over S subset of x, |S| >= k.
/// Throws ArgumentError when x is not independent.
BindingValue beta_k_bipartite(const Graph& g, const VertexSet& x, int k);

/// Woodall's binding number: min |N(S)|/|S| over nonempty S with N(S) != V(G).
/// Equals beta_k(g, 1) whenever the graph is nonempty.
BindingValue bind_classical(const Graph& g);

/// Bipartite binding number for the bipartition (x, y): min{|x|, |y|} when
/// complete bipartite, otherwise the two-sided minimum over nonempty
/// S in x with N(S) != y and T in y with N(T) != x. Ties prefer the x side.
BindingValue bind_bipartite(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Exact comparison helpers.
bool at_least_one(const BindingValue& b);

}  // namespace bindingfactor
