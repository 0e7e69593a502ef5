#pragma once

#include <optional>
#include <vector>

#include "bindingfactor/graph.hpp"

namespace bindingfactor {

/// (S, T, U) partitioning V(G).
struct OrderedPartition {
  VertexSet s;
  VertexSet t;
  VertexSet u;

  /// Throws ArgumentError unless the three sets partition V(g).
  void validate(const Graph& g) const;
};

struct BarrierCertificate {
  OrderedPartition partition;
  int k = 0;
  int deficiency = 0;
  /// Components C of G[U] with k|C| + e(C, T) odd, sorted by smallest member.
  std::vector<VertexSet> odd_components;
  bool maxmin = false;
};

struct FactorSubgraph {
  std::vector<Edge> edges;  // ascending
  int k = 0;
};

/// Components C of G[U] for which k|C| + e(C, T) is odd.
std::vector<VertexSet> odd_components(const Graph& g, const OrderedPartition& p, int k);

/// Tutte deficiency k|S| - k|T| + sum_{v in T} d_{G-S}(v) - q(S, T, U).
int delta(const Graph& g, const OrderedPartition& p, int k);

/// A k-factor, or nullopt. Rejects immediately when min degree < k or nk is
/// odd; otherwise reduces to a perfect matching in Tutte's gadget graph and
/// verifies the result before returning it.
std::optional<FactorSubgraph> find_k_factor(const Graph& g, int k);

/// Default enumeration cap for find_maxmin_barrier (3^n partitions).
inline constexpr int kBarrierMaxOrder = 15;

/// Barrier (deficiency < 0) maximising |S|, then minimising |T|, remaining
/// ties broken by the smallest (S, T) bitset pair; nullopt if none exists.
/// Throws CapacityError above max_order.
std::optional<BarrierCertificate> find_maxmin_barrier(const Graph& g, int k,
                                                      int max_order = kBarrierMaxOrder);

struct BarrierPropertyReport {
  bool applicable = false;  // false when there is no barrier to inspect
  /// (i)   every w in U: e(w,T) <= k-1, and <= k-2 inside even components
  bool small_u_to_t = false;
  /// (ii)  max degree of G[T] <= k-2
  bool sparse_t = false;
  /// (iii) every w in T, odd component C: e(w,T) + e(w,C) <= k-1
  bool odd_component_bound = false;
  /// (iv)  every w in T: e(w,T) + sum over even components e(w,C) <= k-2
  bool even_component_bound = false;

  bool all() const noexcept {
    return applicable && small_u_to_t && sparse_t && odd_component_bound && even_component_bound;
  }
};

/// Counts the four maxmin-barrier properties directly. Throws ArgumentError
/// when the partition is not over g or its recorded deficiency is not what g
/// gives. A null certificate yields applicable = false.
BarrierPropertyReport check_barrier_properties(const Graph& g,
                                               const std::optional<BarrierCertificate>& b);

}  // namespace bindingfactor
