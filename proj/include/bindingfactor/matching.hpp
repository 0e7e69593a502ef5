#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bindingfactor/graph.hpp"

namespace bindingfactor {

struct Matching {
  std::vector<Edge> edges;  // ascending
  VertexSet covered;

  std::size_t size() const noexcept { return edges.size(); }
  /// Builds from edges, checking that no endpoint repeats.
  static Matching from_edges(std::size_t universe, std::vector<Edge> edges);
};

/// Pairwise edge-disjoint matchings. Construction checks disjointness.
class MatchingFamily {
 public:
  MatchingFamily() = default;
  explicit MatchingFamily(std::vector<Matching> matchings);

  const std::vector<Matching>& matchings() const noexcept { return matchings_; }
  std::size_t size() const noexcept { return matchings_.size(); }
  bool pairwise_disjoint() const noexcept { return true; }
  /// Union of all member edges, ascending.
  std::vector<Edge> union_edges() const;
  void push_back(Matching m);

 private:
  std::vector<Matching> matchings_;
};

/// Certificate that no perfect matching exists: q_G(u) > |u|.
struct TutteWitness {
  VertexSet u;
  int odd_count = 0;
};

/// Exhaustive witness search cap for perfect_matching.
inline constexpr int kTutteWitnessMaxOrder = 24;

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Vertices and
/// adjacency are scanned in ascending order, so the result is reproducible.
Matching max_matching(const Graph& g);
/// Maximum matching of the subgraph induced by `alive`.
Matching max_matching(const Graph& g, const VertexSet& alive);

/// Number of odd-order components of G - u.
int tutte_q(const Graph& g, const VertexSet& u);

struct PerfectMatchingResult {
  std::optional<Matching> matching;
  /// Lexicographically smallest violator; absent above kTutteWitnessMaxOrder.
  std::optional<TutteWitness> witness;

  bool has_perfect_matching() const noexcept { return matching.has_value(); }
};

PerfectMatchingResult perfect_matching(const Graph& g);

struct HypomatchableResult {
  bool hypomatchable = false;
  /// When true: entry v is a perfect matching of G - v.
  std::vector<Matching> near_perfect;
  /// When false: a vertex v such that G - v has no perfect matching
  /// (absent only for the empty graph).
  std::optional<Vertex> failing_vertex;
};

HypomatchableResult hypomatchable(const Graph& g);

struct PipelineFailure {
  int step = 0;        // 1-based index of the matching that could not be found
  Graph residual;      // graph with all previously chosen matchings removed
};

struct DisjointMatchingsResult {
  MatchingFamily family;                  // matchings found before any failure
  std::optional<PipelineFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Greedy pipeline: find a perfect (even n) or near-perfect (odd n)
/// matching, delete its edges, repeat t times.
DisjointMatchingsResult disjoint_near_perfect_matchings(const Graph& g, int t);

/// Lexicographically smallest S subset of x with |N(S)| < |S|, or nullopt.
/// Throws ArgumentError when x is not independent.
std::optional<VertexSet> hall_violator(const Graph& g, const VertexSet& x);

/// L^k(s) = sum over y outside x of min(k, |N(y) & s|).
int lebensold_value(const Graph& g, const VertexSet& x, const VertexSet& s, int k);

/// Either k edge-disjoint matchings each covering x, or a set S in x with
/// L^k(S) < k|S|. The violator is the lexicographically smallest one when
/// |x| <= kLebensoldExhaustiveMax, otherwise the source side of a minimum cut.
inline constexpr int kLebensoldExhaustiveMax = 24;
std::variant<MatchingFamily, VertexSet> disjoint_x_covering_matchings(const Graph& g,
                                                                      const VertexSet& x,
                                                                      int k);

/// Proper edge colouring with colours 0..k-1 of a bipartite graph with
/// maximum degree <= k (alternating-path recolouring).
std::map<Edge, int> bipartite_edge_color(const Graph& g, int k);

}  // namespace bindingfactor
