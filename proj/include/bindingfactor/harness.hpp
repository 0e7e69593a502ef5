#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bindingfactor/families.hpp"
#include "bindingfactor/graph.hpp"

namespace bindingfactor::harness {

/// Verifiable statements. Each maps to one checker with a hypothesis filter
/// and a conclusion test; see check_claim.
enum class ClaimId {
  ThmKFactor,       // THM_K_FACTOR      beta^k >= 1, nk even, k >= 2  =>  k-factor
  ThmSplitK1,       // THM_SPLIT_K1      split, n even, beta^k >= 1     =>  (k+1)-factor
  ThmDisjointPm,    // THM_DISJOINT_PM   beta^k >= 1  =>  k-1 disjoint (near-)perfect matchings
  ThmBipMatchings,  // THM_BIP_MATCHINGS beta^k(G,X) >= 1  =>  k disjoint X-covering matchings
  ObsNonbipUb,      // OBS_NONBIP_UB     beta^k > 0 => odd cycle; beta^k <= (n-k)/k; beta^k >= 1 => n >= 2k
  ObsMonotone,      // OBS_MONOTONE      beta^i >= beta^k for 1 <= i <= k
  ObsConnectedK2,   // OBS_CONNECTED_K2  beta^2 > 0 => connected
  CorConnected,     // COR_CONNECTED     beta^k > 0 => connected (k >= 2)
  LemMindeg,        // LEM_MINDEG        min-degree bounds
  CorComplete2k,    // COR_COMPLETE_2K   n = 2k, beta^k >= 1 => complete
  PropIndep,        // PROP_INDEP        alpha <= n/(beta+1), refined when beta >= 1
  PropTough,        // PROP_TOUGH        tau >= beta^k
  PropConn,         // PROP_CONN         beta >= 1 => kappa >= (beta-1)n/(beta+1)
  LemPmExists,      // LEM_PM_EXISTS     n even, beta^k >= 1 => perfect matching
  CorHypoIff,       // COR_HYPO_IFF      n odd: hypomatchable <=> q(U) <= |U|-1 for all U != {}
  LemHypo,          // LEM_HYPO          n odd, beta^k >= 1 => hypomatchable
  LemFdom,          // LEM_FDOM          beta^k >= 1, Delta(F) <= k-2 => beta^2(G - E(F)) >= 1
  ObsSplitY,        // OBS_SPLIT_Y       split, beta^k >= 1 => |Y| >= max{k, |X|+k-1}
  LemDeltaParity,   // LEM_DELTA_PARITY  nk even => every deficiency is even
  LemMaxminProps,   // LEM_MAXMIN_PROPS  no k-factor => maxmin barrier satisfies (i)-(iv)
  FamilyTightness,  // FAMILY_TIGHTNESS  tight split family: beta^k < 1 as predicted, no k-factor
};

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();
/// Claims whose statement fixes k (OBS_CONNECTED_K2) or has none
/// (COR_HYPO_IFF) ignore the k list and run once per graph.
std::optional<int> fixed_k(ClaimId id);

inline constexpr int kInternalMaxOrder = 7;
inline constexpr int kSplitMaxOrder = 10;
inline constexpr int kBipartiteMaxSide = 6;

/// Where graphs come from.
///  - Internal(n): every labelled graph on n vertices, 2^(n(n-1)/2) of them,
///    in ascending edge-bitmask order; bit b is the b-th pair in graph6
///    column order (0,1), (0,2), (1,2), (0,3), ...
///  - Stream(path): graph6 lines of a file, in file order.
///  - Split(n): split graphs on n vertices with independent side 0..a-1 and
///    clique a..n-1 for every a; the independent side's neighbourhoods are
///    enumerated as nondecreasing mask sequences, which covers every split
///    graph up to relabelling.
///  - Bipartite(a, b): sides 0..a-1 and a..a+b-1, side-one neighbourhoods as
///    nondecreasing mask sequences (every bipartite graph with those side
///    sizes up to relabelling).
///  - Family(specs): the listed generator instances.
struct GraphSource {
  enum class Kind { Internal, Stream, Split, Bipartite, Family };
  Kind kind = Kind::Internal;
  int n = 0;
  int a = 0;
  int b = 0;
  std::string path;
  std::vector<FamilySpec> families;

  static GraphSource internal(int n) { return {Kind::Internal, n, 0, 0, {}, {}}; }
  static GraphSource stream(std::string path) { return {Kind::Stream, 0, 0, 0, std::move(path), {}}; }
  static GraphSource split(int n) { return {Kind::Split, n, 0, 0, {}, {}}; }
  static GraphSource bipartite(int a, int b) { return {Kind::Bipartite, 0, a, b, {}, {}}; }
  static GraphSource family(std::vector<FamilySpec> specs) {
    return {Kind::Family, 0, 0, 0, {}, std::move(specs)};
  }

  std::string describe() const;
};

/// Pull-based deterministic stream over a source. Throws CapacityError for
/// oversized internal sources and ParseError (message prefixed with the line
/// number) for malformed stream lines.
class GraphStream {
 public:
  explicit GraphStream(const GraphSource& source);
  ~GraphStream();
  GraphStream(GraphStream&&) noexcept;
  GraphStream& operator=(GraphStream&&) noexcept;

  std::optional<Graph> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Materialises a whole source; meant for small sources and tests.
std::vector<Graph> enumerate_graphs(const GraphSource& source);

struct CheckOutcome {
  bool hypothesis = false;
  std::optional<std::string> counterexample;  // details when the conclusion fails
};

/// Runs one claim's checker on one graph.
CheckOutcome check_claim(ClaimId id, const Graph& g, int k);

struct Counterexample {
  std::string graph6;
  int k = 0;
  std::string details;
};

struct VerificationReport {
  std::string claim;
  std::vector<std::string> sources;
  std::vector<int> k_values;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t checks = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first max_stored, stream order
  std::map<std::string, std::uint64_t> tallies;
  double elapsed_seconds = 0;

  bool verified() const noexcept { return counterexample_count == 0; }
};

struct RunOptions {
  int jobs = 1;
  std::size_t max_stored = 100;
  std::size_t batch = 4096;
};

VerificationReport verify_claim(ClaimId id, const GraphSource& source,
                                std::span<const int> k_values, const RunOptions& options = {});
VerificationReport verify_claim(ClaimId id, std::span<const GraphSource> sources,
                                std::span<const int> k_values, const RunOptions& options = {});

enum class Conjecture { BipKfactorCoverX, FactorSpectrum };
std::string_view conjecture_name(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view name);

struct ProbeParams {
  int k = 2;
  /// Factor degree for FACTOR_SPECTRUM, k+1 <= t <= 2k.
  int t = 3;
};

/// Searches for candidate counterexamples. BIP_KFACTOR_COVER_X labels each
/// failure with the interpretation it refutes:
///  (a) a subgraph, k-regular on all of its vertices, containing all of X;
///  (b) a spanning subgraph with degree exactly k on X and at most k on Y.
/// FACTOR_SPECTRUM reports graphs with beta^k >= 1 and nt even that have no
/// t-factor.
VerificationReport probe_conjecture(Conjecture which, std::span<const GraphSource> sources,
                                    const ProbeParams& params, const RunOptions& options = {});

/// Runs one probe on one graph.
CheckOutcome probe_graph(Conjecture which, const Graph& g, const ProbeParams& params);

/// Split partition (independent X, clique Y) maximising |Y|, ties broken by
/// the smallest Y bitset; nullopt when g is not split. Exhaustive, n <= 20.
std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g);

/// Every X such that X and its complement are both independent.
std::vector<VertexSet> bipartition_sides(const Graph& g);

}  // namespace bindingfactor::harness
