#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bindingfactor/graph.hpp"

namespace bindingfactor {

enum class FamilyTag {
  Empty,             // empty:n            n isolated vertices
  Complete,          // complete:n
  CompleteBipartite, // complete_bipartite:a,b   sides 0..a-1 and a..a+b-1
  Cycle,             // cycle:n            0-1-...-(n-1)-0, n >= 3
  Path,              // path:n             0-1-...-(n-1)
  Petersen,          // petersen           outer 0..4, inner 5..9, spokes i~i+5
  SplitTight,        // split_tight:n,k    independent 0..n/2, clique n/2+1..n-1
  Andersen,          // andersen:r         (r+2) triangles first, then r apexes
  KaterinisWoodall,  // katerinis_woodall:r,k   clique first, then l disjoint edges
  CliquePendant,     // clique_pendant:n,k K_{n-1} on 0..n-2, vertex n-1 ~ 0..2k-2
  Join,              // join(A,B)          A's labels first, all A-B edges added
  DisjointUnion,     // union(A,B)         A's labels first
};

/// Named graph family with its integer parameters. Textual form is
/// "name", "name:p1,p2" or "join(A,B)" / "union(A,B)" with nested specs.
struct FamilySpec {
  FamilyTag tag = FamilyTag::Empty;
  std::vector<int> params;
  std::vector<FamilySpec> parts;

  static FamilySpec complete(int n) { return {FamilyTag::Complete, {n}, {}}; }
  static FamilySpec empty(int n) { return {FamilyTag::Empty, {n}, {}}; }
  static FamilySpec complete_bipartite(int a, int b) {
    return {FamilyTag::CompleteBipartite, {a, b}, {}};
  }
  static FamilySpec cycle(int n) { return {FamilyTag::Cycle, {n}, {}}; }
  static FamilySpec path(int n) { return {FamilyTag::Path, {n}, {}}; }
  static FamilySpec petersen() { return {FamilyTag::Petersen, {}, {}}; }
  static FamilySpec split_tight(int n, int k) { return {FamilyTag::SplitTight, {n, k}, {}}; }
  static FamilySpec andersen(int r) { return {FamilyTag::Andersen, {r}, {}}; }
  static FamilySpec katerinis_woodall(int r, int k) {
    return {FamilyTag::KaterinisWoodall, {r, k}, {}};
  }
  static FamilySpec clique_pendant(int n, int k) {
    return {FamilyTag::CliquePendant, {n, k}, {}};
  }
  static FamilySpec join(FamilySpec a, FamilySpec b) {
    return {FamilyTag::Join, {}, {std::move(a), std::move(b)}};
  }
  static FamilySpec disjoint_union(FamilySpec a, FamilySpec b) {
    return {FamilyTag::DisjointUnion, {}, {std::move(a), std::move(b)}};
  }

  /// Throws ParseError on syntax errors (offset into text).
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Builds the family member with its documented labelling.
/// Throws ConstructionError naming the violated constraint.
Graph generate(const FamilySpec& spec);

/// Complete join: a's vertices keep their labels, b's are shifted by |a|.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace bindingfactor
