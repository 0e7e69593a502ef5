#pragma once

#include <cstdint>
#include <vector>

#include "bindingfactor/families.hpp"
#include "bindingfactor/graph.hpp"

namespace testing {

using namespace bindingfactor;

inline Graph from_mask_bits(int n, std::uint64_t bits) {
  std::vector<Edge> edges;
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (bits >> b & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph k(int n) { return generate(FamilySpec::complete(n)); }
inline Graph cycle(int n) { return generate(FamilySpec::cycle(n)); }
inline Graph path(int n) { return generate(FamilySpec::path(n)); }
inline Graph kab(int a, int b) { return generate(FamilySpec::complete_bipartite(a, b)); }
inline Graph star3() { return kab(1, 3); }
inline Graph petersen() { return generate(FamilySpec::petersen()); }
inline Graph split_tight(int n, int kk) { return generate(FamilySpec::split_tight(n, kk)); }

inline VertexSet vs(const Graph& g, std::initializer_list<Vertex> m) {
  return VertexSet(static_cast<std::size_t>(g.order()), m);
}

}  // namespace testing
