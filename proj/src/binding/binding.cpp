#include "bindingfactor/binding.hpp"

#include <bit>
#include <vector>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/kernels.hpp"

namespace bindingfactor {

Rational BindingValue::as_rational() const {
  if (outcome == BindingOutcome::NoFeasibleSet)
    throw ArgumentError("binding value has no feasible set");
  return outcome == BindingOutcome::DefinedZero ? Rational(0) : value;
}

bool at_least_one(const BindingValue& b) {
  return b.outcome == BindingOutcome::Value && b.value >= 1;
}

namespace {

void require_enumerable(int members) {
  if (members > kBindingMaxOrder)
    throw CapacityError("binding enumeration over " + std::to_string(members) + " vertices",
                        kBindingMaxOrder);
}

/// Running minimum of |L|/|S| kept as an unreduced fraction.
struct BestRatio {
  bool found = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::uint64_t set = 0;
  std::uint64_t feasible = 0;

  void offer(std::int64_t hits, std::int64_t size, std::uint64_t s) {
    ++feasible;
    if (found) {
      const auto lhs = hits * den;
      const auto rhs = num * size;
      // Strictly worse ratios need no further work.
      if (lhs > rhs) return;
      if (lhs == rhs && s > set) return;
    }
    found = true;
    num = hits;
    den = size;
    set = s;
  }
};

/// Walks every subset of `pool` (a mask over the first n vertices) in
/// Gray-code order. For each subset S with |S| >= k it calls
/// accept(S, |S|, at_least_k_mask).
template <typename Accept>
void walk_subsets(const Graph& g, std::uint64_t pool, int k, Accept&& accept) {
  if (!g.fits_word())
    throw CapacityError("binding enumeration needs a graph of at most 64 vertices", 64);
  const auto& kern = kernels::active_kernels();
  std::vector<int> members;
  for (auto m = pool; m; m &= m - 1) members.push_back(std::countr_zero(m));
  const auto count = members.size();
  std::vector<std::uint64_t> rows(count);
  for (std::size_t i = 0; i < count; ++i) rows[i] = g.row(members[i]);

  kernels::Counters counters;
  std::uint64_t s = 0;
  int size = 0;
  const std::uint64_t steps = std::uint64_t{1} << count;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    const auto bit = std::uint64_t{1} << members[flip];
    const int delta = (s & bit) ? -1 : 1;
    s ^= bit;
    size += delta;
    kern.apply(counters, rows[flip], delta);
    if (size >= k) accept(s, size, kern.at_least(counters, k));
  }
}

BindingValue finish(const BestRatio& best, std::size_t n) {
  BindingValue out;
  out.feasible_count = best.feasible;
  if (!best.found) {
    out.outcome = BindingOutcome::NoFeasibleSet;
    return out;
  }
  out.value = Rational(best.num, best.den);
  out.witness = VertexSet::from_mask(n, best.set);
  return out;
}

BindingValue defined_zero() {
  BindingValue out;
  out.outcome = BindingOutcome::DefinedZero;
  return out;
}

}  // namespace

BindingValue beta_k(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("k must be positive");
  const int n = g.order();
  if (n < k) return defined_zero();
  require_enumerable(n);
  const std::uint64_t all = low_mask(static_cast<std::size_t>(n));
  BestRatio best;
  walk_subsets(g, all, k, [&](std::uint64_t s, int size, std::uint64_t hit) {
    hit &= all;
    if (hit != all) best.offer(std::popcount(hit), size, s);
  });
  return finish(best, static_cast<std::size_t>(n));
}

BindingValue beta_k_bipartite(const Graph& g, const VertexSet& x, int k) {
  if (k < 1) throw ArgumentError("k must be positive");
  require_vertex_set(g, x, "x");
  if (!is_independent(g, x)) throw ArgumentError("side x is not an independent set");
  if (x.size() < static_cast<std::size_t>(k)) return defined_zero();
  require_enumerable(static_cast<int>(x.size()));
  const std::uint64_t all = low_mask(static_cast<std::size_t>(g.order()));
  BestRatio best;
  walk_subsets(g, x.mask(), k, [&](std::uint64_t s, int size, std::uint64_t hit) {
    best.offer(std::popcount(hit & all), size, s);
  });
  return finish(best, static_cast<std::size_t>(g.order()));
}

BindingValue bind_classical(const Graph& g) {
  if (g.order() == 0) {
    BindingValue out;
    out.outcome = BindingOutcome::NoFeasibleSet;
    return out;
  }
  return beta_k(g, 1);
}

BindingValue bind_bipartite(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_vertex_set(g, x, "x");
  require_vertex_set(g, y, "y");
  if (x.intersects(y) || (x | y) != g.vertices())
    throw ArgumentError("(x, y) does not partition the vertex set");
  if (x.empty() || y.empty()) throw ArgumentError("bipartition sides must be nonempty");
  if (!is_independent(g, x) || !is_independent(g, y))
    throw ArgumentError("(x, y) is not a bipartition of the graph");
  const auto n = static_cast<std::size_t>(g.order());
  require_enumerable(static_cast<int>(std::max(x.size(), y.size())));

  if (g.edge_count() == x.size() * y.size()) {
    BindingValue out;
    out.value = Rational(static_cast<std::int64_t>(std::min(x.size(), y.size())));
    return out;
  }

  BestRatio best;
  for (const auto* side : {&x, &y}) {
    const std::uint64_t other = (side == &x ? y : x).mask();
    walk_subsets(g, side->mask(), 1, [&](std::uint64_t s, int size, std::uint64_t hit) {
      hit &= other;
      if (hit == other) return;
      // Keep the x-side minimiser on ties: only strictly better y-side sets win.
      if (side == &y && best.found &&
          std::popcount(hit) * best.den == best.num * size) {
        ++best.feasible;
        return;
      }
      best.offer(std::popcount(hit), size, s);
    });
  }
  return finish(best, n);
}

}  // namespace bindingfactor
