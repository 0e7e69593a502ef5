#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "bindingfactor/binding.hpp"
#include "bindingfactor/errors.hpp"
#include "bindingfactor/factors.hpp"
#include "bindingfactor/harness.hpp"
#include "bindingfactor/matching.hpp"
#include "bindingfactor/properties.hpp"

namespace bindingfactor::harness {

namespace {

struct ClaimEntry {
  ClaimId id;
  std::string_view name;
};

constexpr std::array<ClaimEntry, 21> kClaims{{
    {ClaimId::ThmKFactor, "THM_K_FACTOR"},
    {ClaimId::ThmSplitK1, "THM_SPLIT_K1"},
    {ClaimId::ThmDisjointPm, "THM_DISJOINT_PM"},
    {ClaimId::ThmBipMatchings, "THM_BIP_MATCHINGS"},
    {ClaimId::ObsNonbipUb, "OBS_NONBIP_UB"},
    {ClaimId::ObsMonotone, "OBS_MONOTONE"},
    {ClaimId::ObsConnectedK2, "OBS_CONNECTED_K2"},
    {ClaimId::CorConnected, "COR_CONNECTED"},
    {ClaimId::LemMindeg, "LEM_MINDEG"},
    {ClaimId::CorComplete2k, "COR_COMPLETE_2K"},
    {ClaimId::PropIndep, "PROP_INDEP"},
    {ClaimId::PropTough, "PROP_TOUGH"},
    {ClaimId::PropConn, "PROP_CONN"},
    {ClaimId::LemPmExists, "LEM_PM_EXISTS"},
    {ClaimId::CorHypoIff, "COR_HYPO_IFF"},
    {ClaimId::LemHypo, "LEM_HYPO"},
    {ClaimId::LemFdom, "LEM_FDOM"},
    {ClaimId::ObsSplitY, "OBS_SPLIT_Y"},
    {ClaimId::LemDeltaParity, "LEM_DELTA_PARITY"},
    {ClaimId::LemMaxminProps, "LEM_MAXMIN_PROPS"},
    {ClaimId::FamilyTightness, "FAMILY_TIGHTNESS"},
}};

Rational beta(const Graph& g, int k) { return beta_k(g, k).as_rational(); }

std::string rs(const Rational& r) { return to_string(r); }

CheckOutcome vacuous() { return {}; }
CheckOutcome holds() { return {true, std::nullopt}; }
CheckOutcome fails(std::string details) { return {true, std::move(details)}; }

int min_degree(const Graph& g) { return g.order() == 0 ? 0 : degree_extremes(g).first; }

bool is_k_factor(const Graph& g, const FactorSubgraph& f, int k) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : f.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
}

bool matching_in(const Graph& g, const Matching& m) {
  return std::all_of(m.edges.begin(), m.edges.end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

CheckOutcome thm_k_factor(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || (n * k) % 2 != 0) return vacuous();
  Rational b = beta(g, k);
  if (b < 1) return vacuous();
  auto f = find_k_factor(g, k);
  if (!f) return fails("beta^k=" + rs(b) + " but no k-factor");
  if (!is_k_factor(g, *f, k)) return fails("returned subgraph is not a k-factor");
  return holds();
}

CheckOutcome thm_split_k1(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || n % 2 != 0) return vacuous();
  Rational b = beta(g, k);
  if (b < 1) return vacuous();
  if (!split_partition(g)) return vacuous();
  auto f = find_k_factor(g, k + 1);
  if (!f) return fails("split, beta^k=" + rs(b) + " but no (k+1)-factor");
  if (!is_k_factor(g, *f, k + 1)) return fails("returned subgraph is not a (k+1)-factor");
  return holds();
}

CheckOutcome thm_disjoint_pm(const Graph& g, int k) {
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b < 1) return vacuous();
  auto r = disjoint_near_perfect_matchings(g, k - 1);
  if (!r.ok())
    return fails("beta^k=" + rs(b) + ", greedy pipeline stuck at matching " +
                 std::to_string(r.failure->step));
  const auto& ms = r.family.matchings();
  if (static_cast<int>(ms.size()) != k - 1) return fails("wrong number of matchings");
  for (const auto& m : ms) {
    if (static_cast<int>(m.size()) != g.order() / 2 || !matching_in(g, m))
      return fails("matching is not (near-)perfect");
  }
  return holds();
}

CheckOutcome thm_bip_matchings(const Graph& g, int k) {
  if (k < 1) return vacuous();
  CheckOutcome out;
  for (const VertexSet& x : bipartition_sides(g)) {
    if (!at_least_one(beta_k_bipartite(g, x, k))) continue;
    out.hypothesis = true;
    auto r = disjoint_x_covering_matchings(g, x, k);
    if (auto* violator = std::get_if<VertexSet>(&r))
      return fails("X=" + x.to_string() + " has beta^k(G,X)>=1 but Lebensold fails at S=" +
                   violator->to_string());
    const auto& fam = std::get<MatchingFamily>(r);
    if (static_cast<int>(fam.size()) != k) return fails("X=" + x.to_string() + ": wrong family size");
    for (const auto& m : fam.matchings()) {
      if (!x.is_subset_of(m.covered) || !matching_in(g, m))
        return fails("X=" + x.to_string() + ": matching does not cover X");
    }
  }
  return out;
}

CheckOutcome obs_nonbip_ub(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || n < k) return vacuous();
  Rational b = beta(g, k);
  if (b > 0 && bipartition(g)) return fails("beta^k=" + rs(b) + " on a bipartite graph");
  if (b > Rational(n - k, k)) return fails("beta^k=" + rs(b) + " exceeds (n-k)/k");
  if (b >= 1 && n < 2 * k) return fails("beta^k>=1 with n<2k");
  return holds();
}

CheckOutcome obs_monotone(const Graph& g, int k) {
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  for (int i = 1; i < k; ++i) {
    Rational bi = beta(g, i);
    if (bi < b)
      return fails("beta^" + std::to_string(i) + "=" + rs(bi) + " < beta^" + std::to_string(k) +
                   "=" + rs(b));
  }
  return holds();
}

CheckOutcome positive_connected(const Graph& g, int k) {
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b <= 0) return vacuous();
  if (!is_connected(g)) return fails("beta^k=" + rs(b) + " but disconnected");
  return holds();
}

CheckOutcome lem_mindeg(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b <= 0) return vacuous();
  int d = min_degree(g);
  if (Rational(d) < (b + 1) * k - 1)
    return fails("min degree " + std::to_string(d) + " < (beta+1)k-1 with beta=" + rs(b));
  if (b >= 1 && Rational(d) < Rational(n) - Rational(n - 1) / b)
    return fails("min degree " + std::to_string(d) + " < n-(n-1)/beta with beta=" + rs(b));
  return holds();
}

CheckOutcome cor_complete_2k(const Graph& g, int k) {
  if (k < 2 || g.order() != 2 * k) return vacuous();
  if (beta(g, k) < 1) return vacuous();
  if (!is_complete(g)) return fails("n=2k, beta^k>=1, not complete");
  return holds();
}

CheckOutcome prop_indep(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b <= 0) return vacuous();
  int a = independence_number(g);
  if (Rational(a) > Rational(n) / (b + 1))
    return fails("alpha=" + std::to_string(a) + " > n/(beta+1) with beta=" + rs(b));
  if (b >= 1 && Rational(a) > (Rational(n) - b * (k - 1)) / (b + 1))
    return fails("alpha=" + std::to_string(a) + " > (n-beta(k-1))/(beta+1) with beta=" + rs(b));
  return holds();
}

CheckOutcome prop_tough(const Graph& g, int k) {
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b <= 0) return vacuous();
  Toughness t = toughness(g);
  if (!t.at_least(b)) return fails("toughness " + rs(t.value) + " < beta^k=" + rs(b));
  return holds();
}

CheckOutcome prop_conn(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2) return vacuous();
  Rational b = beta(g, k);
  if (b < 1) return vacuous();
  int kappa = vertex_connectivity(g);
  if (Rational(kappa) < Rational(n) * (b - 1) / (b + 1))
    return fails("kappa=" + std::to_string(kappa) + " < n(beta-1)/(beta+1) with beta=" + rs(b));
  return holds();
}

CheckOutcome lem_pm_exists(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || n % 2 != 0) return vacuous();
  if (beta(g, k) < 1) return vacuous();
  if (2 * static_cast<int>(max_matching(g).size()) != n) return fails("no perfect matching");
  return holds();
}

constexpr int kHypoIffMaxOrder = 20;

CheckOutcome cor_hypo_iff(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return vacuous();
  if (n > kHypoIffMaxOrder) throw CapacityError("COR_HYPO_IFF: order above cap", kHypoIffMaxOrder);
  bool hypo = hypomatchable(g).hypomatchable;
  std::optional<std::uint64_t> bad;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
    if (tutte_q(g, VertexSet::from_mask(static_cast<std::size_t>(n), u)) > std::popcount(u) - 1) {
      bad = u;
      break;
    }
  }
  if (hypo && bad)
    return fails("hypomatchable but q(U)>|U|-1 at U=" +
                 VertexSet::from_mask(static_cast<std::size_t>(n), *bad).to_string());
  if (!hypo && !bad) return fails("Tutte-type condition holds but not hypomatchable");
  return holds();
}

CheckOutcome lem_hypo(const Graph& g, int k) {
  if (k < 2 || g.order() % 2 == 0) return vacuous();
  if (beta(g, k) < 1) return vacuous();
  auto h = hypomatchable(g);
  if (!h.hypomatchable)
    return fails("not hypomatchable, fails at vertex " +
                 std::to_string(h.failing_vertex.value_or(-1)));
  return holds();
}

constexpr std::uint64_t kFdomMaxSubgraphs = std::uint64_t{1} << 22;

CheckOutcome lem_fdom(const Graph& g, int k) {
  if (k < 2) return vacuous();
  if (beta(g, k) < 1) return vacuous();
  const auto edges = g.edges();
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> chosen;
  std::uint64_t visited = 0;
  std::optional<std::string> failure;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (failure) return;
    if (i == edges.size()) {
      if (++visited > kFdomMaxSubgraphs)
        throw CapacityError("LEM_FDOM: too many subgraphs F", kFdomMaxSubgraphs);
      Graph h = remove_edges(g, chosen);
      if (!at_least_one(beta_k(h, 2))) {
        std::string f = "{";
        for (std::size_t j = 0; j < chosen.size(); ++j) {
          if (j) f += ",";
          f += std::to_string(chosen[j].u) + "-" + std::to_string(chosen[j].v);
        }
        failure = "beta^2(G-E(F))=" + rs(beta(h, 2)) + " for F=" + f + "}";
      }
      return;
    }
    self(self, i + 1);
    const Edge& e = edges[i];
    auto& du = deg[static_cast<std::size_t>(e.u)];
    auto& dv = deg[static_cast<std::size_t>(e.v)];
    if (du < k - 2 && dv < k - 2) {
      ++du;
      ++dv;
      chosen.push_back(e);
      self(self, i + 1);
      chosen.pop_back();
      --du;
      --dv;
    }
  };
  rec(rec, 0);
  if (failure) return fails(*failure);
  return holds();
}

CheckOutcome obs_split_y(const Graph& g, int k) {
  if (k < 2) return vacuous();
  if (beta(g, k) < 1) return vacuous();
  auto p = split_partition(g);
  if (!p) return vacuous();
  int x = static_cast<int>(p->first.size());
  int y = static_cast<int>(p->second.size());
  if (y < std::max(k, x + k - 1))
    return fails("|X|=" + std::to_string(x) + ", |Y|=" + std::to_string(y));
  return holds();
}

constexpr int kParityMaxOrder = 10;

CheckOutcome lem_delta_parity(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || (n * k) % 2 != 0) return vacuous();
  if (n > kParityMaxOrder) throw CapacityError("LEM_DELTA_PARITY: order above cap", kParityMaxOrder);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  const std::size_t un = static_cast<std::size_t>(n);
  while (true) {
    OrderedPartition p{VertexSet(un), VertexSet(un), VertexSet(un)};
    for (int v = 0; v < n; ++v) {
      int d = digit[static_cast<std::size_t>(v)];
      (d == 0 ? p.s : d == 1 ? p.t : p.u).insert(v);
    }
    int d = delta(g, p, k);
    if (d % 2 != 0)
      return fails("odd deficiency " + std::to_string(d) + " at S=" + p.s.to_string() +
                   " T=" + p.t.to_string());
    int i = 0;
    while (i < n && digit[static_cast<std::size_t>(i)] == 2) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++digit[static_cast<std::size_t>(i)];
  }
  return holds();
}

CheckOutcome lem_maxmin_props(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || (n * k) % 2 != 0) return vacuous();
  if (find_k_factor(g, k)) return vacuous();
  auto b = find_maxmin_barrier(g, k);
  if (!b) return fails("no k-factor but no barrier found");
  if (b->deficiency > -2 || b->deficiency % 2 != 0)
    return fails("barrier deficiency " + std::to_string(b->deficiency));
  auto rep = check_barrier_properties(g, b);
  if (!rep.all()) {
    std::ostringstream os;
    os << "maxmin barrier S=" << b->partition.s.to_string() << " T=" << b->partition.t.to_string()
       << " fails";
    if (!rep.small_u_to_t) os << " (i)";
    if (!rep.sparse_t) os << " (ii)";
    if (!rep.odd_component_bound) os << " (iii)";
    if (!rep.even_component_bound) os << " (iv)";
    return fails(os.str());
  }
  return holds();
}

bool looks_split_tight(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || n % 2 != 0 || n < 2 * k + 2) return false;
  int full = 0;
  for (Vertex v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == n - 1)
      ++full;
    else if (d != n / 2 - 1)
      return false;
  }
  if (full != n / 2 - 1) return false;
  // low-degree vertices must see only the full ones
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) continue;
    for (Vertex w : g.neighbor_list(v))
      if (g.degree(w) != n - 1) return false;
  }
  return true;
}

CheckOutcome family_tightness(const Graph& g, int k) {
  if (!looks_split_tight(g, k)) return vacuous();
  const int n = g.order();
  Rational predicted =
      std::min({Rational(n - 2, n + 2 * k), Rational(n - 2 * k, 2 * k), Rational(n - k, k)});
  Rational b = beta(g, k);
  if (b != predicted) return fails("beta^k=" + rs(b) + ", predicted " + rs(predicted));
  if (b >= 1) return fails("beta^k=" + rs(b) + " not below 1");
  if (find_k_factor(g, k)) return fails("has a k-factor");
  return holds();
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& e : kClaims)
    if (e.id == id) return e.name;
  return "UNKNOWN";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& e : kClaims)
    if (e.name == name) return e.id;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& e : kClaims) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::optional<int> fixed_k(ClaimId id) {
  if (id == ClaimId::ObsConnectedK2) return 2;
  if (id == ClaimId::CorHypoIff) return 0;
  return std::nullopt;
}

CheckOutcome check_claim(ClaimId id, const Graph& g, int k) {
  if (auto f = fixed_k(id)) k = *f;
  else if (k < 1) throw ArgumentError("k must be at least 1");
  switch (id) {
    case ClaimId::ThmKFactor: return thm_k_factor(g, k);
    case ClaimId::ThmSplitK1: return thm_split_k1(g, k);
    case ClaimId::ThmDisjointPm: return thm_disjoint_pm(g, k);
    case ClaimId::ThmBipMatchings: return thm_bip_matchings(g, k);
    case ClaimId::ObsNonbipUb: return obs_nonbip_ub(g, k);
    case ClaimId::ObsMonotone: return obs_monotone(g, k);
    case ClaimId::ObsConnectedK2: return positive_connected(g, 2);
    case ClaimId::CorConnected: return positive_connected(g, k);
    case ClaimId::LemMindeg: return lem_mindeg(g, k);
    case ClaimId::CorComplete2k: return cor_complete_2k(g, k);
    case ClaimId::PropIndep: return prop_indep(g, k);
    case ClaimId::PropTough: return prop_tough(g, k);
    case ClaimId::PropConn: return prop_conn(g, k);
    case ClaimId::LemPmExists: return lem_pm_exists(g, k);
    case ClaimId::CorHypoIff: return cor_hypo_iff(g);
    case ClaimId::LemHypo: return lem_hypo(g, k);
    case ClaimId::LemFdom: return lem_fdom(g, k);
    case ClaimId::ObsSplitY: return obs_split_y(g, k);
    case ClaimId::LemDeltaParity: return lem_delta_parity(g, k);
    case ClaimId::LemMaxminProps: return lem_maxmin_props(g, k);
    case ClaimId::FamilyTightness: return family_tightness(g, k);
  }
  throw ArgumentError("unknown claim");
}

constexpr int kSplitDetectMaxOrder = 20;

std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g) {
  const int n = g.order();
  if (n > kSplitDetectMaxOrder)
    throw CapacityError("split detection: order above cap", kSplitDetectMaxOrder);
  const std::uint64_t all = low_mask(static_cast<std::size_t>(n));
  std::optional<std::uint64_t> best;
  for (std::uint64_t y = 0; y <= all; ++y) {
    if (best && std::popcount(y) <= std::popcount(*best)) continue;
    std::uint64_t x = all & ~y;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (y & bit)
        ok = ((g.row(v) | bit) & y) == y;
      else
        ok = (g.row(v) & x) == 0;
    }
    if (ok) best = y;
  }
  if (!best) return std::nullopt;
  const auto un = static_cast<std::size_t>(n);
  return std::make_pair(VertexSet::from_mask(un, all & ~*best), VertexSet::from_mask(un, *best));
}

constexpr int kBipartitionMaxComponents = 20;

std::vector<VertexSet> bipartition_sides(const Graph& g) {
  auto base = bipartition(g);
  if (!base) return {};
  auto comps = components(g, g.vertices());
  if (static_cast<int>(comps.size()) > kBipartitionMaxComponents)
    throw CapacityError("bipartition sides: too many components", kBipartitionMaxComponents);
  std::vector<VertexSet> out;
  for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << comps.size()); ++flip) {
    VertexSet x = *base;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (flip >> c & 1) x ^= comps[c];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bindingfactor::harness
