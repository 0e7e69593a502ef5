#include <array>

#include "bindingfactor/binding.hpp"
#include "bindingfactor/errors.hpp"
#include "bindingfactor/factors.hpp"
#include "bindingfactor/max_flow.hpp"
#include "runner.hpp"

namespace bindingfactor::harness {

namespace {

constexpr std::array<std::pair<Conjecture, std::string_view>, 2> kConjectures{{
    {Conjecture::BipKfactorCoverX, "BIP_KFACTOR_COVER_X"},
    {Conjecture::FactorSpectrum, "FACTOR_SPECTRUM"},
}};

constexpr int kCoverMaxSide = 20;

// flow from X (cap k each) through edges to `targets` (cap k each); true when
// every X vertex gets degree k
bool saturates(const Graph& g, const VertexSet& x, std::uint64_t targets, int k) {
  const int n = g.order();
  MaxFlow flow(n + 2);
  const int s = n;
  const int t = n + 1;
  for (Vertex v : x) {
    flow.add_arc(s, v, k);
    for (Vertex w : g.neighbor_list(v))
      if (targets >> w & 1) flow.add_arc(v, w, 1);
  }
  for (Vertex w = 0; w < n; ++w)
    if (targets >> w & 1) flow.add_arc(w, t, k);
  return flow.solve(s, t) == static_cast<std::int64_t>(k) * static_cast<std::int64_t>(x.size());
}

// interpretation (a): some W in Y with |W| = |X| and a subgraph k-regular on X+W
bool regular_cover(const Graph& g, const VertexSet& x, const VertexSet& y, int k) {
  const int nx = static_cast<int>(x.size());
  const int ny = static_cast<int>(y.size());
  if (ny < nx) return false;
  const std::vector<Vertex> ys = y.to_vector();
  // combinations of ny choose nx
  std::vector<int> idx(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t w = 0;
    for (int i : idx) w |= std::uint64_t{1} << ys[static_cast<std::size_t>(i)];
    if (saturates(g, x, w, k)) return true;
    int i = nx - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == ny - nx + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < nx; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<detail::ItemResult> probe_cover(const Graph& g, int k) {
  detail::ItemResult item{k, {}, {}};
  std::string details;
  for (const VertexSet& x : bipartition_sides(g)) {
    if (!at_least_one(beta_k_bipartite(g, x, k))) continue;
    VertexSet y = x.complement();
    if (static_cast<int>(y.size()) > kCoverMaxSide)
      throw CapacityError("BIP_KFACTOR_COVER_X: side above cap", kCoverMaxSide);
    item.outcome.hypothesis = true;
    item.tally_keys.push_back("candidate_sides");
    bool a = regular_cover(g, x, y, k);
    bool b = saturates(g, x, y.mask(), k);
    item.tally_keys.push_back(a ? "interpretation_a_holds" : "interpretation_a_fails");
    item.tally_keys.push_back(b ? "interpretation_b_holds" : "interpretation_b_fails");
    if (!a || !b) {
      if (!details.empty()) details += "; ";
      details += "X=" + x.to_string() + " refutes";
      if (!a) details += " (a)";
      if (!b) details += " (b)";
    }
  }
  if (!details.empty()) item.outcome.counterexample = details;
  return {item};
}

std::vector<detail::ItemResult> probe_spectrum(const Graph& g, int k, int t) {
  detail::ItemResult item{k, {}, {}};
  if (!at_least_one(beta_k(g, k))) return {item};
  if ((g.order() * t) % 2 != 0) {
    item.tally_keys.push_back("parity_excluded");
    return {item};
  }
  item.outcome.hypothesis = true;
  if (find_k_factor(g, t)) {
    item.tally_keys.push_back("t_factor_found");
  } else {
    item.tally_keys.push_back("t_factor_missing");
    item.outcome.counterexample = "beta^" + std::to_string(k) + ">=1 but no " + std::to_string(t) +
                                  "-factor";
  }
  return {item};
}

}  // namespace

std::string_view conjecture_name(Conjecture c) {
  for (const auto& [id, name] : kConjectures)
    if (id == c) return name;
  return "UNKNOWN";
}

std::optional<Conjecture> parse_conjecture(std::string_view name) {
  for (const auto& [id, n] : kConjectures)
    if (n == name) return id;
  return std::nullopt;
}

CheckOutcome probe_graph(Conjecture which, const Graph& g, const ProbeParams& params) {
  if (params.k < 1) throw ArgumentError("k must be at least 1");
  if (which == Conjecture::BipKfactorCoverX) return probe_cover(g, params.k).front().outcome;
  if (params.t < params.k + 1 || params.t > 2 * params.k)
    throw ArgumentError("FACTOR_SPECTRUM needs k+1 <= t <= 2k");
  return probe_spectrum(g, params.k, params.t).front().outcome;
}

VerificationReport probe_conjecture(Conjecture which, std::span<const GraphSource> sources,
                                    const ProbeParams& params, const RunOptions& options) {
  if (params.k < 1) throw ArgumentError("k must be at least 1");
  VerificationReport report;
  report.claim = std::string(conjecture_name(which));
  report.k_values = {params.k};
  if (which == Conjecture::BipKfactorCoverX) {
    detail::run_sources(
        sources, [&](const Graph& g) { return probe_cover(g, params.k); }, options, report);
  } else {
    if (params.t < params.k + 1 || params.t > 2 * params.k)
      throw ArgumentError("FACTOR_SPECTRUM needs k+1 <= t <= 2k");
    detail::run_sources(
        sources, [&](const Graph& g) { return probe_spectrum(g, params.k, params.t); }, options,
        report);
  }
  return report;
}

}  // namespace bindingfactor::harness
