#include <algorithm>

#include "bindingfactor/cli.hpp"
#include "bindingfactor/errors.hpp"
#include "bindingfactor/graph6.hpp"

namespace bindingfactor::cli {

std::string kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::Binding: return "BINDING";
    case CertKind::Factor: return "FACTOR";
    case CertKind::Barrier: return "BARRIER";
    case CertKind::Matchings: return "MATCHINGS";
    case CertKind::TutteWitness: return "TUTTE_WITNESS";
    case CertKind::LebensoldViolator: return "LEBENSOLD_VIOLATOR";
    case CertKind::Parameter: return "PARAMETER";
    case CertKind::Report: return "REPORT";
  }
  return "UNKNOWN";
}

Json certificate(CertKind kind, const Graph* g, Json parameters) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind_name(kind);
  j["input_graph6"] = g ? Json(write_graph6(*g, {.long_form = g->order() > kGraph6ShortMax})) : Json();
  j["parameters"] = std::move(parameters);
  return j;
}

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json to_json(const Matching& m) { return to_json(m.edges); }

Json to_json(const BindingValue& b) {
  Json j;
  switch (b.outcome) {
    case BindingOutcome::Value:
      j["value"] = to_string(b.value);
      break;
    case BindingOutcome::DefinedZero:
      j["value"] = "0/1";
      j["convention"] = "size";
      break;
    case BindingOutcome::NoFeasibleSet:
      j["value"] = nullptr;
      j["outcome"] = "no_feasible_set";
      break;
  }
  j["witness"] = b.witness ? to_json(*b.witness) : Json();
  j["feasible_count"] = b.feasible_count;
  return j;
}

Json to_json(const OrderedPartition& p) {
  return {{"s", to_json(p.s)}, {"t", to_json(p.t)}, {"u", to_json(p.u)}};
}

Json to_json(const harness::VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["sources"] = r.sources;
  j["k_values"] = r.k_values;
  j["graphs_scanned"] = r.graphs_scanned;
  j["checks"] = r.checks;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["counterexample_count"] = r.counterexample_count;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"graph6", c.graph6}, {"k", c.k}, {"details", c.details}});
  j["counterexamples"] = std::move(ces);
  j["tallies"] = Json(r.tallies);
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["verified"] = r.verified();
  return j;
}

Json to_json(const Toughness& t) { return t.infinite ? Json("inf") : Json(to_string(t.value)); }

VertexSet vertex_set_from_json(const Json& j, std::size_t universe) {
  if (!j.is_array()) throw ArgumentError("vertex set must be an array");
  VertexSet s(universe);
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw ArgumentError("edge list must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ArgumentError("edge must be a pair");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

namespace {

struct Checker {
  std::vector<std::string> errors;

  void expect(bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  }
};

bool is_matching_of(const Graph& g, const std::vector<Edge>& edges) {
  VertexSet seen = g.empty_set();
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    if (seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.insert(e.u);
    seen.insert(e.v);
  }
  return true;
}

bool pairwise_disjoint(std::vector<std::vector<Edge>> lists) {
  std::vector<Edge> all;
  for (auto& l : lists) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

void check_binding(const Graph& g, const Json& cert, Checker& c) {
  const Json& p = cert.at("parameters");
  const std::string op = p.at("operation");
  const auto n = static_cast<std::size_t>(g.order());
  BindingValue b;
  int k = 1;
  if (op == "beta") {
    k = p.at("k");
    b = beta_k(g, k);
  } else if (op == "beta-bip") {
    k = p.at("k");
    b = beta_k_bipartite(g, vertex_set_from_json(p.at("x"), n), k);
  } else if (op == "bind") {
    b = bind_classical(g);
  } else if (op == "bind-bip") {
    b = bind_bipartite(g, vertex_set_from_json(p.at("x"), n), vertex_set_from_json(p.at("y"), n));
  } else {
    c.expect(false, "unknown binding operation " + op);
    return;
  }
  Json fresh = to_json(b);
  for (const char* key : {"value", "convention", "outcome", "witness"}) {
    Json a = cert.contains(key) ? cert.at(key) : Json();
    Json e = fresh.contains(key) ? fresh.at(key) : Json();
    c.expect(a == e, std::string("binding ") + key + " disagrees: certificate " + a.dump() +
                         ", recomputed " + e.dump());
  }
  if (b.witness && b.outcome == BindingOutcome::Value) {
    const VertexSet& w = *b.witness;
    VertexSet lam = lambda_k(g, w, k);
    c.expect(Rational(static_cast<std::int64_t>(lam.size()), static_cast<std::int64_t>(w.size())) ==
                 b.value,
             "witness ratio differs from value");
  }
}

void check_factor(const Graph& g, const Json& cert, Checker& c) {
  const int k = cert.at("parameters").at("k");
  if (cert.at("exists").get<bool>()) {
    auto edges = edges_from_json(cert.at("edges"));
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    bool ok = true;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) {
        ok = false;
        break;
      }
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    c.expect(ok, "factor uses a non-edge");
    c.expect(std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; }),
             "factor is not k-regular");
    c.expect(std::adjacent_find(edges.begin(), edges.end()) == edges.end(), "repeated factor edge");
  } else {
    c.expect(!find_k_factor(g, k).has_value(), "claimed no k-factor but one exists");
  }
}

void check_barrier(const Graph& g, const Json& cert, Checker& c) {
  const int k = cert.at("parameters").at("k");
  const auto n = static_cast<std::size_t>(g.order());
  if (!cert.at("exists").get<bool>()) {
    c.expect(!find_maxmin_barrier(g, k).has_value(), "claimed no barrier but one exists");
    return;
  }
  OrderedPartition p{vertex_set_from_json(cert.at("s"), n), vertex_set_from_json(cert.at("t"), n),
                     vertex_set_from_json(cert.at("u"), n)};
  p.validate(g);
  const int d = delta(g, p, k);
  c.expect(d == cert.at("deficiency").get<int>(), "deficiency does not match the partition");
  c.expect(d < 0, "partition is not a barrier");
  Json odd = Json::array();
  for (const auto& comp : odd_components(g, p, k)) odd.push_back(to_json(comp));
  c.expect(odd == cert.at("odd_components"), "odd component list differs");
  if (cert.value("maxmin", false)) {
    auto b = find_maxmin_barrier(g, k);
    c.expect(b && b->partition.s == p.s && b->partition.t == p.t, "not the maxmin barrier");
  }
}

void check_matchings(const Graph& g, const Json& cert, Checker& c) {
  const Json& p = cert.at("parameters");
  const std::string op = p.at("operation");
  const int n = g.order();
  std::vector<std::vector<Edge>> lists;
  if (cert.contains("matchings"))
    for (const auto& m : cert.at("matchings")) lists.push_back(edges_from_json(m));
  if (op == "matching") {
    c.expect(lists.size() == 1, "expected one matching");
    if (lists.size() != 1) return;
    c.expect(is_matching_of(g, lists[0]), "not a matching of the graph");
    c.expect(lists[0].size() == max_matching(g).size(), "matching is not maximum");
    if (p.value("perfect", false)) c.expect(2 * static_cast<int>(lists[0].size()) == n, "not perfect");
  } else if (op == "hypomatchable") {
    if (cert.at("hypomatchable").get<bool>()) {
      c.expect(static_cast<int>(lists.size()) == n, "need one matching per vertex");
      for (std::size_t v = 0; v < lists.size(); ++v) {
        bool ok = is_matching_of(g, lists[v]) && 2 * static_cast<int>(lists[v].size()) == n - 1;
        for (const Edge& e : lists[v]) ok = ok && e.u != static_cast<int>(v) && e.v != static_cast<int>(v);
        c.expect(ok, "matching " + std::to_string(v) + " is not perfect in G-v");
      }
    } else {
      c.expect(!hypomatchable(g).hypomatchable, "graph is hypomatchable");
      if (cert.contains("failing_vertex") && !cert.at("failing_vertex").is_null()) {
        const int v = cert.at("failing_vertex");
        VertexSet alive = g.vertices();
        alive.erase(v);
        c.expect(n % 2 == 0 || 2 * static_cast<int>(max_matching(g, alive).size()) < n - 1,
                 "G-v has a perfect matching");
      }
    }
  } else if (op == "disjoint-matchings") {
    const int t = p.at("t");
    if (cert.at("exists").get<bool>()) {
      c.expect(static_cast<int>(lists.size()) == t, "wrong number of matchings");
      for (const auto& l : lists)
        c.expect(is_matching_of(g, l) && static_cast<int>(l.size()) == n / 2,
                 "member is not a (near-)perfect matching");
      c.expect(pairwise_disjoint(lists), "matchings share an edge");
    } else {
      auto r = disjoint_near_perfect_matchings(g, t);
      c.expect(!r.ok() && r.failure->step == cert.at("failed_step").get<int>(),
               "pipeline failure not reproduced");
    }
  } else if (op == "lebensold") {
    const int k = p.at("k");
    VertexSet x = vertex_set_from_json(p.at("x"), static_cast<std::size_t>(n));
    c.expect(static_cast<int>(lists.size()) == k, "wrong number of matchings");
    for (const auto& l : lists) {
      bool ok = is_matching_of(g, l);
      VertexSet cov = g.empty_set();
      for (const Edge& e : l) {
        cov.insert(e.u);
        cov.insert(e.v);
      }
      c.expect(ok && x.is_subset_of(cov), "member does not cover X");
    }
    c.expect(pairwise_disjoint(lists), "matchings share an edge");
  } else {
    c.expect(false, "unknown matching operation " + op);
  }
}

void check_tutte(const Graph& g, const Json& cert, Checker& c) {
  c.expect(2 * static_cast<int>(max_matching(g).size()) < g.order(), "graph has a perfect matching");
  if (cert.at("u").is_null()) return;
  VertexSet u = vertex_set_from_json(cert.at("u"), static_cast<std::size_t>(g.order()));
  const int q = tutte_q(g, u);
  c.expect(q == cert.at("odd_count").get<int>(), "odd component count differs");
  c.expect(q > static_cast<int>(u.size()), "q(U) does not exceed |U|");
}

void check_violator(const Graph& g, const Json& cert, Checker& c) {
  const Json& p = cert.at("parameters");
  const int k = p.at("k");
  const auto n = static_cast<std::size_t>(g.order());
  VertexSet x = vertex_set_from_json(p.at("x"), n);
  VertexSet s = vertex_set_from_json(cert.at("violator"), n);
  c.expect(s.is_subset_of(x), "violator not inside X");
  const int l = lebensold_value(g, x, s, k);
  c.expect(l == cert.at("lebensold_value").get<int>(), "Lebensold value differs");
  c.expect(l < k * static_cast<int>(s.size()), "set does not violate the condition");
}

void check_parameter(const Graph& g, const Json& cert, Checker& c) {
  const Json& p = cert.at("parameters");
  const std::string op = p.at("operation");
  Json fresh;
  if (op == "tough") {
    fresh = to_json(toughness(g));
  } else if (op == "alpha") {
    fresh = independence_number(g);
  } else if (op == "kappa") {
    fresh = vertex_connectivity(g);
  } else if (op == "lebensold-value") {
    const auto n = static_cast<std::size_t>(g.order());
    fresh = lebensold_value(g, vertex_set_from_json(p.at("x"), n), vertex_set_from_json(p.at("s"), n),
                            p.at("k").get<int>());
  } else {
    c.expect(false, "unknown parameter operation " + op);
    return;
  }
  c.expect(fresh == cert.at("value"), op + " value differs: recomputed " + fresh.dump());
}

void check_report(const Json& cert, Checker& c) {
  const Json& p = cert.at("parameters");
  const std::string op = p.at("operation");
  const std::string claim = cert.at("claim");
  const auto count = cert.at("counterexample_count").get<std::uint64_t>();
  const auto& ces = cert.at("counterexamples");
  c.expect(ces.size() <= count, "more stored counterexamples than counted");
  c.expect(cert.at("verified").get<bool>() == (count == 0), "verified flag inconsistent");
  c.expect(cert.at("hypothesis_hits").get<std::uint64_t>() >= count, "more counterexamples than hits");
  for (const auto& ce : ces) {
    Graph g = parse_graph6(ce.at("graph6").get<std::string>(), {.long_form = true});
    const int k = ce.at("k");
    harness::CheckOutcome o;
    if (op == "verify") {
      auto id = harness::parse_claim(claim);
      if (!id) {
        c.expect(false, "unknown claim " + claim);
        return;
      }
      o = harness::check_claim(*id, g, k);
    } else {
      auto which = harness::parse_conjecture(claim);
      if (!which) {
        c.expect(false, "unknown conjecture " + claim);
        return;
      }
      o = harness::probe_graph(*which, g, {k, p.at("t").get<int>()});
    }
    c.expect(o.counterexample.has_value(),
             "stored counterexample " + ce.at("graph6").get<std::string>() + " does not reproduce");
  }
}

}  // namespace

std::vector<std::string> check_certificate(const Json& cert) {
  Checker c;
  try {
    if (!cert.is_object() || cert.value("schema", "") != kSchema) return {"unknown or missing schema"};
    const std::string kind = cert.at("kind");
    if (kind == "REPORT") {
      check_report(cert, c);
      return c.errors;
    }
    Graph g = parse_graph6(cert.at("input_graph6").get<std::string>(), {.long_form = true});
    if (kind == "BINDING") check_binding(g, cert, c);
    else if (kind == "FACTOR") check_factor(g, cert, c);
    else if (kind == "BARRIER") check_barrier(g, cert, c);
    else if (kind == "MATCHINGS") check_matchings(g, cert, c);
    else if (kind == "TUTTE_WITNESS") check_tutte(g, cert, c);
    else if (kind == "LEBENSOLD_VIOLATOR") check_violator(g, cert, c);
    else if (kind == "PARAMETER") check_parameter(g, cert, c);
    else c.expect(false, "unknown certificate kind " + kind);
  } catch (const Json::exception& e) {
    c.expect(false, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    c.expect(false, std::string("certificate rejected: ") + e.what());
  }
  return c.errors;
}

}  // namespace bindingfactor::cli
