#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bindingfactor/cli.hpp"
#include "bindingfactor/errors.hpp"
#include "bindingfactor/graph6.hpp"

namespace bindingfactor::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool plain = false;
};

// graph input shared by most subcommands
struct GraphInput {
  std::string path;
  std::string gen;

  void attach(CLI::App* sub) {
    sub->add_option("input", path, "graph6 file, '-' for stdin (default stdin)");
    sub->add_option("--gen", gen, "generate the input, e.g. split_tight:8,2");
  }

  Graph load(std::istream& in) const {
    if (!gen.empty()) return generate(FamilySpec::parse(gen));
    std::string line;
    auto first_line = [&line](std::istream& s) {
      while (std::getline(s, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
      }
      return false;
    };
    bool found = false;
    if (path.empty() || path == "-") {
      found = first_line(in);
    } else {
      std::ifstream f(path);
      if (!f) throw Error("cannot open " + path);
      found = first_line(f);
    }
    if (!found) throw ParseError("no graph6 line in input", 0);
    return parse_graph6(line, {.long_form = true});
  }
};

VertexSet to_set(const std::vector<int>& vs, const Graph& g, const char* what) {
  VertexSet s = g.empty_set();
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw ArgumentError(std::string(what) + " contains a vertex outside the graph");
    s.insert(v);
  }
  return s;
}

std::string edges_plain(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "(no edges)" : out;
}

std::string binding_plain(const BindingValue& b) {
  if (b.outcome == BindingOutcome::NoFeasibleSet) return "none";
  return b.outcome == BindingOutcome::DefinedZero ? "0/1" : to_string(b.value);
}

int emit(Context& ctx, const Json& cert, const std::string& plain, int code) {
  if (ctx.plain)
    ctx.out << plain << '\n';
  else
    ctx.out << cert.dump(2) << '\n';
  return code;
}

Json barrier_json(const Graph& g, const BarrierCertificate& b, Json params) {
  Json j = certificate(CertKind::Barrier, &g, std::move(params));
  j["exists"] = true;
  j.update(to_json(b.partition));
  j["deficiency"] = b.deficiency;
  Json odd = Json::array();
  for (const auto& c : b.odd_components) odd.push_back(to_json(c));
  j["odd_components"] = std::move(odd);
  j["maxmin"] = b.maxmin;
  return j;
}

std::string barrier_plain(const BarrierCertificate& b) {
  return "S=" + b.partition.s.to_string() + " T=" + b.partition.t.to_string() +
         " U=" + b.partition.u.to_string() + " delta=" + std::to_string(b.deficiency);
}

struct SourceOptions {
  int internal = -1;
  int split = -1;
  std::vector<int> bipartite;
  std::vector<std::string> families;
  std::vector<std::string> streams;
  int jobs = 1;
  std::size_t max_stored = 100;

  void attach(CLI::App* sub) {
    sub->add_option("--internal", internal, "all labelled graphs on N vertices (N <= 7)");
    sub->add_option("--split", split, "split graphs on N vertices (N <= 10)");
    sub->add_option("--bipartite", bipartite, "bipartite graphs with sides A,B (each <= 6)")
        ->delimiter(',')
        ->expected(2);
    sub->add_option("--family", families, "generator instance, repeatable");
    sub->add_option("--stream", streams, "graph6 file, repeatable");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-stored", max_stored, "counterexamples kept in the report");
  }

  std::vector<harness::GraphSource> sources() const {
    std::vector<harness::GraphSource> out;
    if (internal >= 0) out.push_back(harness::GraphSource::internal(internal));
    if (split >= 0) out.push_back(harness::GraphSource::split(split));
    if (!bipartite.empty()) out.push_back(harness::GraphSource::bipartite(bipartite[0], bipartite[1]));
    if (!families.empty()) {
      std::vector<FamilySpec> specs;
      for (const auto& f : families) specs.push_back(FamilySpec::parse(f));
      out.push_back(harness::GraphSource::family(std::move(specs)));
    }
    for (const auto& s : streams) out.push_back(harness::GraphSource::stream(s));
    if (out.empty()) throw ArgumentError("no graph source given");
    return out;
  }

  harness::RunOptions run_options() const {
    harness::RunOptions o;
    o.jobs = jobs;
    o.max_stored = max_stored;
    return o;
  }
};

std::string report_plain(const harness::VerificationReport& r) {
  std::ostringstream os;
  os << r.claim << ": " << r.graphs_scanned << " graphs, " << r.hypothesis_hits << " hypothesis hits, "
     << r.counterexample_count << " counterexamples";
  for (const auto& c : r.counterexamples) os << "\n  " << c.graph6 << " k=" << c.k << " " << c.details;
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Exact binding numbers, factors, matchings and claim verification for small graphs",
               "bindingfactor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", ctx.plain, "plain text instead of JSON");
  app.set_version_flag("--version", "bindingfactor 1.0");

  std::function<int()> action;
  GraphInput input;
  int k = 2;
  int t = 1;
  std::vector<int> x;
  std::vector<int> s;
  bool perfect = false;

  auto graph_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    input.attach(sub);
    return sub;
  };

  auto* beta = graph_cmd("beta", "k-th binding number");
  beta->add_option("--k", k)->check(CLI::PositiveNumber);
  beta->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      BindingValue b = beta_k(g, k);
      Json j = certificate(CertKind::Binding, &g, {{"operation", "beta"}, {"k", k}});
      j.update(to_json(b));
      return emit(ctx, j, binding_plain(b), 0);
    };
  });

  auto* beta_bip = graph_cmd("beta-bip", "weak bipartite k-th binding number");
  beta_bip->add_option("--k", k)->check(CLI::PositiveNumber);
  beta_bip->add_option("--x", x, "side X, comma separated")->delimiter(',')->required();
  beta_bip->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      VertexSet xs = to_set(x, g, "--x");
      BindingValue b = beta_k_bipartite(g, xs, k);
      Json j = certificate(CertKind::Binding, &g,
                           {{"operation", "beta-bip"}, {"k", k}, {"x", to_json(xs)}});
      j.update(to_json(b));
      return emit(ctx, j, binding_plain(b), 0);
    };
  });

  auto* bind = graph_cmd("bind", "classical binding number");
  bind->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      BindingValue b = bind_classical(g);
      Json j = certificate(CertKind::Binding, &g, {{"operation", "bind"}});
      j.update(to_json(b));
      return emit(ctx, j, binding_plain(b), 0);
    };
  });

  auto* bind_bip = graph_cmd("bind-bip", "bipartite binding number");
  bind_bip->add_option("--x", x, "side X; the other side is the complement")->delimiter(',')->required();
  bind_bip->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      VertexSet xs = to_set(x, g, "--x");
      VertexSet ys = xs.complement();
      BindingValue b = bind_bipartite(g, xs, ys);
      Json j = certificate(CertKind::Binding, &g,
                           {{"operation", "bind-bip"}, {"x", to_json(xs)}, {"y", to_json(ys)}});
      j.update(to_json(b));
      return emit(ctx, j, binding_plain(b), 0);
    };
  });

  auto* matching = graph_cmd("matching", "maximum matching, or perfect matching with --perfect");
  matching->add_flag("--perfect", perfect, "require a perfect matching or give a Tutte witness");
  matching->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      if (!perfect) {
        Matching m = max_matching(g);
        Json j = certificate(CertKind::Matchings, &g, {{"operation", "matching"}});
        j["matchings"] = Json::array({to_json(m)});
        j["size"] = m.size();
        return emit(ctx, j, std::to_string(m.size()), 0);
      }
      PerfectMatchingResult r = perfect_matching(g);
      if (r.matching) {
        Json j = certificate(CertKind::Matchings, &g, {{"operation", "matching"}, {"perfect", true}});
        j["matchings"] = Json::array({to_json(*r.matching)});
        j["size"] = r.matching->size();
        return emit(ctx, j, edges_plain(r.matching->edges), 0);
      }
      Json j = certificate(CertKind::TutteWitness, &g, {{"operation", "matching"}, {"perfect", true}});
      j["u"] = r.witness ? to_json(r.witness->u) : Json();
      j["odd_count"] = r.witness ? Json(r.witness->odd_count) : Json();
      return emit(ctx, j, r.witness ? "none U=" + r.witness->u.to_string() : "none", 1);
    };
  });

  auto* hypo = graph_cmd("hypomatchable", "test hypomatchability");
  hypo->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      HypomatchableResult r = hypomatchable(g);
      Json j = certificate(CertKind::Matchings, &g, {{"operation", "hypomatchable"}});
      j["hypomatchable"] = r.hypomatchable;
      Json ms = Json::array();
      for (const auto& m : r.near_perfect) ms.push_back(to_json(m));
      j["matchings"] = std::move(ms);
      j["failing_vertex"] = r.failing_vertex ? Json(*r.failing_vertex) : Json();
      return emit(ctx, j, r.hypomatchable ? "true" : "false", r.hypomatchable ? 0 : 1);
    };
  });

  auto* disjoint = graph_cmd("disjoint-matchings", "t edge-disjoint (near-)perfect matchings, greedily");
  disjoint->add_option("--t", t)->check(CLI::PositiveNumber)->required();
  disjoint->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      DisjointMatchingsResult r = disjoint_near_perfect_matchings(g, t);
      Json j = certificate(CertKind::Matchings, &g, {{"operation", "disjoint-matchings"}, {"t", t}});
      Json ms = Json::array();
      for (const auto& m : r.family.matchings()) ms.push_back(to_json(m));
      j["matchings"] = std::move(ms);
      j["exists"] = r.ok();
      if (!r.ok()) {
        j["failed_step"] = r.failure->step;
        j["residual_graph6"] = write_graph6(r.failure->residual, {.long_form = g.order() > kGraph6ShortMax});
        return emit(ctx, j, "failed at step " + std::to_string(r.failure->step), 1);
      }
      return emit(ctx, j, "ok", 0);
    };
  });

  auto* leb = graph_cmd("lebensold", "k disjoint X-covering matchings, or a Lebensold violator");
  leb->add_option("--k", k)->check(CLI::PositiveNumber);
  leb->add_option("--x", x, "side X")->delimiter(',')->required();
  leb->add_option("--s", s, "only evaluate L^k(S) for this S")->delimiter(',');
  leb->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      VertexSet xs = to_set(x, g, "--x");
      if (!s.empty()) {
        VertexSet ss = to_set(s, g, "--s");
        int value = lebensold_value(g, xs, ss, k);
        Json j = certificate(CertKind::Parameter, &g,
                             {{"operation", "lebensold-value"}, {"k", k}, {"x", to_json(xs)}, {"s", to_json(ss)}});
        j["value"] = value;
        return emit(ctx, j, std::to_string(value), 0);
      }
      auto r = disjoint_x_covering_matchings(g, xs, k);
      Json params{{"operation", "lebensold"}, {"k", k}, {"x", to_json(xs)}};
      if (auto* fam = std::get_if<MatchingFamily>(&r)) {
        Json j = certificate(CertKind::Matchings, &g, params);
        Json ms = Json::array();
        for (const auto& m : fam->matchings()) ms.push_back(to_json(m));
        j["matchings"] = std::move(ms);
        return emit(ctx, j, "ok", 0);
      }
      const VertexSet& bad = std::get<VertexSet>(r);
      Json j = certificate(CertKind::LebensoldViolator, &g, params);
      j["violator"] = to_json(bad);
      j["lebensold_value"] = lebensold_value(g, xs, bad, k);
      j["required"] = k * static_cast<int>(bad.size());
      return emit(ctx, j, "violator " + bad.to_string(), 1);
    };
  });

  auto* factor = graph_cmd("factor", "k-factor, or a maxmin barrier proving there is none");
  factor->add_option("--k", k)->check(CLI::PositiveNumber);
  factor->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      Json params{{"operation", "factor"}, {"k", k}};
      if (auto f = find_k_factor(g, k)) {
        Json j = certificate(CertKind::Factor, &g, params);
        j["exists"] = true;
        j["edges"] = to_json(f->edges);
        return emit(ctx, j, edges_plain(f->edges), 0);
      }
      if (g.order() <= kBarrierMaxOrder) {
        if (auto b = find_maxmin_barrier(g, k))
          return emit(ctx, barrier_json(g, *b, params), "none " + barrier_plain(*b), 1);
      }
      Json j = certificate(CertKind::Factor, &g, params);
      j["exists"] = false;
      return emit(ctx, j, "none", 1);
    };
  });

  auto* barrier = graph_cmd("barrier", "maxmin Tutte barrier search");
  barrier->add_option("--k", k)->check(CLI::PositiveNumber);
  barrier->callback([&] {
    action = [&] {
      Graph g = input.load(ctx.in);
      Json params{{"operation", "barrier"}, {"k", k}};
      if (auto b = find_maxmin_barrier(g, k)) return emit(ctx, barrier_json(g, *b, params), barrier_plain(*b), 1);
      Json j = certificate(CertKind::Barrier, &g, params);
      j["exists"] = false;
      return emit(ctx, j, "none", 0);
    };
  });

  auto param_cmd = [&](const char* name, const char* help, std::function<Json(const Graph&)> f) {
    CLI::App* sub = graph_cmd(name, help);
    sub->callback([&, name, f] {
      action = [&, name, f] {
        Graph g = input.load(ctx.in);
        Json value = f(g);
        Json j = certificate(CertKind::Parameter, &g, {{"operation", name}});
        j["value"] = value;
        return emit(ctx, j, value.is_string() ? value.get<std::string>() : value.dump(), 0);
      };
    });
  };
  param_cmd("tough", "toughness", [](const Graph& g) { return to_json(toughness(g)); });
  param_cmd("alpha", "independence number", [](const Graph& g) { return Json(independence_number(g)); });
  param_cmd("kappa", "vertex connectivity", [](const Graph& g) { return Json(vertex_connectivity(g)); });

  std::string family;
  auto* gen = app.add_subcommand("gen", "print a generated graph as graph6");
  gen->add_option("family", family, "e.g. split_tight:8,2 or join(complete:2,empty:3)")->required();
  gen->callback([&] {
    action = [&] {
      Graph g = generate(FamilySpec::parse(family));
      ctx.out << write_graph6(g, {.long_form = g.order() > kGraph6ShortMax}) << '\n';
      return 0;
    };
  });

  std::string claim;
  std::vector<int> ks;
  SourceOptions src;
  auto* verify = app.add_subcommand("verify", "verify a claim over a graph source");
  verify->add_option("claim", claim, "claim id, e.g. THM_K_FACTOR")->required();
  verify->add_option("--k", ks, "k values, comma separated")->delimiter(',');
  src.attach(verify);
  verify->callback([&] {
    action = [&] {
      auto id = harness::parse_claim(claim);
      if (!id) throw ArgumentError("unknown claim " + claim);
      if (ks.empty()) ks = {2};
      auto sources = src.sources();
      auto r = harness::verify_claim(*id, sources, ks, src.run_options());
      Json j = certificate(CertKind::Report, nullptr, {{"operation", "verify"}});
      j.update(to_json(r));
      return emit(ctx, j, report_plain(r), r.verified() ? 0 : 1);
    };
  });

  std::string conjecture;
  int probe_t = -1;
  auto* probe = app.add_subcommand("probe", "search for counterexamples to an open question");
  probe->add_option("conjecture", conjecture, "BIP_KFACTOR_COVER_X or FACTOR_SPECTRUM")->required();
  probe->add_option("--k", k)->check(CLI::PositiveNumber);
  probe->add_option("--t", probe_t, "factor degree for FACTOR_SPECTRUM (default k+1)");
  src.attach(probe);
  probe->callback([&] {
    action = [&] {
      auto which = harness::parse_conjecture(conjecture);
      if (!which) throw ArgumentError("unknown conjecture " + conjecture);
      harness::ProbeParams params{k, probe_t < 0 ? k + 1 : probe_t};
      auto sources = src.sources();
      auto r = harness::probe_conjecture(*which, sources, params, src.run_options());
      Json j = certificate(CertKind::Report, nullptr, {{"operation", "probe"}, {"k", params.k}, {"t", params.t}});
      j.update(to_json(r));
      return emit(ctx, j, report_plain(r), r.verified() ? 0 : 1);
    };
  });

  std::string cert_path;
  auto* vcert = app.add_subcommand("verify-cert", "re-check a certificate from its input graph");
  vcert->add_option("certificate", cert_path, "certificate file, '-' for stdin (default stdin)");
  vcert->callback([&] {
    action = [&] {
      Json cert;
      try {
        if (cert_path.empty() || cert_path == "-") {
          cert = Json::parse(ctx.in);
        } else {
          std::ifstream f(cert_path);
          if (!f) throw Error("cannot open " + cert_path);
          cert = Json::parse(f);
        }
      } catch (const Json::parse_error& e) {
        throw ParseError("certificate is not JSON", e.byte);
      }
      auto errors = check_certificate(cert);
      Json j{{"schema", kSchema}, {"valid", errors.empty()}, {"errors", errors}};
      std::string plain = errors.empty() ? "valid" : "invalid";
      for (const auto& e : errors) plain += "\n  " + e;
      return emit(ctx, j, plain, errors.empty() ? 0 : 1);
    };
  });

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bindingfactor::cli
