#include <chrono>
#include <exception>
#include <thread>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/graph6.hpp"
#include "runner.hpp"

namespace bindingfactor::harness {

namespace detail {

void run_sources(std::span<const GraphSource> sources, const GraphCheck& check,
                 const RunOptions& options, VerificationReport& report) {
  if (options.jobs < 1) throw ArgumentError("jobs must be at least 1");
  const std::size_t batch_size = std::max<std::size_t>(options.batch, 1);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Graph> batch;
  std::vector<std::vector<ItemResult>> results;

  auto flush = [&] {
    results.assign(batch.size(), {});
    const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(options.jobs), batch.size());
    if (jobs <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = check(batch[i]);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> workers;
      for (std::size_t t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < batch.size(); i += jobs) results[i] = check(batch[i]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& w : workers) w.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.graphs_scanned;
      for (auto& item : results[i]) {
        ++report.checks;
        for (auto& key : item.tally_keys) ++report.tallies[key];
        if (!item.outcome.hypothesis) continue;
        ++report.hypothesis_hits;
        if (!item.outcome.counterexample) continue;
        ++report.counterexample_count;
        if (report.counterexamples.size() < options.max_stored)
          report.counterexamples.push_back(
              {write_graph6(batch[i], {.long_form = batch[i].order() > kGraph6ShortMax}), item.k,
               std::move(*item.outcome.counterexample)});
      }
    }
    batch.clear();
  };

  for (const auto& source : sources) {
    report.sources.push_back(source.describe());
    GraphStream stream(source);
    while (auto g = stream.next()) {
      batch.push_back(std::move(*g));
      if (batch.size() >= batch_size) flush();
    }
  }
  flush();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

VerificationReport verify_claim(ClaimId id, std::span<const GraphSource> sources,
                                std::span<const int> k_values, const RunOptions& options) {
  VerificationReport report;
  report.claim = std::string(claim_name(id));
  std::vector<int> ks;
  if (auto f = fixed_k(id)) {
    ks.push_back(*f);
  } else {
    if (k_values.empty()) throw ArgumentError("at least one k is required");
    for (int k : k_values) {
      if (k < 1) throw ArgumentError("k must be at least 1");
      ks.push_back(k);
    }
  }
  report.k_values = ks;
  detail::run_sources(
      sources,
      [&](const Graph& g) {
        std::vector<detail::ItemResult> out;
        for (int k : ks) out.push_back({k, check_claim(id, g, k), {}});
        return out;
      },
      options, report);
  return report;
}

VerificationReport verify_claim(ClaimId id, const GraphSource& source,
                                std::span<const int> k_values, const RunOptions& options) {
  return verify_claim(id, std::span<const GraphSource>(&source, 1), k_values, options);
}

}  // namespace bindingfactor::harness
