#pragma once

#include <functional>

#include "bindingfactor/harness.hpp"

namespace bindingfactor::harness::detail {

struct ItemResult {
  int k = 0;
  CheckOutcome outcome;
  std::vector<std::string> tally_keys;
};

using GraphCheck = std::function<std::vector<ItemResult>(const Graph&)>;

/// Streams every source in order, evaluates `check` on batches of graphs with
/// options.jobs worker threads and merges the results in stream order.
void run_sources(std::span<const GraphSource> sources, const GraphCheck& check,
                 const RunOptions& options, VerificationReport& report);

}  // namespace bindingfactor::harness::detail
