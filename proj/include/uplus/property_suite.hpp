#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uplus {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first counterexample when failed
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Largest k for the graph and generation checks.
  std::size_t max_k = 5;
  /// Random samples for sampled checks.
  std::size_t samples = 500;
};

/// Runs every algebraic property check at the configured sizes.
/// Deterministic for a given config.
std::vector<PropertyResult> run_property_suite(const SuiteConfig& config);

}  // namespace uplus
