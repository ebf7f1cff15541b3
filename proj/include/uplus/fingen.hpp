#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uplus/hypercube.hpp"
#include "uplus/invariant.hpp"
#include "uplus/numeric.hpp"

namespace uplus {

/// (sum of black coefficients) - (sum of white coefficients).
/// Throws DegreeMismatchError unless v has degree k+1.
Rational bw_invariant(const StarVector& v, const HypercubeGraph& g);

/// Star-basis rows of every product c1* c2* with deg c1 + deg c2 = k+1,
/// both degrees positive, ordered by (deg c1, c1, c2).
std::vector<StarVector> two_factor_products(std::size_t k);

/// Every product of t star elements whose degrees are positive and sum to k+1.
std::vector<StarVector> t_factor_products(std::size_t k, std::size_t t);

struct GenerationReport {
  std::size_t k = 0;
  std::size_t component_dim = 0;
  std::size_t span_rank = 0;
  bool generated = false;
  std::optional<StarClass> witness;
  Rational witness_invariant = 0;
};

/// Decides whether the degree-(k+1) invariants lie in the span of two-factor
/// products of lower-degree star elements. Throws std::invalid_argument for k = 0.
GenerationReport degree_generated(std::size_t k);

/// Rank computation over a caller-supplied row order. Used to check that the
/// verdict does not depend on insertion order.
std::size_t product_span_rank(std::size_t k, const std::vector<StarVector>& rows);

/// True iff every t-factor product of degree k+1 lies in the two-factor span.
/// Throws std::invalid_argument unless k >= 2 and 3 <= t <= k+1.
bool verify_pair_reduction(std::size_t k, std::size_t t);

struct ScanLimits {
  /// Largest admissible component dimension 2^k.
  std::size_t max_component_dim = std::size_t{1} << 12;
};

/// Reports for k = 1..kmax. Throws std::invalid_argument for kmax = 0 and
/// ResourceLimitError when 2^kmax exceeds the budget.
std::vector<GenerationReport> finite_generation_scan(std::size_t kmax, const ScanLimits& limits = {});

/// Throws ResourceLimitError when 2^k exceeds the budget.
void check_budget(std::size_t k, const ScanLimits& limits);

}  // namespace uplus
