#include "uplus/fingen.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "uplus/errors.hpp"
#include "uplus/linalg.hpp"

namespace uplus {

Rational bw_invariant(const StarVector& v, const HypercubeGraph& g) {
  if (v.degree() != g.k() + 1) {
    throw DegreeMismatchError("vector of degree " + std::to_string(v.degree()) + " against graph of degree " +
                              std::to_string(g.k() + 1));
  }
  Rational total = 0;
  for (const auto& [c, q] : v.coeffs()) {
    if (g.color(c) == Color::Black)
      total += q;
    else
      total -= q;
  }
  return total;
}

std::vector<StarVector> two_factor_products(std::size_t k) {
  if (k == 0) throw std::invalid_argument("products require k >= 1");
  std::vector<StarVector> rows;
  for (std::size_t d1 = 1; d1 <= k; ++d1) {
    const auto left = graded_component(d1);
    const auto right = graded_component(k + 1 - d1);
    for (const auto& c1 : left)
      for (const auto& c2 : right) {
        auto [s, t] = star_product(c1, c2);
        StarVector row(k + 1);
        row.add(s, 1);
        row.add(t, 1);
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

std::vector<StarVector> t_factor_products(std::size_t k, std::size_t t) {
  if (t == 0 || t > k + 1) throw std::invalid_argument("factor count must lie in 1..k+1");
  std::vector<StarVector> out;
  std::map<std::size_t, std::vector<StarClass>> components;
  for (std::size_t d = 1; d <= k + 1 - (t - 1); ++d) components.emplace(d, graded_component(d));

  // Depth-first over compositions of k+1 into t positive parts and the
  // classes chosen in each part.
  std::function<void(const StarVector&, std::size_t, std::size_t)> grow = [&](const StarVector& acc,
                                                                              std::size_t remaining,
                                                                              std::size_t factors_left) {
    if (factors_left == 0) {
      out.push_back(acc);
      return;
    }
    const std::size_t max_d = remaining - (factors_left - 1);
    const std::size_t min_d = factors_left == 1 ? remaining : 1;
    for (std::size_t d = min_d; d <= max_d; ++d)
      for (const auto& c : components.at(d)) grow(star_product(acc, c), remaining - d, factors_left - 1);
  };
  for (std::size_t d = 1; d <= k + 1 - (t - 1); ++d)
    for (const auto& c : components.at(d)) {
      StarVector first(d);
      first.add(c, 1);
      if (t == 1) {
        if (d == k + 1) out.push_back(first);
        continue;
      }
      grow(first, k + 1 - d, t - 1);
    }
  return out;
}

namespace {

std::map<StarClass, std::size_t> column_index(std::size_t k) {
  std::map<StarClass, std::size_t> index;
  for (const auto& c : graded_component(k + 1)) index.emplace(c, index.size());
  return index;
}

SparseRow<std::size_t> to_row(const StarVector& v, const std::map<StarClass, std::size_t>& index) {
  SparseRow<std::size_t> row;
  for (const auto& [c, q] : v.coeffs()) {
    if (denominator(q) != 1) throw std::logic_error("product rows must have integer coordinates");
    row.emplace(index.at(c), numerator(q));
  }
  return row;
}

void require_zero_one_row(const StarVector& v) {
  if (v.coeffs().size() != 2) throw std::logic_error("two-factor product did not yield two distinct classes");
  for (const auto& [c, q] : v.coeffs())
    if (q != 1) throw std::logic_error("two-factor product row has an entry outside {0, 1}");
}

EchelonBasis<std::size_t> product_span(std::size_t k, const std::vector<StarVector>& rows) {
  const auto index = column_index(k);
  EchelonBasis<std::size_t> basis;
  for (const auto& row : rows) {
    if (row.degree() != k + 1) throw DegreeMismatchError("product row of the wrong degree");
    require_zero_one_row(row);
    basis.insert(to_row(row, index));
  }
  return basis;
}

}  // namespace

std::size_t product_span_rank(std::size_t k, const std::vector<StarVector>& rows) {
  return product_span(k, rows).rank();
}

GenerationReport degree_generated(std::size_t k) {
  if (k == 0) throw std::invalid_argument("degree_generated requires k >= 1");
  GenerationReport report;
  report.k = k;
  report.component_dim = std::size_t{1} << k;
  report.span_rank = product_span_rank(k, two_factor_products(k));
  report.generated = report.span_rank == report.component_dim;
  if (!report.generated) {
    const HypercubeGraph graph = build_graph(k);
    const StarClass witness = graph.vertices().front();
    StarVector single(k + 1);
    single.add(witness, 1);
    report.witness = witness;
    report.witness_invariant = bw_invariant(single, graph);
  }
  return report;
}

bool verify_pair_reduction(std::size_t k, std::size_t t) {
  if (k < 2 || t < 3 || t > k + 1)
    throw std::invalid_argument("pair reduction requires k >= 2 and 3 <= t <= k+1");
  const auto basis = product_span(k, two_factor_products(k));
  const auto index = column_index(k);
  for (const auto& product : t_factor_products(k, t))
    if (!basis.contains(to_row(product, index))) return false;
  return true;
}

void check_budget(std::size_t k, const ScanLimits& limits) {
  if (k >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << k) > limits.max_component_dim) {
    throw ResourceLimitError("component dimension 2^" + std::to_string(k) + " exceeds budget " +
                             std::to_string(limits.max_component_dim));
  }
}

std::vector<GenerationReport> finite_generation_scan(std::size_t kmax, const ScanLimits& limits) {
  if (kmax == 0) throw std::invalid_argument("scan requires kmax >= 1");
  check_budget(kmax, limits);
  std::vector<GenerationReport> reports;
  reports.reserve(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) reports.push_back(degree_generated(k));
  return reports;
}

}  // namespace uplus
