#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "uplus/numeric.hpp"

namespace uplus {

template <class Key>
using SparseRow = std::map<Key, Integer>;

namespace detail {

/// row := a * row - b * other, dropping zeros.
template <class Key>
void combine_rows(SparseRow<Key>& row, const Integer& a, const Integer& b, const SparseRow<Key>& other) {
  if (a != 1)
    for (auto& [k, v] : row) v *= a;
  for (const auto& [k, v] : other) {
    auto [it, inserted] = row.try_emplace(k, 0);
    it->second -= b * v;
    if (it->second == 0) row.erase(it);
  }
}

template <class Key>
void remove_content(SparseRow<Key>& row) {
  Integer g = 0;
  for (const auto& [k, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [k, v] : row) v /= g;
}

}  // namespace detail

/// Row echelon form over Q maintained with integer-only arithmetic.
///
/// Each inserted row is eliminated against the stored pivots by
/// cross-multiplication (row := p * row - row[c] * pivot_row) and then
/// divided by the gcd of its entries, so no fractions ever appear. The
/// rank does not depend on insertion order.
template <class Key>
class EchelonBasis {
 public:
  /// Returns true when the row was independent of the current basis.
  bool insert(SparseRow<Key> row) {
    reduce(row);
    if (row.empty()) return false;
    detail::remove_content(row);
    const Key lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  /// Membership in the rational span of the inserted rows.
  bool contains(SparseRow<Key> row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  void reduce(SparseRow<Key>& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      // Pivots are keyed by leading column, so a missing pivot means the
      // leading entry survives every further reduction.
      if (it == pivots_.end()) return;
      const Integer a = it->second.begin()->second;
      const Integer b = row.begin()->second;
      detail::combine_rows(row, a, b, it->second);
      detail::remove_content(row);
    }
  }

  std::map<Key, SparseRow<Key>> pivots_;
};

/// Integer lattice in echelon (Hermite-style) form, supporting exact
/// Z-span membership.
template <class Key>
class IntegerLattice {
 public:
  void insert(SparseRow<Key> row) {
    while (!row.empty()) {
      const Key lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        if (row.begin()->second < 0)
          for (auto& [k, v] : row) v = -v;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      SparseRow<Key>& basis = it->second;
      const Integer p = basis.begin()->second;
      const Integer a = row.begin()->second;
      auto [g, s, t] = extended_gcd(p, a);
      // basis' = s*basis + t*row has leading entry g; row' = (p/g)*row - (a/g)*basis drops it.
      SparseRow<Key> next_basis = scaled_sum(s, basis, t, row);
      SparseRow<Key> next_row = scaled_sum(p / g, row, -(a / g), basis);
      basis = std::move(next_basis);
      row = std::move(next_row);
    }
  }

  bool contains(SparseRow<Key> row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) return false;
      const Integer& p = it->second.begin()->second;
      const Integer& a = row.begin()->second;
      if (a % p != 0) return false;
      detail::combine_rows(row, Integer(1), a / p, it->second);
    }
    return true;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  struct Gcd {
    Integer g, s, t;
  };

  static Gcd extended_gcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      const Integer q = a / b;
      Integer r = a - q * b;
      a = std::move(b);
      b = std::move(r);
      Integer s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Integer t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
  }

  static SparseRow<Key> scaled_sum(const Integer& x, const SparseRow<Key>& u, const Integer& y,
                                   const SparseRow<Key>& v) {
    SparseRow<Key> out;
    for (const auto& [k, val] : u)
      if (Integer c = x * val; c != 0) out.emplace(k, std::move(c));
    for (const auto& [k, val] : v) {
      auto [it, inserted] = out.try_emplace(k, 0);
      it->second += y * val;
      if (it->second == 0) out.erase(it);
    }
    return out;
  }

  std::map<Key, SparseRow<Key>> pivots_;
};

}  // namespace uplus
