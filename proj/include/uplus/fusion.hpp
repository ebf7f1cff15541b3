#pragma once

#include <cstddef>
#include <initializer_list>
#include <unordered_map>
#include <utility>

#include "uplus/numeric.hpp"
#include "uplus/word_map.hpp"

namespace uplus {

/// Element of the fusion ring R(U_n^+): integer combination of irreducible
/// classes, indexed by words.
class FusionElement : public detail::WordMap<Integer> {
 public:
  FusionElement() = default;
  FusionElement(std::initializer_list<std::pair<Word, Integer>> terms);

  static FusionElement unit() { return of(Word{}); }
  static FusionElement of(const Word& w, const Integer& mult = 1);

  /// True when every stored multiplicity is positive (an element of R_+).
  bool semiring_positive() const;

  FusionElement& operator+=(const FusionElement& rhs);
  FusionElement& operator*=(const Integer& scalar);
  friend FusionElement operator+(FusionElement lhs, const FusionElement& rhs) { return lhs += rhs; }
  friend FusionElement operator*(FusionElement lhs, const Integer& s) { return lhs *= s; }

  friend bool operator==(const FusionElement& lhs, const FusionElement& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
};

/// Tensor product decomposition of two irreducibles:
///   r_x (x) r_y = sum over x = a.g, y = dual(g).b of r_{a.b}.
/// Every coefficient of the result is 1.
FusionElement fuse(const Word& x, const Word& y);

/// Bilinear extension of fuse. Associative with unit {e: 1}.
FusionElement character_product(const FusionElement& f, const FusionElement& g);

/// Applies a word map to every irreducible label, summing collisions.
template <class Fn>
FusionElement map_words(const FusionElement& f, Fn&& fn) {
  FusionElement out;
  for (const auto& [w, c] : f) out.add(fn(w), c);
  return out;
}

/// Multiplicity pairing of two irreducibles: 1 when equal, 0 otherwise.
int haar_pairing(const Word& x, const Word& y) noexcept;

/// Bilinear extension: sum over common irreducibles of the product of multiplicities.
Integer haar_pairing(const FusionElement& f, const FusionElement& g);

/// Top-degree homogeneous part. Throws ZeroElementError on zero.
FusionElement leading_part(const FusionElement& f);

/// Dimensions of irreducibles of U_n^+, memoized.
///
/// Not internally synchronized: confine one table to one thread.
class DimensionTable {
 public:
  /// Throws std::invalid_argument for n < 2.
  explicit DimensionTable(unsigned n);

  unsigned n() const noexcept { return n_; }
  const Integer& dim(const Word& w);
  Integer dim(const FusionElement& f);

 private:
  unsigned n_;
  std::unordered_map<Word, Integer> memo_;
};

inline const Integer& dim(const Word& w, DimensionTable& table) { return table.dim(w); }

}  // namespace uplus
