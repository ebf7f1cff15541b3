#pragma once

#include <initializer_list>
#include <utility>

#include "uplus/numeric.hpp"
#include "uplus/word_map.hpp"

namespace uplus {

/// Element of the free ring Q<A, B> with exact rational coefficients.
class FreePoly : public detail::WordMap<Rational> {
 public:
  FreePoly() = default;
  FreePoly(std::initializer_list<std::pair<Word, Rational>> terms);

  static FreePoly constant(const Rational& c);
  static FreePoly monomial(const Word& w, const Rational& c = 1);

  /// Throws ZeroElementError on the zero polynomial.
  std::size_t degree() const;

  FreePoly& operator+=(const FreePoly& rhs);
  FreePoly& operator-=(const FreePoly& rhs);
  FreePoly& operator*=(const Rational& scalar);

  friend FreePoly operator+(FreePoly lhs, const FreePoly& rhs) { return lhs += rhs; }
  friend FreePoly operator-(FreePoly lhs, const FreePoly& rhs) { return lhs -= rhs; }
  friend FreePoly operator*(FreePoly lhs, const Rational& s) { return lhs *= s; }
  friend FreePoly operator*(const Rational& s, FreePoly rhs) { return rhs *= s; }
  friend FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs);

  friend bool operator==(const FreePoly& lhs, const FreePoly& rhs) { return lhs.terms_ == rhs.terms_; }

};

/// Concatenation product extended bilinearly.
FreePoly free_multiply(const FreePoly& p, const FreePoly& q);

/// Letter swap applied termwise; a ring automorphism of order two.
FreePoly gamma_poly(const FreePoly& p);

}  // namespace uplus
