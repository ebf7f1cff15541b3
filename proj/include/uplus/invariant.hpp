#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "uplus/free_poly.hpp"
#include "uplus/numeric.hpp"
#include "uplus/word.hpp"

namespace uplus {

/// w* = w + gamma(w). Throws EmptyWordError for the empty word.
FreePoly star_element(const Word& w);
inline FreePoly star_element(const StarClass& c) { return star_element(c.rep()); }

/// Homogeneous element of the invariant subalgebra, in star-basis coordinates.
class StarVector {
 public:
  /// Throws std::invalid_argument for degree 0.
  explicit StarVector(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::map<StarClass, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(const StarClass& c) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Throws DegreeMismatchError when the class has a different degree.
  void add(const StarClass& c, const Rational& value);
  StarVector& operator+=(const StarVector& rhs);

  /// sum coeffs[c] * (rep(c) + gamma(rep(c))).
  FreePoly expand() const;

  friend bool operator==(const StarVector&, const StarVector&) = default;

 private:
  std::size_t degree_;
  std::map<StarClass, Rational> coeffs_;
};

/// Star-basis decomposition of an invariant polynomial: the constant term
/// plus one homogeneous vector per positive degree present.
struct StarDecomposition {
  Rational constant;
  std::vector<StarVector> components;

  FreePoly expand() const;
};

/// All 2^(d-1) star classes of degree d, ordered by representative.
std::vector<StarClass> graded_component(std::size_t d);

/// w1* w2* = (w1 w2)* + (w1 gamma(w2))* for the class representatives.
/// The two returned classes are always distinct.
std::pair<StarClass, StarClass> star_product(const StarClass& c1, const StarClass& c2);

/// Product of a homogeneous star vector with a star class, expanded by
/// star_product term by term.
StarVector star_product(const StarVector& v, const StarClass& c);

bool is_invariant(const FreePoly& p);

/// Throws NotInvariantError when gamma_poly(p) != p.
StarDecomposition express_in_star_basis(const FreePoly& p);

}  // namespace uplus
