#include "uplus/free_poly.hpp"

#include "uplus/errors.hpp"

namespace uplus {

FreePoly::FreePoly(std::initializer_list<std::pair<Word, Rational>> terms) {
  for (const auto& [w, c] : terms) add(w, c);
}

FreePoly FreePoly::constant(const Rational& c) { return monomial(Word{}, c); }

FreePoly FreePoly::monomial(const Word& w, const Rational& c) {
  FreePoly p;
  p.add(w, c);
  return p;
}

std::size_t FreePoly::degree() const {
  if (is_zero()) throw ZeroElementError("degree of the zero polynomial is undefined");
  return max_degree();
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
  for (const auto& [w, c] : rhs) add(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
  for (const auto& [w, c] : rhs) add(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs) {
  FreePoly out;
  for (const auto& [w1, c1] : lhs)
    for (const auto& [w2, c2] : rhs) out.add(w1 + w2, c1 * c2);
  return out;
}

FreePoly free_multiply(const FreePoly& p, const FreePoly& q) { return p * q; }

FreePoly gamma_poly(const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p) out.add(gamma(w), c);
  return out;
}

}  // namespace uplus
