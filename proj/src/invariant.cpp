#include "uplus/invariant.hpp"

#include <cassert>
#include <stdexcept>

#include "uplus/errors.hpp"

namespace uplus {

FreePoly star_element(const Word& w) {
  if (w.empty()) throw EmptyWordError("star element of the empty word is not a basis element");
  return FreePoly{{w, 1}, {gamma(w), 1}};
}

StarVector::StarVector(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("star vectors live in positive degree");
}

Rational StarVector::coeff(const StarClass& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void StarVector::add(const StarClass& c, const Rational& value) {
  if (c.degree() != degree_) {
    throw DegreeMismatchError("class " + c.rep().str() + " does not have degree " +
                              std::to_string(degree_));
  }
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

StarVector& StarVector::operator+=(const StarVector& rhs) {
  for (const auto& [c, q] : rhs.coeffs_) add(c, q);
  return *this;
}

FreePoly StarVector::expand() const {
  FreePoly p;
  for (const auto& [c, q] : coeffs_) {
    p.add(c.rep(), q);
    p.add(gamma(c.rep()), q);
  }
  return p;
}

FreePoly StarDecomposition::expand() const {
  FreePoly p = FreePoly::constant(constant);
  for (const auto& v : components) p += v.expand();
  return p;
}

std::vector<StarClass> graded_component(std::size_t d) {
  if (d == 0) throw std::invalid_argument("graded component requires degree >= 1");
  std::vector<StarClass> out;
  out.reserve(std::size_t{1} << (d - 1));
  // Representatives are exactly the words starting with A.
  for_each_word(d - 1, [&](const Word& tail) { out.emplace_back(Word::letter(Letter::A) + tail); });
  return out;
}

std::pair<StarClass, StarClass> star_product(const StarClass& c1, const StarClass& c2) {
  const Word& w1 = c1.rep();
  const Word& w2 = c2.rep();
  std::pair<StarClass, StarClass> out{StarClass(w1 + w2), StarClass(w1 + gamma(w2))};
  assert(out.first != out.second);
  return out;
}

StarVector star_product(const StarVector& v, const StarClass& c) {
  StarVector out(v.degree() + c.degree());
  for (const auto& [vc, q] : v.coeffs()) {
    auto [s, t] = star_product(vc, c);
    out.add(s, q);
    out.add(t, q);
  }
  return out;
}

bool is_invariant(const FreePoly& p) { return gamma_poly(p) == p; }

StarDecomposition express_in_star_basis(const FreePoly& p) {
  if (!is_invariant(p)) throw NotInvariantError("polynomial is not fixed by the letter swap");
  StarDecomposition out{p.coeff(Word{}), {}};
  for (const auto& [w, q] : p) {
    if (w.empty()) continue;
    const StarClass c(w);
    if (c.rep() != w) continue;  // partner term carries the same coefficient
    if (out.components.empty() || out.components.back().degree() != w.degree())
      out.components.emplace_back(w.degree());
    out.components.back().add(c, q);
  }
  return out;
}

}  // namespace uplus
