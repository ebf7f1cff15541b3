#include "uplus/fusion.hpp"

#include <algorithm>
#include <stdexcept>

#include "uplus/errors.hpp"

namespace uplus {

FusionElement::FusionElement(std::initializer_list<std::pair<Word, Integer>> terms) {
  for (const auto& [w, c] : terms) add(w, c);
}

FusionElement FusionElement::of(const Word& w, const Integer& mult) {
  FusionElement f;
  f.add(w, mult);
  return f;
}

bool FusionElement::semiring_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

FusionElement& FusionElement::operator+=(const FusionElement& rhs) {
  for (const auto& [w, c] : rhs) add(w, c);
  return *this;
}

FusionElement& FusionElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FusionElement fuse(const Word& x, const Word& y) {
  FusionElement out;
  const std::size_t limit = std::min(x.degree(), y.degree());
  for (std::size_t j = 0; j <= limit; ++j) {
    // g is the length-j suffix of x; it cancels against a prefix dual(g) of y.
    if (dual(x.suffix(j)) != y.prefix(j)) break;
    out.add(x.drop_back(j) + y.drop_front(j), 1);
  }
  return out;
}

FusionElement character_product(const FusionElement& f, const FusionElement& g) {
  FusionElement out;
  for (const auto& [x, cx] : f)
    for (const auto& [y, cy] : g) {
      const Integer c = cx * cy;
      for (const auto& [z, cz] : fuse(x, y)) out.add(z, c * cz);
    }
  return out;
}

int haar_pairing(const Word& x, const Word& y) noexcept { return x == y ? 1 : 0; }

Integer haar_pairing(const FusionElement& f, const FusionElement& g) {
  Integer total = 0;
  for (const auto& [w, c] : f) total += c * g.coeff(w);
  return total;
}

FusionElement leading_part(const FusionElement& f) {
  if (f.is_zero()) throw ZeroElementError("leading part of the zero element");
  const std::size_t top = f.max_degree();
  FusionElement out;
  for (const auto& [w, c] : f)
    if (w.degree() == top) out.add(w, c);
  return out;
}

DimensionTable::DimensionTable(unsigned n) : n_(n) {
  if (n < 2) throw std::invalid_argument("dimension table requires n >= 2");
  memo_.emplace(Word{}, Integer(1));
}

const Integer& DimensionTable::dim(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  // Peel the last letter l: r_{w'} (x) r_l = r_{w'l} + [w' ends in gamma(l)] r_{w''}.
  const Word head = w.drop_back(1);
  Integer d = Integer(n_) * dim(head);
  if (!head.empty() && head.back() == swap_letter(w.back())) d -= dim(head.drop_back(1));
  return memo_.emplace(w, std::move(d)).first->second;
}

Integer DimensionTable::dim(const FusionElement& f) {
  Integer total = 0;
  for (const auto& [w, c] : f) total += c * dim(w);
  return total;
}

}  // namespace uplus
