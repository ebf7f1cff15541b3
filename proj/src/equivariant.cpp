#include "uplus/equivariant.hpp"

#include <stdexcept>

#include "uplus/invariant.hpp"
#include "uplus/linalg.hpp"

namespace uplus {

EquivariantClass EquivariantClass::fixed_point(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("fixed-point sign must be +1 or -1");
  return EquivariantClass(sign);
}

FusionElement forget(const EquivariantClass& e) {
  if (e.kind() == EquivariantClass::Kind::FixedPoint) return FusionElement::unit();
  const Word& w = e.orbit()->rep();
  return FusionElement{{w, 1}, {gamma(w), 1}};
}

std::vector<EquivariantClass> induce(const Word& w) {
  if (w.empty()) return {EquivariantClass::fixed_point(1), EquivariantClass::fixed_point(-1)};
  return {EquivariantClass::free_orbit(StarClass(w))};
}

std::vector<EquivariantClass> equivariant_classes(std::size_t max_degree) {
  std::vector<EquivariantClass> out{EquivariantClass::fixed_point(1), EquivariantClass::fixed_point(-1)};
  for (std::size_t d = 1; d <= max_degree; ++d)
    for (const auto& c : graded_component(d)) out.push_back(EquivariantClass::free_orbit(c));
  return out;
}

namespace {

SparseRow<Word> to_row(const FusionElement& f) {
  SparseRow<Word> row;
  for (const auto& [w, c] : f) row.emplace(w, c);
  return row;
}

}  // namespace

bool check_surjectivity_onto_invariants(std::size_t d) {
  IntegerLattice<Word> image;
  for (const auto& e : equivariant_classes(d)) image.insert(to_row(forget(e)));

  if (!image.contains(to_row(FusionElement::unit()))) return false;
  for (std::size_t deg = 1; deg <= d; ++deg)
    for (const auto& c : graded_component(deg))
      if (!image.contains(to_row(FusionElement{{c.rep(), 1}, {gamma(c.rep()), 1}}))) return false;
  return true;
}

}  // namespace uplus
