#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uplus/fusion.hpp"
#include "uplus/word.hpp"

namespace uplus {

/// Class of a simple object of the Z/2-equivariantization, at the level of
/// fusion semirings. A free orbit {w, gamma(w)} gives one class; the only
/// gamma-fixed irreducible, the empty word, gives two (one per character).
class EquivariantClass {
 public:
  enum class Kind { FreeOrbit, FixedPoint };

  static EquivariantClass free_orbit(const StarClass& orbit) { return EquivariantClass(orbit); }
  /// Throws std::invalid_argument unless sign is +1 or -1.
  static EquivariantClass fixed_point(int sign);

  Kind kind() const noexcept { return kind_; }
  /// The orbit for a free class; the empty word for a fixed point.
  Word rep() const { return orbit_ ? orbit_->rep() : Word{}; }
  const std::optional<StarClass>& orbit() const noexcept { return orbit_; }
  /// Zero for free orbits.
  int sign() const noexcept { return sign_; }
  std::size_t degree() const { return rep().degree(); }

  friend bool operator==(const EquivariantClass&, const EquivariantClass&) = default;

 private:
  explicit EquivariantClass(const StarClass& orbit) : kind_(Kind::FreeOrbit), orbit_(orbit) {}
  explicit EquivariantClass(int sign) : kind_(Kind::FixedPoint), sign_(sign) {}

  Kind kind_;
  std::optional<StarClass> orbit_;
  int sign_ = 0;
};

/// Image under the forgetful map: W + gamma*W for free orbits, the trivial
/// class for either fixed point.
FusionElement forget(const EquivariantClass& e);

/// Classes whose forgetful image contains w: one free orbit for nonempty w,
/// both fixed points for the empty word.
std::vector<EquivariantClass> induce(const Word& w);

/// All classes of degree <= d: both fixed points, then free orbits by degree.
std::vector<EquivariantClass> equivariant_classes(std::size_t max_degree);

/// True iff the integer span of forget(e) over classes of degree <= d
/// contains every star element of degree <= d and the trivial class.
bool check_surjectivity_onto_invariants(std::size_t d);

}  // namespace uplus
