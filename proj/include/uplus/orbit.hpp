#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uplus/word.hpp"

namespace uplus {

/// A degree-preserving bijection of Irr(U_n^+) meant to be induced by a
/// monoidal autoequivalence. Anti-monoidal maps (such as dual) reverse the
/// order of tensor factors.
class IrrPermutation {
 public:
  using Map = std::function<Word(const Word&)>;

  IrrPermutation(std::string name, Map map, bool reverses_tensor_order = false)
      : name_(std::move(name)), map_(std::move(map)), anti_(reverses_tensor_order) {}

  static IrrPermutation identity();
  static IrrPermutation gamma();
  static IrrPermutation dual();
  /// dual o gamma, i.e. plain reversal.
  static IrrPermutation dual_gamma();

  /// Resolves "identity", "gamma", "dual" or "dual_gamma".
  /// Throws std::invalid_argument otherwise.
  static IrrPermutation by_name(const std::string& name);

  /// Finitely supported user map: listed words are sent to their images,
  /// every other word is fixed. Throws std::invalid_argument when the listed
  /// assignment is not a degree-preserving permutation of its support.
  static IrrPermutation finite_support(std::string name, const std::map<Word, Word>& assignment);

  const std::string& name() const noexcept { return name_; }
  bool reverses_tensor_order() const noexcept { return anti_; }
  Word operator()(const Word& w) const { return map_(w); }

 private:
  std::string name_;
  Map map_;
  bool anti_;
};

/// For every pair with total length <= max_len, checks that the map applied
/// to fuse(x, y) equals fuse(p(x), p(y)), or fuse(p(y), p(x)) when p reverses
/// tensor order. Throws std::invalid_argument for max_len = 0.
bool verify_fusion_compatible(const IrrPermutation& p, std::size_t max_len);

/// Returns p when it passes verify_fusion_compatible at max_len, otherwise
/// throws FusionIncompatibleError.
IrrPermutation accept_permutation(IrrPermutation p, std::size_t max_len);

struct OrbitReport {
  Word seed;
  std::set<Word> orbit;
  std::size_t size = 0;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultOrbitCap = 64;
inline constexpr std::size_t kDefaultMaxLen = 10;

/// Closure of {seed} under gens. Stops with truncated = true as soon as the
/// orbit would exceed cap. Throws std::invalid_argument for cap = 0.
OrbitReport orbit(const Word& seed, const std::vector<IrrPermutation>& gens, std::size_t cap = kDefaultOrbitCap);

struct CompactnessReport {
  bool all_orbits_finite = false;
  std::size_t max_orbit_size = 0;
  /// orbit size -> number of words of length <= max_len with that orbit size
  std::map<std::size_t, std::size_t> size_histogram;
  std::size_t words_checked = 0;
};

/// Throws GeneratorOrbitInfiniteError when the orbit of generator_word is
/// truncated at cap.
CompactnessReport compact_action_check(const std::vector<IrrPermutation>& gens, const Word& generator_word,
                                       std::size_t max_len = kDefaultMaxLen, std::size_t cap = kDefaultOrbitCap);

}  // namespace uplus
