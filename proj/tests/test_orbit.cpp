#include <doctest.h>

#include "uplus/errors.hpp"
#include "uplus/orbit.hpp"

using namespace uplus;

namespace {
Word w(const char* s) { return Word::parse(s); }
}  // namespace

TEST_SUITE("orbit") {
  TEST_CASE("fusion compatibility") {
    CHECK(verify_fusion_compatible(IrrPermutation::gamma(), 6));
    CHECK(verify_fusion_compatible(IrrPermutation::identity(), 6));
    CHECK(verify_fusion_compatible(IrrPermutation::dual(), 8));
    CHECK(verify_fusion_compatible(IrrPermutation::dual_gamma(), 8));
    const auto swap = IrrPermutation::finite_support("ab<->aa", {{w("ab"), w("aa")}, {w("aa"), w("ab")}});
    CHECK_FALSE(verify_fusion_compatible(swap, 6));
    CHECK_THROWS_AS(accept_permutation(swap, 4), FusionIncompatibleError);
    CHECK_NOTHROW(accept_permutation(IrrPermutation::gamma(), 4));
    CHECK_THROWS_AS(verify_fusion_compatible(IrrPermutation::gamma(), 0), std::invalid_argument);
  }

  TEST_CASE("dual fails as a covariant automorphism") {
    const IrrPermutation covariant_dual("dual-covariant", [](const Word& x) { return dual(x); });
    CHECK_FALSE(verify_fusion_compatible(covariant_dual, 4));
  }

  TEST_CASE("user maps must permute their support") {
    CHECK_THROWS_AS(IrrPermutation::finite_support("bad", {{w("a"), w("ab")}}), std::invalid_argument);
    CHECK_THROWS_AS(IrrPermutation::finite_support("bad", {{w("a"), w("b")}}), std::invalid_argument);
    const auto swap = IrrPermutation::finite_support("a<->b", {{w("a"), w("b")}, {w("b"), w("a")}});
    CHECK(swap(w("a")) == w("b"));
    CHECK(swap(w("ab")) == w("ab"));
    CHECK_THROWS_AS(IrrPermutation::by_name("nope"), std::invalid_argument);
  }

  TEST_CASE("orbit examples") {
    const auto r1 = orbit(w("aba"), {IrrPermutation::gamma()}, 10);
    CHECK(r1.orbit == std::set<Word>{w("aba"), w("bab")});
    CHECK(r1.size == 2);
    CHECK_FALSE(r1.truncated);

    const auto r2 = orbit(w("a"), {IrrPermutation::identity()}, 10);
    CHECK(r2.orbit == std::set<Word>{w("a")});

    const auto r3 = orbit(w("ab"), {IrrPermutation::gamma(), IrrPermutation::dual_gamma()}, 10);
    CHECK(r3.orbit == std::set<Word>{w("ab"), w("ba")});

    const auto truncated = orbit(w("a"), {IrrPermutation::gamma()}, 1);
    CHECK(truncated.truncated);
    CHECK(truncated.size == 1);
    CHECK(truncated.orbit.contains(w("a")));
    CHECK_THROWS_AS(orbit(w("a"), {}, 0), std::invalid_argument);
  }

  TEST_CASE("orbits are closed and sized 1, 2 or 4") {
    const std::vector<IrrPermutation> gens{IrrPermutation::gamma(), IrrPermutation::dual()};
    for (std::size_t d = 0; d <= 8; ++d)
      for_each_word(d, [&](const Word& x) {
        const auto r = orbit(x, gens);
        for (const auto& u : r.orbit)
          for (const auto& g : gens) CHECK(r.orbit.contains(g(u)));
        CHECK((r.size == 1 || r.size == 2 || r.size == 4));
        CHECK((r.size == 1) == x.empty());
      });
  }

  TEST_CASE("compact action check") {
    const auto gamma_only = compact_action_check({IrrPermutation::gamma()}, w("a"), 8);
    CHECK(gamma_only.all_orbits_finite);
    CHECK(gamma_only.max_orbit_size == 2);
    CHECK(gamma_only.words_checked == 511);

    const auto trivial = compact_action_check({IrrPermutation::identity()}, w("a"), 8);
    CHECK(trivial.all_orbits_finite);
    CHECK(trivial.max_orbit_size == 1);

    CHECK_THROWS_AS(compact_action_check({IrrPermutation::gamma()}, w("a"), 8, 1), GeneratorOrbitInfiniteError);
  }

  TEST_CASE("a cap reached away from the generator reports non-finite orbits") {
    const auto r = compact_action_check({IrrPermutation::gamma(), IrrPermutation::dual()}, w("e"), 4, 2);
    CHECK_FALSE(r.all_orbits_finite);
  }
}
