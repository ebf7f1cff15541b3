#include <doctest.h>

#include <random>

#include "uplus/errors.hpp"
#include "uplus/invariant.hpp"

using namespace uplus;

namespace {
Word w(const char* s) { return Word::parse(s); }
StarClass c(const char* s) { return StarClass(Word::parse(s)); }
}  // namespace

TEST_SUITE("invariant") {
  TEST_CASE("star elements") {
    CHECK(star_element(w("ab")) == FreePoly{{w("ab"), 1}, {w("ba"), 1}});
    CHECK(star_element(w("aa")) == FreePoly{{w("aa"), 1}, {w("bb"), 1}});
    CHECK(star_element(w("ba")) == star_element(w("ab")));
    CHECK(is_invariant(star_element(w("abb"))));
    CHECK_THROWS_AS(star_element(w("e")), EmptyWordError);
  }

  TEST_CASE("graded components") {
    CHECK(graded_component(1) == std::vector<StarClass>{c("a")});
    CHECK(graded_component(2) == std::vector<StarClass>{c("aa"), c("ab")});
    CHECK(graded_component(3).size() == 4);
    for (std::size_t d = 1; d <= 12; ++d) {
      const auto comp = graded_component(d);
      CHECK(comp.size() == (std::size_t{1} << (d - 1)));
      CHECK(std::is_sorted(comp.begin(), comp.end()));
    }
    CHECK_THROWS_AS(graded_component(0), std::invalid_argument);
  }

  TEST_CASE("star product examples") {
    auto [s1, t1] = star_product(c("a"), c("a"));
    CHECK(std::set<StarClass>{s1, t1} == std::set<StarClass>{c("aa"), c("ab")});
    auto [s2, t2] = star_product(c("ab"), c("a"));
    CHECK(std::set<StarClass>{s2, t2} == std::set<StarClass>{c("aba"), c("abb")});
    auto [s3, t3] = star_product(c("a"), c("ab"));
    CHECK(std::set<StarClass>{s3, t3} == std::set<StarClass>{c("aab"), c("aba")});
  }

  TEST_CASE("star product identity holds in the free ring, total degree <= 8") {
    for (std::size_t total = 2; total <= 8; ++total)
      for (std::size_t d1 = 1; d1 < total; ++d1)
        for (const auto& c1 : graded_component(d1))
          for (const auto& c2 : graded_component(total - d1)) {
            auto [s, t] = star_product(c1, c2);
            CHECK(s != t);
            CHECK(star_element(c1) * star_element(c2) == star_element(s) + star_element(t));
          }
  }

  TEST_CASE("star vector times class matches the free ring product") {
    StarVector v(2);
    v.add(c("aa"), 3);
    v.add(c("ab"), Rational(-1, 2));
    for (const auto& cls : graded_component(2)) CHECK(star_product(v, cls).expand() == v.expand() * star_element(cls));
  }

  TEST_CASE("is_invariant") {
    CHECK(is_invariant(FreePoly{{w("ab"), 1}, {w("ba"), 1}}));
    CHECK_FALSE(is_invariant(FreePoly::monomial(w("ab"))));
    CHECK(is_invariant(FreePoly::constant(7)));
    CHECK(is_invariant(FreePoly{}));
  }

  TEST_CASE("express in the star basis") {
    auto d1 = express_in_star_basis(FreePoly{{w("ab"), 1}, {w("ba"), 1}});
    REQUIRE(d1.components.size() == 1);
    CHECK(d1.components[0].degree() == 2);
    CHECK(d1.components[0].coeffs() == std::map<StarClass, Rational>{{c("ab"), 1}});

    auto d2 = express_in_star_basis(FreePoly{{w("aa"), 2}, {w("bb"), 2}, {w("ab"), 1}, {w("ba"), 1}});
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].coeffs() == std::map<StarClass, Rational>{{c("aa"), 2}, {c("ab"), 1}});

    CHECK_THROWS_AS(express_in_star_basis(FreePoly::monomial(w("a"))), NotInvariantError);

    auto d3 = express_in_star_basis(FreePoly::constant(4) + star_element(w("a")) + star_element(w("bab")));
    CHECK(d3.constant == 4);
    CHECK(d3.components.size() == 2);
  }

  TEST_CASE("star basis round trip on random invariants up to degree 8") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> degree(1, 8), coeff(-7, 7), terms(1, 6);
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = static_cast<std::size_t>(degree(rng));
      FreePoly p;
      for (int t = terms(rng); t > 0; --t) p += Rational(coeff(rng), 2) * star_element(Word(rng(), d));
      const auto decomposition = express_in_star_basis(p);
      CHECK(decomposition.expand() == p);
      for (const auto& v : decomposition.components) CHECK(v.degree() == d);
    }
  }

  TEST_CASE("star vectors reject other degrees") {
    StarVector v(3);
    CHECK_THROWS_AS(v.add(c("ab"), 1), DegreeMismatchError);
    CHECK_THROWS_AS(StarVector(0), std::invalid_argument);
  }
}
