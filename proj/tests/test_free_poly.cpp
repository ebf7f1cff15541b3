#include <doctest.h>

#include <random>

#include "uplus/errors.hpp"
#include "uplus/free_poly.hpp"

using namespace uplus;

namespace {

Word w(const char* s) { return Word::parse(s); }

FreePoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 8), degree(0, 6), num(-6, 6), den(1, 5);
  FreePoly p;
  for (int i = terms(rng); i > 0; --i) p.add(Word(rng(), degree(rng)), Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_SUITE("free_poly") {
  TEST_CASE("monomial products concatenate") {
    CHECK(free_multiply(FreePoly::monomial(w("a")), FreePoly::monomial(w("b"))) == FreePoly::monomial(w("ab")));
    const FreePoly s{{w("a"), 1}, {w("b"), 1}};
    CHECK(s * s == FreePoly{{w("aa"), 1}, {w("ab"), 1}, {w("ba"), 1}, {w("bb"), 1}});
    const FreePoly p{{w("ab"), Rational(2, 3)}, {w("e"), -1}};
    CHECK(p * FreePoly::constant(1) == p);
    CHECK(FreePoly::constant(1) * p == p);
  }

  TEST_CASE("zero coefficients are never stored") {
    FreePoly p{{w("ab"), 1}};
    p -= FreePoly{{w("ab"), 1}};
    CHECK(p.is_zero());
    CHECK(FreePoly{{w("a"), 0}}.size() == 0);
    CHECK((FreePoly{{w("a"), 3}} * Rational(0)).is_zero());
    CHECK_THROWS_AS(p.degree(), ZeroElementError);
  }

  TEST_CASE("degree is the largest word length") {
    CHECK(FreePoly{{w("aba"), 1}, {w("b"), 4}}.degree() == 3);
    CHECK(FreePoly::constant(5).degree() == 0);
    CHECK((FreePoly::monomial(w("ab")) * FreePoly::monomial(w("bab"))).degree() == 5);
  }

  TEST_CASE("gamma_poly examples") {
    CHECK(gamma_poly(FreePoly{{w("aa"), 1}, {w("ab"), 2}}) == FreePoly{{w("bb"), 1}, {w("ba"), 2}});
    CHECK(gamma_poly(FreePoly::constant(5)) == FreePoly::constant(5));
    const FreePoly sym{{w("a"), 1}, {w("b"), 1}};
    CHECK(gamma_poly(sym) == sym);
  }

  TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(20240917);
    for (int i = 0; i < 300; ++i) {
      const FreePoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(gamma_poly(p * q) == gamma_poly(p) * gamma_poly(q));
      CHECK(gamma_poly(gamma_poly(p)) == p);
      if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
  }
}
