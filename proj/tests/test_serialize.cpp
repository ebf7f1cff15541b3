#include <doctest.h>

#include <random>

#include "uplus/errors.hpp"
#include "uplus/serialize.hpp"

using namespace uplus;

namespace {
Word w(const char* s) { return Word::parse(s); }
}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("polynomial wire format") {
    const FreePoly p{{w("ab"), 1}, {w("ba"), Rational(-2, 3)}};
    CHECK(to_json(p).dump() == R"({"ab":"1","ba":"-2/3"})");
    CHECK(free_poly_from_json(Json::parse(R"({"ab": "1", "ba": "-2/3", "e": "4/2"})")) ==
          p + FreePoly::constant(2));
    CHECK_THROWS_AS(free_poly_from_json(Json::parse(R"({"ab": 1})")), ParseError);
    CHECK_THROWS_AS(free_poly_from_json(Json::parse(R"({"ax": "1"})")), ParseError);
    CHECK_THROWS_AS(free_poly_from_json(Json::parse(R"({"ab": "1/0"})")), ParseError);
    CHECK_THROWS_AS(free_poly_from_json(Json::parse(R"(["ab"])")), ParseError);
  }

  TEST_CASE("rational strings") {
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("+5") == 5);
    CHECK(rational_string(Rational(-6, 4)) == "-3/2");
    for (const char* bad : {"", "/", "1/", "a", "1.5", "--1", "1/-"}) CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }

  TEST_CASE("fusion element wire format") {
    CHECK(to_json(fuse(w("a"), w("b"))).dump() == R"({"ab":1,"e":1})");
    CHECK(fusion_element_from_json(Json::parse(R"({"ab": 1, "e": 2})")) == FusionElement{{w("ab"), 1}, {w("e"), 2}});
    CHECK_THROWS_AS(fusion_element_from_json(Json::parse(R"({"ab": 1.5})")), ParseError);
  }

  TEST_CASE("random polynomials survive a round trip") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9), deg(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
      FreePoly p;
      for (int i = 0; i < 6; ++i) p.add(Word(rng(), deg(rng)), Rational(num(rng), den(rng)));
      CHECK(free_poly_from_json(Json::parse(to_json(p).dump())) == p);
    }
  }

  TEST_CASE("star vectors") {
    StarVector v(2);
    v.add(StarClass(w("aa")), 2);
    v.add(StarClass(w("ab")), Rational(1, 2));
    CHECK(to_json(v).dump() == R"({"degree":2,"aa":"2","ab":"1/2"})");
    CHECK(star_vector_from_json(to_json(v)) == v);
    CHECK_THROWS_AS(star_vector_from_json(Json::parse(R"({"degree": 2, "ba": "1"})")), ParseError);
    CHECK_THROWS_AS(star_vector_from_json(Json::parse(R"({"degree": 3, "ab": "1"})")), ParseError);
    CHECK_THROWS_AS(star_vector_from_json(Json::parse(R"({"ab": "1"})")), ParseError);
  }

  TEST_CASE("generation report field order") {
    const auto j = to_json(degree_generated(2));
    CHECK(j.dump() == R"({"k":2,"component_dim":4,"span_rank":3,"generated":false,"witness":"aaa","witness_invariant":"1"})");
  }

  TEST_CASE("equivariant classes") {
    const auto free = EquivariantClass::free_orbit(StarClass(w("ba")));
    CHECK(to_json(free).dump() == R"({"kind":"free_orbit","rep":"ab"})");
    CHECK(to_json(EquivariantClass::fixed_point(-1)).dump() == R"({"kind":"fixed_point","rep":"e","sign":-1})");
    for (const auto& e : equivariant_classes(3)) CHECK(equivariant_class_from_json(to_json(e)) == e);
    CHECK_THROWS_AS(equivariant_class_from_json(Json::parse(R"({"kind":"fixed_point","sign":2})")), ParseError);
    CHECK_THROWS_AS(equivariant_class_from_json(Json::parse(R"({"kind":"free_orbit","rep":"e"})")), ParseError);
    CHECK_THROWS_AS(equivariant_class_from_json(Json::parse(R"({"kind":"other"})")), ParseError);
  }

  TEST_CASE("orbit report") {
    const auto r = orbit(w("aba"), {IrrPermutation::gamma()}, 10);
    CHECK(to_json(r).dump() == R"({"seed":"aba","orbit":["aba","bab"],"size":2,"truncated":false})");
  }
}
