#include "uplus/property_suite.hpp"

#include <functional>
#include <random>
#include <set>

#include "uplus/equivariant.hpp"
#include "uplus/fingen.hpp"
#include "uplus/free_poly.hpp"
#include "uplus/fusion.hpp"
#include "uplus/invariant.hpp"
#include "uplus/orbit.hpp"

namespace uplus {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  /// Records one case; keeps the first failure.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && failures_++ == 0) result_.detail = describe();
  }

  PropertyResult finish() {
    result_.passed = failures_ == 0;
    return std::move(result_);
  }

 private:
  PropertyResult result_;
  std::size_t failures_ = 0;
};

Word random_word(std::mt19937_64& rng, std::size_t degree) { return Word(rng(), degree); }

FreePoly random_poly(std::mt19937_64& rng, std::size_t max_terms, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  std::uniform_int_distribution<std::size_t> degree(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  FreePoly p;
  for (std::size_t i = terms(rng); i > 0; --i) p.add(random_word(rng, degree(rng)), Rational(num(rng), den(rng)));
  return p;
}

/// Every (x, y) with |x| + |y| <= max_total.
void for_each_pair(std::size_t max_total, const std::function<void(const Word&, const Word&)>& fn) {
  for (std::size_t total = 0; total <= max_total; ++total)
    for (std::size_t lx = 0; lx <= total; ++lx)
      for_each_word(lx, [&](const Word& x) { for_each_word(total - lx, [&](const Word& y) { fn(x, y); }); });
}

std::string pair_str(const Word& x, const Word& y) { return "x=" + x.str() + " y=" + y.str(); }

PropertyResult word_involutions() {
  Checker check("word involutions (gamma, dual, length <= 12)");
  for (std::size_t d = 0; d <= 12; ++d)
    for_each_word(d, [&](const Word& w) {
      const bool ok = gamma(gamma(w)) == w && (w.empty() || gamma(w) != w) && dual(dual(w)) == w &&
                      dual(gamma(w)) == gamma(dual(w)) && dual(gamma(w)) == reverse(w);
      check.expect(ok, [&] { return "w=" + w.str(); });
    });
  return check.finish();
}

PropertyResult free_ring_laws(std::mt19937_64& rng, std::size_t samples) {
  Checker check("free ring associative, unital, gamma multiplicative");
  const FreePoly one = FreePoly::constant(1);
  for (std::size_t i = 0; i < samples; ++i) {
    const FreePoly p = random_poly(rng, 8, 6), q = random_poly(rng, 8, 6), r = random_poly(rng, 8, 6);
    const bool ok = (p * q) * r == p * (q * r) && p * one == p && one * p == p &&
                    gamma_poly(p * q) == gamma_poly(p) * gamma_poly(q) && gamma_poly(gamma_poly(p)) == p;
    check.expect(ok, [&] { return std::string("random triple #") + std::to_string(i); });
  }
  return check.finish();
}

PropertyResult fusion_exhaustive() {
  Checker check("fuse: multiplicity-free, graded-free, gamma-equivariant (total length <= 12)");
  for_each_pair(12, [&](const Word& x, const Word& y) {
    const FusionElement f = fuse(x, y);
    bool ok = f.semiring_positive();
    for (const auto& [w, c] : f) ok = ok && c == 1;
    ok = ok && leading_part(f) == FusionElement::of(x + y);
    ok = ok && map_words(f, [](const Word& w) { return gamma(w); }) == fuse(gamma(x), gamma(y));
    check.expect(ok, [&] { return pair_str(x, y); });
  });
  return check.finish();
}

PropertyResult unit_object_rule() {
  Checker check("e in fuse(x, y) iff y = dual(x), multiplicity 1 (lengths <= 6)");
  for (std::size_t lx = 0; lx <= 6; ++lx)
    for (std::size_t ly = 0; ly <= 6; ++ly)
      for_each_word(lx, [&](const Word& x) {
        for_each_word(ly, [&](const Word& y) {
          const Integer m = fuse(x, y).coeff(Word{});
          check.expect(y == dual(x) ? m == 1 : m == 0, [&] { return pair_str(x, y); });
        });
      });
  return check.finish();
}

PropertyResult associativity(std::mt19937_64& rng, std::size_t samples) {
  Checker check("character_product associative (random triples, total length <= 12)");
  std::uniform_int_distribution<std::size_t> len(0, 12);
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t a = len(rng), b = len(rng), c = len(rng);
    while (a + b + c > 12) {
      a = len(rng), b = len(rng), c = len(rng);
    }
    const auto x = FusionElement::of(random_word(rng, a));
    const auto y = FusionElement::of(random_word(rng, b));
    const auto z = FusionElement::of(random_word(rng, c));
    check.expect(character_product(character_product(x, y), z) == character_product(x, character_product(y, z)),
                 [&] { return "triple of lengths " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c); });
  }
  return check.finish();
}

PropertyResult dimension_laws() {
  Checker check("dim multiplicative over fuse and gamma/dual invariant (n in {2,3,5}, lengths <= 8)");
  for (unsigned n : {2u, 3u, 5u}) {
    DimensionTable table(n);
    for (std::size_t lx = 0; lx <= 8; ++lx)
      for (std::size_t ly = 0; ly <= 8; ++ly)
        for_each_word(lx, [&](const Word& x) {
          for_each_word(ly, [&](const Word& y) {
            check.expect(table.dim(x) * table.dim(y) == table.dim(fuse(x, y)),
                         [&] { return pair_str(x, y) + " n=" + std::to_string(n); });
          });
        });
    for (std::size_t d = 0; d <= 8; ++d)
      for_each_word(d, [&](const Word& w) {
        const Integer dw = table.dim(w);
        check.expect(dw >= 1 && dw == table.dim(gamma(w)) && dw == table.dim(dual(w)),
                     [&] { return "w=" + w.str() + " n=" + std::to_string(n); });
      });
  }
  return check.finish();
}

PropertyResult star_basis(std::mt19937_64& rng, std::size_t samples) {
  Checker check("star basis: components, two-term closure, product identity, round trip");
  for (std::size_t d = 1; d <= 12; ++d)
    check.expect(graded_component(d).size() == (std::size_t{1} << (d - 1)), [&] { return "d=" + std::to_string(d); });
  for (std::size_t total = 2; total <= 8; ++total)
    for (std::size_t d1 = 1; d1 < total; ++d1)
      for (const auto& c1 : graded_component(d1))
        for (const auto& c2 : graded_component(total - d1)) {
          auto [s, t] = star_product(c1, c2);
          const bool ok = s != t && star_element(c1) * star_element(c2) == star_element(s) + star_element(t);
          check.expect(ok, [&] { return "c1=" + c1.rep().str() + " c2=" + c2.rep().str(); });
        }
  std::uniform_int_distribution<std::size_t> degree(1, 8);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t d = degree(rng);
    FreePoly p;
    for (int terms = 0; terms < 4; ++terms) p += Rational(coeff(rng), 3) * star_element(random_word(rng, d));
    const auto decomposition = express_in_star_basis(p);
    check.expect(decomposition.expand() == p, [&] { return "random invariant #" + std::to_string(i); });
  }
  return check.finish();
}

PropertyResult hypercube_structure(std::size_t max_k) {
  Checker check("graph is the hypercube, properly 2-colored (k <= " + std::to_string(max_k) + ")");
  for (std::size_t k = 1; k <= max_k; ++k) {
    const HypercubeGraph g = build_graph(k);
    bool proper = true;
    for (auto [u, v] : g.graph().edges()) proper = proper && g.color(u) != g.color(v);
    const bool iso = k <= 5 ? verify_hypercube_iso(g) : hypercube_invariants_hold(g.graph(), k);
    check.expect(proper && iso && g.vertices().size() == (std::size_t{1} << k), [&] { return "k=" + std::to_string(k); });
  }
  return check.finish();
}

PropertyResult bw_and_generation(std::size_t max_k) {
  Checker check("bw vanishes on products, is +-1 on classes; degree k+1 never generated");
  for (std::size_t k = 1; k <= max_k; ++k) {
    const HypercubeGraph g = build_graph(k);
    for (const auto& row : two_factor_products(k))
      check.expect(bw_invariant(row, g) == 0, [&] { return "product row at k=" + std::to_string(k); });
    for (const auto& c : g.vertices()) {
      StarVector single(k + 1);
      single.add(c, 1);
      const Rational value = bw_invariant(single, g);
      check.expect(value == 1 || value == -1, [&] { return "class " + c.rep().str(); });
    }
    const GenerationReport r = degree_generated(k);
    check.expect(!r.generated && r.span_rank + 1 <= r.component_dim && r.witness &&
                     (r.witness_invariant == 1 || r.witness_invariant == -1),
                 [&] { return "generation report k=" + std::to_string(k); });
  }
  for (std::size_t k = 2; k <= max_k; ++k)
    for (std::size_t t = 3; t <= k + 1; ++t)
      check.expect(verify_pair_reduction(k, t), [&] { return "pair reduction k=" + std::to_string(k) + " t=" + std::to_string(t); });
  return check.finish();
}

PropertyResult equivariant_laws() {
  Checker check("forget o induce = W + gamma*W; surjectivity onto invariants (d <= 8)");
  for (std::size_t d = 0; d <= 8; ++d)
    for_each_word(d, [&](const Word& w) {
      FusionElement sum;
      for (const auto& e : induce(w)) sum += forget(e);
      check.expect(sum == FusionElement::of(w) + FusionElement::of(gamma(w)), [&] { return "w=" + w.str(); });
    });
  for (std::size_t d = 0; d <= 8; ++d)
    check.expect(check_surjectivity_onto_invariants(d), [&] { return "d=" + std::to_string(d); });
  return check.finish();
}

PropertyResult orbit_laws() {
  Checker check("built-in permutations fusion-compatible; orbits closed, sizes in {1,2,4}");
  const std::vector<IrrPermutation> all = {IrrPermutation::identity(), IrrPermutation::gamma(), IrrPermutation::dual(),
                                           IrrPermutation::dual_gamma()};
  for (const auto& p : all) check.expect(verify_fusion_compatible(p, 8), [&] { return p.name(); });
  for (std::size_t d = 0; d <= 8; ++d)
    for_each_word(d, [&](const Word& w) {
      const OrbitReport r = orbit(w, all);
      bool closed = !r.truncated;
      for (const auto& u : r.orbit)
        for (const auto& g : all) closed = closed && r.orbit.contains(g(u));
      check.expect(closed && (r.size == 1 || r.size == 2 || r.size == 4), [&] { return "seed " + w.str(); });
    });
  return check.finish();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<PropertyResult> results;
  results.push_back(word_involutions());
  results.push_back(free_ring_laws(rng, config.samples));
  results.push_back(fusion_exhaustive());
  results.push_back(unit_object_rule());
  results.push_back(associativity(rng, config.samples));
  results.push_back(dimension_laws());
  results.push_back(star_basis(rng, config.samples));
  results.push_back(hypercube_structure(config.max_k));
  results.push_back(bw_and_generation(config.max_k));
  results.push_back(equivariant_laws());
  results.push_back(orbit_laws());
  return results;
}

}  // namespace uplus
