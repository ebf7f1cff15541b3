#include "uplus/orbit.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "uplus/errors.hpp"
#include "uplus/fusion.hpp"

namespace uplus {

IrrPermutation IrrPermutation::identity() {
  return IrrPermutation("identity", [](const Word& w) { return w; });
}

IrrPermutation IrrPermutation::gamma() {
  return IrrPermutation("gamma", [](const Word& w) { return uplus::gamma(w); });
}

IrrPermutation IrrPermutation::dual() {
  return IrrPermutation("dual", [](const Word& w) { return uplus::dual(w); }, true);
}

IrrPermutation IrrPermutation::dual_gamma() {
  return IrrPermutation("dual_gamma", [](const Word& w) { return uplus::reverse(w); }, true);
}

IrrPermutation IrrPermutation::by_name(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "gamma") return gamma();
  if (name == "dual") return dual();
  if (name == "dual_gamma") return dual_gamma();
  throw std::invalid_argument("unknown permutation \"" + name + "\"");
}

IrrPermutation IrrPermutation::finite_support(std::string name, const std::map<Word, Word>& assignment) {
  std::set<Word> images;
  for (const auto& [from, to] : assignment) {
    if (from.degree() != to.degree()) throw std::invalid_argument("user permutation must preserve degree");
    if (!assignment.contains(to)) throw std::invalid_argument("image " + to.str() + " is outside the support");
    if (!images.insert(to).second) throw std::invalid_argument("user permutation is not injective");
  }
  return IrrPermutation(std::move(name), [assignment](const Word& w) {
    auto it = assignment.find(w);
    return it == assignment.end() ? w : it->second;
  });
}

bool verify_fusion_compatible(const IrrPermutation& p, std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  bool ok = true;
  for (std::size_t total = 0; total <= max_len && ok; ++total)
    for (std::size_t lx = 0; lx <= total && ok; ++lx)
      for_each_word(lx, [&](const Word& x) {
        if (!ok) return;
        const Word px = p(x);
        if (px.degree() != x.degree()) {
          ok = false;
          return;
        }
        for_each_word(total - lx, [&](const Word& y) {
          if (!ok) return;
          const Word py = p(y);
          const FusionElement lhs = map_words(fuse(x, y), [&](const Word& w) { return p(w); });
          const FusionElement rhs = p.reverses_tensor_order() ? fuse(py, px) : fuse(px, py);
          if (lhs != rhs) ok = false;
        });
      });
  return ok;
}

IrrPermutation accept_permutation(IrrPermutation p, std::size_t max_len) {
  if (!verify_fusion_compatible(p, max_len))
    throw FusionIncompatibleError("permutation \"" + p.name() + "\" does not respect the fusion rules");
  return p;
}

OrbitReport orbit(const Word& seed, const std::vector<IrrPermutation>& gens, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("orbit cap must be >= 1");
  OrbitReport report{seed, {seed}, 1, false};
  std::deque<Word> frontier{seed};
  while (!frontier.empty() && !report.truncated) {
    const Word w = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      const Word image = g(w);
      if (report.orbit.contains(image)) continue;
      if (report.orbit.size() == cap) {
        report.truncated = true;
        break;
      }
      report.orbit.insert(image);
      frontier.push_back(image);
    }
  }
  report.size = report.orbit.size();
  return report;
}

CompactnessReport compact_action_check(const std::vector<IrrPermutation>& gens, const Word& generator_word,
                                       std::size_t max_len, std::size_t cap) {
  if (orbit(generator_word, gens, cap).truncated) {
    throw GeneratorOrbitInfiniteError("orbit of " + generator_word.str() + " exceeds cap " + std::to_string(cap));
  }
  CompactnessReport report;
  report.all_orbits_finite = true;
  for (std::size_t len = 0; len <= max_len; ++len)
    for_each_word(len, [&](const Word& w) {
      const OrbitReport r = orbit(w, gens, cap);
      ++report.words_checked;
      if (r.truncated) {
        report.all_orbits_finite = false;
        return;
      }
      ++report.size_histogram[r.size];
      report.max_orbit_size = std::max(report.max_orbit_size, r.size);
    });
  return report;
}

}  // namespace uplus
