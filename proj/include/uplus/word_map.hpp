#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "uplus/word.hpp"

namespace uplus::detail {

/// Finitely supported map Word -> Coeff that never stores a zero coefficient.
/// Iteration follows Word ordering (degree, then lexicographic).
template <class Coeff>
class WordMap {
 public:
  using Terms = std::map<Word, Coeff>;
  using const_iterator = typename Terms::const_iterator;

  WordMap() = default;

  void add(const Word& w, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  /// Maximum degree of a stored word. Only meaningful when nonzero.
  std::size_t max_degree() const { return terms_.rbegin()->first.degree(); }

 protected:
  Terms terms_;
};

}  // namespace uplus::detail
