// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "uplus/numeric.hpp"

namespace oracle {

inline std::string swap_letters(std::string s) {
  for (char& c : s) c = c == 'a' ? 'b' : 'a';
  return s;
}

inline std::string dual_string(const std::string& s) {
  std::string out = swap_letters(s);
  std::reverse(out.begin(), out.end());
  return out;
}

/// Fusion rule on plain strings ("" is the empty word).
inline std::map<std::string, int> fuse_strings(const std::string& x, const std::string& y) {
  std::map<std::string, int> out;
  for (std::size_t j = 0; j <= std::min(x.size(), y.size()); ++j) {
    const std::string g = x.substr(x.size() - j);
    if (dual_string(g) == y.substr(0, j)) ++out[x.substr(0, x.size() - j) + y.substr(j)];
  }
  return out;
}

/// Rank by textbook Gaussian elimination over Q with partial search for a
/// nonzero pivot.
inline std::size_t rational_rank(std::vector<std::vector<uplus::Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const uplus::Rational factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
