#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace uplus {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter swap_letter(Letter l) noexcept {
  return l == Letter::A ? Letter::B : Letter::A;
}

/// A finite word over {A, B}, labelling an irreducible representation of
/// the free unitary quantum group (A for the fundamental V, B for its dual).
///
/// Letters are bit-packed: position i lives in bit i, A = 0 and B = 1.
/// Words are ordered by degree first, then lexicographically with A < B.
class Word {
 public:
  static constexpr std::size_t kMaxDegree = 64;

  constexpr Word() = default;

  /// Throws std::length_error when degree exceeds kMaxDegree. Bits above
  /// the degree are discarded.
  Word(std::uint64_t bits, std::size_t degree);

  static Word letter(Letter l) { return Word(static_cast<std::uint64_t>(l), 1); }

  /// Accepts "e" for the empty word, otherwise letters from {a, b, A, B}.
  /// Throws ParseError on anything else.
  static Word parse(std::string_view text);

  std::size_t degree() const noexcept { return degree_; }
  bool empty() const noexcept { return degree_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }

  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>((bits_ >> i) & 1u);
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[degree_ - 1]; }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word drop_front(std::size_t n) const { return suffix(degree_ - n); }
  Word drop_back(std::size_t n) const { return prefix(degree_ - n); }

  /// Lowercase a/b, "e" for the empty word.
  std::string str() const;

  friend Word operator+(const Word& lhs, const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept;

  /// Lexicographic comparison ignoring degree (a proper prefix sorts first).
  static std::strong_ordering lex_compare(const Word& lhs, const Word& rhs) noexcept;

  static std::uint64_t mask(std::size_t degree) noexcept {
    return degree >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << degree) - 1);
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t degree_ = 0;
};

/// Letterwise swap A <-> B. Involutive, fixes only the empty word.
Word gamma(const Word& w) noexcept;

Word reverse(const Word& w) noexcept;

/// Label of the conjugate representation: reverse(gamma(w)).
Word dual(const Word& w) noexcept;

/// All 2^d words of degree d, in lexicographic order.
template <class Fn>
void for_each_word(std::size_t d, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t m = 0; m < count; ++m) {
    // Position 0 is the most significant digit of m so that m-order is lex order.
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < d; ++i) bits |= ((m >> (d - 1 - i)) & 1u) << i;
    fn(Word(bits, d));
  }
}

/// Equivalence class {w, gamma(w)} for a nonempty word; the representative
/// is the lexicographically smaller member, which always starts with A.
class StarClass {
 public:
  /// Throws EmptyWordError for the empty word.
  explicit StarClass(const Word& w);

  const Word& rep() const noexcept { return rep_; }
  std::size_t degree() const noexcept { return rep_.degree(); }

  friend bool operator==(const StarClass&, const StarClass&) = default;
  friend auto operator<=>(const StarClass& lhs, const StarClass& rhs) noexcept {
    return lhs.rep_ <=> rhs.rep_;
  }

 private:
  Word rep_;
};

inline StarClass star_class(const Word& w) { return StarClass(w); }

}  // namespace uplus

template <>
struct std::hash<uplus::Word> {
  std::size_t operator()(const uplus::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ULL ^ w.degree());
  }
};
