#include "uplus/word.hpp"

#include <bit>
#include <stdexcept>

#include "uplus/errors.hpp"

namespace uplus {

Word::Word(std::uint64_t bits, std::size_t degree) : bits_(bits & mask(degree)), degree_(degree) {
  if (degree > kMaxDegree) {
    throw std::length_error("word degree " + std::to_string(degree) + " exceeds " +
                            std::to_string(kMaxDegree));
  }
}

Word Word::parse(std::string_view text) {
  if (text == "e") return Word{};
  if (text.empty()) throw ParseError("empty word must be written as \"e\"");
  if (text.size() > kMaxDegree) throw ParseError("word too long: " + std::string(text));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a':
      case 'A':
        break;
      case 'b':
      case 'B':
        bits |= std::uint64_t{1} << i;
        break;
      default:
        throw ParseError("invalid letter '" + std::string(1, text[i]) + "' in word \"" +
                         std::string(text) + "\"");
    }
  }
  return Word(bits, text.size());
}

Word Word::prefix(std::size_t n) const {
  if (n > degree_) throw std::out_of_range("prefix longer than word");
  return Word(bits_, n);
}

Word Word::suffix(std::size_t n) const {
  if (n > degree_) throw std::out_of_range("suffix longer than word");
  const std::size_t shift = degree_ - n;
  return Word(shift >= 64 ? 0 : bits_ >> shift, n);
}

std::string Word::str() const {
  if (degree_ == 0) return "e";
  std::string out(degree_, 'a');
  for (std::size_t i = 0; i < degree_; ++i)
    if ((*this)[i] == Letter::B) out[i] = 'b';
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  const std::size_t degree = lhs.degree_ + rhs.degree_;
  if (degree > Word::kMaxDegree) throw std::length_error("concatenation exceeds maximum word degree");
  const std::uint64_t high = lhs.degree_ >= 64 ? 0 : rhs.bits_ << lhs.degree_;
  return Word(lhs.bits_ | high, degree);
}

std::strong_ordering Word::lex_compare(const Word& lhs, const Word& rhs) noexcept {
  const std::size_t common = std::min(lhs.degree_, rhs.degree_);
  const std::uint64_t diff = (lhs.bits_ ^ rhs.bits_) & mask(common);
  if (diff != 0) {
    const int first = std::countr_zero(diff);
    return ((lhs.bits_ >> first) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return lhs.degree_ <=> rhs.degree_;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
  if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
  return Word::lex_compare(lhs, rhs);
}

Word gamma(const Word& w) noexcept { return Word(~w.bits(), w.degree()); }

Word reverse(const Word& w) noexcept {
  const std::size_t d = w.degree();
  if (d == 0) return w;
  std::uint64_t bits = w.bits();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < d; ++i) {
    out = (out << 1) | (bits & 1u);
    bits >>= 1;
  }
  return Word(out, d);
}

Word dual(const Word& w) noexcept { return reverse(gamma(w)); }

StarClass::StarClass(const Word& w) {
  if (w.empty()) throw EmptyWordError("star class of the empty word is not defined");
  const Word g = gamma(w);
  rep_ = Word::lex_compare(w, g) < 0 ? w : g;
}

}  // namespace uplus
