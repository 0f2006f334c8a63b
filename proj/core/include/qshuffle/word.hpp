#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

enum class Letter : std::uint8_t { x = 0, y = 1 };
enum class Side : std::uint8_t { left, right };

// Word over {x, y}, packed: letter i sits at bit (length - 1 - i), x = 0.
// Ordering is by length, then lexicographic with x < y.
class Word {
 public:
  static constexpr int kMaxLength = 63;

  Word() = default;
  static Word letter(Letter a) { return Word(static_cast<std::uint64_t>(a), 1); }
  // Accepts strings over {x, y}; "" and "1" denote the empty word.
  static Word parse(std::string_view s);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::uint64_t bits() const { return bits_; }
  Letter at(int i) const { return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u); }
  Letter first() const { return at(0); }
  Letter last() const { return static_cast<Letter>(bits_ & 1u); }

  Word concat(Word o) const;
  Word drop_first() const { return Word(bits_ & low_mask(len_ - 1), len_ - 1); }
  Word drop_last() const { return Word(bits_ >> 1, len_ - 1); }
  Word reversed() const;
  Word swapped() const { return Word(bits_ ^ low_mask(len_), len_); }
  // Sum of bar-weights, x = +1, y = -1.
  int bar_sum() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Word(std::uint64_t bits, int len) : bits_(bits), len_(static_cast<std::uint8_t>(len)) {}
  static std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(w.length()));
  }
};

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    const std::size_t a = WordHash{}(p.first);
    return a ^ (WordHash{}(p.second) + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
  }
};

bool is_catalan(Word w);
// Maximum prefix bar-sum (0 for the empty word).
int height(Word w);
// Catalan words of length 2n in increasing word order.
std::vector<Word> catalan_words(int n);

enum class AltKind { Wminus, Wplus, Gtilde, G };
// W_{-n} = x(yx)^n, W_{n+1} = y(xy)^n, G~_n = (xy)^n, G_n = (yx)^n.
Word alternating_word(AltKind kind, int n);

}  // namespace qshuffle
