#include "qshuffle/word.hpp"

#include <stdexcept>

namespace qshuffle {

Word Word::parse(std::string_view s) {
  if (s == "1") return {};
  if (static_cast<int>(s.size()) > kMaxLength) throw std::length_error("word too long");
  std::uint64_t bits = 0;
  for (char c : s) {
    if (c != 'x' && c != 'y') throw std::invalid_argument("invalid letter in word: " + std::string(s));
    bits = (bits << 1) | (c == 'y' ? 1u : 0u);
  }
  return Word(bits, static_cast<int>(s.size()));
}

Word Word::concat(Word o) const {
  if (len_ + o.len_ > kMaxLength) throw std::length_error("word too long");
  if (o.len_ == 0) return *this;
  return Word((bits_ << o.len_) | o.bits_, len_ + o.len_);
}

Word Word::reversed() const {
  std::uint64_t r = 0;
  for (int i = 0; i < len_; ++i) r |= ((bits_ >> i) & 1u) << (len_ - 1 - i);
  return Word(r, len_);
}

int Word::bar_sum() const {
  const int ys = __builtin_popcountll(bits_);
  return len_ - 2 * ys;
}

std::string Word::str() const {
  std::string s;
  s.reserve(len_);
  for (int i = 0; i < len_; ++i) s += at(i) == Letter::x ? 'x' : 'y';
  return s;
}

bool is_catalan(Word w) {
  int sum = 0;
  for (int i = 0; i < w.length(); ++i) {
    sum += w.at(i) == Letter::x ? 1 : -1;
    if (sum < 0) return false;
  }
  return sum == 0;
}

int height(Word w) {
  int sum = 0, best = 0;
  for (int i = 0; i < w.length(); ++i) {
    sum += w.at(i) == Letter::x ? 1 : -1;
    if (sum > best) best = sum;
  }
  return best;
}

namespace {

void extend_catalan(Word prefix, int ups_left, int level, std::vector<Word>& out) {
  if (ups_left == 0 && level == 0) {
    out.push_back(prefix);
    return;
  }
  if (ups_left > 0) extend_catalan(prefix.concat(Word::letter(Letter::x)), ups_left - 1, level + 1, out);
  if (level > 0) extend_catalan(prefix.concat(Word::letter(Letter::y)), ups_left, level - 1, out);
}

}  // namespace

std::vector<Word> catalan_words(int n) {
  if (n < 0) throw std::invalid_argument("catalan_words: negative n");
  if (2 * n > Word::kMaxLength) throw std::length_error("catalan_words: n too large");
  std::vector<Word> out;
  extend_catalan(Word(), n, 0, out);
  return out;
}

Word alternating_word(AltKind kind, int n) {
  if (n < 0) throw std::invalid_argument("alternating_word: negative index");
  const Word x = Word::letter(Letter::x), y = Word::letter(Letter::y);
  Word w;
  switch (kind) {
    case AltKind::Wminus:
      w = x;
      for (int i = 0; i < n; ++i) w = w.concat(y).concat(x);
      break;
    case AltKind::Wplus:
      w = y;
      for (int i = 0; i < n; ++i) w = w.concat(x).concat(y);
      break;
    case AltKind::Gtilde:
      for (int i = 0; i < n; ++i) w = w.concat(x).concat(y);
      break;
    case AltKind::G:
      for (int i = 0; i < n; ++i) w = w.concat(y).concat(x);
      break;
  }
  return w;
}

}  // namespace qshuffle
