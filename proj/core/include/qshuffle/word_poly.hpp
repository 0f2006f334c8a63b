#pragma once

#include "qshuffle/word.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qshuffle {

inline bool is_zero(double d) { return d == 0.0; }

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

// Finite linear combination of words, sorted by word, no zero coefficients.
template <class C>
class WordPoly {
 public:
  using Term = std::pair<Word, C>;

  WordPoly() = default;
  static WordPoly monomial(Word w, C c) {
    WordPoly p;
    if (!coeff_is_zero(c)) p.terms_.emplace_back(w, std::move(c));
    return p;
  }
  static WordPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    WordPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (coeff_is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!coeff_is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  // Caller guarantees sorted distinct words and nonzero coefficients.
  static WordPoly from_sorted(std::vector<Term> terms) {
    WordPoly p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_length() const { return terms_.empty() ? 0 : terms_.front().first.length(); }
  int max_length() const { return terms_.empty() ? 0 : terms_.back().first.length(); }
  bool is_homogeneous(int len) const {
    return std::all_of(terms_.begin(), terms_.end(), [len](const Term& t) { return t.first.length() == len; });
  }
  C coeff(Word w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, Word x) { return t.first < x; });
    return (it != terms_.end() && it->first == w) ? it->second : C{};
  }

  WordPoly operator-() const {
    WordPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }
  friend WordPoly operator+(const WordPoly& a, const WordPoly& b) { return merge(a, b, false); }
  friend WordPoly operator-(const WordPoly& a, const WordPoly& b) { return merge(a, b, true); }
  WordPoly& operator+=(const WordPoly& o) { return *this = *this + o; }
  WordPoly& operator-=(const WordPoly& o) { return *this = *this - o; }
  friend bool operator==(const WordPoly& a, const WordPoly& b) = default;

  // Linear map induced by an injective partial map on words.
  template <class F>
  WordPoly transform_words(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_)
      if (std::optional<Word> z = f(w)) out.emplace_back(*z, c);
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return from_sorted(std::move(out));
  }

  template <class F>
  WordPoly transform_coeffs(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
      C d = f(c);
      if (!coeff_is_zero(d)) out.emplace_back(w, std::move(d));
    }
    return from_sorted(std::move(out));
  }

 private:
  static WordPoly merge(const WordPoly& a, const WordPoly& b, bool subtract) {
    WordPoly p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        p.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        p.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
        if (!coeff_is_zero(c)) p.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

template <class C>
WordPoly<C> scale(const C& c, const WordPoly<C>& p) {
  if (coeff_is_zero(c)) return {};
  return p.transform_coeffs([&c](const C& x) { return C(c * x); });
}

template <class C>
WordPoly<C> concat(const WordPoly<C>& a, const WordPoly<C>& b) {
  std::vector<typename WordPoly<C>::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [w, cw] : b.terms()) out.emplace_back(u.concat(w), C(cu * cw));
  return WordPoly<C>::from_terms(std::move(out));
}

// Reverse each word and swap x <-> y; an antiautomorphism of both products.
template <class C>
WordPoly<C> zeta(const WordPoly<C>& p) {
  return p.transform_words([](Word w) { return std::optional<Word>(w.reversed().swapped()); });
}

// Swap x <-> y letterwise without reversing; an automorphism of both products.
template <class C>
WordPoly<C> swap_letters(const WordPoly<C>& p) {
  return p.transform_words([](Word w) { return std::optional<Word>(w.swapped()); });
}

template <class C>
WordPoly<C> erase(const WordPoly<C>& p, Side side, Letter a) {
  return p.transform_words([side, a](Word w) -> std::optional<Word> {
    if (w.empty()) return std::nullopt;
    if (side == Side::left) {
      if (w.first() != a) return std::nullopt;
      return w.drop_first();
    }
    if (w.last() != a) return std::nullopt;
    return w.drop_last();
  });
}

// a^e applied on the given side: e < 0 erases |e| times, e > 0 concatenates.
template <class C>
WordPoly<C> letter_power(const WordPoly<C>& p, Side side, Letter a, int e) {
  if (e >= 0) {
    Word block;
    for (int i = 0; i < e; ++i) block = block.concat(Word::letter(a));
    return p.transform_words([side, block](Word w) {
      return std::optional<Word>(side == Side::left ? block.concat(w) : w.concat(block));
    });
  }
  const int n = -e;
  return p.transform_words([side, a, n](Word w) -> std::optional<Word> {
    for (int i = 0; i < n; ++i) {
      if (w.empty()) return std::nullopt;
      if (side == Side::left) {
        if (w.first() != a) return std::nullopt;
        w = w.drop_first();
      } else {
        if (w.last() != a) return std::nullopt;
        w = w.drop_last();
      }
    }
    return w;
  });
}

}  // namespace qshuffle
