#pragma once

#include "qshuffle/field.hpp"
#include "qshuffle/word_poly.hpp"

#include <map>

namespace qshuffle {

// q-shuffle product of word polynomials; the coefficient ring comes from F.
template <class F>
WordPoly<typename F::value_type> shuffle(const WordPoly<typename F::value_type>& a,
                                         const WordPoly<typename F::value_type>& b, const F& field) {
  using C = typename F::value_type;
  std::map<Word, typename F::Accumulator> acc;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      const auto p = field.prepare(cu, cw);
      for (const auto& [z, weight] : field.shuffle_row(u, w)) acc[z].add(p, weight);
    }
  }
  std::vector<typename WordPoly<C>::Term> out;
  out.reserve(acc.size());
  for (const auto& [z, s] : acc) {
    C c = s.finish();
    if (!coeff_is_zero(c)) out.emplace_back(z, std::move(c));
  }
  return WordPoly<C>::from_sorted(std::move(out));
}

template <class F>
WordPoly<typename F::value_type> word_monomial(std::string_view w, const F& field) {
  return WordPoly<typename F::value_type>::monomial(Word::parse(w), field.one());
}

}  // namespace qshuffle
