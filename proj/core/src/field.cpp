#include "qshuffle/field.hpp"

#include <map>
#include <stdexcept>

namespace qshuffle {

namespace {

// Exponent of q in the weight picked up when w1 moves past all of u.
int pass_exponent(Letter w1, Word u) {
  int e = 0;
  for (int i = 0; i < u.length(); ++i) e += u.at(i) == w1 ? 2 : -2;
  return e;
}

}  // namespace

const WordShuffler::Row& WordShuffler::row(Word u, Word w) {
  const auto key = std::make_pair(u, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Row out;
  if (u.empty() || w.empty()) {
    out.emplace_back(u.empty() ? w : u, LaurentPoly::constant(1));
  } else {
    std::map<Word, LaurentPoly> acc;
    const Word u1 = Word::letter(u.first());
    for (const auto& [z, c] : row(u.drop_first(), w)) acc[u1.concat(z)] += c;
    const Word w1 = Word::letter(w.first());
    const int e = pass_exponent(w.first(), u);
    for (const auto& [z, c] : row(u, w.drop_first())) acc[w1.concat(z)] += c.shifted(2 * e);
    out.reserve(acc.size());
    for (auto& [z, c] : acc)
      if (!c.is_zero()) out.emplace_back(z, std::move(c));
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

ExactField::Prepared ExactField::prepare(const Scalar& a) const {
  Prepared p;
  p.reserve(a.terms().size());
  for (const auto& [sig, r] : a.terms()) p.push_back({sig.mask(), r.num(), r.den()});
  return p;
}

ExactField::Prepared ExactField::prepare(const Scalar& a, const Scalar& b) const {
  Prepared p;
  p.reserve(a.terms().size() * b.terms().size());
  for (const auto& [sa, ra] : a.terms()) {
    for (const auto& [sb, rb] : b.terms()) {
      LaurentPoly num = ra.num() * rb.num();
      if (const std::uint64_t common = sa.mask() & sb.mask()) num = num * bracket_product(common);
      LaurentPoly den = ra.den().is_one() ? rb.den() : (rb.den().is_one() ? ra.den() : ra.den() * rb.den());
      p.push_back({sa.mask() ^ sb.mask(), std::move(num), std::move(den)});
    }
  }
  return p;
}

ExactField::Accumulator::Slot& ExactField::Accumulator::slot(std::uint64_t sig, const LaurentPoly& den) {
  for (auto& s : slots_)
    if (s.sig == sig && s.den == den) return s;
  slots_.push_back({sig, den, {}});
  return slots_.back();
}

void ExactField::Accumulator::add(const Prepared& p) {
  for (const auto& t : p) slot(t.sig, t.den).num += t.num;
}

void ExactField::Accumulator::add(const Prepared& p, const LaurentPoly& weight) {
  for (const auto& t : p) {
    if (weight.is_one()) {
      slot(t.sig, t.den).num += t.num;
    } else {
      slot(t.sig, t.den).num.add_product(t.num, weight);
    }
  }
}

Scalar ExactField::Accumulator::finish() const {
  std::vector<Scalar::Term> terms;
  terms.reserve(slots_.size());
  for (const auto& s : slots_)
    if (!s.num.is_zero()) terms.emplace_back(RadicalSignature::from_mask(s.sig), RatFun(s.num, s.den));
  return Scalar::from_terms(std::move(terms));
}

NumericField::NumericField(double q) : q_(q), v_(std::sqrt(q)) {
  if (!(q > 1.0)) throw std::invalid_argument("NumericField: q must exceed 1");
}

const std::vector<std::pair<Word, double>>& NumericField::shuffle_row(Word u, Word w) const {
  const auto key = std::make_pair(u, w);
  if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  std::vector<std::pair<Word, double>> out;
  for (const auto& [z, c] : shuffler_.row(u, w)) out.emplace_back(z, c.evaluate(v_));
  return rows_.emplace(key, std::move(out)).first->second;
}

double NumericField::qint(int n) const { return (std::pow(q_, n) - std::pow(q_, -n)) / (q_ - 1.0 / q_); }

double NumericField::sqrt_bracket_ratio(std::span<const int> numer, std::span<const int> denom) const {
  double r = 1.0;
  for (int n : numer) r *= qint(n);
  for (int n : denom) r /= qint(n);
  if (r < 0.0) throw std::domain_error("sqrt of a negative bracket ratio");
  return std::sqrt(r);
}

}  // namespace qshuffle
