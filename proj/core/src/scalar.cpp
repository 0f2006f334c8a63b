#include "qshuffle/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qshuffle {

RadicalSignature RadicalSignature::single(int n) {
  if (n < 1 || n > kMaxIndex) throw std::out_of_range("radical index out of range: " + std::to_string(n));
  if (n == 1) return {};
  return RadicalSignature(std::uint64_t{1} << n);
}

std::vector<int> RadicalSignature::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

LaurentPoly bracket_product(std::uint64_t mask) {
  LaurentPoly p = LaurentPoly::constant(1);
  for (std::uint64_t m = mask; m != 0; m &= m - 1) p = p * bracket_poly(std::countr_zero(m));
  return p;
}

Scalar::Scalar(RatFun r) {
  if (!r.is_zero()) terms_.emplace_back(RadicalSignature{}, std::move(r));
}

Scalar::Scalar(RadicalSignature sig, RatFun r) {
  if (!r.is_zero()) terms_.emplace_back(sig, std::move(r));
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Scalar s;
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

const RatFun& Scalar::rational() const {
  static const RatFun zero;
  if (terms_.empty()) return zero;
  if (!is_rational()) throw std::domain_error("Scalar has a radical part");
  return terms_[0].second;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("Scalar::inverse: only single-term scalars are invertible");
  const auto& [sig, r] = terms_[0];
  RatFun denom = r * RatFun(bracket_product(sig.mask()));
  return Scalar(sig, denom.inverse());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar s;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      s.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      s.terms_.push_back(*j++);
    } else {
      RatFun r = i->second + j->second;
      if (!r.is_zero()) s.terms_.emplace_back(i->first, std::move(r));
      ++i;
      ++j;
    }
  }
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& [sa, ra] = a.terms_[0];
    const auto& [sb, rb] = b.terms_[0];
    RatFun r = ra * rb;
    if (const std::uint64_t common = sa.mask() & sb.mask()) r *= RatFun(bracket_product(common));
    return Scalar(RadicalSignature::from_mask(sa.mask() ^ sb.mask()), std::move(r));
  }
  std::vector<Scalar::Term> terms;
  for (const auto& [sa, ra] : a.terms_) {
    for (const auto& [sb, rb] : b.terms_) {
      RatFun r = ra * rb;
      if (const std::uint64_t common = sa.mask() & sb.mask()) r *= RatFun(bracket_product(common));
      terms.emplace_back(RadicalSignature::from_mask(sa.mask() ^ sb.mask()), std::move(r));
    }
  }
  return Scalar::from_terms(std::move(terms));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [sig, r] : terms_) {
    if (!out.empty()) out += " + ";
    if (sig.empty()) {
      out += r.to_string();
      continue;
    }
    std::string rad = "sqrt(";
    for (int n : sig.indices()) rad += "[" + std::to_string(n) + "]";
    rad += ")";
    if (r.is_one()) {
      out += rad;
    } else {
      out += "(" + r.to_string() + ")*" + rad;
    }
  }
  return out;
}

Scalar qint(int n) { return Scalar(RatFun(bracket_poly(n))); }

Scalar qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentPoly p = LaurentPoly::constant(1);
  for (int k = 2; k <= n; ++k) p = p * bracket_poly(k);
  return Scalar(RatFun(std::move(p)));
}

Scalar sqrt_brackets(std::span<const int> indices) {
  std::map<int, int> count;
  for (int n : indices) {
    if (n < 0) throw std::invalid_argument("sqrt_brackets: negative bracket index");
    if (n == 0) return {};
    if (n > 1) ++count[n];
  }
  LaurentPoly rational = LaurentPoly::constant(1);
  std::uint64_t mask = 0;
  for (const auto& [n, c] : count) {
    for (int k = 0; k < c / 2; ++k) rational = rational * bracket_poly(n);
    if (c % 2 == 1) mask |= RadicalSignature::single(n).mask();
  }
  return Scalar(RadicalSignature::from_mask(mask), RatFun(std::move(rational)));
}

Scalar sqrt_bracket_ratio(std::span<const int> numer, std::span<const int> denom) {
  std::vector<int> all(numer.begin(), numer.end());
  all.insert(all.end(), denom.begin(), denom.end());
  LaurentPoly d = LaurentPoly::constant(1);
  for (int n : denom) {
    if (n <= 0) throw std::domain_error("sqrt_bracket_ratio: vanishing denominator bracket");
    d = d * bracket_poly(n);
  }
  return sqrt_brackets(all) * Scalar(RatFun(LaurentPoly::constant(1), d));
}

Scalar c_of_qpow(int k) { return Scalar(RatFun(c_poly(k))); }

double eval_numeric(const RatFun& x, double q) { return x.evaluate_v(std::sqrt(q)); }

double eval_numeric(const Scalar& x, double q) {
  const double v = std::sqrt(q);
  double acc = 0.0;
  for (const auto& [sig, r] : x.terms()) {
    double rad = 1.0;
    for (int n : sig.indices()) rad *= std::sqrt(bracket_poly(n).evaluate(v));
    acc += r.evaluate_v(v) * rad;
  }
  return acc;
}

}  // namespace qshuffle
