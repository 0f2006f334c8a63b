#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qshuffle {

namespace {

using Coeffs = std::vector<Integer>;

void trim_top(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer coeffs_content(const Coeffs& c) {
  Integer g = 0;
  for (const auto& x : c) {
    if (x == 0) continue;
    g = integer_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

void divide_all(Coeffs& c, const Integer& d) {
  if (d == 1) return;
  for (auto& x : c) x /= d;
}

// Remainder of a modulo b over Q up to a nonzero integer factor; both
// are dense with index = exponent, b has nonzero top coefficient.
Coeffs pseudo_rem(Coeffs a, const Coeffs& b) {
  const std::size_t m = b.size() - 1;
  const Integer& lb = b.back();
  trim_top(a);
  while (!a.empty() && a.size() - 1 >= m) {
    const std::size_t k = a.size() - 1 - m;
    const Integer la = a.back();
    const Integer g = integer_gcd(la, lb);
    const Integer fa = lb / g;
    const Integer fb = la / g;
    for (auto& x : a) x *= fa;
    for (std::size_t i = 0; i <= m; ++i) a[k + i] -= fb * b[i];
    trim_top(a);
    divide_all(a, coeffs_content(a));
  }
  return a;
}

}  // namespace

Integer integer_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

LaurentPoly LaurentPoly::monomial(Integer c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.shift_ = exponent;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < min_exp() || exponent > max_exp()) return 0;
  return coeffs_[exponent - shift_];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(shift_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::trim() {
  trim_top(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    shift_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) shift_ = 0;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.shift_ += by;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_exp(), o.min_exp());
  const int hi = std::max(max_exp(), o.max_exp());
  if (lo < shift_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(shift_ - lo), Integer(0));
    shift_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.shift_ - shift_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    shift_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const int lo = a.shift_ + b.shift_;
  const int hi = a.max_exp() + b.max_exp();
  if (is_zero()) {
    shift_ = lo;
    coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  } else {
    if (lo < shift_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(shift_ - lo), Integer(0));
      shift_ = lo;
    }
    if (hi > max_exp()) coeffs_.resize(static_cast<std::size_t>(hi - shift_ + 1), Integer(0));
  }
  const std::size_t base = static_cast<std::size_t>(lo - shift_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs_[base + i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  trim();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.add_product(a, b);
  return p;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (b.coeffs_[i] < a.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer LaurentPoly::content() const { return coeffs_content(coeffs_); }

LaurentPoly LaurentPoly::stretched(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms()) p += monomial(c, e * k);
  return p;
}

double LaurentPoly::evaluate(double x) const {
  if (is_zero()) return 0.0;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc * std::pow(x, shift_);
}

std::string LaurentPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const int e = shift_ + static_cast<int>(i);
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Coeffs x = a.coeffs();
  Coeffs y = b.coeffs();
  if (x.empty()) std::swap(x, y);
  const Integer cx = coeffs_content(x);
  const Integer cy = y.empty() ? cx : coeffs_content(y);
  const Integer c = integer_gcd(cx, cy);
  divide_all(x, cx);
  if (!y.empty()) {
    divide_all(y, cy);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      if (y.size() == 1) {
        x.assign(1, Integer(1));
        break;
      }
      Coeffs r = pseudo_rem(std::move(x), y);
      x = std::move(y);
      y = std::move(r);
      // strip low zeros: a gcd never carries a power of v
      std::size_t lead = 0;
      while (lead < y.size() && y[lead] == 0) ++lead;
      y.erase(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(lead));
      divide_all(y, coeffs_content(y));
    }
  }
  if (x.back() < 0)
    for (auto& v : x) v = -v;
  LaurentPoly g;
  for (std::size_t i = 0; i < x.size(); ++i) g += LaurentPoly::monomial(x[i] * c, static_cast<int>(i));
  return g;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const Integer& d = b.leading();
    std::vector<std::pair<int, Integer>> t;
    for (const auto& [e, c] : a.terms()) {
      if (c % d != 0) throw std::domain_error("exact_div: inexact division");
      t.emplace_back(e - b.min_exp(), c / d);
    }
    return LaurentPoly::from_terms(t);
  }
  if (a.span() < b.span()) throw std::domain_error("exact_div: inexact division");
  Coeffs rem = a.coeffs();
  const Coeffs& d = b.coeffs();
  const std::size_t qlen = rem.size() - d.size() + 1;
  Coeffs quot(qlen, Integer(0));
  for (std::size_t k = qlen; k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % d.back() != 0) throw std::domain_error("exact_div: inexact division");
    const Integer qc = top / d.back();
    quot[k] = qc;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= qc * d[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("exact_div: inexact division");
  LaurentPoly q;
  for (std::size_t i = 0; i < qlen; ++i)
    q += LaurentPoly::monomial(quot[i], a.min_exp() - b.min_exp() + static_cast<int>(i));
  return q;
}

LaurentPoly bracket_poly(int n) {
  if (n == 0) return {};
  if (n < 0) return -bracket_poly(-n);
  LaurentPoly p;
  for (int e = n - 1; e >= 1 - n; e -= 2) p += LaurentPoly::monomial(1, 2 * e);
  return p;
}

LaurentPoly c_poly(int k) { return LaurentPoly::monomial(1, 2 * k) - LaurentPoly::monomial(1, -2 * k); }

}  // namespace qshuffle
